#include "cubiq/quadext.hpp"

#include <ostream>

namespace cubiq {

QuadExt::QuadExt(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b), d_(d) {
    if (b_.is_zero() || sgn(d_) == 0) {
        b_ = Rat();
        d_ = 0;
        return;
    }
    auto [s, k] = squarefree_decompose(d_);
    b_ *= Rat(s);
    d_ = k;
    if (d_ == 1) {
        a_ += b_;
        b_ = Rat();
        d_ = 0;
    }
}

namespace {

// Radicand both operands agree on; 0 when both are rational.
Int joint_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw MixedRadicand("cannot combine sqrt(" + x.radicand().get_str() + ") with sqrt(" +
                            y.radicand().get_str() + ")");
    return x.radicand();
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    Int d = joint_radicand(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    Int d = joint_radicand(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    Int d = joint_radicand(x, y);
    return QuadExt(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QuadExt QuadExt::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rat n = norm();  // nonzero: d is not a square, so a^2 = d b^2 forces a = b = 0
    return QuadExt(a_ / n, -b_ / n, d_);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    return x * y.inverse();
}

std::string QuadExt::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string surd;
    if (b_.is_one())
        surd = "sqrt(" + d_.get_str() + ")";
    else if (b_ == Rat(-1))
        surd = "-sqrt(" + d_.get_str() + ")";
    else
        surd = b_.to_string() + "*sqrt(" + d_.get_str() + ")";
    if (a_.is_zero()) return surd;
    if (surd[0] == '-') return a_.to_string() + surd;
    return a_.to_string() + "+" + surd;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) {
    return os << q.to_string();
}

int field_compare(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational() != y.is_rational()) return x.is_rational() ? -1 : 1;
    if (x.is_rational()) return field_compare(x.rational_part(), y.rational_part());
    if (x.radicand() != y.radicand()) return x.radicand() < y.radicand() ? -1 : 1;
    if (int c = field_compare(x.rational_part(), y.rational_part())) return c;
    return field_compare(x.surd_coeff(), y.surd_coeff());
}

QuadExt sqrt_rat(const Rat& q) {
    if (q.is_zero()) return QuadExt();
    auto [sn, kn] = squarefree_decompose(q.num());  // sign of q rides on kn
    auto [sd, kd] = squarefree_decompose(q.den());
    // sqrt(kn/kd) = sqrt(kn*kd) / kd
    return QuadExt(Rat(), Rat(sn, sd * kd), kn * kd);
}

}  // namespace cubiq
