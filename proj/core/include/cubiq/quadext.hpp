#pragma once

#include <iosfwd>
#include <string>

#include "cubiq/errors.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

/// Element a + b*sqrt(d) of a quadratic extension of Q.
///
/// Canonical form: d is squarefree and d != 0, 1 whenever b != 0; purely
/// rational values carry b = 0 and d = 0. The radicand is reduced to its
/// squarefree kernel on construction, the square part absorbed into b. One
/// radicand per computation: combining elements with distinct nonzero
/// radicands throws MixedRadicand.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long n) : a_(n) {}         // NOLINT: implicit embeds are the point
    QuadExt(const Rat& a) : a_(a) {}   // NOLINT
    QuadExt(const Rat& a, const Rat& b, const Int& d);

    bool is_rational() const { return b_.is_zero(); }
    const Rat& rational_part() const { return a_; }
    const Rat& surd_coeff() const { return b_; }
    const Int& radicand() const { return d_; }

    // Throws unless the value lies in Q.
    Rat rational_value() const {
        if (!is_rational()) throw DomainError("value not rational: " + to_string());
        return a_;
    }

    QuadExt conjugate() const { return QuadExt(a_, -b_, d_); }
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    QuadExt zero() const { return QuadExt(); }
    QuadExt one() const { return QuadExt(1); }
    QuadExt scalar_from_int(long n) const { return QuadExt(n); }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    QuadExt inverse() const;

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadExt& q);

private:
    Rat a_, b_;
    Int d_ = 0;
};

// Canonical total order used wherever deterministic point ordering matters:
// rationals first by value, then irrationals by (radicand, a, b). This is an
// ordering convention, not the real-number order on Q(sqrt(d)).
int field_compare(const QuadExt& x, const QuadExt& y);

// Exact square root of a rational: q = (r^2) * k with k squarefree, giving
// r * sqrt(k). Returns a rational-valued element when q is a perfect square.
QuadExt sqrt_rat(const Rat& q);

}  // namespace cubiq
