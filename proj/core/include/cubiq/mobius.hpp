#pragma once

#include <array>
#include <string>

#include "cubiq/errors.hpp"
#include "cubiq/field.hpp"
#include "cubiq/projpoint.hpp"

namespace cubiq {

/// Fractional linear transformation z -> (az + b)/(cz + d), ad - bc != 0.
/// Two coefficient tuples describe the same map iff they agree up to a
/// scalar; canonical_form() scales the first nonzero coefficient to 1.
template <FieldElement K>
class Mobius {
public:
    Mobius(const K& a, const K& b, const K& c, const K& d) : a_(a), b_(b), c_(c), d_(d) {
        if (det().is_zero()) throw DomainError("Mobius transformation with zero determinant");
    }

    static Mobius identity()
        requires std::constructible_from<K, long>
    {
        return Mobius(K(1), K(0), K(0), K(1));
    }

    const K& a() const { return a_; }
    const K& b() const { return b_; }
    const K& c() const { return c_; }
    const K& d() const { return d_; }

    K det() const { return a_ * d_ - b_ * c_; }

    ProjPoint<K> apply(const ProjPoint<K>& p) const {
        return ProjPoint<K>(a_ * p.x() + b_ * p.y(), c_ * p.x() + d_ * p.y());
    }

    Mobius inverse() const { return Mobius(d_, -b_, -c_, a_); }

    Mobius canonical_form() const {
        for (const K* lead : {&a_, &b_, &c_, &d_}) {
            if (!lead->is_zero()) {
                K inv = lead->one() / *lead;
                return Mobius(a_ * inv, b_ * inv, c_ * inv, d_ * inv);
            }
        }
        throw DomainError("zero Mobius matrix");  // unreachable: det != 0
    }

    // Same map on P^1, coefficient scaling quotiented out.
    bool same_map(const Mobius& o) const {
        Mobius x = canonical_form(), y = o.canonical_form();
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    std::string to_string() const {
        return "[" + a_.to_string() + ", " + b_.to_string() + "; " + c_.to_string() + ", " +
               d_.to_string() + "]";
    }

private:
    K a_, b_, c_, d_;
};

/// sigma o tau as maps: apply tau first.
template <FieldElement K>
Mobius<K> mobius_compose(const Mobius<K>& sigma, const Mobius<K>& tau) {
    return Mobius<K>(sigma.a() * tau.a() + sigma.b() * tau.c(),
                     sigma.a() * tau.b() + sigma.b() * tau.d(),
                     sigma.c() * tau.a() + sigma.d() * tau.c(),
                     sigma.c() * tau.b() + sigma.d() * tau.d());
}

namespace detail {

// The map sending p1, p2, p3 to 0, 1, infinity.
template <FieldElement K>
Mobius<K> to_standard_triple(const ProjPoint<K>& p1, const ProjPoint<K>& p2,
                             const ProjPoint<K>& p3) {
    const K e = p2.x() * p3.y() - p3.x() * p2.y();
    const K g = p2.x() * p1.y() - p1.x() * p2.y();
    if (e.is_zero() || g.is_zero() ||
        (p1.x() * p3.y() - p3.x() * p1.y()).is_zero())
        throw DomainError("three-point interpolation needs pairwise distinct points");
    return Mobius<K>(e * p1.y(), -(e * p1.x()), g * p3.y(), -(g * p3.x()));
}

}  // namespace detail

/// The unique Mobius transformation with p_i -> q_i for two triples of
/// pairwise distinct points.
template <FieldElement K>
Mobius<K> mobius_from_three_points(const ProjPoint<K>& p1, const ProjPoint<K>& p2,
                                   const ProjPoint<K>& p3, const ProjPoint<K>& q1,
                                   const ProjPoint<K>& q2, const ProjPoint<K>& q3) {
    Mobius<K> src = detail::to_standard_triple(p1, p2, p3);
    Mobius<K> dst = detail::to_standard_triple(q1, q2, q3);
    return mobius_compose(dst.inverse(), src);
}

}  // namespace cubiq
