#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubiq/errors.hpp"
#include "cubiq/field.hpp"
#include "cubiq/mobius.hpp"
#include "cubiq/poly.hpp"
#include "cubiq/projpoint.hpp"

namespace cubiq {

/// Rational function num/den viewed as an endomorphism of P^1. Canonical
/// form: num and den coprime, den monic. Structural equality then decides
/// equality of functions.
template <FieldElement K>
class RatFunc {
public:
    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        Poly<K> g = gcd_poly(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        const K lead_inv = den_.leading().one() / den_.leading();
        num_ = num_.scaled(lead_inv);
        den_ = den_.scaled(lead_inv);
    }
    explicit RatFunc(const Poly<K>& num) : RatFunc(num, Poly<K>{num.coeff(0).one()}) {}

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    int degree() const { return std::max(num_.degree(), den_.degree()); }
    bool is_constant() const { return degree() <= 0; }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    /// Evaluation via homogenization of both parts to degree(). Total on P^1:
    /// poles land at infinity and infinity is compared through leading
    /// coefficients.
    ProjPoint<K> eval(const ProjPoint<K>& p) const {
        const int d = degree();
        K ypow = p.x().one();
        std::vector<K> ypows;
        ypows.reserve(static_cast<size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) {
            ypows.push_back(ypow);
            ypow = ypow * p.y();
        }
        K n = p.x().zero(), m = n;
        K xpow = p.x().one();
        for (int i = 0; i <= d; ++i) {
            n = n + num_.coeff(i) * xpow * ypows[static_cast<size_t>(d - i)];
            m = m + den_.coeff(i) * xpow * ypows[static_cast<size_t>(d - i)];
            xpow = xpow * p.x();
        }
        return ProjPoint<K>(n, m);
    }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

private:
    Poly<K> num_, den_;
};

/// num' den - num den' computed from the stored canonical representative.
/// Roots are the finite critical points. For K = Q prefer wronskian() from
/// qpoly.hpp, which uses the integer-cleared representative.
template <FieldElement K>
Poly<K> wronskian_of_pair(const Poly<K>& num, const Poly<K>& den) {
    return num.derivative() * den - num * den.derivative();
}

/// sigma o f: a change of coordinates on the target. Degree is preserved.
template <FieldElement K>
RatFunc<K> postcompose(const Mobius<K>& sigma, const RatFunc<K>& f) {
    Poly<K> n = f.num().scaled(sigma.a()) + f.den().scaled(sigma.b());
    Poly<K> m = f.num().scaled(sigma.c()) + f.den().scaled(sigma.d());
    RatFunc<K> r(std::move(n), std::move(m));
    if (r.degree() != f.degree()) throw DomainError("postcompose changed the degree");
    return r;
}

/// f o tau: a change of coordinates on the source. Critical points transform
/// by tau^{-1}. Degree is preserved.
template <FieldElement K>
RatFunc<K> precompose(const RatFunc<K>& f, const Mobius<K>& tau) {
    const int d = f.degree();
    const K one = tau.a().one();
    Poly<K> lin_num{tau.b(), tau.a()};  // a z + b
    Poly<K> lin_den{tau.d(), tau.c()};  // c z + d
    std::vector<Poly<K>> top(static_cast<size_t>(d) + 1), bot(static_cast<size_t>(d) + 1);
    top[0] = Poly<K>{one};
    bot[0] = Poly<K>{one};
    for (int i = 1; i <= d; ++i) {
        top[static_cast<size_t>(i)] = top[static_cast<size_t>(i - 1)] * lin_num;
        bot[static_cast<size_t>(i)] = bot[static_cast<size_t>(i - 1)] * lin_den;
    }
    Poly<K> n, m;
    for (int i = 0; i <= d; ++i) {
        Poly<K> basis = top[static_cast<size_t>(i)] * bot[static_cast<size_t>(d - i)];
        n = n + basis.scaled(f.num().coeff(i));
        m = m + basis.scaled(f.den().coeff(i));
    }
    RatFunc<K> r(std::move(n), std::move(m));
    if (r.degree() != d) throw DomainError("precompose changed the degree");
    return r;
}

template <FieldElement K>
RatFunc<K> to_ratfunc(const Mobius<K>& s) {
    return RatFunc<K>(Poly<K>{s.b(), s.a()}, Poly<K>{s.d(), s.c()});
}

/// Coefficient-wise field embedding, e.g. Q into Q(sqrt(d)).
template <FieldElement K2, FieldElement K1, typename Fn>
Poly<K2> map_poly(const Poly<K1>& p, Fn embed) {
    std::vector<K2> c;
    c.reserve(p.coeffs().size());
    for (const K1& x : p.coeffs()) c.push_back(embed(x));
    return Poly<K2>(std::move(c));
}

template <FieldElement K2, FieldElement K1, typename Fn>
RatFunc<K2> map_ratfunc(const RatFunc<K1>& f, Fn embed) {
    return RatFunc<K2>(map_poly<K2>(f.num(), embed), map_poly<K2>(f.den(), embed));
}

}  // namespace cubiq
