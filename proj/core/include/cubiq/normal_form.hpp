#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cubiq/critical.hpp"
#include "cubiq/errors.hpp"
#include "cubiq/mobius.hpp"
#include "cubiq/quadext.hpp"
#include "cubiq/ratfunc.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

// ---- embeddings of Q-objects into Q(sqrt(d))-objects ----

inline QuadExt to_quadext(const Rat& r) { return QuadExt(r); }

inline ProjPoint<QuadExt> embed_point(const ProjPoint<Rat>& p) {
    return ProjPoint<QuadExt>(QuadExt(p.x()), QuadExt(p.y()));
}

inline RatFunc<QuadExt> embed_ratfunc(const RatFunc<Rat>& f) {
    return map_ratfunc<QuadExt>(f, [](const Rat& c) { return QuadExt(c); });
}

inline Mobius<QuadExt> embed_mobius(const Mobius<Rat>& m) {
    return Mobius<QuadExt>(QuadExt(m.a()), QuadExt(m.b()), QuadExt(m.c()), QuadExt(m.d()));
}

// ---- the normal form and its parameter map ----

/// The cubic z^2 (z + u) / ((2u+3) z - (u+2)), reduced, denominator monic.
/// It fixes 0, 1, infinity and is critical at all three. u = -1, -2 are
/// rejected: there the cubic degenerates to a quadratic.
template <FieldElement K>
RatFunc<K> normal_form(const K& u) {
    const K one = u.one();
    const K two = u.scalar_from_int(2);
    const K three = u.scalar_from_int(3);
    if ((u + one).is_zero() || (u + two).is_zero())
        throw DegenerateParameter("u = " + u.to_string() +
                                  ": a numerator root collides with the denominator root");
    Poly<K> num{u.zero(), u.zero(), u, one};
    Poly<K> den{-(u + two), two * u + three};
    return RatFunc<K>(std::move(num), std::move(den));
}

/// The degree-2 map u -> -(u^2 + 2u)/(2u + 3) sending the normal-form
/// parameter to the fourth critical point. Total on P^1: the pole sits at
/// u = -3/2 and infinity maps to infinity.
template <FieldElement K>
ProjPoint<K> phi(const ProjPoint<K>& p) {
    const K two = p.x().scalar_from_int(2);
    const K three = p.x().scalar_from_int(3);
    K n = -(p.x() * p.x() + two * p.x() * p.y());
    K m = (two * p.x() + three * p.y()) * p.y();
    return ProjPoint<K>(n, m);
}

inline ProjPoint<Rat> phi(const Rat& u) { return phi(ProjPoint<Rat>(u)); }

/// The rational function -(z^2 + 2z)/(2z + 3) itself.
RatFunc<Rat> phi_ratfunc();

/// Inverse of normal_form on normal-form functions: reads u off the
/// coefficient of z^2 in the monic numerator and verifies the whole function
/// equals normal_form(u) exactly. Anything else throws NotInNormalForm.
template <FieldElement K>
K recover_parameter(const RatFunc<K>& f) {
    if (f.degree() != 3) throw NotInNormalForm("degree is not 3");
    const Poly<K>& n = f.num();
    if (n.degree() != 3) throw NotInNormalForm("infinity is not a fixed point");
    if (!n.coeff(0).is_zero() || !n.coeff(1).is_zero())
        throw NotInNormalForm("numerator is not z^2 (z + u)");
    K u = n.coeff(2) / n.coeff(3);
    if ((u + u.one()).is_zero() || (u + u.scalar_from_int(2)).is_zero())
        throw NotInNormalForm("degenerate parameter");
    if (!(f == normal_form(u))) throw NotInNormalForm("denominator is not (2u+3) z - (u+2)");
    return u;
}

/// Critical multiset {0, 1, inf, phi(u)} of normal_form(u), merged when
/// phi(u) collides with 0, 1 or inf (exactly at u = 0, -3, -3/2).
CriticalQuad critical_quad(const QuadExt& u);
inline CriticalQuad critical_quad(const Rat& u) { return critical_quad(QuadExt(u)); }

// ---- equivalence classes ----

/// Totally ramified case: two critical points of multiplicity two each.
struct TwoPointClass {
    ProjPoint<QuadExt> c1, c2;         // canonical order, infinity last
    RatFunc<QuadExt> representative;   // ((z-c1)/(z-c2))^3, (z-c1)^3, or z^3
};

/// Class f_u o tau with the source change tau recorded. radicand = 0 marks a
/// parameter in Q, otherwise u lives in Q(sqrt(radicand)).
struct GenericClass {
    QuadExt u;
    Mobius<QuadExt> tau;
    Int radicand;
};

using CubicClass = std::variant<TwoPointClass, GenericClass>;

RatFunc<QuadExt> representative(const GenericClass& c);

/// Source and target changes bringing a cubic into normal form:
/// sigma o f o tau = normal_form(u) exactly. tau sends 0, 1, inf to the
/// three chosen critical points; sigma moves the corresponding critical
/// values back to 0, 1, inf.
///
/// Canonical choice: among the distinct critical points in canonical
/// ascending order (infinity last), the three greatest are used, assigned in
/// that order to 0, 1, inf.
struct NormalizeResult {
    Mobius<QuadExt> tau;
    Mobius<QuadExt> sigma;
    QuadExt u;
    Int radicand;
};

NormalizeResult normalize_cubic(const RatFunc<Rat>& f);

/// The two-point classifier for cubics with exactly two distinct critical
/// points (each is then totally ramified).
TwoPointClass two_point_class(const RatFunc<Rat>& f);

/// Both solutions of phi(z) = y, i.e. of z^2 + 2(1+y) z + 3y = 0, in Q when
/// the discriminant is a rational square and in Q(sqrt(d)) otherwise;
/// y = inf yields the single solution -3/2. Sorted canonically.
std::vector<QuadExt> solve_phi(const ProjPoint<Rat>& y);
inline std::vector<QuadExt> solve_phi(const Rat& y) { return solve_phi(ProjPoint<Rat>(y)); }

/// All equivalence classes of cubics with the prescribed critical multiset:
/// one class per root of the transported fiber equation, degenerate roots
/// u = -1, -2 dropped and reported in `excluded`. Never more than two
/// classes.
struct SolveResult {
    std::vector<CubicClass> classes;
    std::vector<Rat> excluded;
};

SolveResult cubics_with_critical_quad(const CriticalQuad& quad);

/// The quadratic with critical points exactly {c1, c2}: (z-c1)^2 when
/// c2 = inf, else ((z-c1)/(z-c2))^2. Points may be relabeled so c1 is finite.
template <FieldElement K>
RatFunc<K> quadratic_with_critical_points(ProjPoint<K> c1, ProjPoint<K> c2) {
    if (c1 == c2) throw DomainError("coincident critical points");
    if (c1.is_infinity()) std::swap(c1, c2);
    const K one = c1.x().one();
    Poly<K> lin1{-c1.value(), one};
    if (c2.is_infinity()) return RatFunc<K>(lin1 * lin1);
    Poly<K> lin2{-c2.value(), one};
    return RatFunc<K>(lin1 * lin1, lin2 * lin2);
}

/// The target change sigma with f = sigma o g, if one exists. A candidate is
/// interpolated from the first three probe points z = 0, 1, 2, ... where g is
/// finite with pairwise distinct values, then verified symbolically; the
/// verification makes the probe choice correctness-irrelevant.
template <FieldElement K>
std::optional<Mobius<K>> equivalent(const RatFunc<K>& f, const RatFunc<K>& g) {
    if (f.is_constant() || g.is_constant())
        throw DomainError("equivalence needs nonconstant functions");
    if (f.degree() != g.degree()) return std::nullopt;

    std::vector<ProjPoint<K>> gv, fv;
    const long limit = 6L * f.degree() + 12;
    for (long z = 0; z < limit && gv.size() < 3; ++z) {
        ProjPoint<K> p(f.num().leading().scalar_from_int(z));
        ProjPoint<K> val = g.eval(p);
        if (val.is_infinity()) continue;
        bool seen = false;
        for (const auto& prev : gv) seen = seen || prev == val;
        if (seen) continue;
        gv.push_back(val);
        fv.push_back(f.eval(p));
    }
    if (gv.size() < 3) throw DomainError("could not find three probe points");
    if (fv[0] == fv[1] || fv[0] == fv[2] || fv[1] == fv[2]) return std::nullopt;
    Mobius<K> sigma = mobius_from_three_points(gv[0], gv[1], gv[2], fv[0], fv[1], fv[2]);
    if (postcompose(sigma, g) == f) return sigma;
    return std::nullopt;
}

}  // namespace cubiq
