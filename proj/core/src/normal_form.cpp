#include "cubiq/normal_form.hpp"

#include <algorithm>

namespace cubiq {

RatFunc<Rat> phi_ratfunc() {
    Poly<Rat> num{Rat(0), Rat(-2), Rat(-1)};  // -(z^2 + 2z)
    Poly<Rat> den{Rat(3), Rat(2)};            // 2z + 3
    return RatFunc<Rat>(std::move(num), std::move(den));
}

CriticalQuad critical_quad(const QuadExt& u) {
    if ((u + QuadExt(1)).is_zero() || (u + QuadExt(2)).is_zero())
        throw DegenerateParameter("u = " + u.to_string() + " degenerates the cubic");
    std::vector<CriticalPoint> pts;
    pts.emplace_back(ProjPoint<QuadExt>(QuadExt(0)), 1);
    pts.emplace_back(ProjPoint<QuadExt>(QuadExt(1)), 1);
    pts.emplace_back(ProjPoint<QuadExt>::infinity(QuadExt()), 1);
    pts.emplace_back(phi(ProjPoint<QuadExt>(u)), 1);
    return CriticalQuad(std::move(pts));
}

RatFunc<QuadExt> representative(const GenericClass& c) {
    return precompose(normal_form(c.u), c.tau);
}

namespace {

ProjPoint<QuadExt> quad_zero() { return ProjPoint<QuadExt>(QuadExt(0)); }
ProjPoint<QuadExt> quad_one() { return ProjPoint<QuadExt>(QuadExt(1)); }
ProjPoint<QuadExt> quad_inf() { return ProjPoint<QuadExt>::infinity(QuadExt()); }

}  // namespace

NormalizeResult normalize_cubic(const RatFunc<Rat>& f) {
    if (f.degree() != 3) throw DomainError("normalization needs a cubic function");
    auto crit = critical_points(f);  // sorted ascending, infinity last
    if (crit.size() < 3)
        throw TooFewCriticalPoints("only " + std::to_string(crit.size()) +
                                   " distinct critical points; use the two-point classifier");

    const size_t n = crit.size();
    const ProjPoint<QuadExt>& c1 = crit[n - 3].first;
    const ProjPoint<QuadExt>& c2 = crit[n - 2].first;
    const ProjPoint<QuadExt>& c3 = crit[n - 1].first;

    Mobius<QuadExt> tau = mobius_from_three_points(quad_zero(), quad_one(), quad_inf(), c1, c2, c3);
    RatFunc<QuadExt> g = precompose(embed_ratfunc(f), tau);

    // A cubic cannot take one value with multiplicity two at two distinct
    // critical points, so the three critical values are pairwise distinct.
    ProjPoint<QuadExt> v0 = g.eval(quad_zero());
    ProjPoint<QuadExt> v1 = g.eval(quad_one());
    ProjPoint<QuadExt> vi = g.eval(quad_inf());
    Mobius<QuadExt> sigma =
        mobius_from_three_points(v0, v1, vi, quad_zero(), quad_one(), quad_inf());

    QuadExt u = recover_parameter(postcompose(sigma, g));
    return NormalizeResult{tau, sigma, u, u.radicand()};
}

TwoPointClass two_point_class(const RatFunc<Rat>& f) {
    if (f.degree() != 3) throw DomainError("two-point classification needs a cubic");
    auto crit = critical_points(f);
    if (crit.size() != 2)
        throw DomainError("expected exactly 2 distinct critical points, found " +
                          std::to_string(crit.size()));
    if (crit[0].second != 2 || crit[1].second != 2)
        throw InvalidCriticalData("two-point cubic must be doubly critical at both points");

    const ProjPoint<QuadExt>& c1 = crit[0].first;
    const ProjPoint<QuadExt>& c2 = crit[1].first;  // infinity sorts last
    const QuadExt one(1);

    RatFunc<QuadExt> rep = [&] {
        if (c2.is_infinity()) {
            if (c1.value().is_zero())
                return RatFunc<QuadExt>(Poly<QuadExt>{QuadExt(0), QuadExt(0), QuadExt(0), one});
            Poly<QuadExt> lin{-c1.value(), one};
            return RatFunc<QuadExt>(pow_poly(lin, 3));
        }
        Poly<QuadExt> lin1{-c1.value(), one};
        Poly<QuadExt> lin2{-c2.value(), one};
        return RatFunc<QuadExt>(pow_poly(lin1, 3), pow_poly(lin2, 3));
    }();
    return TwoPointClass{c1, c2, std::move(rep)};
}

std::vector<QuadExt> solve_phi(const ProjPoint<Rat>& y) {
    if (y.is_infinity()) return {QuadExt(Rat(Int(-3), Int(2)))};
    const Rat& yv = y.value();
    // z^2 + 2(1+y) z + 3y = 0
    Rat mid = -(Rat(1) + yv);
    QuadExt s = sqrt_rat(yv * yv - yv + Rat(1));  // quarter discriminant
    std::vector<QuadExt> roots{QuadExt(mid) - s, QuadExt(mid) + s};
    std::sort(roots.begin(), roots.end(),
              [](const QuadExt& a, const QuadExt& b) { return field_compare(a, b) < 0; });
    return roots;
}

SolveResult cubics_with_critical_quad(const CriticalQuad& quad) {
    const auto& pts = quad.points();  // canonical order, infinity last

    ProjPoint<QuadExt> chosen1 = quad_zero(), chosen2 = chosen1, chosen3 = chosen1;
    ProjPoint<QuadExt> fourth = chosen1;
    if (pts.size() == 4) {
        chosen1 = pts[1].first;
        chosen2 = pts[2].first;
        chosen3 = pts[3].first;
        fourth = pts[0].first;
    } else {
        chosen1 = pts[0].first;
        chosen2 = pts[1].first;
        chosen3 = pts[2].first;
        for (const auto& [pt, mult] : pts)
            if (mult == 2) fourth = pt;
    }

    Mobius<QuadExt> tau =
        mobius_from_three_points(quad_zero(), quad_one(), quad_inf(), chosen1, chosen2, chosen3);
    ProjPoint<QuadExt> transported = tau.inverse().apply(fourth);

    ProjPoint<Rat> y = [&] {
        if (transported.is_infinity()) return ProjPoint<Rat>::infinity(Rat());
        if (!transported.value().is_rational())
            throw DomainError(
                "fourth critical point transported to an irrational value; resolution beyond one "
                "quadratic extension is unsupported");
        return ProjPoint<Rat>(transported.value().rational_value());
    }();

    SolveResult out;
    for (const QuadExt& root : solve_phi(y)) {
        if (root.is_rational() &&
            (root.rational_value() == Rat(-1) || root.rational_value() == Rat(-2))) {
            out.excluded.push_back(root.rational_value());
            continue;
        }
        out.classes.emplace_back(GenericClass{root, tau, root.radicand()});
    }
    return out;
}

}  // namespace cubiq
