#include "cubiq/critical.hpp"

#include <algorithm>

#include "cubiq/errors.hpp"
#include "cubiq/qpoly.hpp"
#include "cubiq/roots.hpp"

namespace cubiq {

std::vector<CriticalPoint> merge_critical_points(std::vector<CriticalPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return point_less(a.first, b.first);
    });
    std::vector<CriticalPoint> out;
    for (auto& p : pts) {
        if (!out.empty() && out.back().first == p.first)
            out.back().second += p.second;
        else
            out.push_back(std::move(p));
    }
    return out;
}

std::vector<CriticalPoint> critical_points(const RatFunc<Rat>& f) {
    if (f.is_constant()) throw DomainError("critical points of a constant function");
    Poly<Rat> w = wronskian(f);
    // Nonconstant in characteristic zero: the Wronskian cannot vanish.
    if (w.is_zero()) throw DomainError("vanishing Wronskian");

    std::vector<CriticalPoint> pts;
    for (auto& [root, mult] : roots_over_quadratics(w))
        pts.emplace_back(ProjPoint<QuadExt>(root), mult);

    const int at_infinity = 2 * f.degree() - 2 - w.degree();
    if (at_infinity > 0) pts.emplace_back(ProjPoint<QuadExt>::infinity(QuadExt()), at_infinity);

    return merge_critical_points(std::move(pts));
}

std::string critical_points_to_string(const std::vector<CriticalPoint>& pts) {
    std::string s = "{";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ", ";
        s += pts[i].first.to_string();
        if (pts[i].second > 1) s += "^" + std::to_string(pts[i].second);
    }
    return s + "}";
}

CriticalQuad::CriticalQuad(std::vector<CriticalPoint> points)
    : pts_(merge_critical_points(std::move(points))) {
    int total = 0;
    int doubles = 0;
    for (const auto& [pt, mult] : pts_) {
        if (mult < 1) throw InvalidCriticalData("nonpositive multiplicity");
        if (mult > 2)
            throw InvalidCriticalData("critical multiplicity " + std::to_string(mult) +
                                      " exceeds 2 at " + pt.to_string());
        if (mult == 2) ++doubles;
        total += mult;
    }
    if (total != 4)
        throw InvalidCriticalData("total critical multiplicity " + std::to_string(total) +
                                  ", expected 4");
    if (doubles > 1)
        throw InvalidCriticalData("more than one double critical point");
}

}  // namespace cubiq
