#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubiq/projpoint.hpp"
#include "cubiq/quadext.hpp"
#include "cubiq/ratfunc.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

using CriticalPoint = std::pair<ProjPoint<QuadExt>, int>;

/// Critical points of f with multiplicity, sorted in the canonical point
/// order. Finite points are the Wronskian roots; infinity carries
/// multiplicity (2 deg f - 2) - deg W when positive. Total multiplicity is
/// always 2 deg f - 2. Throws UnresolvableFactor when a Wronskian factor of
/// degree >= 3 is irreducible over Q.
std::vector<CriticalPoint> critical_points(const RatFunc<Rat>& f);

std::string critical_points_to_string(const std::vector<CriticalPoint>& pts);

/// The canonicalized critical multiset of a cubic with at least three
/// distinct critical points: total multiplicity four, at most one double.
class CriticalQuad {
public:
    explicit CriticalQuad(std::vector<CriticalPoint> points);

    const std::vector<CriticalPoint>& points() const { return pts_; }
    int distinct_count() const { return static_cast<int>(pts_.size()); }

    friend bool operator==(const CriticalQuad& a, const CriticalQuad& b) {
        return a.pts_ == b.pts_;
    }
    friend bool operator!=(const CriticalQuad& a, const CriticalQuad& b) { return !(a == b); }

    std::string to_string() const { return critical_points_to_string(pts_); }

private:
    std::vector<CriticalPoint> pts_;
};

/// Merge duplicates and sort canonically.
std::vector<CriticalPoint> merge_critical_points(std::vector<CriticalPoint> pts);

}  // namespace cubiq
