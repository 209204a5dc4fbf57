#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubiq/integer.hpp"
#include "cubiq/padic.hpp"
#include "cubiq/primefield.hpp"
#include "cubiq/projpoint.hpp"
#include "cubiq/rational.hpp"

namespace cubiq {

/// Discriminant of the fiber equation z^2 + 2(1+y) z + 3y = 0:
/// Delta(y) = 4(y^2 - y + 1) = (2y-1)^2 + 3.
Rat discriminant(const Rat& y);

/// phi(z) = y is always solvable over R. delta carries the positive
/// discriminant for finite y; y = inf is hit by z = -3/2 and delta is absent.
struct RealSolvability {
    bool solvable;  // always true; kept explicit for the verdict interface
    std::optional<Rat> delta;
};
RealSolvability real_solvable(const ProjPoint<Rat>& y);
inline RealSolvability real_solvable(const Rat& y) { return real_solvable(ProjPoint<Rat>(y)); }

/// Exact decision of solvability of phi(z) = y over Q_p: y = inf is always
/// hit; a finite y is hit iff Delta(y) is a square in Q_p.
bool qp_solvable(const Int& p, const ProjPoint<Rat>& y);
inline bool qp_solvable(const Int& p, const Rat& y) { return qp_solvable(p, ProjPoint<Rat>(y)); }

/// Image of phi reduced mod p over all of P^1(F_p). reduced_degree drops to 1
/// exactly when p divides the resultant (p = 3), where the reduced map is a
/// bijection and the finite-field argument gives no information.
struct FpScanResult {
    long long p = 0;
    int reduced_degree = 0;
    std::vector<long long> image_finite;  // ascending residues
    bool image_infinity = false;
    bool surjective = false;
    std::vector<long long> missing;  // finite residues with empty fiber
    std::string to_string() const;
};
FpScanResult fp_scan(long long p);

enum class Certificate {
    AlwaysPositive,      // R: Delta = (2y-1)^2 + 3 >= 3
    HenselAlwaysSquare,  // declared for interface completeness; no Q_p earns it
    Mod4Obstruction,     // p = 2: Delta(1/2 + t) = 4t^2 + 3 = 3 (mod 4)
    OddValuationGap,     // p = 3: ord_3(Delta(y)) = 1 whenever y = 2 (mod 3) is a unit
    FiniteFieldGap,      // p > 3: the reduced map misses residues
};
std::string certificate_name(Certificate c);

struct SolvabilityVerdict {
    enum class Field { Real, Qp, PrimeField };
    Field field = Field::Real;
    Int p = 0;  // meaningful for Qp / PrimeField
    bool perfect = false;
    std::optional<Rat> witness;  // a y with empty fiber; present iff not perfect
    Certificate certificate = Certificate::AlwaysPositive;
    std::vector<long long> missing;  // FiniteFieldGap evidence
    std::string detail;

    std::string field_name() const;
    std::vector<std::pair<std::string, std::string>> record() const;
};

/// Verdict for Q_p. Witnesses are deterministic: y = 1/2 for p = 2, y = 2
/// for p = 3, and the smallest residue missing from fp_scan(p) for p > 3.
/// Every witness is re-verified through verify_witness before returning.
SolvabilityVerdict qp_perfect(const Int& p);

SolvabilityVerdict real_verdict();
SolvabilityVerdict fp_verdict(long long p);

/// True iff phi(z) = y really has no solution over Q_p, established twice:
/// the square test on Delta(y) fails, and an independent brute-force residue
/// search confirms the unit part is a non-square (odd valuation is conclusive
/// by itself). For p > 3 and integral y the valuation identity
/// |phi(x)|_p = |x|_p (|x|_p > 1), which rules out non-integral solutions, is
/// spot-checked as well.
bool verify_witness(const Int& p, const Rat& y);

/// (1/d) C(2d-2, d-1), the (d-1)-st Catalan number: the upper bound for the
/// number of equivalence classes of degree-d functions sharing a critical set.
Int catalan_bound(long d);

}  // namespace cubiq
