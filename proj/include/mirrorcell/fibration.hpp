#pragma once

#include <cstdint>
#include <vector>

#include "mirrorcell/numeric.hpp"
#include "mirrorcell/rng.hpp"

namespace mirrorcell {

// Parameters of the polynomial map C^l -> C^{l-1}
//   f_i(y) = (y_1 ... y_k) (y_i^r - y_l^r),  i = 1..l-1,
// which fibers the complement of the monomial arrangement over the
// complement of the braid arrangement in the base.
struct FibrationParams {
    unsigned k = 0;
    unsigned l = 2;
    unsigned r = 1;

    void validate() const;
    unsigned degree() const { return k + r; }        // common degree of each f_i
    long long bezout() const;                        // (k+r) * r^{l-2}
};

CVec map_f(const FibrationParams& p, const CVec& y);

// Point of the base-braid complement with all |z_i| and |z_i - z_j| at least
// `margin`; coordinates drawn from the unit disk. `stream` separates
// independent draws under one seed.
CVec sample_base_point(const FibrationParams& p, std::uint64_t seed,
                       std::uint64_t stream = 0, double margin = 0.1);

struct FiberSample {
    CVec y;
    double residual;                 // max_i |f_i(y) - z_i|
    double min_hyperplane_distance;  // normalized distance to the arrangement
    double jacobian_ratio;           // sigma_{l-1} / sigma_1 at y
};

// Random points of the fiber over z, found by the scale/offset trick:
// y_i^r = a z_i + b with a^r prod_{a'<=k}(a z_{a'} + b) = 1 (a = 1 when
// k = 0), free r-th-root branches elsewhere, y_k recovered from the product
// constraint. Every returned sample has residual <= 1e-9. Throws
// SamplingError when the retry budget is exhausted.
std::vector<FiberSample> sample_fiber_points(const FibrationParams& p, const CVec& z,
                                             unsigned count, std::uint64_t seed,
                                             std::uint64_t stream = 0);

// sigma_{l-1}/sigma_1 of the (l-1) x l Jacobian of the fiber equations at y.
double jacobian_ratio(const FibrationParams& p, const CVec& y);

// A point of the projective fiber closure on the hyperplane at infinity,
// in homogeneous coordinates (y_0, y_1, ..., y_l) with y_0 = 0.
struct InfinityPoint {
    CVec coords;
    unsigned family;  // 1..k: branch with y_family = 0; 0: root-of-unity branch
};

// All closure points at infinity: r^{l-2} per coordinate branch y_c = 0
// (c <= k) plus r^{l-1} on the branch where all y_j^r agree. Each point is
// verified against the homogenized equations to 1e-9 and the full list is
// pairwise separated by more than 1e-6; count = bezout().
std::vector<InfinityPoint> enumerate_infinity_points(const FibrationParams& p,
                                                     const CVec& z);

// max residual of the homogenized fiber system at a projective point
// (y_0, y_1, ..., y_l).
double homogeneous_residual(const FibrationParams& p, const CVec& z, const CVec& coords);

// Full-rank test for the homogenized system plus the hyperplane at infinity:
// the smallest/largest singular-value ratio of the stacked gradients exceeds
// tol in the affine chart of the largest coordinate.
bool transversality_at_infinity(const FibrationParams& p, const CVec& z,
                                const InfinityPoint& pt, double tol = 1e-6);

// Number of projective closure points on the hyperplane y_i = 0 for
// k < i <= l, constructed explicitly and verified (residual, separation);
// always (k+r) * r^{l-2}, independent of i. Throws VerificationError if the
// verified count disagrees.
unsigned coordinate_section_count(const FibrationParams& p, const CVec& z, unsigned i);

// On the locus F(a,b) = a^r prod_i (a z_i + b) = 1: Euler identity
// a dF/da + b dF/db = (k+r) F = k+r to 1e-9, and the gradient bound
// |grad F| >= (k+r)/(|a|+|b|). Returns false on the first failing draw.
bool euler_identity_check(const FibrationParams& p, const CVec& z, unsigned trials,
                          std::uint64_t seed, std::uint64_t stream = 0);

// Wall samples (points on each arrangement hyperplane) must map onto braid
// walls to 1e-9; off-wall samples with normalized margin >= 1e-3 must map at
// least 1e-9 away from every braid wall. Throws VerificationError on a
// failing sample, naming it.
bool preimage_union_check(const FibrationParams& p, unsigned wall_trials,
                          unsigned off_trials, std::uint64_t seed,
                          std::uint64_t stream = 0);

}  // namespace mirrorcell
