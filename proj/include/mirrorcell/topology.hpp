#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mirrorcell/fibration.hpp"

namespace mirrorcell {

// Closed-form topology of the generic fiber: a curve of genus g with P
// punctures, so the fundamental group is free of rank N = 2g + P - 1.
// With c = k + (r-1)(l-1) and P = (k+r) r^{l-2}:
//   2g - 2 = (c - 2) P,   N = (c - 1) P + 1.
long long genus(const FibrationParams& p);
long long puncture_count(const FibrationParams& p);
long long free_rank(const FibrationParams& p);

// Degrees of the defining equations of the fiber closure: one of k + r, then
// l - 2 of r. Their product is the Bezout count.
std::vector<long long> multidegree(const FibrationParams& p);

struct Pi1Structure {
    long long fiber_rank = 0;
    unsigned braid_strands = 0;
    bool split = true;
    std::string descriptor;  // e.g. "F_13 ⋊ B_3" (split extension)
};

Pi1Structure pi1_structure(const FibrationParams& p);

// Independent genus computation for l = 2 via the branched covering of the
// y_2-line: chi = d (1 - s) + sum of distinct preimage counts over the s
// special values (discriminant roots and leading-coefficient zeros), then
// N = 1 - chi and g = (N + 1 - P) / 2. Throws OracleInconclusive when branch
// values cluster too closely to separate (resample z and retry).
struct OracleResult {
    long long genus = 0;
    long long punctures = 0;
    long long free_rank = 0;
};

OracleResult riemann_hurwitz_oracle(const FibrationParams& p, const CVec& z);

struct NamedCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct TopologyReport {
    FibrationParams params;
    long long genus = 0;
    long long punctures = 0;
    long long free_rank = 0;
    long long bezout = 0;
    std::vector<long long> multidegree;
    Pi1Structure pi1;
    std::vector<NamedCheck> checks;
    bool pass = false;
};

// Assembles the closed forms plus named consistency checks (parity, product
// form, multidegree identity, infinity count at a sampled base point, the
// l = 2 oracle, and an informational note on the off-by-two sign variant of
// the expanded rank formula).
TopologyReport topology_report(const FibrationParams& p, std::uint64_t seed);

}  // namespace mirrorcell
