#pragma once

#include <cstdint>

#include "json.hpp"
#include "mirrorcell/fibration.hpp"
#include "mirrorcell/restriction.hpp"
#include "mirrorcell/rng.hpp"
#include "mirrorcell/topology.hpp"

namespace mirrorcell {

// Insertion-ordered so repeated runs with one seed serialize byte for byte.
using Json = nlohmann::ordered_json;

struct VerifyOptions {
    unsigned samples = 100;      // fiber samples per triple, split across base points
    unsigned base_points = 3;
    std::uint64_t seed = kDefaultSeed;
    unsigned wall_trials = 200;  // preimage check: points on the arrangement
    unsigned off_trials = 200;   // preimage check: points off the arrangement
    unsigned euler_trials = 25;  // Euler-identity draws per base point
};

// Runs the full numeric battery for one (k, l, r): fiber sampling with
// residual/Jacobian bounds, the infinity-point census against the Bezout
// count, transversality, coordinate sections, the Euler identity, and the
// two-sided preimage check. Named checks that fail are reported with
// pass=false; sampling-budget and oracle-ambiguity errors propagate as
// exceptions since they mean "could not test", not "tested and failed".
Json verify_triple_json(const FibrationParams& p, const VerifyOptions& opt);

// All triples with 2 <= l <= lmax, 1 <= r <= rmax, 0 <= k <= l, ordered by
// (k, l, r).
Json verify_grid_json(unsigned lmax, unsigned rmax, const VerifyOptions& opt);

// JSON rendering of topology_report.
Json report_json(const FibrationParams& p, std::uint64_t seed);
Json report_grid_json(unsigned lmax, unsigned rmax, std::uint64_t seed);

// JSON rendering of a restriction scan.
Json scan_json(const ScanResult& scan);

}  // namespace mirrorcell
