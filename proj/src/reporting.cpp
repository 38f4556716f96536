#include "mirrorcell/reporting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <vector>

#include "mirrorcell/errors.hpp"

namespace mirrorcell {

namespace {

Json check_value(const Json& value, bool pass) {
    Json c;
    c["value"] = value;
    c["pass"] = pass;
    return c;
}

Json check_error(const VerificationError& e) {
    Json c;
    c["value"] = nullptr;
    c["pass"] = false;
    c["error"] = e.what();
    return c;
}

std::vector<std::tuple<unsigned, unsigned, unsigned>> grid_triples(unsigned lmax, unsigned rmax) {
    if (lmax < 2) throw std::invalid_argument("grid: lmax must be at least 2");
    if (rmax < 1) throw std::invalid_argument("grid: rmax must be at least 1");
    std::vector<std::tuple<unsigned, unsigned, unsigned>> triples;
    for (unsigned l = 2; l <= lmax; ++l)
        for (unsigned r = 1; r <= rmax; ++r)
            for (unsigned k = 0; k <= l; ++k) triples.emplace_back(k, l, r);
    std::sort(triples.begin(), triples.end());
    return triples;
}

}  // namespace

Json verify_triple_json(const FibrationParams& p, const VerifyOptions& opt) {
    p.validate();
    if (opt.base_points == 0) throw std::invalid_argument("verify: base_points must be positive");

    Json out;
    out["k"] = p.k;
    out["l"] = p.l;
    out["r"] = p.r;
    out["seed"] = opt.seed;
    out["base_points"] = opt.base_points;
    out["samples_requested"] = opt.samples;

    const unsigned per_bp = (opt.samples + opt.base_points - 1) / opt.base_points;
    const long long bez = p.bezout();

    std::vector<CVec> bases;
    for (unsigned bp = 0; bp < opt.base_points; ++bp)
        bases.push_back(sample_base_point(p, opt.seed, bp));

    Json checks;

    // Fiber sampling: residual, distance to the arrangement, Jacobian rank,
    // and agreement of the forward map with the base point.
    {
        unsigned total = 0;
        double max_residual = 0.0;
        double min_hyp = std::numeric_limits<double>::infinity();
        double min_jac = std::numeric_limits<double>::infinity();
        double max_base_gap = 0.0;
        try {
            for (unsigned bp = 0; bp < opt.base_points; ++bp) {
                const auto samples = sample_fiber_points(p, bases[bp], per_bp, opt.seed, bp);
                for (const FiberSample& s : samples) {
                    ++total;
                    max_residual = std::max(max_residual, s.residual);
                    min_hyp = std::min(min_hyp, s.min_hyperplane_distance);
                    min_jac = std::min(min_jac, s.jacobian_ratio);
                    const CVec back = map_f(p, s.y);
                    for (unsigned i = 0; i + 1 < p.l; ++i)
                        max_base_gap = std::max(max_base_gap, std::abs(back[i] - bases[bp][i]));
                }
            }
            checks["samples"] = check_value(total, total >= opt.samples);
            checks["max_residual"] = check_value(max_residual, max_residual <= 1e-9);
            checks["max_base_gap"] = check_value(max_base_gap, max_base_gap <= 1e-9);
            checks["min_hyperplane_distance"] = check_value(min_hyp, min_hyp > 0.0);
            checks["min_jacobian_ratio"] = check_value(min_jac, min_jac > 1e-6);
        } catch (const VerificationError& e) {
            checks["samples"] = check_error(e);
            checks["max_residual"] = check_error(e);
            checks["max_base_gap"] = check_error(e);
            checks["min_hyperplane_distance"] = check_error(e);
            checks["min_jacobian_ratio"] = check_error(e);
        }
    }

    // Infinity census: count vs the Bezout number, residuals, separation,
    // and transversality of every point.
    {
        try {
            long long count = -1;
            bool counts_agree = true;
            double max_res = 0.0;
            double min_sep = std::numeric_limits<double>::infinity();
            bool all_transversal = true;
            for (unsigned bp = 0; bp < opt.base_points; ++bp) {
                const auto pts = enumerate_infinity_points(p, bases[bp]);
                if (count < 0) count = static_cast<long long>(pts.size());
                counts_agree = counts_agree && static_cast<long long>(pts.size()) == count;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    max_res = std::max(max_res,
                                       homogeneous_residual(p, bases[bp], pts[i].coords));
                    all_transversal =
                        all_transversal && transversality_at_infinity(p, bases[bp], pts[i]);
                    for (std::size_t j = i + 1; j < pts.size(); ++j) {
                        double sep = 0.0;
                        for (std::size_t t = 0; t < pts[i].coords.size(); ++t)
                            sep = std::max(sep, std::abs(pts[i].coords[t] - pts[j].coords[t]));
                        min_sep = std::min(min_sep, sep);
                    }
                }
            }
            checks["infinity_count"] = check_value(count, counts_agree && count == bez);
            // Both closed forms of the count: k r^{l-2} + r^{l-1} and (k+r) r^{l-2}.
            long long rpow = 1;
            for (unsigned i = 2; i < p.l; ++i) rpow *= p.r;
            const long long split_form = p.k * rpow + p.r * rpow;
            checks["bezout"] = check_value(bez, split_form == bez && bez > 0);
            checks["infinity_residual"] = check_value(max_res, max_res <= 1e-9);
            if (std::isinf(min_sep))
                checks["infinity_separation"] = check_value(nullptr, true);  // single point
            else
                checks["infinity_separation"] = check_value(min_sep, min_sep > 1e-6);
            checks["transversality"] = check_value(all_transversal, all_transversal);
        } catch (const VerificationError& e) {
            checks["infinity_count"] = check_error(e);
            checks["bezout"] = check_error(e);
            checks["infinity_residual"] = check_error(e);
            checks["infinity_separation"] = check_error(e);
            checks["transversality"] = check_error(e);
        }
    }

    // Coordinate sections y_i = 0, k < i <= l: verified counts, equal across
    // i and base points.
    {
        try {
            Json counts = Json::array();
            bool pass = true;
            for (unsigned i = p.k + 1; i <= p.l; ++i) {
                long long first = -1;
                for (unsigned bp = 0; bp < opt.base_points; ++bp) {
                    const long long c = coordinate_section_count(p, bases[bp], i);
                    if (first < 0) first = c;
                    pass = pass && c == first;
                }
                counts.push_back(first);
                pass = pass && first == bez;
            }
            checks["section_counts"] = check_value(counts, pass);
        } catch (const VerificationError& e) {
            checks["section_counts"] = check_error(e);
        }
    }

    // Euler identity on the scale/offset locus, per base point.
    {
        try {
            bool ok = true;
            for (unsigned bp = 0; bp < opt.base_points; ++bp)
                ok = ok && euler_identity_check(p, bases[bp], opt.euler_trials, opt.seed, bp);
            checks["euler_identity"] = check_value(ok, ok);
        } catch (const VerificationError& e) {
            checks["euler_identity"] = check_error(e);
        }
    }

    // Two-sided wall correspondence (independent of the base points).
    {
        try {
            const bool ok = preimage_union_check(p, opt.wall_trials, opt.off_trials, opt.seed);
            checks["preimage_check"] = check_value(ok, ok);
        } catch (const VerificationError& e) {
            checks["preimage_check"] = check_error(e);
        }
    }

    bool all = true;
    for (const auto& item : checks.items()) all = all && item.value()["pass"].get<bool>();
    out["checks"] = checks;
    out["pass"] = all;
    return out;
}

Json verify_grid_json(unsigned lmax, unsigned rmax, const VerifyOptions& opt) {
    Json out;
    out["grid"] = Json{{"lmax", lmax}, {"rmax", rmax}};
    out["seed"] = opt.seed;
    Json triples = Json::array();
    bool all = true;
    for (const auto& [k, l, r] : grid_triples(lmax, rmax)) {
        FibrationParams p{k, l, r};
        Json one = verify_triple_json(p, opt);
        all = all && one["pass"].get<bool>();
        triples.push_back(std::move(one));
    }
    out["triples"] = std::move(triples);
    out["pass"] = all;
    return out;
}

Json report_json(const FibrationParams& p, std::uint64_t seed) {
    const TopologyReport rep = topology_report(p, seed);
    Json out;
    out["k"] = rep.params.k;
    out["l"] = rep.params.l;
    out["r"] = rep.params.r;
    out["genus"] = rep.genus;
    out["punctures"] = rep.punctures;
    out["free_rank"] = rep.free_rank;
    out["bezout"] = rep.bezout;
    out["multidegree"] = rep.multidegree;
    Json pi1;
    pi1["fiber_rank"] = rep.pi1.fiber_rank;
    pi1["braid_strands"] = rep.pi1.braid_strands;
    pi1["split"] = rep.pi1.split;
    pi1["descriptor"] = rep.pi1.descriptor;
    out["pi1"] = pi1;
    Json checks = Json::array();
    for (const NamedCheck& c : rep.checks) {
        Json one;
        one["name"] = c.name;
        one["pass"] = c.pass;
        one["detail"] = c.detail;
        checks.push_back(one);
    }
    out["checks"] = checks;
    out["pass"] = rep.pass;
    return out;
}

Json report_grid_json(unsigned lmax, unsigned rmax, std::uint64_t seed) {
    Json out;
    out["grid"] = Json{{"lmax", lmax}, {"rmax", rmax}};
    out["seed"] = seed;
    Json entries = Json::array();
    bool all = true;
    for (const auto& [k, l, r] : grid_triples(lmax, rmax)) {
        FibrationParams p{k, l, r};
        Json one = report_json(p, seed);
        all = all && one["pass"].get<bool>();
        entries.push_back(std::move(one));
    }
    out["reports"] = std::move(entries);
    out["pass"] = all;
    return out;
}

Json scan_json(const ScanResult& scan) {
    Json out;
    out["label"] = scan.label;
    Json entries = Json::array();
    for (const ScanEntry& e : scan.entries) {
        Json one;
        one["flat"] = e.flat;
        one["dim"] = e.dim;
        one["induced_count"] = e.induced_count;
        Json cands = Json::array();
        for (const auto& c : e.candidates) cands.push_back(Json::array({c[0], c[1], c[2]}));
        one["candidates"] = cands;
        entries.push_back(one);
    }
    out["entries"] = entries;
    out["failures"] = scan.failures;
    out["pass"] = scan.failures.empty();
    return out;
}

}  // namespace mirrorcell
