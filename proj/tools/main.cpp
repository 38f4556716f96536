#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mirrorcell/arrangement.hpp"
#include "mirrorcell/errors.hpp"
#include "mirrorcell/fibration.hpp"
#include "mirrorcell/lattice.hpp"
#include "mirrorcell/reporting.hpp"
#include "mirrorcell/restriction.hpp"
#include "mirrorcell/rng.hpp"

namespace {

using namespace mirrorcell;

std::uint64_t default_seed() {
    const char* env = std::getenv("MIRRORCELL_SEED");
    if (!env) return kDefaultSeed;
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("MIRRORCELL_SEED must be an unsigned 64-bit integer");
    }
}

std::string covector_line(const Hyperplane& h) {
    std::string line;
    for (std::size_t i = 0; i < h.covector().size(); ++i) {
        if (i) line += ' ';
        line += h.covector()[i].str();
    }
    return line;
}

Json arrangement_json(const Arrangement& a) {
    Json out;
    out["label"] = a.label();
    out["dim"] = a.dim();
    out["r"] = a.field()->order();
    out["count"] = a.size();
    Json rows = Json::array();
    for (const Hyperplane& h : a.hyperplanes()) rows.push_back(covector_line(h));
    out["hyperplanes"] = rows;
    return out;
}

Json lattice_json(const Lattice& lat) {
    Json flats = Json::array();
    for (unsigned c = 0; c <= lat.max_rank(); ++c) {
        for (const Flat& f : lat.rank(c)) {
            Json one;
            one["rank"] = f.rank;
            one["mobius"] = f.mobius;
            one["hyperplanes"] = f.containing;
            flats.push_back(one);
        }
    }
    Json out;
    out["label"] = lat.arrangement().label();
    out["flat_count"] = lat.flat_count();
    out["flats"] = flats;
    return out;
}

Json charpoly_json(const Arrangement& a) {
    const ZPoly chi = characteristic_polynomial(a);
    Json coeffs = Json::array();
    for (const Integer& c : chi) coeffs.push_back(c.get_str());
    Json out;
    out["label"] = a.label();
    out["coefficients_ascending"] = coeffs;
    out["text"] = poly_str(chi);
    return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string verify_text(const Json& v) {
    std::string out;
    for (const auto& t : v["triples"]) {
        out += "k=" + t["k"].dump() + " l=" + t["l"].dump() + " r=" + t["r"].dump() + ": ";
        out += t["pass"].get<bool>() ? "pass" : "FAIL";
        if (!t["pass"].get<bool>()) {
            out += " (";
            bool first = true;
            for (const auto& item : t["checks"].items()) {
                if (!item.value()["pass"].get<bool>()) {
                    if (!first) out += ", ";
                    out += item.key();
                    first = false;
                }
            }
            out += ")";
        }
        out += "\n";
    }
    out += std::string("overall: ") + (v["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
    return out;
}

std::string report_text(const Json& rep) {
    std::string out;
    out += "k=" + rep["k"].dump() + " l=" + rep["l"].dump() + " r=" + rep["r"].dump() + "\n";
    out += "genus=" + rep["genus"].dump() + " punctures=" + rep["punctures"].dump() +
           " free_rank=" + rep["free_rank"].dump() + " bezout=" + rep["bezout"].dump() + "\n";
    out += "pi1: " + rep["pi1"]["descriptor"].get<std::string>() + "\n";
    for (const auto& c : rep["checks"]) {
        out += std::string(c["pass"].get<bool>() ? "  [pass] " : "  [FAIL] ") +
               c["name"].get<std::string>() + ": " + c["detail"].get<std::string>() + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"monomial arrangements, their restrictions, and numeric fiber checks"};
    app.require_subcommand(1);

    unsigned k = 0, l = 2, r = 1, p = 1;
    unsigned rmax_opt = 0;
    unsigned samples = 100;
    std::vector<unsigned> grid;
    std::string format;  // resolved per subcommand after parsing
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto add_triple = [&](CLI::App* sub, bool l_required) {
        sub->add_option("--k", k, "number of coordinate hyperplanes");
        auto* lopt = sub->add_option("--l", l, "ambient dimension");
        if (l_required) lopt->required();
        sub->add_option("--r", r, "root-of-unity order");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option_function<std::uint64_t>(
            "--seed",
            [&](std::uint64_t v) {
                seed = v;
                seed_given = true;
            },
            "64-bit seed (default: MIRRORCELL_SEED or 1729)");
    };

    CLI::App* cmd_build = app.add_subcommand("build", "print an arrangement");
    add_triple(cmd_build, true);
    add_common(cmd_build);

    CLI::App* cmd_lattice = app.add_subcommand("lattice", "intersection lattice of an arrangement");
    add_triple(cmd_lattice, true);
    add_common(cmd_lattice);

    CLI::App* cmd_charpoly =
        app.add_subcommand("charpoly", "characteristic polynomial of an arrangement");
    add_triple(cmd_charpoly, true);
    add_common(cmd_charpoly);

    CLI::App* cmd_restrict =
        app.add_subcommand("restrict", "restrictions of an arrangement to all flats of dim >= 2");
    add_triple(cmd_restrict, true);
    cmd_restrict->add_option("--rmax", rmax_opt, "identification search bound (0 = field order)");
    add_common(cmd_restrict);

    CLI::App* cmd_scan =
        app.add_subcommand("scan", "identify all restrictions of a reflection arrangement");
    cmd_scan->add_option("--r", r, "root-of-unity order")->required();
    cmd_scan->add_option("--p", p, "imprimitivity divisor (p | r)");
    cmd_scan->add_option("--l", l, "ambient dimension")->required();
    cmd_scan->add_option("--rmax", rmax_opt, "identification search bound (0 = r)");
    add_common(cmd_scan);

    CLI::App* cmd_verify =
        app.add_subcommand("verify", "numeric verification of the fiber geometry");
    add_triple(cmd_verify, false);
    cmd_verify->add_option("--samples", samples, "fiber samples per triple");
    cmd_verify->add_option("--grid", grid, "run all triples with l <= LMAX, r <= RMAX")
        ->expected(2);
    add_common(cmd_verify);

    CLI::App* cmd_report = app.add_subcommand("report", "topological invariants of the fiber");
    add_triple(cmd_report, false);
    cmd_report->add_option("--grid", grid, "run all triples with l <= LMAX, r <= RMAX")
        ->expected(2);
    add_common(cmd_report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!seed_given) seed = default_seed();
        const bool grid_mode = !grid.empty();
        if (format.empty())
            format = (cmd_verify->parsed() || cmd_report->parsed()) ? "json" : "text";
        if ((cmd_verify->parsed() || cmd_report->parsed()) && !grid_mode &&
            cmd_verify->count("--l") + cmd_report->count("--l") == 0)
            throw std::invalid_argument("either --l or --grid is required");

        if (cmd_build->parsed()) {
            const Arrangement a = build_monomial(k, l, r);
            if (format == "json")
                print_json(arrangement_json(a));
            else
                std::cout << serialize(a);
            return 0;
        }
        if (cmd_lattice->parsed()) {
            const Lattice lat(build_monomial(k, l, r));
            if (format == "json")
                print_json(lattice_json(lat));
            else
                std::cout << serialize(lat);
            return 0;
        }
        if (cmd_charpoly->parsed()) {
            const Arrangement a = build_monomial(k, l, r);
            if (format == "json")
                print_json(charpoly_json(a));
            else
                std::cout << poly_str(characteristic_polynomial(a)) << "\n";
            return 0;
        }
        if (cmd_restrict->parsed()) {
            const ScanResult scan = scan_arrangement(build_monomial(k, l, r), rmax_opt);
            if (format == "json")
                print_json(scan_json(scan));
            else
                std::cout << serialize(scan);
            return scan.all_identified() ? 0 : 1;
        }
        if (cmd_scan->parsed()) {
            const ScanResult scan = restriction_closure_scan(r, p, l, rmax_opt);
            if (format == "json")
                print_json(scan_json(scan));
            else
                std::cout << serialize(scan);
            return scan.all_identified() ? 0 : 1;
        }
        if (cmd_verify->parsed()) {
            VerifyOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            Json out;
            if (grid_mode)
                out = verify_grid_json(grid[0], grid[1], opt);
            else
                out = verify_triple_json(FibrationParams{k, l, r}, opt);
            if (format == "json") {
                print_json(out);
            } else if (grid_mode) {
                std::cout << verify_text(out);
            } else {
                Json wrapped;
                wrapped["triples"] = Json::array({out});
                wrapped["pass"] = out["pass"];
                std::cout << verify_text(wrapped);
            }
            return out["pass"].get<bool>() ? 0 : 1;
        }
        if (cmd_report->parsed()) {
            Json out;
            if (grid_mode) {
                out = report_grid_json(grid[0], grid[1], seed);
                if (format == "json") {
                    print_json(out);
                } else {
                    for (const auto& rep : out["reports"]) std::cout << report_text(rep);
                }
            } else {
                out = report_json(FibrationParams{k, l, r}, seed);
                if (format == "json")
                    print_json(out);
                else
                    std::cout << report_text(out);
            }
            return out["pass"].get<bool>() ? 0 : 1;
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const SamplingError& e) {
        print_json(Json{{"error", e.what()}});
        return 3;
    } catch (const OracleInconclusive& e) {
        print_json(Json{{"error", e.what()}});
        return 3;
    } catch (const VerificationError& e) {
        print_json(Json{{"error", e.what()}});
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
