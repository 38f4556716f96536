#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "mirrorcell/arrangement.hpp"
#include "mirrorcell/fibration.hpp"
#include "mirrorcell/lattice.hpp"
#include "mirrorcell/reporting.hpp"
#include "mirrorcell/restriction.hpp"
#include "mirrorcell/rng.hpp"
#include "mirrorcell/topology.hpp"

namespace py = pybind11;
using namespace mirrorcell;

PYBIND11_MODULE(_core, m) {
    m.doc() = "monomial arrangements, restrictions, and fiber verification";

    m.def(
        "build",
        [](unsigned k, unsigned l, unsigned r) { return serialize(build_monomial(k, l, r)); },
        py::arg("k"), py::arg("l"), py::arg("r"),
        "Canonical text form of the monomial arrangement A^k_l(r).");
    m.def(
        "reflection",
        [](unsigned r, unsigned p, unsigned l) { return serialize(build_reflection(r, p, l)); },
        py::arg("r"), py::arg("p"), py::arg("l"),
        "Canonical text form of the reflection arrangement of G(r,p,l).");
    m.def(
        "lattice",
        [](unsigned k, unsigned l, unsigned r) {
            return serialize(Lattice(build_monomial(k, l, r)));
        },
        py::arg("k"), py::arg("l"), py::arg("r"),
        "One line per flat of the intersection lattice.");
    m.def(
        "charpoly",
        [](unsigned k, unsigned l, unsigned r) {
            return poly_str(characteristic_polynomial(build_monomial(k, l, r)));
        },
        py::arg("k"), py::arg("l"), py::arg("r"));
    m.def(
        "charpoly_coefficients",
        [](unsigned k, unsigned l, unsigned r) {
            std::vector<std::string> out;
            for (const Integer& c : characteristic_polynomial(build_monomial(k, l, r)))
                out.push_back(c.get_str());
            return out;
        },
        py::arg("k"), py::arg("l"), py::arg("r"),
        "Ascending coefficients as decimal strings (exact).");
    m.def(
        "identify",
        [](const std::string& text, unsigned r_max) {
            std::vector<std::array<unsigned, 3>> raw =
                identify_monomial_type(parse_arrangement(text), r_max);
            std::vector<std::tuple<unsigned, unsigned, unsigned>> out;
            for (const auto& c : raw) out.emplace_back(c[0], c[1], c[2]);
            return out;
        },
        py::arg("arrangement_text"), py::arg("r_max"),
        "Monomial types (k, m, r) matching a serialized arrangement.");
    m.def(
        "scan",
        [](unsigned r, unsigned p, unsigned l, unsigned r_max) {
            const ScanResult scan = restriction_closure_scan(r, p, l, r_max);
            return py::make_tuple(serialize(scan), scan.all_identified());
        },
        py::arg("r"), py::arg("p"), py::arg("l"), py::arg("r_max") = 0,
        "Identify the restriction of a reflection arrangement to every flat "
        "of dimension >= 2; returns (text, all_identified).");
    m.def(
        "map_f",
        [](unsigned k, unsigned l, unsigned r, const CVec& y) {
            return map_f(FibrationParams{k, l, r}, y);
        },
        py::arg("k"), py::arg("l"), py::arg("r"), py::arg("y"),
        "The fibration map: z_i = (y_1...y_k)(y_i^r - y_l^r).");
    m.def(
        "triple_check",
        [](unsigned k, unsigned l, unsigned r, std::size_t index) {
            return triple_check(build_monomial(k, l, r), index);
        },
        py::arg("k"), py::arg("l"), py::arg("r"), py::arg("index"),
        "Deletion-restriction identity for one hyperplane.");
    m.def(
        "genus", [](unsigned k, unsigned l, unsigned r) { return genus(FibrationParams{k, l, r}); },
        py::arg("k"), py::arg("l"), py::arg("r"));
    m.def(
        "punctures",
        [](unsigned k, unsigned l, unsigned r) { return puncture_count(FibrationParams{k, l, r}); },
        py::arg("k"), py::arg("l"), py::arg("r"));
    m.def(
        "free_rank",
        [](unsigned k, unsigned l, unsigned r) { return free_rank(FibrationParams{k, l, r}); },
        py::arg("k"), py::arg("l"), py::arg("r"));
    m.def(
        "verify_json",
        [](unsigned k, unsigned l, unsigned r, unsigned samples, std::uint64_t seed) {
            VerifyOptions opt;
            opt.samples = samples;
            opt.seed = seed;
            return verify_triple_json(FibrationParams{k, l, r}, opt).dump();
        },
        py::arg("k"), py::arg("l"), py::arg("r"), py::arg("samples") = 100,
        py::arg("seed") = kDefaultSeed,
        "Full numeric battery for one triple, as a JSON string.");
    m.def(
        "report_json",
        [](unsigned k, unsigned l, unsigned r, std::uint64_t seed) {
            return report_json(FibrationParams{k, l, r}, seed).dump();
        },
        py::arg("k"), py::arg("l"), py::arg("r"), py::arg("seed") = kDefaultSeed,
        "Topological invariants and named checks, as a JSON string.");
}
