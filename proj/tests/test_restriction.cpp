#include <array>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mirrorcell/restriction.hpp"

using namespace mirrorcell;

namespace {

// The rank-1 flat of `a` cut out by hyperplane `index`.
Flat hyperplane_flat(const Arrangement& a, int index) {
    const Lattice lat(a);
    for (const Flat& f : lat.rank(1))
        if (f.containing == std::vector<int>{index}) return f;
    throw std::logic_error("flat not found");
}

}  // namespace

TEST_CASE("restriction of the sign arrangement to a diagonal is a pencil") {
    // A^0_3(2) restricted to y1 = y2 induces exactly A^1_2(2), including the
    // hyperplane order of the canonical construction.
    const Arrangement a = build_monomial(0, 3, 2);
    const RestrictionResult rr = restrict_to_flat(a, hyperplane_flat(a, 0));
    CHECK(serialize(rr.induced) == serialize(build_monomial(1, 2, 2)));
    // chart rows parametrize the flat: (1,1,0) and (0,0,1)
    CHECK(rr.chart.rows() == 2);
    const FieldPtr f = a.field();
    CHECK(rr.chart.at(0, 0) == CycloNum::one(f));
    CHECK(rr.chart.at(0, 1) == CycloNum::one(f));
    CHECK(rr.chart.at(0, 2).is_zero());
    CHECK(rr.chart.at(1, 0).is_zero());
    CHECK(rr.chart.at(1, 1).is_zero());
    CHECK(rr.chart.at(1, 2) == CycloNum::one(f));
}

TEST_CASE("restricting the full monomial arrangement to a coordinate hyperplane") {
    // A^l_l(r) restricted to y_l = 0 is A^{l-1}_{l-1}(r) on the nose.
    for (unsigned l = 3; l <= 4; ++l)
        for (unsigned r = 1; r <= 3; ++r) {
            const Arrangement a = build_monomial(l, l, r);
            const RestrictionResult rr =
                restrict_to_flat(a, hyperplane_flat(a, static_cast<int>(l) - 1));
            CHECK(serialize(rr.induced) == serialize(build_monomial(l - 1, l - 1, r)));
        }
}

TEST_CASE("restriction rejects the ambient flat and the origin") {
    const Arrangement a = build_monomial(2, 2, 1);
    const Lattice lat(a);
    CHECK_THROWS_AS((void)restrict_to_flat(a, lat.rank(0)[0]), std::invalid_argument);
    CHECK_THROWS_AS((void)restrict_to_flat(a, lat.rank(2)[0]), std::invalid_argument);
}

TEST_CASE("induced arrangements are chart-independent up to linear isomorphism") {
    const Arrangement a = build_monomial(0, 3, 2);
    const Flat flat = hyperplane_flat(a, 0);  // y1 = y2
    const RestrictionResult rr = restrict_to_flat(a, flat);
    // a different parametrization of the same flat: rows (1,1,1), (1,1,-1)
    const FieldPtr f = a.field();
    CycloMatrix chart(f, 2, 3);
    for (unsigned j = 0; j < 3; ++j) chart.at(0, j) = CycloNum::one(f);
    chart.at(1, 0) = CycloNum::one(f);
    chart.at(1, 1) = CycloNum::one(f);
    chart.at(1, 2) = -CycloNum::one(f);
    const Arrangement other = restrict_with_chart(a, chart);
    CHECK(other.size() == rr.induced.size());
    CHECK(linear_iso_exists(rr.induced, other));
}

TEST_CASE("identification of pencils lists every matching type") {
    // three concurrent lines in the plane: all of A^2_2(1), A^1_2(2), A^0_2(3)
    const auto cands = identify_monomial_type(build_monomial(1, 2, 2), 3);
    const std::vector<std::array<unsigned, 3>> expect = {
        {2, 2, 1}, {1, 2, 2}, {0, 2, 3}};
    CHECK(cands == expect);
}

TEST_CASE("identification finds the type itself at desk scale") {
    for (unsigned l = 2; l <= 3; ++l)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned k = 0; k <= l; ++k) {
                if (k + r * l * (l - 1) / 2 > 12) continue;
                const Arrangement a = build_monomial(k, l, r);
                if (a.size() == 0) continue;
                const auto cands = identify_monomial_type(a, 3);
                bool found = false;
                for (const auto& c : cands)
                    found = found || (c == std::array<unsigned, 3>{k, l, r});
                CHECK(found);
            }
}

TEST_CASE("near-pencil configuration without a projective frame") {
    // A^1_3(1) = {y1, y1-y2, y1-y3, y2-y3} has n = rank + 1 but admits no
    // frame (every fourth covector has a zero coordinate in the basis of the
    // other three), exercising the circuit-count fallback.
    const auto cands = identify_monomial_type(build_monomial(1, 3, 1), 3);
    const std::vector<std::array<unsigned, 3>> expect = {{1, 3, 1}};
    CHECK(cands == expect);
}

TEST_CASE("isomorphism search distinguishes genuinely different types") {
    // equal counts, equal rank: A^2_2(2) (4 lines) vs A^1_2(3) (4 lines):
    // chi agrees for pencils? no: both are 4 concurrent lines? A^2_2(2) is
    // y1, y2, y1 = +-y2: four lines through the origin in C^2; any two sets
    // of four distinct concurrent lines differ by cross-ratio, so the exact
    // search must decide. The cross-ratios differ: {0, inf, 1, -1} vs
    // {0, zeta_3 roots}: not projectively equivalent.
    const Arrangement a = build_monomial(2, 2, 2);
    const Arrangement b = build_monomial(1, 2, 3);
    CHECK_FALSE(linear_iso_exists(a, b));
    // and the self test passes
    CHECK(linear_iso_exists(a, a));
    CHECK(linear_iso_exists(b, b));
}

TEST_CASE("closure scan identifies every flat of the desk reflection groups") {
    for (unsigned l = 2; l <= 3; ++l)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned p : {1u, r}) {
                const ScanResult scan = restriction_closure_scan(r, p, l);
                CHECK(scan.all_identified());
                for (const ScanEntry& e : scan.entries) CHECK(e.dim >= 2);
            }
}

TEST_CASE("scan entries carry the exact induced data") {
    const ScanResult scan = restriction_closure_scan(3, 3, 3);
    REQUIRE(!scan.entries.empty());
    CHECK(scan.entries[0].dim == 3);
    CHECK(scan.entries[0].induced_count == 9);
    // every proper flat of A^0_3(3) restricts to the pencil A^1_2(3)
    for (std::size_t i = 1; i < scan.entries.size(); ++i) {
        const ScanEntry& e = scan.entries[i];
        CHECK(e.dim == 2);
        CHECK(e.induced_count == 4);
        bool found = false;
        for (const auto& c : e.candidates)
            found = found || (c == std::array<unsigned, 3>{1, 2, 3});
        CHECK(found);
    }
}

TEST_CASE("serialize(scan) is the documented line format") {
    const ScanResult scan = restriction_closure_scan(1, 1, 3);
    const std::string text = serialize(scan);
    CHECK(text.substr(0, text.find('\n')) ==
          "flat= dim=3 induced_count=3 candidates=(0,3,1)");
}
