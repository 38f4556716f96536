#include <stdexcept>
#include <string>

#include "doctest.h"
#include "mirrorcell/errors.hpp"
#include "mirrorcell/topology.hpp"

using namespace mirrorcell;

TEST_CASE("closed forms on worked examples") {
    // k = 2, l = 2, r = 1: cubic y1 y2 (y1 - y2) = z1, a one-holed torus
    // with punctures at the three points at infinity.
    CHECK(genus({2, 2, 1}) == 1);
    CHECK(puncture_count({2, 2, 1}) == 3);
    CHECK(free_rank({2, 2, 1}) == 4);
    // k = 0, l = 2, r = 1: the fiber of a linear map is a line, N = 0.
    CHECK(genus({0, 2, 1}) == 0);
    CHECK(puncture_count({0, 2, 1}) == 1);
    CHECK(free_rank({0, 2, 1}) == 0);
    // conic minus two points: an annulus
    CHECK(genus({0, 2, 2}) == 0);
    CHECK(puncture_count({0, 2, 2}) == 2);
    CHECK(free_rank({0, 2, 2}) == 1);
    // k = 1, l = 3, r = 2
    CHECK(genus({1, 3, 2}) == 4);
    CHECK(puncture_count({1, 3, 2}) == 6);
    CHECK(free_rank({1, 3, 2}) == 13);
}

TEST_CASE("rank identities across the symbolic grid") {
    for (unsigned l = 2; l <= 6; ++l)
        for (unsigned r = 1; r <= 6; ++r)
            for (unsigned k = 0; k <= l; ++k) {
                const FibrationParams p{k, l, r};
                const long long c = k + (r - 1) * (l - 1);
                const long long P = puncture_count(p);
                const long long g = genus(p);
                const long long N = free_rank(p);
                CHECK(P == p.bezout());
                CHECK(((c - 2) * P) % 2 == 0);
                CHECK(2 * g - 2 == (c - 2) * P);
                CHECK(g >= 0);
                CHECK(N == 2 * g + P - 1);
                CHECK(N == (c - 1) * P + 1);
                long long dsum = 0, dprod = 1;
                for (long long d : multidegree(p)) dsum += d, dprod *= d;
                CHECK(dprod == P);
                CHECK(2 * g - 2 == (dsum - l - 1) * dprod);
            }
}

TEST_CASE("multidegree lists k + r then l - 2 copies of r") {
    CHECK(multidegree({1, 2, 3}) == std::vector<long long>{4});
    CHECK(multidegree({2, 4, 3}) == std::vector<long long>{5, 3, 3});
}

TEST_CASE("fundamental group descriptor") {
    CHECK(pi1_structure({0, 2, 1}).descriptor == "F_0 ⋊ B_2");
    CHECK(pi1_structure({2, 2, 1}).descriptor == "F_4 ⋊ B_2");
    const Pi1Structure s = pi1_structure({1, 3, 2});
    CHECK(s.fiber_rank == 13);
    CHECK(s.braid_strands == 3);
    CHECK(s.split);
    CHECK(s.descriptor == "F_13 ⋊ B_3");
}

TEST_CASE("the branched-cover oracle agrees with the closed forms") {
    for (unsigned k = 0; k <= 2; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            const FibrationParams p{k, 2, r};
            OracleResult o;
            bool got = false;
            for (std::uint64_t attempt = 0; attempt < 5 && !got; ++attempt) {
                try {
                    o = riemann_hurwitz_oracle(p, sample_base_point(p, 99, attempt));
                    got = true;
                } catch (const OracleInconclusive&) {
                }
            }
            REQUIRE(got);
            CHECK(o.genus == genus(p));
            CHECK(o.punctures == puncture_count(p));
            CHECK(o.free_rank == free_rank(p));
        }
}

TEST_CASE("the oracle pins down the sign in the expanded rank formula") {
    // For k = 0, l = 2, r = 2 the fiber is a conic minus two points; the
    // oracle finds N = 1 = (c-1)P + 1, while the variant (c-1)P - 1 would
    // give -1. This locks the +1 reading.
    const FibrationParams p{0, 2, 2};
    const long long c = 0 + (2 - 1) * (2 - 1);
    const long long P = puncture_count(p);
    CHECK((c - 1) * P + 1 == 1);
    CHECK((c - 1) * P - 1 == -1);
    const OracleResult o = riemann_hurwitz_oracle(p, sample_base_point(p, 99));
    CHECK(o.free_rank == 1);
}

TEST_CASE("the oracle only handles plane fibers") {
    CHECK_THROWS_AS((void)riemann_hurwitz_oracle({0, 3, 1}, {1.0, 2.0}),
                    std::invalid_argument);
}

TEST_CASE("topology report passes and carries the named checks") {
    const char* expected[] = {"genus_parity",
                              "free_rank_product_form",
                              "expanded_rank_sign_note",
                              "multidegree_genus_identity",
                              "bezout_infinity_count",
                              "riemann_hurwitz_oracle"};
    for (unsigned k = 0; k <= 2; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            const TopologyReport rep = topology_report({k, 2, r}, kDefaultSeed);
            CHECK(rep.pass);
            REQUIRE(rep.checks.size() == 6);
            for (std::size_t i = 0; i < rep.checks.size(); ++i) {
                CHECK(rep.checks[i].name == expected[i]);
                CHECK(rep.checks[i].pass);
            }
        }
    // no oracle check for l >= 3, everything else still present
    const TopologyReport rep3 = topology_report({1, 3, 2}, kDefaultSeed);
    CHECK(rep3.pass);
    REQUIRE(rep3.checks.size() == 5);
    CHECK(rep3.checks[4].name == "bezout_infinity_count");
    CHECK(rep3.free_rank == 13);
    CHECK(rep3.bezout == 6);
}
