#include <algorithm>
#include <string>

#include "doctest.h"
#include "mirrorcell/lattice.hpp"
#include "oracles.hpp"

using namespace mirrorcell;

TEST_CASE("full rank-two monomial arrangement: three lines through the origin") {
    const Arrangement a = build_monomial(2, 2, 1);  // y1 = 0, y2 = 0, y1 = y2
    const Lattice lat(a);
    CHECK(lat.max_rank() == 2);
    CHECK(lat.rank(0).size() == 1);
    CHECK(lat.rank(1).size() == 3);
    CHECK(lat.rank(2).size() == 1);
    CHECK(lat.rank(0)[0].mobius == 1);
    for (const Flat& f : lat.rank(1)) CHECK(f.mobius == -1);
    CHECK(lat.rank(2)[0].mobius == 2);
    CHECK(poly_str(characteristic_polynomial(a)) == "t^2 - 3t + 2");
}

TEST_CASE("sign arrangement in rank two") {
    const Arrangement a = build_monomial(0, 2, 2);  // y1 = y2, y1 = -y2
    CHECK(poly_str(characteristic_polynomial(a)) == "t^2 - 2t + 1");
}

TEST_CASE("characteristic polynomial agrees with the subset-expansion oracle") {
    // every desk-scale arrangement with at most 10 hyperplanes
    for (unsigned l = 2; l <= 4; ++l)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned k = 0; k <= l; ++k) {
                const Arrangement a = build_monomial(k, l, r);
                if (a.size() > 10) continue;
                CHECK(characteristic_polynomial(a) ==
                      testing::whitney_characteristic_polynomial(a));
            }
}

TEST_CASE("Mobius numbers over any interval from the bottom sum to zero") {
    for (const Arrangement& a :
         {build_monomial(0, 3, 2), build_monomial(2, 3, 1), build_monomial(1, 2, 3)}) {
        const Lattice lat(a);
        long long total = 0;
        for (unsigned c = 0; c <= lat.max_rank(); ++c)
            for (const Flat& f : lat.rank(c)) total += f.mobius;
        // chi(1) = sum of all Mobius values = 0 whenever the arrangement is
        // nonempty (the lattice has more than one element).
        CHECK(total == 0);
    }
}

TEST_CASE("order_leq matches containment of hyperplane index sets on lattices") {
    // x <= y in the lattice means the subspace of y sits inside the subspace
    // of x, and for flats of one arrangement that is equivalent to
    // containing(x) being a subset of containing(y). The cheap index-set test
    // must agree with the exact echelon-basis subspace test everywhere.
    const Arrangement a = build_monomial(1, 3, 2);
    const Lattice lat(a);
    for (unsigned c1 = 0; c1 <= lat.max_rank(); ++c1)
        for (unsigned c2 = 0; c2 <= lat.max_rank(); ++c2)
            for (const Flat& x : lat.rank(c1))
                for (const Flat& y : lat.rank(c2)) {
                    const bool by_subset =
                        std::includes(y.containing.begin(), y.containing.end(),
                                      x.containing.begin(), x.containing.end());
                    CHECK(Lattice::order_leq(x, y) == by_subset);
                }
}

TEST_CASE("lattice serialization is stable and ordered") {
    const std::string text = serialize(Lattice(build_monomial(2, 2, 1)));
    CHECK(text ==
          "rank=0 mobius=1 hyperplanes=\n"
          "rank=1 mobius=-1 hyperplanes=0\n"
          "rank=1 mobius=-1 hyperplanes=1\n"
          "rank=1 mobius=-1 hyperplanes=2\n"
          "rank=2 mobius=2 hyperplanes=0,1,2\n");
}

TEST_CASE("deletion-restriction identity for every hyperplane at desk scale") {
    for (unsigned l = 2; l <= 3; ++l)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned k = 0; k <= l; ++k) {
                const Arrangement a = build_monomial(k, l, r);
                for (std::size_t i = 0; i < a.size(); ++i) CHECK(triple_check(a, i));
            }
}

TEST_CASE("rank-three reflection example") {
    // A^0_3(2) = D3 reflection arrangement: 6 hyperplanes, chi = (t-1)(t-2)(t-3)
    const Arrangement a = build_monomial(0, 3, 2);
    CHECK(poly_str(characteristic_polynomial(a)) == "t^3 - 6t^2 + 11t - 6");
    const Lattice lat(a);
    CHECK(lat.rank(0).size() == 1);
    CHECK(lat.rank(1).size() == 6);
}
