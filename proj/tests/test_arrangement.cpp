#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "mirrorcell/arrangement.hpp"

using namespace mirrorcell;

TEST_CASE("monomial arrangement hyperplane counts across the desk grid") {
    for (unsigned l = 2; l <= 4; ++l)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned k = 0; k <= l; ++k) {
                const Arrangement a = build_monomial(k, l, r);
                CHECK(a.size() == k + r * l * (l - 1) / 2);
                CHECK(a.dim() == l);
                CHECK(a.field()->order() == r);
                // construction already rejects duplicates; double-check keys
                std::set<std::string> keys;
                for (const Hyperplane& h : a.hyperplanes()) keys.insert(h.key());
                CHECK(keys.size() == a.size());
            }
}

TEST_CASE("covectors are normalized to leading coefficient one") {
    const Arrangement a = build_monomial(1, 3, 2);
    for (const Hyperplane& h : a.hyperplanes()) {
        bool seen = false;
        for (const CycloNum& c : h.covector()) {
            if (!seen && !c.is_zero()) {
                CHECK(c == CycloNum::one(a.field()));
                seen = true;
            }
        }
        CHECK(seen);
    }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_monomial(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_monomial(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_monomial(0, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_reflection(4, 3, 2), std::invalid_argument);  // p must divide r
}

TEST_CASE("reflection arrangements coincide with the stated monomial ones") {
    // p < r keeps the coordinate hyperplanes, p = r drops them
    CHECK(serialize(build_reflection(2, 1, 3)) == serialize(build_monomial(3, 3, 2)));
    CHECK(serialize(build_reflection(2, 2, 3)) == serialize(build_monomial(0, 3, 2)));
    CHECK(serialize(build_reflection(3, 1, 2)) == serialize(build_monomial(2, 2, 3)));
    CHECK(serialize(build_reflection(6, 2, 2)) == serialize(build_monomial(2, 2, 6)));
}

TEST_CASE("braid arrangement is the k = l-1, r = 1 monomial arrangement") {
    for (unsigned l = 3; l <= 5; ++l)
        CHECK(serialize(build_braid(l)) == serialize(build_monomial(l - 1, l - 1, 1)));
}

TEST_CASE("serialization round-trips exactly in both directions") {
    for (const Arrangement& a :
         {build_monomial(2, 3, 2), build_monomial(0, 2, 4), build_monomial(3, 3, 1)}) {
        const std::string text = serialize(a);
        const Arrangement back = parse_arrangement(text);
        CHECK(back.dim() == a.dim());
        CHECK(back.size() == a.size());
        CHECK(back.covector_matrix() == a.covector_matrix());
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("serialized header carries the construction parameters") {
    const std::string text = serialize(build_monomial(1, 3, 2));
    CHECK(text.substr(0, text.find('\n')) == "arrangement dim=3 r=2 count=7");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_arrangement("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_arrangement("arrangement dim=2 r=1 count=2\n[1] [0]\n"),
                    std::invalid_argument);  // count mismatch
    CHECK_THROWS_AS(parse_arrangement("arrangement dim=2 r=1 count=1\n[1] [0] [0]\n"),
                    std::invalid_argument);  // wrong coordinate count
}

TEST_CASE("essentiality of monomial arrangements") {
    CHECK_FALSE(is_essential(build_monomial(0, 2, 1)));  // one diagonal hyperplane, rank 1
    CHECK_FALSE(is_essential(build_monomial(0, 3, 1)));  // braid-type, rank l-1
    CHECK(is_essential(build_monomial(1, 3, 1)));
    CHECK(is_essential(build_monomial(0, 3, 2)));
}

TEST_CASE("duplicate hyperplanes are rejected") {
    Arrangement a(CycloField::get(2), 2, "test");
    a.add_hyperplane({CycloNum::one(a.field()), CycloNum::zero(a.field())});
    // same hyperplane scaled: 2*y1 = 0
    CHECK_THROWS_AS(
        a.add_hyperplane({CycloNum::from_rational(a.field(), Rational(2)), CycloNum::zero(a.field())}),
        std::invalid_argument);
}
