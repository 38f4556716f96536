#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "mirrorcell/cyclotomic.hpp"

using namespace mirrorcell;

namespace {

ZPoly zp(std::initializer_list<long> cs) {
    ZPoly out;
    for (long c : cs) out.emplace_back(c);
    return out;
}

// x^r - 1 as a product of cyclotomic polynomials of the divisors of r.
ZPoly multiply(const ZPoly& a, const ZPoly& b) {
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical table") {
    CHECK(cyclotomic_polynomial(1) == zp({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == zp({1, 1}));
    CHECK(cyclotomic_polynomial(3) == zp({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == zp({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == zp({1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == zp({1, 0, -1, 0, 1}));
    // phi(105) is the first with a coefficient of magnitude 2
    const ZPoly p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == Integer(-2));
}

TEST_CASE("product of cyclotomic polynomials over divisors gives x^r - 1") {
    for (unsigned r = 1; r <= 20; ++r) {
        ZPoly prod = zp({1});
        for (unsigned d = 1; d <= r; ++d)
            if (r % d == 0) prod = multiply(prod, cyclotomic_polynomial(d));
        ZPoly expect(r + 1, Integer(0));
        expect[0] = -1;
        expect[r] = 1;
        CHECK(prod == expect);
    }
}

TEST_CASE("field arithmetic satisfies the field axioms on random elements") {
    for (unsigned r : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        const FieldPtr f = CycloField::get(r);
        // A few deterministic non-trivial elements.
        std::vector<CycloNum> xs;
        xs.push_back(CycloNum::from_rational(f, Rational(3, 7)));
        xs.push_back(CycloNum::zeta(f) + CycloNum::one(f));
        if (f->degree() >= 2) {
            QPoly c(f->degree(), Rational(0));
            c[0] = Rational(-2, 3);
            c[1] = Rational(5, 2);
            xs.push_back(CycloNum::from_coeffs(f, c));
        }
        for (const CycloNum& a : xs)
            for (const CycloNum& b : xs) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                CHECK((a - b) + b == a);
                if (!b.is_zero()) CHECK((a / b) * b == a);
            }
        for (const CycloNum& a : xs) {
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CycloNum::one(f));
        }
    }
}

TEST_CASE("zeta_r has multiplicative order exactly r") {
    for (unsigned r : {2u, 3u, 4u, 5u, 6u, 7u, 9u, 10u, 12u}) {
        const FieldPtr f = CycloField::get(r);
        CycloNum pow = CycloNum::one(f);
        for (unsigned t = 1; t < r; ++t) {
            pow *= CycloNum::zeta(f);
            CHECK(pow != CycloNum::one(f));
        }
        pow *= CycloNum::zeta(f);
        CHECK(pow == CycloNum::one(f));
        CHECK(CycloNum::zeta_pow(f, static_cast<long>(r)) == CycloNum::one(f));
        CHECK(CycloNum::zeta_pow(f, -1) == CycloNum::zeta_pow(f, static_cast<long>(r) - 1));
    }
}

TEST_CASE("embedding is a ring homomorphism to machine precision") {
    for (unsigned r : {3u, 4u, 5u, 8u, 12u}) {
        const FieldPtr f = CycloField::get(r);
        const CycloNum a = CycloNum::zeta(f) + CycloNum::from_rational(f, Rational(1, 3));
        const CycloNum b = CycloNum::zeta_pow(f, 2) - CycloNum::one(f);
        for (long t = 1; t < static_cast<long>(r); ++t) {
            if (std::gcd(t, static_cast<long>(r)) != 1) continue;
            CHECK(std::abs((a + b).embed(t) - (a.embed(t) + b.embed(t))) <= 1e-12);
            CHECK(std::abs((a * b).embed(t) - a.embed(t) * b.embed(t)) <= 1e-12);
        }
        CHECK(std::abs(CycloNum::zeta(f).embed() -
                       std::polar(1.0, 2.0 * 3.14159265358979323846 / r)) <= 1e-12);
    }
}

TEST_CASE("embed_into a larger field preserves values") {
    const FieldPtr f3 = CycloField::get(3);
    const FieldPtr f6 = CycloField::get(6);
    const FieldPtr f12 = CycloField::get(12);
    const CycloNum a = CycloNum::zeta(f3) + CycloNum::from_rational(f3, Rational(2));
    // zeta_3 -> zeta_6^2 -> zeta_12^4; compare via the numeric embedding.
    CHECK(std::abs(a.embed() - a.embed_into(f6).embed()) <= 1e-12);
    CHECK(std::abs(a.embed() - a.embed_into(f12).embed()) <= 1e-12);
    CHECK(a.embed_into(f6).embed_into(f12) == a.embed_into(f12));
    CHECK_THROWS_AS((void)a.embed_into(CycloField::get(4)), std::invalid_argument);
}

TEST_CASE("division by zero and field mismatches are rejected") {
    const FieldPtr f3 = CycloField::get(3);
    const FieldPtr f4 = CycloField::get(4);
    CHECK_THROWS_AS((void)(CycloNum::one(f3) / CycloNum::zero(f3)), std::domain_error);
    CHECK_THROWS_AS((void)CycloNum::zero(f3).inverse(), std::domain_error);
    CHECK_THROWS_AS((void)(CycloNum::one(f3) + CycloNum::one(f4)), std::invalid_argument);
    CHECK_THROWS_AS((void)(CycloNum{} + CycloNum::one(f3)), std::logic_error);
}

TEST_CASE("str round-trips through parse exactly") {
    const FieldPtr f = CycloField::get(5);
    QPoly c(f->degree(), Rational(0));
    c[0] = Rational(-7, 3);
    c[2] = Rational(22, 7);
    const CycloNum a = CycloNum::from_coeffs(f, c);
    CHECK(CycloNum::parse(f, a.str()) == a);
    CHECK(a.str() == "[-7/3,0,22/7,0]");
}

TEST_CASE("echelon produces the unique reduced form") {
    const FieldPtr f = CycloField::get(4);  // contains i as zeta_4
    const CycloNum i = CycloNum::zeta(f);
    const CycloNum one = CycloNum::one(f);
    // rows: (1, i), (i, -1) are proportional (second = i * first)
    CycloMatrix m(f, 2, 2);
    m.at(0, 0) = one;
    m.at(0, 1) = i;
    m.at(1, 0) = i;
    m.at(1, 1) = -one;
    const EchelonResult e = echelon(m);
    CHECK(e.rank == 1);
    CHECK(e.rref.at(0, 0) == one);
    CHECK(e.rref.at(0, 1) == i);
    CHECK(e.rref.at(1, 0).is_zero());
    CHECK(e.rref.at(1, 1).is_zero());
    // idempotence
    const EchelonResult e2 = echelon(e.rref);
    CHECK(e2.rref == e.rref);
    CHECK(matrix_rank(m) == 1);
    const CycloMatrix basis = row_basis(m);
    CHECK(basis.rows() == 1);
}

TEST_CASE("rank over the field sees cyclotomic relations invisible over Q") {
    // (1, zeta) and (zeta^2, 1): for r = 3, zeta^3 = 1 so the second row is
    // zeta^2 * (1, zeta); rank 1. Treating coefficients as formal symbols
    // would give rank 2 (the determinant 1 - zeta^3 only vanishes in the field).
    const FieldPtr f = CycloField::get(3);
    CycloMatrix m(f, 2, 2);
    m.at(0, 0) = CycloNum::one(f);
    m.at(0, 1) = CycloNum::zeta(f);
    m.at(1, 0) = CycloNum::zeta_pow(f, 2);
    m.at(1, 1) = CycloNum::one(f);
    CHECK(matrix_rank(m) == 1);
}
