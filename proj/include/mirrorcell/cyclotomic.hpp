#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "mirrorcell/rational.hpp"

namespace mirrorcell {

// Polynomials stored by ascending degree.
using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

// r-th cyclotomic polynomial, computed by dividing x^r - 1 by the cyclotomic
// polynomials of the proper divisors of r. Exact integer division throughout.
ZPoly cyclotomic_polynomial(unsigned r);

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

// The field Q(zeta_r), elements represented in the power basis
// 1, zeta, ..., zeta^{phi(r)-1} modulo the r-th cyclotomic polynomial.
// Immutable; instances are shared through FieldPtr and cached per order.
class CycloField {
public:
    static FieldPtr get(unsigned r);

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }
    const ZPoly& modulus() const { return modulus_; }

private:
    explicit CycloField(unsigned r);

    unsigned order_;
    unsigned degree_;
    ZPoly modulus_;
};

class CycloNum {
public:
    CycloNum() = default;  // unset; any arithmetic use throws

    static CycloNum zero(const FieldPtr& field);
    static CycloNum one(const FieldPtr& field);
    static CycloNum from_rational(const FieldPtr& field, const Rational& q);
    // zeta_r^t for any integer t (reduced mod r).
    static CycloNum zeta_pow(const FieldPtr& field, long t);
    static CycloNum zeta(const FieldPtr& field) { return zeta_pow(field, 1); }
    // Coefficient vector in the power basis; must have length field->degree().
    static CycloNum from_coeffs(const FieldPtr& field, QPoly coeffs);

    const FieldPtr& field() const { return field_; }
    const QPoly& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;
    // Value of the constant term when is_rational(), throws otherwise.
    Rational rational_value() const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const CycloNum& rhs);
    CycloNum& operator/=(const CycloNum& rhs);

    // Multiplicative inverse; throws std::domain_error on zero.
    CycloNum inverse() const;

    // Numeric value under zeta_r -> exp(2*pi*i*root_index/r). root_index must
    // be coprime to r; the default picks the principal embedding.
    std::complex<double> embed(long root_index = 1) const;

    // Image in Q(zeta_m) for r | m, via zeta_r -> zeta_m^{m/r}.
    CycloNum embed_into(const FieldPtr& target) const;

    // Canonical text form "[c0,c1,...]" with exact rational coefficients.
    std::string str() const;
    static CycloNum parse(const FieldPtr& field, const std::string& text);

    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

private:
    CycloNum(FieldPtr field, QPoly coeffs)
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {}
    void require_field() const;

    FieldPtr field_;
    QPoly coeffs_;
};

CycloNum operator+(CycloNum a, const CycloNum& b);
CycloNum operator-(CycloNum a, const CycloNum& b);
CycloNum operator*(CycloNum a, const CycloNum& b);
CycloNum operator/(CycloNum a, const CycloNum& b);

// Dense matrix over one cyclotomic field. Row-major, value semantics.
class CycloMatrix {
public:
    CycloMatrix() = default;
    CycloMatrix(FieldPtr field, unsigned rows, unsigned cols);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    CycloNum& at(unsigned i, unsigned j) { return entries_[i * cols_ + j]; }
    const CycloNum& at(unsigned i, unsigned j) const { return entries_[i * cols_ + j]; }

    // Vertical concatenation; column counts and fields must agree.
    static CycloMatrix stack(const CycloMatrix& top, const CycloMatrix& bottom);
    static CycloMatrix from_rows(const FieldPtr& field,
                                 const std::vector<std::vector<CycloNum>>& rows,
                                 unsigned cols);

    std::string key() const;  // canonical text form, usable for dedup

    friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);

private:
    FieldPtr field_;
    unsigned rows_ = 0;
    unsigned cols_ = 0;
    std::vector<CycloNum> entries_;
};

struct EchelonResult {
    CycloMatrix rref;  // same shape as the input
    unsigned rank = 0;
};

// Unique reduced row-echelon form (Gauss-Jordan, exact).
EchelonResult echelon(const CycloMatrix& m);

// Nonzero rows of the reduced row-echelon form: the canonical basis of the
// row space. rank == rows() of the result.
CycloMatrix row_basis(const CycloMatrix& m);

unsigned matrix_rank(const CycloMatrix& m);

}  // namespace mirrorcell
