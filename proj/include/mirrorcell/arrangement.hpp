#pragma once

#include <string>
#include <vector>

#include "mirrorcell/cyclotomic.hpp"

namespace mirrorcell {

// A hyperplane through the origin, stored as its defining covector with the
// first nonzero coefficient scaled to 1 (so equal hyperplanes compare equal).
class Hyperplane {
public:
    static Hyperplane from_covector(std::vector<CycloNum> covector);

    const std::vector<CycloNum>& covector() const { return covector_; }
    unsigned dim() const { return static_cast<unsigned>(covector_.size()); }
    std::string key() const;

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.covector_ == b.covector_;
    }

private:
    Hyperplane() = default;
    std::vector<CycloNum> covector_;
};

// A finite central arrangement in C^dim over one cyclotomic field.
// Hyperplanes keep insertion order; duplicates are rejected.
class Arrangement {
public:
    Arrangement(FieldPtr field, unsigned dim, std::string label = "");

    unsigned dim() const { return dim_; }
    const FieldPtr& field() const { return field_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return hyperplanes_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

    // Normalizes, then appends; throws std::invalid_argument on a zero
    // covector, a dimension mismatch, or a duplicate hyperplane.
    void add_hyperplane(std::vector<CycloNum> covector);
    void add_hyperplane(Hyperplane h);

    // Matrix whose rows are all covectors.
    CycloMatrix covector_matrix() const;

private:
    FieldPtr field_;
    unsigned dim_;
    std::string label_;
    std::vector<Hyperplane> hyperplanes_;
};

// The monomial arrangement in C^l over Q(zeta_r):
//   the first k coordinate hyperplanes y_a = 0,
//   plus y_i = zeta y_j for all i < j and all r-th roots of unity zeta.
// Hyperplane order: coordinates by ascending a, then pairs (i,j)
// lexicographically with zeta = zeta_r^t for ascending t.
// Requires l >= 2, 0 <= k <= l, r >= 1.
Arrangement build_monomial(unsigned k, unsigned l, unsigned r);

// Braid arrangement of rank l-1 in C^{l-1}: the monomial arrangement with
// k = l-1, r = 1 (coordinates z_a = 0 and differences z_i = z_j).
Arrangement build_braid(unsigned l);

// Reflection arrangement of the imprimitive complex reflection group with
// parameters (r, p, l), p dividing r: all hyperplanes y_i = zeta y_j, plus
// the coordinate hyperplanes exactly when p < r.
Arrangement build_reflection(unsigned r, unsigned p, unsigned l);

// True when the covectors span the full dual space.
bool is_essential(const Arrangement& a);

// Canonical text form:
//   arrangement dim=<l> r=<r> count=<n>
//   <one line per hyperplane: dim covector coordinates, each "[c0,c1,...]">
// parse(serialize(a)) == a exactly, and serialize(parse(s)) == s byte for byte.
std::string serialize(const Arrangement& a);
Arrangement parse_arrangement(const std::string& text);

}  // namespace mirrorcell
