#pragma once

#include <string>
#include <vector>

#include "mirrorcell/arrangement.hpp"

namespace mirrorcell {

// An intersection of hyperplanes, identified by the canonical reduced
// row-echelon basis of the covectors vanishing on it.
struct Flat {
    CycloMatrix basis;            // row_basis form; rank == basis.rows()
    unsigned rank = 0;            // codimension
    std::vector<int> containing;  // sorted indices of hyperplanes containing the flat
    long long mobius = 0;         // mu(ambient, this flat)
};

// The intersection lattice, graded by codimension. Flats within each rank are
// sorted by their containing-hyperplane index lists, so iteration order is
// deterministic. Rank 0 holds the single ambient flat.
class Lattice {
public:
    explicit Lattice(const Arrangement& a);

    const Arrangement& arrangement() const { return arrangement_; }
    unsigned max_rank() const { return static_cast<unsigned>(by_rank_.size() - 1); }
    const std::vector<Flat>& rank(unsigned c) const { return by_rank_.at(c); }
    std::size_t flat_count() const;

    // Lattice order by reverse inclusion of subspaces: order_leq(x, y) holds
    // when the flat of y is contained in the flat of x, tested exactly as
    // rowspace(x.basis) being a subspace of rowspace(y.basis).
    static bool order_leq(const Flat& x, const Flat& y);

private:
    Arrangement arrangement_;
    std::vector<std::vector<Flat>> by_rank_;
};

// Characteristic polynomial: the sum over flats of mu * t^{dim flat}.
// Ascending coefficients; monic of degree = arrangement dimension.
ZPoly characteristic_polynomial(const Arrangement& a);
ZPoly characteristic_polynomial(const Lattice& lat);

// Pretty form "t^3 - 6t^2 + 11t - 6".
std::string poly_str(const ZPoly& p);

// chi(A) == chi(A - H) - chi(A^H) for the hyperplane at the given index.
bool triple_check(const Arrangement& a, std::size_t hyperplane_index);

// One line per flat: "rank=<c> mobius=<m> hyperplanes=<i1,i2,...>",
// ordered by (rank, index list).
std::string serialize(const Lattice& lat);

}  // namespace mirrorcell
