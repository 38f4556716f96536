#include "mirrorcell/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mirrorcell {

namespace {

CycloMatrix covector_row(const Arrangement& a, std::size_t idx) {
    CycloMatrix row(a.field(), 1, a.dim());
    for (unsigned j = 0; j < a.dim(); ++j) row.at(0, j) = a[idx].covector()[j];
    return row;
}

// Indices of all hyperplanes whose covector lies in the row space of basis.
std::vector<int> hyperplanes_in_span(const Arrangement& a, const CycloMatrix& basis) {
    std::vector<int> out;
    for (std::size_t h = 0; h < a.size(); ++h) {
        CycloMatrix stacked = CycloMatrix::stack(basis, covector_row(a, h));
        if (matrix_rank(stacked) == basis.rows()) out.push_back(static_cast<int>(h));
    }
    return out;
}

// containing(x) subset of containing(y); both sorted. Equivalent to the
// echelon containment test order_leq(x, y) for flats of one arrangement,
// and much cheaper inside the Mobius accumulation.
bool containing_subset(const std::vector<int>& x, const std::vector<int>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace

bool Lattice::order_leq(const Flat& x, const Flat& y) {
    if (x.rank > y.rank) return false;
    if (x.rank == 0) return true;
    CycloMatrix stacked = CycloMatrix::stack(y.basis, x.basis);
    return matrix_rank(stacked) == y.rank;
}

Lattice::Lattice(const Arrangement& a) : arrangement_(a) {
    Flat ambient;
    ambient.basis = CycloMatrix(a.field(), 0, a.dim());
    ambient.rank = 0;
    by_rank_.push_back({ambient});

    std::map<std::string, bool> seen;
    for (unsigned rank = 1; rank <= a.dim(); ++rank) {
        std::vector<Flat> level;
        seen.clear();
        for (const Flat& below : by_rank_[rank - 1]) {
            for (std::size_t h = 0; h < a.size(); ++h) {
                if (std::binary_search(below.containing.begin(), below.containing.end(),
                                       static_cast<int>(h)))
                    continue;
                CycloMatrix basis =
                    row_basis(CycloMatrix::stack(below.basis, covector_row(a, h)));
                std::string key = basis.key();
                if (seen.count(key)) continue;
                seen[key] = true;
                Flat flat;
                flat.basis = std::move(basis);
                flat.rank = rank;
                flat.containing = hyperplanes_in_span(a, flat.basis);
                level.push_back(std::move(flat));
            }
        }
        if (level.empty()) break;
        std::sort(level.begin(), level.end(),
                  [](const Flat& x, const Flat& y) { return x.containing < y.containing; });
        by_rank_.push_back(std::move(level));
    }

    // Mobius values by increasing rank; each flat sums everything strictly
    // below it in the lattice order.
    by_rank_[0][0].mobius = 1;
    for (unsigned rank = 1; rank < by_rank_.size(); ++rank) {
        for (Flat& flat : by_rank_[rank]) {
            long long acc = 0;
            for (unsigned lower = 0; lower < rank; ++lower)
                for (const Flat& below : by_rank_[lower])
                    if (containing_subset(below.containing, flat.containing))
                        acc += below.mobius;
            flat.mobius = -acc;
        }
    }
}

std::size_t Lattice::flat_count() const {
    std::size_t n = 0;
    for (const auto& level : by_rank_) n += level.size();
    return n;
}

ZPoly characteristic_polynomial(const Lattice& lat) {
    unsigned dim = lat.arrangement().dim();
    ZPoly chi(dim + 1, Integer(0));
    for (unsigned rank = 0; rank <= lat.max_rank(); ++rank)
        for (const Flat& flat : lat.rank(rank))
            chi[dim - flat.rank] += static_cast<long>(flat.mobius);
    return chi;
}

ZPoly characteristic_polynomial(const Arrangement& a) {
    return characteristic_polynomial(Lattice(a));
}

std::string poly_str(const ZPoly& p) {
    ZPoly q = p;
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.empty()) return "0";
    std::string out;
    for (std::size_t i = q.size(); i-- > 0;) {
        if (q[i] == 0) continue;
        Integer mag = abs(q[i]);
        bool neg = q[i] < 0;
        std::string term;
        if (i == 0) term = mag.get_str();
        else {
            if (mag != 1) term = mag.get_str();
            term += "t";
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::string serialize(const Lattice& lat) {
    std::string out;
    for (unsigned rank = 0; rank <= lat.max_rank(); ++rank) {
        for (const Flat& flat : lat.rank(rank)) {
            out += "rank=" + std::to_string(flat.rank) +
                   " mobius=" + std::to_string(flat.mobius) + " hyperplanes=";
            for (std::size_t i = 0; i < flat.containing.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(flat.containing[i]);
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace mirrorcell
