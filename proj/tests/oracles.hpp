#pragma once

#include <vector>

#include "mirrorcell/arrangement.hpp"
#include "mirrorcell/cyclotomic.hpp"

namespace mirrorcell::testing {

// Whitney's theorem: chi(t) = sum over subsets S of the hyperplanes of
// (-1)^|S| t^{dim - rank S}. Exponential in the number of hyperplanes, so
// only usable as an independent oracle for small arrangements; it never
// touches the lattice/Mobius machinery under test.
inline ZPoly whitney_characteristic_polynomial(const Arrangement& a) {
    const std::size_t n = a.size();
    ZPoly chi(a.dim() + 1, Integer(0));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::vector<CycloNum>> covs;
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                covs.push_back(a[i].covector());
                ++bits;
            }
        unsigned rank = 0;
        if (!covs.empty()) rank = matrix_rank(CycloMatrix::from_rows(a.field(), covs, a.dim()));
        chi[a.dim() - rank] += (bits % 2 == 0) ? 1 : -1;
    }
    return chi;
}

}  // namespace mirrorcell::testing
