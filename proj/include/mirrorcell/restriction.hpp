#pragma once

#include <array>
#include <string>
#include <vector>

#include "mirrorcell/lattice.hpp"

namespace mirrorcell {

struct RestrictionResult {
    Arrangement induced;  // arrangement inside the flat, dim = flat dimension
    CycloMatrix chart;    // rows: a basis of the flat, one row per chart coordinate
};

// Restriction A^Y: parametrize the flat by the free coordinates of its
// echelon basis, pull every hyperplane not containing Y back through that
// chart, normalize and deduplicate. Requires 1 <= rank Y < dim.
RestrictionResult restrict_to_flat(const Arrangement& a, const Flat& flat);

// Same pullback through an arbitrary chart whose rows span a flat; used to
// check that induced arrangements do not depend on the chart choice.
Arrangement restrict_with_chart(const Arrangement& a, const CycloMatrix& chart);

// (k, m, r) with m = dim(b): monomial types whose hyperplane count, essential
// rank and characteristic polynomial match b, confirmed by an exact linear
// isomorphism search when m <= 3 and the count is <= 12. Candidates are
// listed by ascending r.
std::vector<std::array<unsigned, 3>> identify_monomial_type(const Arrangement& b,
                                                            unsigned r_max);

// Exact test: is there a linear isomorphism carrying the hyperplanes of b
// onto the hyperplanes of c? Arrangements may live over different cyclotomic
// fields; both are embedded into the lcm field first.
bool linear_iso_exists(const Arrangement& b, const Arrangement& c);

struct ScanEntry {
    std::vector<int> flat;        // hyperplane indices cutting out the flat
    unsigned dim = 0;             // dimension of the flat
    unsigned induced_count = 0;   // hyperplanes of the restriction
    std::vector<std::array<unsigned, 3>> candidates;
};

struct ScanResult {
    std::string label;            // reflection arrangement scanned
    std::vector<ScanEntry> entries;
    std::vector<std::string> failures;  // one message per unidentified flat
    bool all_identified() const { return failures.empty(); }
};

// Restrict `a` to every flat of dimension >= 2 (the ambient flat included,
// as the trivial restriction) and identify each induced arrangement.
// r_max = 0 means "use the order of the coefficient field".
ScanResult scan_arrangement(const Arrangement& a, unsigned r_max = 0);

// scan_arrangement over the reflection arrangement of G(r,p,l).
// r_max = 0 means "use r".
ScanResult restriction_closure_scan(unsigned r, unsigned p, unsigned l,
                                    unsigned r_max = 0);

// One line per scan entry:
//   flat=<i1,i2,...> dim=<m> induced_count=<n> candidates=(k,m,r),(k,m,r)
std::string serialize(const ScanResult& scan);

}  // namespace mirrorcell
