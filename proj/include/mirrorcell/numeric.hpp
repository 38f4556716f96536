#pragma once

#include <complex>
#include <vector>

namespace mirrorcell {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Roots of c[0] + c[1] x + ... + c[d] x^d as companion-matrix eigenvalues.
// Leading coefficients below rel_tol * max|c| are treated as zero (degree
// drop). The zero polynomial and constants have no roots.
std::vector<Complex> poly_roots(std::vector<Complex> coeffs, double rel_tol = 1e-12);

// Covectors of the monomial arrangement under the principal embedding
// zeta -> exp(2*pi*i/r): k coordinate forms, then e_i - zeta^t e_j in the
// same order as the exact builder.
std::vector<CVec> numeric_monomial_covectors(unsigned k, unsigned l, unsigned r);

// min over covectors h of |<h,y>| / (|h| |y|); pairing is bilinear, norms
// hermitian. Returns +inf for an empty covector list.
double arrangement_margin(const std::vector<CVec>& covectors, const CVec& y);

}  // namespace mirrorcell
