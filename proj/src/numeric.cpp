#include "mirrorcell/numeric.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mirrorcell {

std::vector<Complex> poly_roots(std::vector<Complex> coeffs, double rel_tol) {
    double max_abs = 0.0;
    for (const Complex& c : coeffs) max_abs = std::max(max_abs, std::abs(c));
    if (max_abs == 0.0) return {};
    while (!coeffs.empty() && std::abs(coeffs.back()) <= rel_tol * max_abs)
        coeffs.pop_back();
    if (coeffs.size() <= 1) return {};
    const std::size_t d = coeffs.size() - 1;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i] / coeffs[d];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("companion eigenvalue computation failed");
    std::vector<Complex> roots(d);
    for (std::size_t i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

std::vector<CVec> numeric_monomial_covectors(unsigned k, unsigned l, unsigned r) {
    if (l < 2 || k > l || r < 1)
        throw std::invalid_argument("invalid monomial arrangement parameters");
    const double two_pi = 6.283185307179586476925286766559;
    std::vector<CVec> covs;
    covs.reserve(k + static_cast<std::size_t>(r) * l * (l - 1) / 2);
    for (unsigned a = 0; a < k; ++a) {
        CVec h(l, Complex(0.0, 0.0));
        h[a] = 1.0;
        covs.push_back(std::move(h));
    }
    for (unsigned i = 0; i + 1 < l; ++i)
        for (unsigned j = i + 1; j < l; ++j)
            for (unsigned t = 0; t < r; ++t) {
                CVec h(l, Complex(0.0, 0.0));
                h[i] = 1.0;
                h[j] = -std::polar(1.0, two_pi * t / r);
                covs.push_back(std::move(h));
            }
    return covs;
}

double arrangement_margin(const std::vector<CVec>& covectors, const CVec& y) {
    double norm_y = 0.0;
    for (const Complex& c : y) norm_y += std::norm(c);
    norm_y = std::sqrt(norm_y);
    if (norm_y == 0.0) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (const CVec& h : covectors) {
        Complex pairing(0.0, 0.0);
        double norm_h = 0.0;
        for (std::size_t j = 0; j < h.size(); ++j) {
            pairing += h[j] * y[j];
            norm_h += std::norm(h[j]);
        }
        best = std::min(best, std::abs(pairing) / (std::sqrt(norm_h) * norm_y));
    }
    return best;
}

}  // namespace mirrorcell
