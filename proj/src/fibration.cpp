#include "mirrorcell/fibration.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mirrorcell/errors.hpp"

namespace mirrorcell {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string triple_str(const FibrationParams& p) {
    return "(k,l,r)=(" + std::to_string(p.k) + "," + std::to_string(p.l) + "," +
           std::to_string(p.r) + ")";
}

Complex unit_root(unsigned r, unsigned t) { return std::polar(1.0, kTwoPi * t / r); }

Complex principal_root(Complex w, unsigned r) {
    return r == 1 ? w : std::pow(w, 1.0 / static_cast<double>(r));
}

// Integer power by squaring; ipowc(0, 0) == 1, unlike std::pow on complexes.
Complex ipowc(Complex base, unsigned e) {
    Complex acc(1.0, 0.0);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// z extended by the convention z_l = 0.
Complex z_at(const CVec& z, unsigned j) {
    return j <= z.size() ? z[j - 1] : Complex(0.0, 0.0);
}

void require_base(const FibrationParams& p, const CVec& z) {
    if (z.size() + 1 != p.l)
        throw std::invalid_argument("base point needs l-1 coordinates");
}

double sep_min(const std::vector<CVec>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d2 = 0.0;
            for (std::size_t c = 0; c < pts[i].size(); ++c)
                d2 += std::norm(pts[i][c] - pts[j][c]);
            best = std::min(best, std::sqrt(d2));
        }
    return best;
}

// Odometer over {0..r-1}^n.
bool advance(std::vector<unsigned>& digits, unsigned r) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < r) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

void FibrationParams::validate() const {
    if (l < 2) throw std::invalid_argument("fibration needs l >= 2");
    if (k > l) throw std::invalid_argument("fibration needs k <= l");
    if (r < 1) throw std::invalid_argument("fibration needs r >= 1");
}

long long FibrationParams::bezout() const {
    long long acc = k + r;
    for (unsigned i = 2; i < l; ++i) {
        if (acc > (1ll << 62) / static_cast<long long>(r))
            throw std::overflow_error("bezout count overflows");
        acc *= r;
    }
    return acc;
}

CVec map_f(const FibrationParams& p, const CVec& y) {
    p.validate();
    if (y.size() != p.l) throw std::invalid_argument("map_f needs l coordinates");
    Complex prod(1.0, 0.0);
    for (unsigned a = 0; a < p.k; ++a) prod *= y[a];
    Complex last = ipowc(y[p.l - 1], p.r);
    CVec z(p.l - 1);
    for (unsigned i = 0; i < p.l - 1; ++i)
        z[i] = prod * (ipowc(y[i], p.r) - last);
    return z;
}

CVec sample_base_point(const FibrationParams& p, std::uint64_t seed,
                       std::uint64_t stream, double margin) {
    p.validate();
    CounterRng rng(seed, {1, p.k, p.l, p.r, stream});
    for (unsigned attempt = 0; attempt < 10000; ++attempt) {
        CVec z(p.l - 1);
        for (Complex& c : z) c = rng.unit_disk();
        bool ok = true;
        for (std::size_t i = 0; i < z.size() && ok; ++i) {
            if (std::abs(z[i]) < margin) ok = false;
            for (std::size_t j = i + 1; j < z.size() && ok; ++j)
                if (std::abs(z[i] - z[j]) < margin) ok = false;
        }
        if (ok) return z;
    }
    throw SamplingError("base point sampling exhausted for " + triple_str(p));
}

double jacobian_ratio(const FibrationParams& p, const CVec& y) {
    p.validate();
    if (y.size() != p.l) throw std::invalid_argument("jacobian needs l coordinates");
    const unsigned l = p.l, k = p.k, r = p.r;
    Complex prod(1.0, 0.0);
    for (unsigned a = 0; a < k; ++a) prod *= y[a];
    auto prod_except = [&](unsigned j) {
        Complex acc(1.0, 0.0);
        for (unsigned a = 0; a < k; ++a)
            if (a != j) acc *= y[a];
        return acc;
    };
    Complex last_pow = ipowc(y[l - 1], r);
    Complex last_der = static_cast<double>(r) * ipowc(y[l - 1], r - 1);
    Eigen::MatrixXcd jac(l - 1, l);
    for (unsigned i = 0; i < l - 1; ++i) {
        Complex qi = ipowc(y[i], r) - last_pow;
        for (unsigned j = 0; j < l; ++j) {
            Complex entry(0.0, 0.0);
            if (j < k) entry += prod_except(j) * qi;
            if (j == i) entry += prod * static_cast<double>(r) * ipowc(y[i], r - 1);
            if (j == l - 1) entry -= prod * last_der;
            jac(i, j) = entry;
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jac);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0) return 0.0;
    return sv(l - 2) / sv(0);
}

std::vector<FiberSample> sample_fiber_points(const FibrationParams& p, const CVec& z,
                                             unsigned count, std::uint64_t seed,
                                             std::uint64_t stream) {
    p.validate();
    require_base(p, z);
    const unsigned l = p.l, k = p.k, r = p.r;
    auto covs = numeric_monomial_covectors(k, l, r);
    CounterRng rng(seed, {2, k, l, r, stream});
    std::vector<FiberSample> out;
    out.reserve(count);
    const unsigned max_attempts = 100 * count + 100;
    for (unsigned attempt = 0; attempt < max_attempts && out.size() < count; ++attempt) {
        Complex a(1.0, 0.0);
        if (k >= 1) {
            a = 1.2 * rng.unit_disk();
            if (std::abs(a) < 0.3) continue;
        }
        Complex b;
        if (k == 0) {
            b = rng.unit_disk();
        } else {
            // a^r * prod_{j<=k} (a z_j + b) - 1 as a polynomial in b.
            std::vector<Complex> poly = {ipowc(a, r)};
            for (unsigned j = 1; j <= k; ++j) {
                std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
                Complex c0 = a * z_at(z, j);
                for (std::size_t t = 0; t < poly.size(); ++t) {
                    next[t] += poly[t] * c0;
                    next[t + 1] += poly[t];
                }
                poly = std::move(next);
            }
            poly[0] -= 1.0;
            std::vector<Complex> roots = poly_roots(poly);
            if (roots.empty()) continue;
            b = roots[rng.below(roots.size())];
        }
        CVec big(l);
        bool tiny = false;
        for (unsigned j = 1; j <= l; ++j) {
            big[j - 1] = a * z_at(z, j) + b;
            if (std::abs(big[j - 1]) < 1e-6) tiny = true;
        }
        if (tiny) continue;

        CVec y(l);
        for (unsigned j = 0; j < l; ++j) {
            if (k >= 1 && j == k - 1) continue;  // recovered from the product
            y[j] = principal_root(big[j], r) * unit_root(r, static_cast<unsigned>(rng.below(r)));
        }
        if (k >= 1) {
            Complex head(1.0, 0.0);
            for (unsigned j = 0; j + 1 < k; ++j) head *= y[j];
            y[k - 1] = 1.0 / (a * head);
            Complex pw = ipowc(y[k - 1], r);
            if (std::abs(pw - big[k - 1]) > 1e-9 * std::max(1.0, std::abs(big[k - 1])))
                continue;
        }

        CVec image = map_f(p, y);
        double residual = 0.0;
        for (unsigned i = 0; i < l - 1; ++i)
            residual = std::max(residual, std::abs(image[i] - z[i]));
        if (residual > 1e-9) continue;

        FiberSample s;
        s.y = std::move(y);
        s.residual = residual;
        s.min_hyperplane_distance = arrangement_margin(covs, s.y);
        s.jacobian_ratio = jacobian_ratio(p, s.y);
        out.push_back(std::move(s));
    }
    if (out.size() < count)
        throw SamplingError("fiber sampling exhausted for " + triple_str(p) +
                            " after " + std::to_string(max_attempts) + " attempts");
    return out;
}

double homogeneous_residual(const FibrationParams& p, const CVec& z, const CVec& coords) {
    p.validate();
    require_base(p, z);
    if (coords.size() != p.l + 1)
        throw std::invalid_argument("homogeneous point needs l+1 coordinates");
    const unsigned l = p.l, k = p.k, r = p.r;
    Complex y0 = coords[0];
    Complex prod(1.0, 0.0);
    for (unsigned a = 1; a <= k; ++a) prod *= coords[a];
    auto pw = [&](unsigned j) { return ipowc(coords[j], r); };
    Complex q1 = pw(1) - pw(l);
    double res = std::abs(prod * q1 - z[0] * ipowc(y0, k + r));
    for (unsigned i = 2; i < l; ++i)
        res = std::max(res, std::abs(q1 / z[0] - (pw(i) - pw(l)) / z[i - 1]));
    return res;
}

std::vector<InfinityPoint> enumerate_infinity_points(const FibrationParams& p,
                                                     const CVec& z) {
    p.validate();
    require_base(p, z);
    const unsigned l = p.l, k = p.k, r = p.r;
    std::vector<InfinityPoint> points;

    // Branches with one product coordinate vanishing: y_c = 0, y_j^r = z_j - z_c.
    for (unsigned c = 1; c <= k; ++c) {
        unsigned anchor = (c == l) ? l - 1 : l;
        std::vector<unsigned> free;
        for (unsigned j = 1; j <= l; ++j)
            if (j != c && j != anchor) free.push_back(j);
        std::vector<unsigned> digits(free.size(), 0);
        do {
            CVec coords(l + 1, Complex(0.0, 0.0));
            coords[anchor] = principal_root(z_at(z, anchor) - z_at(z, c), r);
            for (std::size_t idx = 0; idx < free.size(); ++idx) {
                unsigned j = free[idx];
                coords[j] = principal_root(z_at(z, j) - z_at(z, c), r) *
                            unit_root(r, digits[idx]);
            }
            points.push_back({std::move(coords), c});
        } while (advance(digits, r));
    }

    // Branch with all y_j^r equal: roots of unity, anchored at y_l = 1.
    {
        std::vector<unsigned> digits(l - 1, 0);
        do {
            CVec coords(l + 1, Complex(0.0, 0.0));
            coords[l] = 1.0;
            for (unsigned j = 1; j < l; ++j) coords[j] = unit_root(r, digits[j - 1]);
            points.push_back({std::move(coords), 0});
        } while (advance(digits, r));
    }

    if (static_cast<long long>(points.size()) != p.bezout())
        throw VerificationError("infinity point count " + std::to_string(points.size()) +
                                " != bezout " + std::to_string(p.bezout()) + " for " +
                                triple_str(p));
    for (const InfinityPoint& pt : points) {
        double res = homogeneous_residual(p, z, pt.coords);
        if (res > 1e-9)
            throw VerificationError("infinity point residual " + std::to_string(res) +
                                    " exceeds 1e-9 for " + triple_str(p));
    }
    std::vector<CVec> reps;
    reps.reserve(points.size());
    for (const InfinityPoint& pt : points) reps.push_back(pt.coords);
    if (points.size() > 1 && sep_min(reps) <= 1e-6)
        throw VerificationError("infinity points closer than 1e-6 for " + triple_str(p));
    return points;
}

bool transversality_at_infinity(const FibrationParams& p, const CVec& z,
                                const InfinityPoint& pt, double tol) {
    p.validate();
    require_base(p, z);
    const unsigned l = p.l, k = p.k, r = p.r;
    const CVec& y = pt.coords;
    if (y.size() != l + 1)
        throw std::invalid_argument("homogeneous point needs l+1 coordinates");

    unsigned chart = 1;
    for (unsigned j = 2; j <= l; ++j)
        if (std::abs(y[j]) > std::abs(y[chart])) chart = j;

    Complex prod(1.0, 0.0);
    for (unsigned a = 1; a <= k; ++a) prod *= y[a];
    auto prod_except = [&](unsigned j) {
        Complex acc(1.0, 0.0);
        for (unsigned a = 1; a <= k; ++a)
            if (a != j) acc *= y[a];
        return acc;
    };
    auto pw = [&](unsigned j, unsigned e) { return ipowc(y[j], e); };
    Complex q1 = pw(1, r) - pw(l, r);

    Eigen::MatrixXcd grad = Eigen::MatrixXcd::Zero(l, l);
    // Row 0: the product equation. Columns skip the chart coordinate.
    {
        unsigned col = 0;
        for (unsigned j = 0; j <= l; ++j) {
            if (j == chart) continue;
            Complex entry(0.0, 0.0);
            if (j == 0) {
                entry = -static_cast<double>(k + r) * z[0] * pw(0, k + r - 1);
            } else {
                if (j <= k) entry += prod_except(j) * q1;
                if (j == 1) entry += prod * static_cast<double>(r) * pw(1, r - 1);
                if (j == l) entry -= prod * static_cast<double>(r) * pw(l, r - 1);
            }
            grad(0, col++) = entry;
        }
    }
    // Rows 1..l-2: the ratio equations.
    for (unsigned i = 2; i < l; ++i) {
        unsigned col = 0;
        for (unsigned j = 0; j <= l; ++j) {
            if (j == chart) continue;
            Complex entry(0.0, 0.0);
            if (j == 1) entry += static_cast<double>(r) * pw(1, r - 1) / z[0];
            if (j == i) entry -= static_cast<double>(r) * pw(i, r - 1) / z[i - 1];
            if (j == l)
                entry += static_cast<double>(r) * pw(l, r - 1) *
                         (1.0 / z[i - 1] - 1.0 / z[0]);
            grad(i - 1, col++) = entry;
        }
    }
    // Last row: the hyperplane at infinity, y_0 = 0.
    grad(l - 1, 0) = 1.0;  // column 0 is y_0 (chart >= 1 never removes it)

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(grad);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0) return false;
    return sv(l - 1) / sv(0) > tol;
}

namespace {

// Closure points on y_l = 0, anchored by y_{l-1} = principal root of z_{l-1}.
std::vector<CVec> sections_on_last(const FibrationParams& p, const CVec& z) {
    const unsigned l = p.l, k = p.k, r = p.r;
    std::vector<CVec> pts;
    std::vector<unsigned> digits(l - 2, 0);
    do {
        CVec coords(l + 1, Complex(0.0, 0.0));
        coords[l - 1] = principal_root(z_at(z, l - 1), r);
        for (unsigned j = 1; j + 1 < l; ++j)
            coords[j] = principal_root(z_at(z, j), r) * unit_root(r, digits[j - 1]);
        Complex prod(1.0, 0.0);
        for (unsigned a = 1; a <= k; ++a) prod *= coords[a];
        Complex y0_base = principal_root(prod, k + r);
        for (unsigned s = 0; s < k + r; ++s) {
            CVec point = coords;
            point[0] = y0_base * unit_root(k + r, s);
            pts.push_back(std::move(point));
        }
    } while (advance(digits, r));
    return pts;
}

}  // namespace

unsigned coordinate_section_count(const FibrationParams& p, const CVec& z, unsigned i) {
    p.validate();
    require_base(p, z);
    const unsigned l = p.l, k = p.k;
    if (i <= k || i > l)
        throw std::invalid_argument("section coordinate must satisfy k < i <= l");

    std::vector<CVec> pts;
    if (i == l) {
        pts = sections_on_last(p, z);
    } else {
        // Swap coordinates i and l: the system for z'_j = z_{sigma(j)} - z_{sigma(l)}
        // turns into the original one after exchanging y_i and y_l, because the
        // product factor only involves y_1..y_k and i > k.
        CVec zp(l - 1);
        for (unsigned j = 1; j < l; ++j)
            zp[j - 1] = (j == i) ? -z_at(z, i) : z_at(z, j) - z_at(z, i);
        pts = sections_on_last(p, zp);
        for (CVec& pt : pts) std::swap(pt[i], pt[l]);
    }

    if (static_cast<long long>(pts.size()) != p.bezout())
        throw VerificationError("section count " + std::to_string(pts.size()) +
                                " != bezout " + std::to_string(p.bezout()) + " for " +
                                triple_str(p));
    for (const CVec& pt : pts) {
        double res = homogeneous_residual(p, z, pt);
        if (res > 1e-9)
            throw VerificationError("section residual " + std::to_string(res) +
                                    " exceeds 1e-9 at y_" + std::to_string(i) +
                                    "=0 for " + triple_str(p));
    }
    if (pts.size() > 1 && sep_min(pts) <= 1e-6)
        throw VerificationError("section points closer than 1e-6 for " + triple_str(p));
    return static_cast<unsigned>(pts.size());
}

bool euler_identity_check(const FibrationParams& p, const CVec& z, unsigned trials,
                          std::uint64_t seed, std::uint64_t stream) {
    p.validate();
    require_base(p, z);
    const unsigned k = p.k, r = p.r;
    const double d = k + r;
    CounterRng rng(seed, {3, p.k, p.l, p.r, stream});
    for (unsigned trial = 0; trial < trials; ++trial) {
        Complex a, b;
        if (k == 0) {
            a = unit_root(r, static_cast<unsigned>(rng.below(r)));
            b = rng.unit_disk();
        } else {
            do a = 1.2 * rng.unit_disk();
            while (std::abs(a) < 0.3);
            std::vector<Complex> poly = {ipowc(a, r)};
            for (unsigned j = 1; j <= k; ++j) {
                std::vector<Complex> next(poly.size() + 1, Complex(0.0, 0.0));
                Complex c0 = a * z[j - 1];
                for (std::size_t t = 0; t < poly.size(); ++t) {
                    next[t] += poly[t] * c0;
                    next[t + 1] += poly[t];
                }
                poly = std::move(next);
            }
            poly[0] -= 1.0;
            std::vector<Complex> roots = poly_roots(poly);
            if (roots.empty()) return false;
            b = roots[rng.below(roots.size())];
        }

        Complex ar = ipowc(a, r);
        Complex prod(1.0, 0.0);
        for (unsigned j = 1; j <= k; ++j) prod *= a * z[j - 1] + b;
        Complex F = ar * prod;
        Complex sum_zi(0.0, 0.0), sum_one(0.0, 0.0);
        for (unsigned j = 1; j <= k; ++j) {
            Complex rest(1.0, 0.0);
            for (unsigned m = 1; m <= k; ++m)
                if (m != j) rest *= a * z[m - 1] + b;
            sum_zi += z[j - 1] * rest;
            sum_one += rest;
        }
        Complex Fa = static_cast<double>(r) * ipowc(a, r - 1) * prod + ar * sum_zi;
        Complex Fb = ar * sum_one;

        if (std::abs(F - 1.0) > 1e-9) return false;
        if (std::abs(a * Fa + b * Fb - d) > 1e-9) return false;
        double grad = std::sqrt(std::norm(Fa) + std::norm(Fb));
        if (grad < d / (std::abs(a) + std::abs(b)) - 1e-9) return false;
    }
    return true;
}

bool preimage_union_check(const FibrationParams& p, unsigned wall_trials,
                          unsigned off_trials, std::uint64_t seed,
                          std::uint64_t stream) {
    p.validate();
    const unsigned l = p.l, k = p.k, r = p.r;
    auto covs = numeric_monomial_covectors(k, l, r);
    std::vector<CVec> base;
    if (l == 2) base = {{Complex(1.0, 0.0)}};
    else base = numeric_monomial_covectors(l - 1, l - 1, 1);
    CounterRng rng(seed, {4, k, l, r, stream});

    auto base_gap = [&](const CVec& z) {
        double best = std::numeric_limits<double>::infinity();
        for (const CVec& g : base) {
            Complex acc(0.0, 0.0);
            for (std::size_t j = 0; j < g.size(); ++j) acc += g[j] * z[j];
            best = std::min(best, std::abs(acc));
        }
        return best;
    };

    for (unsigned t = 0; t < wall_trials; ++t) {
        const CVec& h = covs[t % covs.size()];
        CVec y(l);
        for (Complex& c : y) c = 1.5 * rng.unit_disk();
        Complex pairing(0.0, 0.0);
        double norm_h = 0.0;
        for (unsigned j = 0; j < l; ++j) {
            pairing += h[j] * y[j];
            norm_h += std::norm(h[j]);
        }
        for (unsigned j = 0; j < l; ++j) y[j] -= (pairing / norm_h) * std::conj(h[j]);
        double gap = base_gap(map_f(p, y));
        if (gap > 1e-9)
            throw VerificationError("wall sample " + std::to_string(t) + " maps " +
                                    std::to_string(gap) + " away from the base walls for " +
                                    triple_str(p));
    }

    for (unsigned t = 0; t < off_trials; ++t) {
        CVec y(l);
        double margin = 0.0;
        unsigned draws = 0;
        do {
            for (Complex& c : y) c = 1.2 * rng.unit_disk();
            margin = arrangement_margin(covs, y);
        } while (margin < 1e-3 && ++draws < 1000);
        if (margin < 1e-3)
            throw SamplingError("off-wall sampling exhausted for " + triple_str(p));
        double gap = base_gap(map_f(p, y));
        if (gap < 1e-9)
            throw VerificationError("off-wall sample " + std::to_string(t) +
                                    " (margin " + std::to_string(margin) +
                                    ") maps within " + std::to_string(gap) +
                                    " of a base wall for " + triple_str(p));
    }
    return true;
}

}  // namespace mirrorcell
