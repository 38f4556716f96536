#include "mirrorcell/restriction.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace mirrorcell {

namespace {

// Free (non-pivot) columns of a reduced row-echelon basis.
std::vector<unsigned> free_columns(const CycloMatrix& basis, unsigned dim) {
    std::vector<bool> pivot(dim, false);
    for (unsigned i = 0; i < basis.rows(); ++i)
        for (unsigned j = 0; j < dim; ++j)
            if (!basis.at(i, j).is_zero()) {
                pivot[j] = true;
                break;
            }
    std::vector<unsigned> free;
    for (unsigned j = 0; j < dim; ++j)
        if (!pivot[j]) free.push_back(j);
    return free;
}

std::vector<unsigned> pivot_columns(const CycloMatrix& basis, unsigned dim) {
    std::vector<unsigned> pivots;
    for (unsigned i = 0; i < basis.rows(); ++i)
        for (unsigned j = 0; j < dim; ++j)
            if (!basis.at(i, j).is_zero()) {
                pivots.push_back(j);
                break;
            }
    return pivots;
}

}  // namespace

RestrictionResult restrict_to_flat(const Arrangement& a, const Flat& flat) {
    unsigned dim = a.dim();
    if (flat.rank == 0 || flat.rank >= dim)
        throw std::invalid_argument("restriction needs a flat with 1 <= rank < dim");
    const CycloMatrix& basis = flat.basis;
    unsigned m = dim - flat.rank;
    FieldPtr field = a.field();

    // Chart: one basis vector of the flat per free column f. The vector has
    // a 1 in position f and cancels each pivot row's value at f.
    std::vector<unsigned> frees = free_columns(basis, dim);
    std::vector<unsigned> pivots = pivot_columns(basis, dim);
    if (frees.size() != m) throw std::logic_error("echelon basis is not reduced");
    CycloMatrix chart(field, m, dim);
    for (unsigned row = 0; row < m; ++row) {
        unsigned f = frees[row];
        chart.at(row, f) = CycloNum::one(field);
        for (unsigned i = 0; i < basis.rows(); ++i)
            chart.at(row, pivots[i]) = -basis.at(i, f);
    }

    return {restrict_with_chart(a, chart), chart};
}

Arrangement restrict_with_chart(const Arrangement& a, const CycloMatrix& chart) {
    unsigned dim = a.dim();
    unsigned m = chart.rows();
    if (chart.cols() != dim)
        throw std::invalid_argument("chart column count does not match arrangement");
    FieldPtr field = a.field();
    Arrangement induced(field, m, a.label() + " restricted");
    std::set<std::string> seen;
    for (const Hyperplane& h : a.hyperplanes()) {
        std::vector<CycloNum> w(m, CycloNum::zero(field));
        bool zero = true;
        for (unsigned row = 0; row < m; ++row) {
            CycloNum acc = CycloNum::zero(field);
            for (unsigned col = 0; col < dim; ++col)
                acc += h.covector()[col] * chart.at(row, col);
            if (!acc.is_zero()) zero = false;
            w[row] = std::move(acc);
        }
        if (zero) continue;  // hyperplane contains the flat
        Hyperplane img = Hyperplane::from_covector(std::move(w));
        if (seen.insert(img.key()).second) induced.add_hyperplane(std::move(img));
    }
    return induced;
}

// ---- linear isomorphism search ----

namespace {

// Covectors re-expressed in the coordinates of their own span: component t of
// a vector v in the row space of an RREF basis is v[pivot_t].
std::vector<std::vector<CycloNum>> essential_covectors(const Arrangement& a,
                                                       const FieldPtr& target_field,
                                                       unsigned* rank_out) {
    CycloMatrix cov = a.covector_matrix();
    CycloMatrix basis = row_basis(cov);
    unsigned rho = basis.rows();
    *rank_out = rho;
    std::vector<unsigned> pivots = pivot_columns(basis, a.dim());
    std::vector<std::vector<CycloNum>> out;
    out.reserve(a.size());
    for (const Hyperplane& h : a.hyperplanes()) {
        std::vector<CycloNum> e(rho);
        for (unsigned t = 0; t < rho; ++t)
            e[t] = h.covector()[pivots[t]].embed_into(target_field);
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CycloNum> normalize_first_one(std::vector<CycloNum> v) {
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == v.size()) throw std::logic_error("zero essential covector");
    CycloNum inv = v[lead].inverse();
    for (std::size_t i = lead; i < v.size(); ++i) v[i] *= inv;
    return v;
}

std::string vector_key(const std::vector<CycloNum>& v) {
    std::string out;
    for (const CycloNum& c : v) out += c.str();
    return out;
}

// Inverse of the rho x rho matrix whose rows are the selected vectors;
// nullopt when the rows are dependent.
std::optional<CycloMatrix> invert_rows(const FieldPtr& field,
                                       const std::vector<std::vector<CycloNum>>& vecs,
                                       const std::vector<unsigned>& rows) {
    unsigned rho = static_cast<unsigned>(rows.size());
    CycloMatrix aug(field, rho, 2 * rho);
    for (unsigned i = 0; i < rho; ++i) {
        for (unsigned j = 0; j < rho; ++j) aug.at(i, j) = vecs[rows[i]][j];
        aug.at(i, rho + i) = CycloNum::one(field);
    }
    EchelonResult e = echelon(aug);
    for (unsigned i = 0; i < rho; ++i)
        for (unsigned j = 0; j < rho; ++j)
            if ((i == j && !(e.rref.at(i, j) == CycloNum::one(field))) ||
                (i != j && !e.rref.at(i, j).is_zero()))
                return std::nullopt;
    CycloMatrix inv(field, rho, rho);
    for (unsigned i = 0; i < rho; ++i)
        for (unsigned j = 0; j < rho; ++j) inv.at(i, j) = e.rref.at(i, rho + j);
    return inv;
}

// Coordinates of v in the basis formed by the rows whose inverse is given:
// gamma with gamma . rows = v, i.e. gamma = v . inverse.
std::vector<CycloNum> coords_in_basis(const CycloMatrix& inv,
                                      const std::vector<CycloNum>& v) {
    unsigned rho = inv.rows();
    std::vector<CycloNum> gamma(rho, CycloNum::zero(inv.field()));
    for (unsigned t = 0; t < rho; ++t) {
        CycloNum acc = CycloNum::zero(inv.field());
        for (unsigned s = 0; s < rho; ++s) acc += v[s] * inv.at(s, t);
        gamma[t] = std::move(acc);
    }
    return gamma;
}

bool all_nonzero(const std::vector<CycloNum>& v) {
    for (const CycloNum& c : v)
        if (c.is_zero()) return false;
    return true;
}

// Size of the unique minimal dependent subset, or 0 when all vectors are
// independent. Only used for tiny configurations (n <= rank + 1).
unsigned circuit_size(const FieldPtr& field,
                      const std::vector<std::vector<CycloNum>>& vecs, unsigned rho) {
    unsigned n = static_cast<unsigned>(vecs.size());
    for (unsigned size = 2; size <= n; ++size) {
        std::vector<unsigned> idx(size);
        std::iota(idx.begin(), idx.end(), 0u);
        for (;;) {
            CycloMatrix m(field, size, rho);
            for (unsigned i = 0; i < size; ++i)
                for (unsigned j = 0; j < rho; ++j) m.at(i, j) = vecs[idx[i]][j];
            if (matrix_rank(m) < size) return size;
            unsigned pos = size;
            while (pos-- > 0) {
                if (idx[pos] != n - size + pos) {
                    ++idx[pos];
                    for (unsigned q = pos + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
                    break;
                }
                if (pos == 0) goto next_size;
            }
        }
    next_size:;
    }
    return 0;
}

struct FrameSearch {
    std::vector<unsigned> base;  // rho independent indices
    unsigned apex = 0;           // index with all coordinates nonzero
    CycloMatrix base_inverse;
    std::vector<CycloNum> apex_coords;
};

std::optional<FrameSearch> find_frame(const FieldPtr& field,
                                      const std::vector<std::vector<CycloNum>>& vecs,
                                      unsigned rho) {
    unsigned n = static_cast<unsigned>(vecs.size());
    std::vector<unsigned> idx(rho);
    std::iota(idx.begin(), idx.end(), 0u);
    for (;;) {
        auto inv = invert_rows(field, vecs, idx);
        if (inv) {
            for (unsigned apex = 0; apex < n; ++apex) {
                if (std::find(idx.begin(), idx.end(), apex) != idx.end()) continue;
                std::vector<CycloNum> coords = coords_in_basis(*inv, vecs[apex]);
                if (all_nonzero(coords))
                    return FrameSearch{idx, apex, *inv, std::move(coords)};
            }
        }
        unsigned pos = rho;
        bool advanced = false;
        while (pos-- > 0) {
            if (idx[pos] != n - rho + pos) {
                ++idx[pos];
                for (unsigned q = pos + 1; q < rho; ++q) idx[q] = idx[q - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;
    }
}

}  // namespace

bool linear_iso_exists(const Arrangement& b, const Arrangement& c) {
    if (b.size() != c.size()) return false;
    unsigned n = static_cast<unsigned>(b.size());
    if (n == 0) return b.dim() == c.dim();

    unsigned lcm_order = std::lcm(b.field()->order(), c.field()->order());
    FieldPtr field = CycloField::get(lcm_order);

    unsigned rank_b = 0, rank_c = 0;
    auto eb = essential_covectors(b, field, &rank_b);
    auto ec = essential_covectors(c, field, &rank_c);
    if (rank_b != rank_c) return false;
    unsigned rho = rank_b;

    std::vector<std::vector<CycloNum>> nb, nc;
    nb.reserve(n);
    nc.reserve(n);
    for (auto& v : eb) nb.push_back(normalize_first_one(std::move(v)));
    for (auto& v : ec) nc.push_back(normalize_first_one(std::move(v)));

    std::set<std::string> target_keys;
    for (const auto& v : nc) target_keys.insert(vector_key(v));
    {
        std::set<std::string> source_keys;
        for (const auto& v : nb) source_keys.insert(vector_key(v));
        if (source_keys == target_keys) return true;
    }

    if (n <= 2 || n == rho) return true;

    auto frame = find_frame(field, nb, rho);
    if (!frame) {
        // No projective frame on the source side: compare dependency shape.
        // An essential configuration of rank + 1 points has one circuit, and
        // two such configurations are isomorphic iff the circuits have equal
        // sizes. Anything larger without a frame is out of scope.
        if (n == rho + 1)
            return circuit_size(field, nb, rho) == circuit_size(field, nc, rho);
        throw std::runtime_error(
            "isomorphism search: no projective frame in a configuration of " +
            std::to_string(n) + " hyperplanes of rank " + std::to_string(rho));
    }

    // Coordinates of every source covector in the frame base.
    std::vector<std::vector<CycloNum>> gammas;
    gammas.reserve(n);
    for (const auto& v : nb) gammas.push_back(coords_in_basis(frame->base_inverse, v));

    // Enumerate images of the frame: an ordered choice of rho independent
    // target covectors plus an apex with nonzero coordinates. The frame data
    // fixes the map up to a global scalar, which hyperplane images ignore.
    std::vector<unsigned> combo(rho);
    std::iota(combo.begin(), combo.end(), 0u);
    for (;;) {
        if (invert_rows(field, nc, combo)) {
            std::vector<unsigned> perm = combo;
            std::sort(perm.begin(), perm.end());
            do {
                auto inv = invert_rows(field, nc, perm);
                for (unsigned apex = 0; apex < n; ++apex) {
                    if (std::find(perm.begin(), perm.end(), apex) != perm.end()) continue;
                    std::vector<CycloNum> beta = coords_in_basis(*inv, nc[apex]);
                    if (!all_nonzero(beta)) continue;
                    // scale_t = beta_t / alpha_t; image of covector h is
                    // sum_t gamma_{h,t} * scale_t * target_base_t.
                    std::vector<CycloNum> scale(rho);
                    for (unsigned t = 0; t < rho; ++t)
                        scale[t] = beta[t] / frame->apex_coords[t];
                    bool ok = true;
                    for (unsigned h = 0; h < n && ok; ++h) {
                        std::vector<CycloNum> img(rho, CycloNum::zero(field));
                        for (unsigned t = 0; t < rho; ++t) {
                            if (gammas[h][t].is_zero()) continue;
                            CycloNum w = gammas[h][t] * scale[t];
                            for (unsigned s = 0; s < rho; ++s)
                                img[s] += w * nc[perm[t]][s];
                        }
                        ok = target_keys.count(vector_key(normalize_first_one(std::move(img)))) > 0;
                    }
                    if (ok) return true;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        unsigned pos = rho;
        bool advanced = false;
        while (pos-- > 0) {
            if (combo[pos] != n - rho + pos) {
                ++combo[pos];
                for (unsigned q = pos + 1; q < rho; ++q) combo[q] = combo[q - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) return false;
    }
}

// ---- identification ----

namespace {

struct FamilySignature {
    unsigned rank;
    ZPoly chi;
};

const FamilySignature& family_signature(unsigned k, unsigned m, unsigned r) {
    static std::map<std::array<unsigned, 3>, FamilySignature> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::array<unsigned, 3>{k, m, r};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Arrangement fam = build_monomial(k, m, r);
    FamilySignature sig;
    sig.rank = matrix_rank(fam.covector_matrix());
    sig.chi = characteristic_polynomial(fam);
    return cache.emplace(key, std::move(sig)).first->second;
}

}  // namespace

std::vector<std::array<unsigned, 3>> identify_monomial_type(const Arrangement& b,
                                                            unsigned r_max) {
    std::vector<std::array<unsigned, 3>> out;
    unsigned m = b.dim();
    if (m < 2 || r_max == 0) return out;
    unsigned n = static_cast<unsigned>(b.size());

    bool have_b_stats = false;
    unsigned b_rank = 0;
    ZPoly b_chi;

    for (unsigned r = 1; r <= r_max; ++r) {
        unsigned long pairs = static_cast<unsigned long>(r) * m * (m - 1) / 2;
        if (n < pairs || n - pairs > m) continue;
        unsigned k = static_cast<unsigned>(n - pairs);
        const FamilySignature& sig = family_signature(k, m, r);
        if (!have_b_stats) {
            b_rank = matrix_rank(b.covector_matrix());
            b_chi = characteristic_polynomial(b);
            have_b_stats = true;
        }
        if (sig.rank != b_rank || sig.chi != b_chi) continue;
        if (m <= 3 && n <= 12) {
            Arrangement fam = build_monomial(k, m, r);
            if (!linear_iso_exists(b, fam)) continue;
        }
        out.push_back({k, m, r});
    }
    return out;
}

// ---- deletion-restriction consistency ----

bool triple_check(const Arrangement& a, std::size_t hyperplane_index) {
    if (hyperplane_index >= a.size())
        throw std::invalid_argument("hyperplane index out of range");
    ZPoly chi_full = characteristic_polynomial(a);

    Arrangement deleted(a.field(), a.dim(), a.label() + " deleted");
    for (std::size_t h = 0; h < a.size(); ++h)
        if (h != hyperplane_index) deleted.add_hyperplane(a[h]);
    ZPoly chi_del = characteristic_polynomial(deleted);

    Flat flat;
    CycloMatrix row(a.field(), 1, a.dim());
    for (unsigned j = 0; j < a.dim(); ++j)
        row.at(0, j) = a[hyperplane_index].covector()[j];
    flat.basis = row_basis(row);
    flat.rank = 1;
    ZPoly chi_res = characteristic_polynomial(restrict_to_flat(a, flat).induced);

    ZPoly rhs = chi_del;
    for (std::size_t i = 0; i < chi_res.size(); ++i) rhs[i] -= chi_res[i];
    return rhs == chi_full;
}

// ---- scan ----

ScanResult scan_arrangement(const Arrangement& a, unsigned r_max) {
    const unsigned l = a.dim();
    const unsigned bound = r_max ? r_max : a.field()->order();
    Lattice lat(a);
    ScanResult result;
    result.label = a.label();
    for (unsigned rank = 0; rank <= lat.max_rank() && rank + 2 <= l; ++rank) {
        for (const Flat& flat : lat.rank(rank)) {
            ScanEntry entry;
            entry.flat = flat.containing;
            entry.dim = l - rank;
            if (rank == 0) {
                entry.induced_count = static_cast<unsigned>(a.size());
                entry.candidates = identify_monomial_type(a, bound);
            } else {
                RestrictionResult rr = restrict_to_flat(a, flat);
                entry.induced_count = static_cast<unsigned>(rr.induced.size());
                entry.candidates = identify_monomial_type(rr.induced, bound);
            }
            if (entry.candidates.empty()) {
                std::string msg = "unidentified flat {";
                for (std::size_t i = 0; i < entry.flat.size(); ++i)
                    msg += (i ? "," : "") + std::to_string(entry.flat[i]);
                msg += "} of dim " + std::to_string(entry.dim) + " in " + result.label;
                result.failures.push_back(std::move(msg));
            }
            result.entries.push_back(std::move(entry));
        }
    }
    return result;
}

ScanResult restriction_closure_scan(unsigned r, unsigned p, unsigned l, unsigned r_max) {
    return scan_arrangement(build_reflection(r, p, l), r_max ? r_max : r);
}

std::string serialize(const ScanResult& scan) {
    std::string out;
    for (const ScanEntry& e : scan.entries) {
        out += "flat=";
        for (std::size_t i = 0; i < e.flat.size(); ++i)
            out += (i ? "," : "") + std::to_string(e.flat[i]);
        out += " dim=" + std::to_string(e.dim) +
               " induced_count=" + std::to_string(e.induced_count) + " candidates=";
        for (std::size_t i = 0; i < e.candidates.size(); ++i) {
            if (i) out += ',';
            out += "(" + std::to_string(e.candidates[i][0]) + "," +
                   std::to_string(e.candidates[i][1]) + "," +
                   std::to_string(e.candidates[i][2]) + ")";
        }
        out += '\n';
    }
    return out;
}

}  // namespace mirrorcell
