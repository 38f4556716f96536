#include "mirrorcell/arrangement.hpp"

#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mirrorcell {

Hyperplane Hyperplane::from_covector(std::vector<CycloNum> covector) {
    if (covector.empty()) throw std::invalid_argument("empty covector");
    std::size_t lead = covector.size();
    for (std::size_t i = 0; i < covector.size(); ++i) {
        if (!covector[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead == covector.size())
        throw std::invalid_argument("zero covector does not define a hyperplane");
    CycloNum inv = covector[lead].inverse();
    for (std::size_t i = lead; i < covector.size(); ++i) covector[i] *= inv;
    Hyperplane h;
    h.covector_ = std::move(covector);
    return h;
}

std::string Hyperplane::key() const {
    std::string out;
    for (const CycloNum& c : covector_) out += c.str();
    return out;
}

Arrangement::Arrangement(FieldPtr field, unsigned dim, std::string label)
    : field_(std::move(field)), dim_(dim), label_(std::move(label)) {
    if (dim_ == 0) throw std::invalid_argument("arrangement dimension must be positive");
}

void Arrangement::add_hyperplane(std::vector<CycloNum> covector) {
    if (covector.size() != dim_)
        throw std::invalid_argument("covector length does not match arrangement dimension");
    for (const CycloNum& c : covector)
        if (c.field()->order() != field_->order())
            throw std::invalid_argument("covector field does not match arrangement field");
    add_hyperplane(Hyperplane::from_covector(std::move(covector)));
}

void Arrangement::add_hyperplane(Hyperplane h) {
    if (h.dim() != dim_)
        throw std::invalid_argument("hyperplane dimension does not match arrangement");
    for (const Hyperplane& existing : hyperplanes_)
        if (existing == h) throw std::invalid_argument("duplicate hyperplane");
    hyperplanes_.push_back(std::move(h));
}

CycloMatrix Arrangement::covector_matrix() const {
    CycloMatrix m(field_, static_cast<unsigned>(hyperplanes_.size()), dim_);
    for (unsigned i = 0; i < hyperplanes_.size(); ++i)
        for (unsigned j = 0; j < dim_; ++j) m.at(i, j) = hyperplanes_[i].covector()[j];
    return m;
}

Arrangement build_monomial(unsigned k, unsigned l, unsigned r) {
    if (l < 2) throw std::invalid_argument("monomial arrangement needs dimension >= 2");
    if (k > l) throw std::invalid_argument("coordinate count k must satisfy k <= l");
    if (r < 1) throw std::invalid_argument("root order r must be >= 1");
    FieldPtr field = CycloField::get(r);
    std::string label = "A^" + std::to_string(k) + "_" + std::to_string(l) +
                        "(" + std::to_string(r) + ")";
    Arrangement a(field, l, label);
    for (unsigned idx = 0; idx < k; ++idx) {
        std::vector<CycloNum> cov(l, CycloNum::zero(field));
        cov[idx] = CycloNum::one(field);
        a.add_hyperplane(std::move(cov));
    }
    for (unsigned i = 0; i + 1 < l; ++i) {
        for (unsigned j = i + 1; j < l; ++j) {
            for (unsigned t = 0; t < r; ++t) {
                std::vector<CycloNum> cov(l, CycloNum::zero(field));
                cov[i] = CycloNum::one(field);
                cov[j] = -CycloNum::zeta_pow(field, t);
                a.add_hyperplane(std::move(cov));
            }
        }
    }
    return a;
}

Arrangement build_braid(unsigned l) {
    if (l < 3) throw std::invalid_argument("braid arrangement here needs l >= 3");
    return build_monomial(l - 1, l - 1, 1);
}

Arrangement build_reflection(unsigned r, unsigned p, unsigned l) {
    if (p == 0 || r % p != 0)
        throw std::invalid_argument("parameter p must divide r");
    unsigned k = (p < r) ? l : 0;
    Arrangement base = build_monomial(k, l, r);
    Arrangement g(base.field(), base.dim(),
                  "G(" + std::to_string(r) + "," + std::to_string(p) + "," +
                      std::to_string(l) + ")");
    for (const Hyperplane& h : base.hyperplanes()) g.add_hyperplane(h);
    return g;
}

bool is_essential(const Arrangement& a) {
    return matrix_rank(a.covector_matrix()) == a.dim();
}

std::string serialize(const Arrangement& a) {
    std::string out = "arrangement dim=" + std::to_string(a.dim()) +
                      " r=" + std::to_string(a.field()->order()) +
                      " count=" + std::to_string(a.size()) + "\n";
    for (const Hyperplane& h : a.hyperplanes()) {
        for (unsigned j = 0; j < a.dim(); ++j) {
            if (j) out += ' ';
            out += h.covector()[j].str();
        }
        out += '\n';
    }
    return out;
}

Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("empty arrangement text");
    unsigned dim = 0, r = 0;
    std::size_t count = 0;
    {
        std::istringstream header(line);
        std::string word;
        header >> word;
        if (word != "arrangement")
            throw std::invalid_argument("missing arrangement header");
        bool have_dim = false, have_r = false, have_count = false;
        while (header >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("malformed header field: " + word);
            std::string name = word.substr(0, eq);
            unsigned long value = std::stoul(word.substr(eq + 1));
            if (name == "dim") { dim = static_cast<unsigned>(value); have_dim = true; }
            else if (name == "r") { r = static_cast<unsigned>(value); have_r = true; }
            else if (name == "count") { count = value; have_count = true; }
            else throw std::invalid_argument("unknown header field: " + name);
        }
        if (!have_dim || !have_r || !have_count)
            throw std::invalid_argument("incomplete arrangement header");
    }
    FieldPtr field = CycloField::get(r);
    Arrangement a(field, dim);
    std::size_t seen = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<CycloNum> cov;
        std::string token;
        while (row >> token) cov.push_back(CycloNum::parse(field, token));
        if (cov.size() != dim)
            throw std::invalid_argument("hyperplane line has wrong coordinate count");
        a.add_hyperplane(std::move(cov));
        ++seen;
    }
    if (seen != count)
        throw std::invalid_argument("hyperplane count does not match header");
    return a;
}

}  // namespace mirrorcell
