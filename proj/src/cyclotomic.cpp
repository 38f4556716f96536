#include "mirrorcell/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mirrorcell {

namespace {

// ---- polynomial helpers, ascending-degree coefficient vectors ----

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic divisor; remainder must vanish.
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ztrim(num);
    if (den.empty() || den.back() != 1)
        throw std::logic_error("zdiv_exact expects a monic divisor");
    if (num.size() < den.size()) {
        for (const Integer& c : num)
            if (c != 0) throw std::logic_error("inexact polynomial division");
        return {};
    }
    ZPoly quot(num.size() - den.size() + 1, Integer(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer c = num[i + den.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Integer& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Remainder of num modulo a monic integer polynomial.
void qreduce(QPoly& num, const ZPoly& mod) {
    qtrim(num);
    while (num.size() >= mod.size()) {
        Rational c = num.back();
        std::size_t shift = num.size() - mod.size();
        if (c != 0)
            for (std::size_t j = 0; j + 1 < mod.size(); ++j)
                num[shift + j] -= c * Rational(mod[j]);
        num.pop_back();
        qtrim(num);
    }
}

std::pair<QPoly, QPoly> qdivmod(QPoly num, const QPoly& den) {
    qtrim(num);
    if (den.empty()) throw std::domain_error("polynomial division by zero");
    if (num.size() < den.size()) return {{}, std::move(num)};
    Rational lead = den.back();
    QPoly quot(num.size() - den.size() + 1, Rational(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rational c = num[i + den.size() - 1] / lead;
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    qtrim(num);
    return {std::move(quot), std::move(num)};
}

// u with u*a + (·)*b = gcd(a, b); only the a-cofactor is needed.
std::pair<QPoly, QPoly> ext_gcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    QPoly r0 = std::move(a), r1 = std::move(b);
    QPoly u0 = {Rational(1)}, u1 = {};
    while (!r1.empty()) {
        auto [q, rem] = qdivmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        QPoly qu = qmul(q, u1);
        QPoly next(u0);
        if (qu.size() > next.size()) next.resize(qu.size(), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) next[i] -= qu[i];
        qtrim(next);
        u0 = std::move(u1);
        u1 = std::move(next);
    }
    return {std::move(r0), std::move(u0)};  // gcd, cofactor of a
}

}  // namespace

ZPoly cyclotomic_polynomial(unsigned r) {
    if (r == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::map<unsigned, ZPoly> cache;
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto compute = [](auto&& self, unsigned n) -> const ZPoly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        ZPoly num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;  // x^n - 1
        ZPoly den = {Integer(1)};
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) den = zmul(den, self(self, d));
        return cache.emplace(n, zdiv_exact(std::move(num), den)).first->second;
    };
    return compute(compute, r);
}

// ---- CycloField ----

CycloField::CycloField(unsigned r) : order_(r), modulus_(cyclotomic_polynomial(r)) {
    degree_ = static_cast<unsigned>(modulus_.size() - 1);
}

FieldPtr CycloField::get(unsigned r) {
    if (r == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::map<unsigned, FieldPtr> registry;
    static std::mutex registry_mutex;
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry.find(r);
    if (it != registry.end()) return it->second;
    FieldPtr field(new CycloField(r));
    registry.emplace(r, field);
    return field;
}

// ---- CycloNum ----

void CycloNum::require_field() const {
    if (!field_) throw std::logic_error("operation on an unset CycloNum");
}

static void require_same_field(const CycloNum& a, const CycloNum& b) {
    if (!a.field() || !b.field())
        throw std::logic_error("operation on an unset CycloNum");
    if (a.field()->order() != b.field()->order())
        throw std::invalid_argument("field mismatch between cyclotomic numbers");
}

CycloNum CycloNum::zero(const FieldPtr& field) {
    return CycloNum(field, QPoly(field->degree(), Rational(0)));
}

CycloNum CycloNum::one(const FieldPtr& field) { return from_rational(field, Rational(1)); }

CycloNum CycloNum::from_rational(const FieldPtr& field, const Rational& q) {
    QPoly c(field->degree(), Rational(0));
    c[0] = q;
    return CycloNum(field, std::move(c));
}

CycloNum CycloNum::zeta_pow(const FieldPtr& field, long t) {
    long r = static_cast<long>(field->order());
    t %= r;
    if (t < 0) t += r;
    QPoly mono(static_cast<std::size_t>(t) + 1, Rational(0));
    mono.back() = 1;
    qreduce(mono, field->modulus());
    mono.resize(field->degree(), Rational(0));
    return CycloNum(field, std::move(mono));
}

CycloNum CycloNum::from_coeffs(const FieldPtr& field, QPoly coeffs) {
    if (coeffs.size() != field->degree())
        throw std::invalid_argument("coefficient count does not match field degree");
    return CycloNum(field, std::move(coeffs));
}

bool CycloNum::is_zero() const {
    require_field();
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    require_field();
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_[0];
}

CycloNum CycloNum::operator-() const {
    require_field();
    CycloNum out = *this;
    for (Rational& c : out.coeffs_) c = -c;
    return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
    require_same_field(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) {
    require_same_field(*this, rhs);
    QPoly prod = qmul(coeffs_, rhs.coeffs_);
    qreduce(prod, field_->modulus());
    prod.resize(field_->degree(), Rational(0));
    coeffs_ = std::move(prod);
    return *this;
}

CycloNum CycloNum::inverse() const {
    require_field();
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    QPoly rep = coeffs_;
    qtrim(rep);
    QPoly mod(field_->modulus().size());
    for (std::size_t i = 0; i < mod.size(); ++i) mod[i] = Rational(field_->modulus()[i]);
    auto [g, u] = ext_gcd(rep, mod);
    // The modulus is irreducible over Q, so the gcd is a nonzero constant.
    if (g.size() != 1)
        throw std::logic_error("cyclotomic modulus shares a factor with a nonzero element");
    Rational scale = Rational(1) / g[0];
    for (Rational& c : u) c *= scale;
    qreduce(u, field_->modulus());
    u.resize(field_->degree(), Rational(0));
    return CycloNum(field_, std::move(u));
}

CycloNum& CycloNum::operator/=(const CycloNum& rhs) {
    require_same_field(*this, rhs);
    return *this *= rhs.inverse();
}

CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

bool operator==(const CycloNum& a, const CycloNum& b) {
    require_same_field(a, b);
    return a.coeffs_ == b.coeffs_;
}

std::complex<double> CycloNum::embed(long root_index) const {
    require_field();
    long r = static_cast<long>(field_->order());
    long t = root_index % r;
    if (t < 0) t += r;
    if (std::gcd(t == 0 ? r : t, r) != 1)
        throw std::invalid_argument("embedding root index must be coprime to the order");
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> omega = std::polar(1.0, two_pi * static_cast<double>(t) / static_cast<double>(r));
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * omega + coeffs_[i].get_d();
    return acc;
}

CycloNum CycloNum::embed_into(const FieldPtr& target) const {
    require_field();
    unsigned r = field_->order();
    unsigned m = target->order();
    if (m % r != 0)
        throw std::invalid_argument("target order must be a multiple of the source order");
    unsigned step = m / r;
    QPoly lifted;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        std::size_t pos = i * step;
        if (lifted.size() <= pos) lifted.resize(pos + 1, Rational(0));
        lifted[pos] = coeffs_[i];
    }
    qreduce(lifted, target->modulus());
    lifted.resize(target->degree(), Rational(0));
    return CycloNum::from_coeffs(target, std::move(lifted));
}

std::string CycloNum::str() const {
    require_field();
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += rational_str(coeffs_[i]);
    }
    out += ']';
    return out;
}

CycloNum CycloNum::parse(const FieldPtr& field, const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("malformed cyclotomic literal: " + text);
    QPoly coeffs;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    if (coeffs.size() != field->degree())
        throw std::invalid_argument("coefficient count does not match field degree: " + text);
    return CycloNum::from_coeffs(field, std::move(coeffs));
}

// ---- CycloMatrix ----

CycloMatrix::CycloMatrix(FieldPtr field, unsigned rows, unsigned cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, CycloNum::zero(field_)) {}

CycloMatrix CycloMatrix::stack(const CycloMatrix& top, const CycloMatrix& bottom) {
    if (top.cols_ != bottom.cols_)
        throw std::invalid_argument("stack: column counts differ");
    if (top.field_->order() != bottom.field_->order())
        throw std::invalid_argument("stack: field mismatch");
    CycloMatrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.entries_.begin(), top.entries_.end(), out.entries_.begin());
    std::copy(bottom.entries_.begin(), bottom.entries_.end(),
              out.entries_.begin() + top.entries_.size());
    return out;
}

CycloMatrix CycloMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<CycloNum>>& rows,
                                   unsigned cols) {
    CycloMatrix out(field, static_cast<unsigned>(rows.size()), cols);
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (unsigned j = 0; j < cols; ++j) out.at(i, j) = rows[i][j];
    }
    return out;
}

std::string CycloMatrix::key() const {
    std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (unsigned i = 0; i < rows_; ++i) {
        if (i) out += ';';
        for (unsigned j = 0; j < cols_; ++j) out += at(i, j).str();
    }
    return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    if (a.entries_.empty()) return true;
    if (a.field_->order() != b.field_->order()) return false;
    return a.entries_ == b.entries_;
}

EchelonResult echelon(const CycloMatrix& m) {
    EchelonResult res;
    res.rref = m;
    if (m.rows() == 0 || m.cols() == 0) return res;
    CycloMatrix& a = res.rref;
    unsigned lead = 0;
    for (unsigned col = 0; col < a.cols() && lead < a.rows(); ++col) {
        unsigned pivot = lead;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead)
            for (unsigned j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(lead, j));
        CycloNum inv = a.at(lead, col).inverse();
        for (unsigned j = col; j < a.cols(); ++j) a.at(lead, j) *= inv;
        for (unsigned i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            CycloNum factor = a.at(i, col);
            for (unsigned j = col; j < a.cols(); ++j)
                a.at(i, j) -= factor * a.at(lead, j);
        }
        ++lead;
    }
    res.rank = lead;
    return res;
}

CycloMatrix row_basis(const CycloMatrix& m) {
    EchelonResult e = echelon(m);
    CycloMatrix out(m.field(), e.rank, m.cols());
    for (unsigned i = 0; i < e.rank; ++i)
        for (unsigned j = 0; j < m.cols(); ++j) out.at(i, j) = e.rref.at(i, j);
    return out;
}

unsigned matrix_rank(const CycloMatrix& m) { return echelon(m).rank; }

}  // namespace mirrorcell
