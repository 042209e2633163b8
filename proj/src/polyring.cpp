#include "sgd/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sgd {

ExponentVector::ExponentVector(std::initializer_list<int> entries) : e_(entries) {
    for (int v : e_) {
        if (v < 0) throw std::invalid_argument("negative exponent");
    }
}

ExponentVector::ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_) {
        if (v < 0) throw std::invalid_argument("negative exponent");
    }
}

long ExponentVector::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0L);
}

bool ExponentVector::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] > other.e_[i]) return false;
    }
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    ExponentVector r = *this;
    r += other;
    return r;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
    return *this;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    ExponentVector r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= other.e_[i];
        if (r.e_[i] < 0) throw std::invalid_argument("monomial does not divide");
    }
    return r;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) return false;
    }
    return true;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : e) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s[0])) return false;
    return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) throw std::invalid_argument("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
    }
}

long VariableContext::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<long>(it - names_.begin());
}

Ring make_ring(std::vector<std::string> names) {
    return std::make_shared<const VariableContext>(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->names() == b->names());
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("null ring");
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
    Polynomial p(std::move(ring));
    p.add_term(ExponentVector(p.num_vars()), c);
    return p;
}

Polynomial Polynomial::monomial(Ring ring, ExponentVector e, const Rational& c) {
    Polynomial p(std::move(ring));
    if (e.size() != p.num_vars()) throw std::invalid_argument("exponent length mismatch");
    p.add_term(e, c);
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
    ExponentVector e(ring->size());
    e[i] = 1;
    return monomial(std::move(ring), std::move(e));
}

Polynomial Polynomial::from_terms(Ring ring, std::span<const Term> terms) {
    Polynomial p(std::move(ring));
    for (const auto& t : terms) {
        if (t.exponent.size() != p.num_vars()) throw std::invalid_argument("exponent length mismatch");
        p.add_term(t.exponent, t.coefficient);
    }
    return p;
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

long Polynomial::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
    return d;
}

bool Polynomial::is_homogeneous(std::span<const long> grading) const {
    bool first = true;
    long deg = 0;
    for (const auto& [e, c] : terms_) {
        long d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += grading[i] * e[i];
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            return false;
        }
    }
    return true;
}

bool Polynomial::is_homogeneous() const {
    std::vector<long> ones(num_vars(), 1);
    return is_homogeneous(ones);
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_ring(const Polynomial& g) const {
    if (!same_ring(ring_, g.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_ring(g);
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_ring(g);
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_ring(g);
    Polynomial r(f.ring_);
    for (const auto& [ea, ca] : f.terms_) {
        for (const auto& [eb, cb] : g.terms_) r.add_term(ea + eb, ca * cb);
    }
    return r;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

std::string monomial_to_string(const ExponentVector& e, const VariableContext& vars) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.name(i);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e.is_zero()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << monomial_to_string(e, *ring_);
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

WeightVector::WeightVector(std::vector<long> entries) : w_(std::move(entries)) {
    long g = 0;
    for (long v : w_) {
        if (v < 0) throw std::invalid_argument("weight vector has a negative entry");
        g = std::gcd(g, v);
    }
    if (g == 0) throw std::invalid_argument("weight vector is zero");
    for (long& v : w_) v /= g;
}

WeightVector::WeightVector(std::initializer_list<long> entries)
    : WeightVector(std::vector<long>(entries)) {}

long WeightVector::dot(const ExponentVector& e) const {
    long s = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) s += w_[i] * e[i];
    return s;
}

TermOrder::TermOrder(const WeightVector& w) {
    rows_.emplace_back(w.entries().begin(), w.entries().end());
}

TermOrder TermOrder::from_rows(std::vector<std::vector<long>> rows) {
    if (rows.empty()) throw std::invalid_argument("term order needs at least one row");
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) throw std::invalid_argument("ragged order matrix");
        for (long v : r) {
            if (v < 0) throw std::invalid_argument("order rows must be nonnegative");
        }
    }
    TermOrder o;
    o.rows_ = std::move(rows);
    return o;
}

std::strong_ordering TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
    for (const auto& row : rows_) {
        long da = 0, db = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            da += row[i] * a[i];
            db += row[i] * b[i];
        }
        if (da != db) return da <=> db;
    }
    return a <=> b;
}

Term initial_term(const Polynomial& f, const TermOrder& ord) {
    if (f.is_zero()) throw std::invalid_argument("initial term of the zero polynomial");
    auto best = f.terms().begin();
    for (auto it = std::next(best); it != f.terms().end(); ++it) {
        if (ord.greater(it->first, best->first)) best = it;
    }
    return {best->first, best->second};
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        long d = w.dot(e);
        if (first || d > best) best = d;
        first = false;
    }
    Polynomial r(f.ring());
    for (const auto& [e, c] : f.terms()) {
        if (w.dot(e) == best) r.add_term(e, c);
    }
    return r;
}

std::set<ExponentVector> support(const Polynomial& f) {
    std::set<ExponentVector> s;
    for (const auto& [e, c] : f.terms()) s.insert(e);
    return s;
}

std::vector<Polynomial> homogenize_with_t(std::span<const Polynomial> polys) {
    std::vector<Polynomial> out;
    if (polys.empty()) return out;
    const Ring& base = polys.front().ring();
    if (base->index_of("t") >= 0) throw std::invalid_argument("variable 't' already in use");
    std::vector<std::string> names{"t"};
    names.insert(names.end(), base->names().begin(), base->names().end());
    Ring ext = make_ring(std::move(names));
    out.reserve(polys.size());
    for (const auto& f : polys) {
        if (!same_ring(f.ring(), base)) throw RingMismatch();
        Polynomial g(ext);
        for (const auto& [e, c] : f.terms()) {
            std::vector<int> v{1};
            v.insert(v.end(), e.begin(), e.end());
            g.add_term(ExponentVector(std::move(v)), c);
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace sgd
