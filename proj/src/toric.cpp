#include "sgd/toric.hpp"

#include "sgd/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace sgd {

ExponentMatrix::ExponentMatrix(std::vector<ExponentVector> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw std::invalid_argument("exponent matrix needs at least one column");
    for (const auto& c : columns_) {
        if (c.size() != columns_.front().size()) throw std::invalid_argument("ragged exponent matrix");
        for (int e : c) {
            if (e < 0) throw std::invalid_argument("exponent matrix entries must be nonnegative");
        }
    }
}

ExponentVector ExponentMatrix::apply(std::span<const int> v) const {
    if (v.size() != cols()) throw std::invalid_argument("vector length mismatch");
    ExponentVector out(rows());
    for (std::size_t i = 0; i < cols(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t r = 0; r < rows(); ++r) out[r] += v[i] * columns_[i][r];
    }
    return out;
}

bool graded_lex_greater(std::span<const int> a, std::span<const int> b) {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ToricBinomial> toric_ideal_generators(const ExponentMatrix& A) {
    const std::size_t n = A.rows();
    const std::size_t s = A.cols();
    std::vector<std::string> names;
    for (std::size_t r = 0; r < n; ++r) names.push_back("x" + std::to_string(r));
    for (std::size_t i = 0; i < s; ++i) names.push_back("y" + std::to_string(i));
    Ring ring = make_ring(std::move(names));

    // x block first (graded lex), then y block weighted by column degree
    std::vector<std::vector<long>> rows;
    std::vector<long> xdeg(n + s, 0);
    std::fill(xdeg.begin(), xdeg.begin() + static_cast<long>(n), 1);
    rows.push_back(xdeg);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<long> unit(n + s, 0);
        unit[r] = 1;
        rows.push_back(std::move(unit));
    }
    std::vector<long> ydeg(n + s, 0);
    for (std::size_t i = 0; i < s; ++i) ydeg[n + i] = A.column(i).degree();
    rows.push_back(std::move(ydeg));
    TermOrder ord = TermOrder::from_rows(std::move(rows));

    std::vector<Polynomial> gens;
    gens.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        ExponentVector y(n + s), x(n + s);
        y[n + i] = 1;
        for (std::size_t r = 0; r < n; ++r) x[r] = A(r, i);
        Polynomial g = Polynomial::monomial(ring, y) - Polynomial::monomial(ring, x);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    if (gens.empty()) return {};

    std::set<ToricBinomial> out;
    for (const auto& g : buchberger(gens, ord)) {
        bool pure_y = true;
        for (const auto& [e, c] : g.terms()) {
            for (std::size_t r = 0; r < n; ++r) pure_y = pure_y && e[r] == 0;
        }
        if (!pure_y) continue;
        if (g.size() != 2) throw std::logic_error("toric elimination produced a non-binomial");
        auto it = g.terms().begin();
        std::vector<int> a(it->first.begin() + static_cast<long>(n), it->first.end());
        Rational ca = it->second;
        ++it;
        std::vector<int> b(it->first.begin() + static_cast<long>(n), it->first.end());
        if (ca + it->second != 0) throw std::logic_error("toric elimination produced a non-pure binomial");
        if (graded_lex_greater(b, a)) std::swap(a, b);
        if (A.apply(a) != A.apply(b)) throw std::logic_error("toric binomial is not a relation");
        out.insert({std::move(a), std::move(b)});
    }
    return {out.begin(), out.end()};
}

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
        return h;
    }
};

class MembershipSearch {
public:
    MembershipSearch(const ExponentMatrix& A, const ExponentVector& b) : A_(A) {
        const std::size_t s = A.cols();
        order_.resize(s);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t i, std::size_t j) {
            return A.column(i).degree() > A.column(j).degree();
        });
        // covers_[k][r]: some column order_[k..] is positive in row r
        covers_.assign(s + 1, std::vector<char>(A.rows(), 0));
        for (std::size_t k = s; k-- > 0;) {
            covers_[k] = covers_[k + 1];
            for (std::size_t r = 0; r < A.rows(); ++r) {
                if (A(r, order_[k]) > 0) covers_[k][r] = 1;
            }
        }
        residual_.assign(b.begin(), b.end());
        v_.assign(s, 0);
    }

    bool run() { return dfs(0); }
    std::vector<int> solution() const { return v_; }

private:
    bool dfs(std::size_t k) {
        const std::size_t rows = residual_.size();
        if (std::all_of(residual_.begin(), residual_.end(), [](int x) { return x == 0; })) {
            for (std::size_t j = k; j < order_.size(); ++j) v_[order_[j]] = 0;
            return true;
        }
        if (k == order_.size()) return false;
        for (std::size_t r = 0; r < rows; ++r) {
            if (residual_[r] > 0 && !covers_[k][r]) return false;
        }
        std::vector<int> key = residual_;
        key.push_back(static_cast<int>(k));
        if (dead_.count(key)) return false;

        const std::size_t c = order_[k];
        const auto& col = A_.column(c);
        int bound = -1;
        for (std::size_t r = 0; r < rows; ++r) {
            if (col[r] > 0) {
                int q = residual_[r] / col[r];
                bound = bound < 0 ? q : std::min(bound, q);
            }
        }
        if (bound < 0) bound = 0; // zero column
        for (int val = bound; val >= 0; --val) {
            for (std::size_t r = 0; r < rows; ++r) residual_[r] -= val * col[r];
            v_[c] = val;
            bool ok = dfs(k + 1);
            for (std::size_t r = 0; r < rows; ++r) residual_[r] += val * col[r];
            if (ok) return true;
        }
        v_[c] = 0;
        dead_.insert(std::move(key));
        return false;
    }

    const ExponentMatrix& A_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<char>> covers_;
    std::vector<int> residual_;
    std::vector<int> v_;
    std::unordered_set<std::vector<int>, VecHash> dead_;
};

} // namespace

std::optional<std::vector<int>> solve_monomial_membership(const ExponentMatrix& A, const ExponentVector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("right-hand side length mismatch");
    MembershipSearch search(A, b);
    if (!search.run()) return std::nullopt;
    return search.solution();
}

} // namespace sgd
