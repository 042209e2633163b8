#pragma once

#include "sgd/parser.hpp"
#include "sgd/polyring.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace sgd::test {

inline std::vector<Polynomial> polys(const Ring& R, std::initializer_list<const char*> exprs) {
    std::vector<Polynomial> out;
    for (const char* e : exprs) out.push_back(parse_polynomial(e, R));
    return out;
}

inline Polynomial P(const Ring& R, const char* expr) { return parse_polynomial(expr, R); }

inline ParsedSystem load_system(const std::string& name) {
    std::ifstream in(std::string(SGD_SYSTEMS_DIR) + "/" + name + ".txt");
    if (!in) throw std::runtime_error("missing system file " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

// Leading exponent by direct evaluation: largest weight, ties broken by
// plain lex on exponents. Does not go through TermOrder.
inline ExponentVector brute_lead(const Polynomial& f, std::span<const long> w) {
    ExponentVector best;
    long best_w = -1;
    for (const auto& [e, c] : f.terms()) {
        long v = 0;
        for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
        if (best_w < 0 || v > best_w || (v == best_w && e > best)) {
            best = e;
            best_w = v;
        }
    }
    return best;
}

// Rank of a list of rational vectors by plain Gaussian elimination.
inline long rational_rank(std::vector<std::vector<Rational>> rows) {
    long rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows.size()); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

class Random {
public:
    explicit Random(unsigned seed) : gen_(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    long uniform_long(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    ExponentVector exponent(std::size_t n, int max_deg) {
        std::vector<int> e(n);
        for (auto& x : e) x = uniform(0, max_deg);
        return ExponentVector(std::move(e));
    }

    // Exponent of total degree at most max_total.
    ExponentVector monomial(std::size_t n, int max_total) {
        std::vector<int> e(n);
        int left = uniform(0, max_total);
        for (std::size_t i = 0; i < n && left > 0; ++i) {
            e[i] = i + 1 == n ? left : uniform(0, left);
            left -= e[i];
        }
        std::shuffle(e.begin(), e.end(), gen_);
        return ExponentVector(std::move(e));
    }

    // Random nonzero polynomial of total degree <= max_deg with up to `terms`
    // terms and nonzero small rational coefficients.
    Polynomial polynomial(const Ring& R, std::size_t terms, int max_deg) {
        for (;;) {
            Polynomial f(R);
            for (std::size_t k = 0; k < terms; ++k) {
                int num = uniform(-5, 5);
                if (num == 0) num = 1;
                Rational c(Integer(num), Integer(uniform(1, 3)));
                c.canonicalize();
                f.add_term(monomial(R->size(), max_deg), c);
            }
            if (!f.is_zero()) return f;
        }
    }

    std::vector<Polynomial> system(const Ring& R, std::size_t s, std::size_t terms, int max_deg) {
        std::vector<Polynomial> F;
        for (std::size_t i = 0; i < s; ++i) F.push_back(polynomial(R, terms, max_deg));
        return F;
    }

    std::mt19937& engine() { return gen_; }

private:
    std::mt19937 gen_;
};

inline Ring ring_of(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "u", "v"};
    std::vector<std::string> v(names, names + n);
    return make_ring(v);
}

} // namespace sgd::test
