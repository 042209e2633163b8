#include "sgd/simplex.hpp"

#include <stdexcept>

namespace sgd {
namespace {

struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0; // excluding rhs
    std::vector<std::vector<Rational>> t;
    std::vector<std::size_t> basis;

    Rational& rhs(std::size_t i) { return t[i][cols]; }

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / t[r][c];
        for (auto& v : t[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j <= cols; ++j) {
                if (t[r][j] != 0) t[i][j] -= f * t[r][j];
            }
        }
        basis[r] = c;
    }

    // Maximizes obj over columns [0, allowed). Returns false if unbounded.
    bool run(const std::vector<Rational>& obj, std::size_t allowed) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < allowed && enter == cols; ++j) {
                Rational reduced = obj[j];
                for (std::size_t i = 0; i < rows; ++i) {
                    if (t[i][j] != 0) reduced -= obj[basis[i]] * t[i][j];
                }
                if (reduced > 0) enter = j;
            }
            if (enter == cols) return true;

            std::size_t leave = rows;
            Rational best;
            for (std::size_t i = 0; i < rows; ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][cols] / t[i][enter];
                if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows) return false;
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c) {
    const std::size_t m = A.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");

    std::vector<std::size_t> negative_rows;
    for (std::size_t i = 0; i < m; ++i) {
        if (A[i].size() != n) throw std::invalid_argument("lp: column count mismatch");
        if (b[i] < 0) negative_rows.push_back(i);
    }
    const std::size_t k = negative_rows.size();

    // columns: x (n) | slack (m) | artificial (k) | rhs
    Tableau tab;
    tab.rows = m;
    tab.cols = n + m + k;
    tab.t.assign(m, std::vector<Rational>(tab.cols + 1));
    tab.basis.assign(m, 0);
    std::size_t next_art = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        const bool neg = b[i] < 0;
        const int sign = neg ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * A[i][j];
        tab.t[i][n + i] = sign;
        tab.rhs(i) = sign * b[i];
        if (neg) {
            tab.t[i][next_art] = 1;
            tab.basis[i] = next_art++;
        } else {
            tab.basis[i] = n + i;
        }
    }

    LpResult res;
    if (k > 0) {
        std::vector<Rational> phase1(tab.cols, 0);
        for (std::size_t j = n + m; j < tab.cols; ++j) phase1[j] = -1;
        tab.run(phase1, tab.cols);
        Rational infeas = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] >= n + m) infeas += tab.rhs(i);
        }
        if (infeas > 0) {
            res.status = LpStatus::infeasible;
            return res;
        }
        // drive zero-valued artificials out of the basis where possible
        for (std::size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < n + m) continue;
            for (std::size_t j = 0; j < n + m; ++j) {
                if (tab.t[i][j] != 0) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
    }

    std::vector<Rational> obj(tab.cols, 0);
    for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
    if (!tab.run(obj, n + m)) {
        res.status = LpStatus::unbounded;
        return res;
    }
    res.status = LpStatus::optimal;
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.rhs(i);
    }
    res.value = 0;
    for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

} // namespace sgd
