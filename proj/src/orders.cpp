#include "sgd/orders.hpp"

#include "sgd/simplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sgd {
namespace {

using Row = std::vector<long>;

void require_generators(std::span<const Polynomial> F) {
    if (F.empty()) throw std::invalid_argument("empty polynomial list");
    for (const auto& f : F) {
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in generator list");
        if (!same_ring(f.ring(), F.front().ring())) throw RingMismatch();
    }
}

// Rows t_i - u for u in support(f_i) \ {t_i}.
void append_selection_rows(const Polynomial& f, const ExponentVector& lead, std::vector<Row>& rows) {
    for (const auto& [u, c] : f.terms()) {
        if (u == lead) continue;
        Row d(lead.size());
        for (std::size_t j = 0; j < lead.size(); ++j) d[j] = lead[j] - u[j];
        rows.push_back(std::move(d));
    }
}

std::vector<Row> selection_rows(std::span<const Polynomial> F, const LeadingTuple& t) {
    if (t.size() != F.size()) throw std::invalid_argument("leading tuple length mismatch");
    std::vector<Row> rows;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i].coefficient(t[i]) == 0) throw std::invalid_argument("leading tuple entry not in support");
        append_selection_rows(F[i], t[i], rows);
    }
    return rows;
}

WeightVector to_weight(std::span<const Rational> w, std::size_t n) {
    Integer den = 1;
    for (std::size_t j = 0; j < n; ++j) {
        Integer d = w[j].get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> ints(n);
    Integer g = 0;
    for (std::size_t j = 0; j < n; ++j) {
        ints[j] = w[j].get_num() * (den / w[j].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[j].get_mpz_t());
    }
    if (g == 0) return WeightVector(std::vector<long>(n, 1));
    std::vector<long> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        Integer v = ints[j] / g;
        if (!v.fits_slong_p()) throw std::overflow_error("weight entry exceeds 64 bits");
        out[j] = v.get_si();
    }
    return WeightVector(std::move(out));
}

// Max-slack LP; returns the weight if the slack is positive.
std::optional<WeightVector> max_slack(const std::vector<Row>& rows, std::size_t n) {
    if (rows.empty()) return WeightVector(std::vector<long>(n, 1));
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    A.reserve(rows.size() + n + 1);
    for (const auto& d : rows) {
        std::vector<Rational> a(n + 1);
        for (std::size_t j = 0; j < n; ++j) a[j] = -d[j];
        a[n] = 1;
        A.push_back(std::move(a));
        b.emplace_back(0);
    }
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Rational> a(n + 1);
        a[j] = 1;
        A.push_back(std::move(a));
        b.emplace_back(1);
    }
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    LpResult r = maximize(A, b, c);
    if (r.status != LpStatus::optimal || r.value <= 0) return std::nullopt;
    return to_weight(r.x, n);
}

} // namespace

std::optional<WeightVector> cone_feasibility(std::span<const Polynomial> F, const LeadingTuple& t) {
    require_generators(F);
    return max_slack(selection_rows(F, t), F.front().num_vars());
}

std::optional<WeightVector> cone_feasibility(std::span<const Polynomial> F, const LeadingTuple& t,
                                             std::span<const long> objective) {
    require_generators(F);
    const std::size_t n = F.front().num_vars();
    if (objective.size() != n) throw std::invalid_argument("objective length mismatch");
    for (long v : objective) {
        if (v <= 0) throw std::invalid_argument("objective must be strictly positive");
    }
    auto rows = selection_rows(F, t);
    if (rows.empty()) return WeightVector(std::vector<long>(n, 1));
    // minimize objective.w  <=>  maximize -objective.w ;  -d.w <= -1
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (const auto& d : rows) {
        std::vector<Rational> a(n);
        for (std::size_t j = 0; j < n; ++j) a[j] = -d[j];
        A.push_back(std::move(a));
        b.emplace_back(-1);
    }
    std::vector<Rational> c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = -objective[j];
    LpResult r = maximize(A, b, c);
    if (r.status != LpStatus::optimal) return std::nullopt;
    return to_weight(r.x, n);
}

LeadingTuple leading_tuple(std::span<const Polynomial> F, const TermOrder& ord) {
    LeadingTuple t;
    t.reserve(F.size());
    for (const auto& f : F) t.push_back(initial_term(f, ord).exponent);
    return t;
}

std::vector<OrderClass> extract_weight_vectors(std::span<const Polynomial> F) {
    require_generators(F);
    const std::size_t n = F.front().num_vars();
    const std::size_t s = F.size();

    // Per-polynomial choices that are strictly maximal for some w >= 0.
    std::vector<std::vector<ExponentVector>> viable(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& [e, c] : F[i].terms()) {
            std::vector<Row> rows;
            append_selection_rows(F[i], e, rows);
            if (max_slack(rows, n)) viable[i].push_back(e);
        }
    }

    std::vector<OrderClass> out;
    LeadingTuple tuple(s);
    std::vector<Row> rows;
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        for (const auto& e : viable[i]) {
            const std::size_t mark = rows.size();
            append_selection_rows(F[i], e, rows);
            tuple[i] = e;
            if (auto w = max_slack(rows, n)) {
                if (i + 1 == s) {
                    out.push_back({tuple, *w});
                } else {
                    self(self, i + 1);
                }
            }
            rows.resize(mark);
        }
    };
    dfs(dfs, 0);

    std::sort(out.begin(), out.end(),
              [](const OrderClass& a, const OrderClass& b) { return a.tuple < b.tuple; });
    return out;
}

// ---------------------------------------------------------------------------
// Lattice polytopes

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

long rational_rank(std::vector<std::vector<Rational>> m) {
    long rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < static_cast<long>(m.size()); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Integer row echelon form (unimodular row operations); returns nonzero rows
// and their pivot columns. The rows form a basis of the row lattice.
IntMatrix lattice_basis(IntMatrix m, std::vector<std::size_t>& pivots) {
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    std::size_t top = 0;
    pivots.clear();
    for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
        for (;;) {
            // smallest nonzero |entry| in column c at or below top
            std::size_t p = m.size();
            for (std::size_t r = top; r < m.size(); ++r) {
                if (m[r][c] != 0 && (p == m.size() || abs(m[r][c]) < abs(m[p][c]))) p = r;
            }
            if (p == m.size()) break;
            std::swap(m[p], m[top]);
            bool clean = true;
            for (std::size_t r = top + 1; r < m.size(); ++r) {
                if (m[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[top][c].get_mpz_t());
                for (std::size_t j = c; j < cols; ++j) m[r][j] -= q * m[top][j];
                if (m[r][c] != 0) clean = false;
            }
            if (clean) {
                pivots.push_back(c);
                ++top;
                break;
            }
        }
    }
    m.resize(top);
    return m;
}

Integer det(IntMatrix m) {
    // Bareiss fraction-free elimination
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

using Point = std::vector<Integer>;

// det of (v_1 - v_0, ..., v_d - v_0)
Integer simplex_det(const std::vector<Point>& pts, std::span<const std::size_t> idx) {
    const std::size_t d = idx.size() - 1;
    IntMatrix m(d, std::vector<Integer>(d));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) m[r][c] = pts[idx[r + 1]][c] - pts[idx[0]][c];
    }
    return det(std::move(m));
}

int sgn(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Placing triangulation of full-dimensional points in Z^d; returns the sum
// of |det| over its simplices.
Integer placing_volume(const std::vector<Point>& pts, std::size_t d) {
    // initial full-dimensional simplex
    std::vector<std::size_t> base{0};
    std::vector<bool> used(pts.size(), false);
    used[0] = true;
    for (std::size_t i = 1; i < pts.size() && base.size() < d + 1; ++i) {
        std::vector<std::vector<Rational>> m;
        for (std::size_t k = 1; k < base.size(); ++k) {
            std::vector<Rational> row(d);
            for (std::size_t c = 0; c < d; ++c) row[c] = pts[base[k]][c] - pts[base[0]][c];
            m.push_back(std::move(row));
        }
        std::vector<Rational> row(d);
        for (std::size_t c = 0; c < d; ++c) row[c] = pts[i][c] - pts[base[0]][c];
        m.push_back(std::move(row));
        if (rational_rank(m) == static_cast<long>(base.size())) {
            base.push_back(i);
            used[i] = true;
        }
    }
    std::vector<std::vector<std::size_t>> simplices{base};

    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (used[p]) continue;
        // boundary facets: facets belonging to exactly one simplex
        std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> facets;
        for (const auto& s : simplices) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<std::size_t> f;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    if (k != drop) f.push_back(s[k]);
                }
                std::sort(f.begin(), f.end());
                auto& slot = facets[f];
                slot.first += 1;
                slot.second = s[drop];
            }
        }
        std::vector<std::vector<std::size_t>> added;
        for (const auto& [f, info] : facets) {
            if (info.first != 1) continue;
            std::vector<std::size_t> with_p = f, with_o = f;
            with_p.push_back(p);
            with_o.push_back(info.second);
            int sp = sgn(simplex_det(pts, with_p));
            int so = sgn(simplex_det(pts, with_o));
            if (sp != 0 && sp != so) added.push_back(with_p);
        }
        simplices.insert(simplices.end(), added.begin(), added.end());
    }

    Integer total = 0;
    for (const auto& s : simplices) total += abs(simplex_det(pts, s));
    return total;
}

} // namespace

long polytope_dim(const LatticePolytope& P) {
    if (P.points.empty()) throw std::invalid_argument("empty polytope");
    const auto& p0 = P.points.front();
    std::vector<std::vector<Rational>> m;
    for (std::size_t i = 1; i < P.points.size(); ++i) {
        std::vector<Rational> row(p0.size());
        for (std::size_t c = 0; c < p0.size(); ++c) row[c] = P.points[i][c] - p0[c];
        m.push_back(std::move(row));
    }
    return rational_rank(std::move(m));
}

Integer normalized_volume(const LatticePolytope& P) {
    if (P.points.empty()) throw std::invalid_argument("empty polytope");
    const auto& p0 = P.points.front();
    const std::size_t n = p0.size();
    IntMatrix diffs;
    for (const auto& p : P.points) {
        std::vector<Integer> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = p[c] - p0[c];
        diffs.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    IntMatrix basis = lattice_basis(diffs, pivots);
    const std::size_t d = basis.size();
    if (d == 0) return 1;

    // coordinates of every translated point in the lattice basis
    std::vector<Point> coords;
    coords.reserve(diffs.size());
    for (const auto& q : diffs) {
        std::vector<Integer> rest = q;
        Point c(d);
        for (std::size_t k = 0; k < d; ++k) {
            c[k] = rest[pivots[k]] / basis[k][pivots[k]];
            for (std::size_t j = 0; j < n; ++j) rest[j] -= c[k] * basis[k][j];
        }
        coords.push_back(std::move(c));
    }
    return placing_volume(coords, d);
}

} // namespace sgd
