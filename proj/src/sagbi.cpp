#include "sgd/sagbi.hpp"

#include "sgd/ordered_poly.hpp"
#include "sgd/parallel.hpp"
#include "sgd/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sgd {
namespace {

void require_generators(std::span<const Polynomial> F) {
    if (F.empty()) throw std::invalid_argument("empty polynomial list");
    for (const auto& f : F) {
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in generator list");
        if (!same_ring(f.ring(), F.front().ring())) throw RingMismatch();
    }
}

// Products prod f_i^{v_i} in the ordered representation, with cached powers.
class ProductCache {
public:
    ProductCache(std::span<const Polynomial> F, const TermOrder& ord) : ord_(ord), n_(F.front().num_vars()) {
        powers_.reserve(F.size());
        for (const auto& f : F) powers_.push_back({one(), to_ordered(f, ord)});
    }

    const OrderedPoly& power(std::size_t i, int k) {
        auto& p = powers_[i];
        while (static_cast<int>(p.size()) <= k) p.push_back(multiply(p.back(), p[1], ord_));
        return p[k];
    }

    OrderedPoly product(std::span<const int> v) {
        OrderedPoly acc = one();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] > 0) acc = multiply(acc, power(i, v[i]), ord_);
        }
        return acc;
    }

    const Rational& lead_coefficient(std::size_t i) const { return powers_[i][1].front().coefficient; }

private:
    OrderedPoly one() const { return {Term{ExponentVector(n_), Rational(1)}}; }

    const TermOrder& ord_;
    std::size_t n_;
    std::vector<std::vector<OrderedPoly>> powers_;
};

void require_certified(std::span<const Polynomial> F, const OrderClass& cls) {
    if (leading_tuple(F, cls.order()) != cls.tuple) {
        throw std::invalid_argument("class weight does not select its leading tuple");
    }
}

// Subduction on the ordered representation; returns the remainder.
OrderedPoly subduce(OrderedPoly p, const ExponentMatrix& A, ProductCache& cache, const TermOrder& ord,
                    std::size_t max_steps, std::vector<SubductionStep>* steps) {
    const ExponentVector zero(A.rows());
    std::size_t count = 0;
    while (!p.empty()) {
        auto v = solve_monomial_membership(A, p.front().exponent);
        if (!v) break;
        if (count++ >= max_steps) throw SubductionLimitExceeded(max_steps);
        OrderedPoly prod = cache.product(*v);
        Rational c = p.front().coefficient / prod.front().coefficient;
        ExponentVector old = p.front().exponent;
        p = sub_scaled(std::span<const Term>(p).subspan(1), c, zero,
                       std::span<const Term>(prod).subspan(1), ord);
        if (!p.empty() && !ord.greater(old, p.front().exponent)) {
            throw std::logic_error("subduction step did not decrease the leading term");
        }
        if (steps) steps->push_back({c, std::move(*v)});
    }
    return p;
}

ExponentMatrix tuple_matrix(const LeadingTuple& t) { return ExponentMatrix(t); }

} // namespace

SubductionResult subduction(const Polynomial& f, std::span<const Polynomial> F, const TermOrder& ord,
                            std::size_t max_steps) {
    require_generators(F);
    if (!same_ring(f.ring(), F.front().ring())) throw RingMismatch();
    ExponentMatrix A(leading_tuple(F, ord));
    ProductCache cache(F, ord);
    SubductionResult res{Polynomial(f.ring()), {}};
    OrderedPoly rem = subduce(to_ordered(f, ord), A, cache, ord, max_steps, &res.steps);
    res.remainder = to_polynomial(rem, f.ring());
    return res;
}

bool is_sagbi_subduction(std::span<const Polynomial> F, const OrderClass& cls) {
    require_generators(F);
    require_certified(F, cls);
    const TermOrder ord = cls.order();
    ExponentMatrix A = tuple_matrix(cls.tuple);
    ProductCache cache(F, ord);
    for (const auto& bin : toric_ideal_generators(A)) {
        OrderedPoly pu = cache.product(bin.u);
        OrderedPoly pv = cache.product(bin.v);
        // scale the second product so that the leading terms cancel
        Rational c = pu.front().coefficient / pv.front().coefficient;
        const ExponentVector zero(A.rows());
        OrderedPoly spoly = sub_scaled(std::span<const Term>(pu).subspan(1), c, zero,
                                       std::span<const Term>(pv).subspan(1), ord);
        if (!subduce(std::move(spoly), A, cache, ord, default_subduction_cap, nullptr).empty()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Hilbert functions

std::vector<long> detect_grading(std::span<const Polynomial> F) {
    require_generators(F);
    const std::size_t n = F.front().num_vars();
    auto fits = [&](const std::vector<long>& g) {
        for (const auto& f : F) {
            if (!f.is_homogeneous(g)) return false;
            const auto& e = f.terms().begin()->first;
            long d = 0;
            for (std::size_t j = 0; j < n; ++j) d += g[j] * e[j];
            if (d <= 0) return false;
        }
        return true;
    };
    std::vector<long> total(n, 1);
    if (fits(total)) return total;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<long> single(n, 0);
        single[j] = 1;
        if (fits(single)) return single;
    }
    throw NonHomogeneousInput();
}

Integer hilbert_degree_bound(std::span<const Polynomial> F) {
    require_generators(F);
    long d = 0;
    for (const auto& f : F) d = std::max(d, f.total_degree());
    const unsigned long n = F.front().num_vars();
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(d), n + 1);
    return Integer(static_cast<long>(F.size() * F.size())) * pw;
}

std::optional<std::string> hilbert_bound_warning(std::span<const Polynomial> F, long cap) {
    Integer bound = hilbert_degree_bound(F);
    if (Integer(cap) >= bound) return std::nullopt;
    std::ostringstream os;
    os << "Hilbert functions compared only up to degree " << cap << "; the sufficient bound s^2*d^(n+1) is "
       << bound.get_str() << ", so results are inconclusive beyond degree " << cap;
    return os.str();
}

namespace {

long graded_degree(const ExponentVector& e, std::span<const long> grading) {
    long d = 0;
    for (std::size_t j = 0; j < e.size(); ++j) d += grading[j] * e[j];
    return d;
}

// Calls visit(v) for every v >= 0 with sum v_i deg_i == t.
template <class Visit>
void for_each_degree_vector(std::span<const long> deg, long t, Visit&& visit) {
    std::vector<int> v(deg.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, long left) -> void {
        if (i == deg.size()) {
            if (left == 0) visit(std::span<const int>(v));
            return;
        }
        for (long k = 0; k * deg[i] <= left; ++k) {
            v[i] = static_cast<int>(k);
            self(self, i + 1, left - k * deg[i]);
        }
        v[i] = 0;
    };
    rec(rec, 0, t);
}

long initial_count(const ExponentMatrix& A, std::span<const long> deg, long t) {
    std::set<ExponentVector> seen;
    for_each_degree_vector(deg, t, [&](std::span<const int> v) { seen.insert(A.apply(v)); });
    return static_cast<long>(seen.size());
}

long algebra_count(ProductCache& cache, std::span<const long> deg, long t, const TermOrder& ord,
                   std::size_t nvars) {
    std::map<ExponentVector, OrderedPoly> pivots;
    const ExponentVector zero(nvars);
    for_each_degree_vector(deg, t, [&](std::span<const int> v) {
        OrderedPoly p = cache.product(v);
        while (!p.empty()) {
            auto it = pivots.find(p.front().exponent);
            if (it == pivots.end()) {
                pivots.emplace(p.front().exponent, std::move(p));
                return;
            }
            Rational c = p.front().coefficient / it->second.front().coefficient;
            p = sub_scaled(std::span<const Term>(p).subspan(1), c, zero,
                           std::span<const Term>(it->second).subspan(1), ord);
        }
    });
    return static_cast<long>(pivots.size());
}

std::vector<long> tuple_degrees(const LeadingTuple& t, std::span<const long> grading) {
    std::vector<long> deg;
    deg.reserve(t.size());
    for (const auto& e : t) deg.push_back(graded_degree(e, grading));
    return deg;
}

long effective_bound(std::span<const Polynomial> F, long cap, bool& truncated) {
    Integer bound = hilbert_degree_bound(F);
    truncated = Integer(cap) < bound;
    return truncated ? cap : bound.get_si();
}

} // namespace

HilbertCheck sagbi_hilbert_check(std::span<const Polynomial> F, const OrderClass& cls, std::optional<long> cap) {
    require_certified(F, cls);
    const auto grading = detect_grading(F);
    const TermOrder ord = cls.order();
    ExponentMatrix A = tuple_matrix(cls.tuple);
    const auto deg = tuple_degrees(cls.tuple, grading);
    ProductCache cache(F, ord);

    HilbertCheck res;
    const long limit = effective_bound(F, cap.value_or(default_hilbert_cap), res.truncated);
    for (long t = 1; t <= limit; ++t) {
        long hi = initial_count(A, deg, t);
        long hs = algebra_count(cache, deg, t, ord, F.front().num_vars());
        res.initial_values.push_back(hi);
        res.algebra_values.push_back(hs);
        res.tested_up_to = t;
        if (hi != hs) {
            res.agrees = false;
            res.failure_degree = t;
            res.truncated = false;
            break;
        }
    }
    return res;
}

bool is_sagbi_hilbert(std::span<const Polynomial> F, const OrderClass& cls, std::optional<long> cap) {
    return sagbi_hilbert_check(F, cls, cap).agrees;
}

HilbertVector hilbert_vector(std::span<const Polynomial> F, const OrderClass& cls, long bound) {
    const auto grading = detect_grading(F);
    ExponentMatrix A = tuple_matrix(cls.tuple);
    const auto deg = tuple_degrees(cls.tuple, grading);
    HilbertVector hv;
    for (long t = 1; t <= bound; ++t) hv.values.push_back(initial_count(A, deg, t));
    return hv;
}

// ---------------------------------------------------------------------------
// Detection and ranking

bool is_sagbi(std::span<const Polynomial> F, const OrderClass& cls, const SagbiOptions& opts) {
    if (opts.method == SagbiMethod::hilbert) return is_sagbi_hilbert(F, cls, opts.hilbert_cap);
    return is_sagbi_subduction(F, cls);
}

namespace {

std::vector<char> check_all(std::span<const Polynomial> F, const std::vector<OrderClass>& classes,
                            const SagbiOptions& opts) {
    if (opts.method == SagbiMethod::hilbert) detect_grading(F);
    std::vector<char> pass(classes.size(), 0);
    parallel_for(classes.size(), opts.jobs,
                 [&](std::size_t i) { pass[i] = is_sagbi(F, classes[i], opts) ? 1 : 0; });
    return pass;
}

} // namespace

std::vector<OrderClass> weight_vectors_realizing_sagbi(std::span<const Polynomial> F, const SagbiOptions& opts) {
    auto classes = extract_weight_vectors(F);
    auto pass = check_all(F, classes, opts);
    std::vector<OrderClass> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (pass[i]) out.push_back(classes[i]);
    }
    return out;
}

std::optional<OrderClass> universal_sagbi_counterexample(std::span<const Polynomial> F,
                                                         const SagbiOptions& opts) {
    auto classes = extract_weight_vectors(F);
    auto pass = check_all(F, classes, opts);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!pass[i]) return classes[i];
    }
    return std::nullopt;
}

bool is_universal_sagbi(std::span<const Polynomial> F, const SagbiOptions& opts) {
    return !universal_sagbi_counterexample(F, opts).has_value();
}

std::vector<RankedGroup> rank_classes(std::span<const Polynomial> F, std::span<const OrderClass> classes,
                                      RankCriterion criterion, long hilbert_cap) {
    std::vector<RankedGroup> scored;
    scored.reserve(classes.size());
    if (criterion == RankCriterion::nicer) {
        for (const auto& c : classes) {
            LatticePolytope P{c.tuple};
            RankedGroup g;
            g.classes.push_back(c);
            g.dimension = polytope_dim(P);
            g.degree = normalized_volume(P);
            scored.push_back(std::move(g));
        }
    } else {
        bool truncated = false;
        const long bound = effective_bound(F, hilbert_cap, truncated);
        for (const auto& c : classes) {
            RankedGroup g;
            g.classes.push_back(c);
            g.hilbert = hilbert_vector(F, c, bound);
            scored.push_back(std::move(g));
        }
    }
    auto better = [&](const RankedGroup& a, const RankedGroup& b) {
        if (criterion == RankCriterion::nicer) {
            if (a.dimension != b.dimension) return a.dimension > b.dimension;
            return a.degree > b.degree;
        }
        return a.hilbert > b.hilbert;
    };
    std::stable_sort(scored.begin(), scored.end(), better);

    std::vector<RankedGroup> groups;
    for (auto& g : scored) {
        if (!groups.empty() && !better(groups.back(), g)) {
            groups.back().classes.push_back(std::move(g.classes.front()));
        } else {
            groups.push_back(std::move(g));
        }
    }
    return groups;
}

std::vector<RankedGroup> rank_orders(std::span<const Polynomial> F, RankCriterion criterion, long hilbert_cap) {
    auto classes = extract_weight_vectors(F);
    return rank_classes(F, classes, criterion, hilbert_cap);
}

} // namespace sgd
