#include "sgd/groebner.hpp"

#include "sgd/ordered_poly.hpp"
#include "sgd/parallel.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace sgd {
namespace {

void require_nonzero(std::span<const Polynomial> G) {
    for (const auto& g : G) {
        if (g.is_zero()) throw std::invalid_argument("zero polynomial in generator list");
        if (!same_ring(g.ring(), G.front().ring())) throw RingMismatch();
    }
}

const OrderedPoly* find_divisor(const ExponentVector& e, const std::vector<OrderedPoly>& G,
                                std::size_t skip) {
    for (std::size_t k = 0; k < G.size(); ++k) {
        if (k == skip || G[k].empty()) continue;
        if (G[k].front().exponent.divides(e)) return &G[k];
    }
    return nullptr;
}

// Complete reduction; returns the remainder.
OrderedPoly reduce(OrderedPoly p, const std::vector<OrderedPoly>& G, const TermOrder& ord,
                   std::size_t skip = static_cast<std::size_t>(-1)) {
    OrderedPoly rem;
    std::size_t start = 0;
    while (start < p.size()) {
        const OrderedPoly* div = find_divisor(p[start].exponent, G, skip);
        if (div == nullptr) {
            rem.push_back(p[start++]);
            continue;
        }
        Rational c = p[start].coefficient / div->front().coefficient;
        ExponentVector shift = p[start].exponent - div->front().exponent;
        p = sub_scaled(std::span<const Term>(p).subspan(start + 1), c, shift,
                       std::span<const Term>(*div).subspan(1), ord);
        start = 0;
    }
    return rem;
}

OrderedPoly spoly(const OrderedPoly& f, const OrderedPoly& g, const TermOrder& ord) {
    const ExponentVector l = lcm(f.front().exponent, g.front().exponent);
    // (l/lt(f)) f - (l/lt(g)) g, scaled so that the leads cancel
    OrderedPoly a = sub_scaled({}, Rational(-1) / f.front().coefficient, l - f.front().exponent, f, ord);
    return sub_scaled(std::span<const Term>(a).subspan(1), 1 / g.front().coefficient,
                      l - g.front().exponent, std::span<const Term>(g).subspan(1), ord);
}

} // namespace

DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& ord) {
    require_nonzero(G);
    for (const auto& g : G) {
        if (!same_ring(g.ring(), f.ring())) throw RingMismatch();
    }
    std::vector<OrderedPoly> divisors;
    divisors.reserve(G.size());
    for (const auto& g : G) divisors.push_back(to_ordered(g, ord));

    DivisionResult res{std::vector<Polynomial>(G.size(), Polynomial(f.ring())), Polynomial(f.ring())};
    OrderedPoly p = to_ordered(f, ord);
    std::size_t start = 0;
    while (start < p.size()) {
        std::size_t k = 0;
        while (k < divisors.size() && !divisors[k].front().exponent.divides(p[start].exponent)) ++k;
        if (k == divisors.size()) {
            res.remainder.add_term(p[start].exponent, p[start].coefficient);
            ++start;
            continue;
        }
        Rational c = p[start].coefficient / divisors[k].front().coefficient;
        ExponentVector shift = p[start].exponent - divisors[k].front().exponent;
        res.quotients[k].add_term(shift, c);
        p = sub_scaled(std::span<const Term>(p).subspan(start + 1), c, shift,
                       std::span<const Term>(divisors[k]).subspan(1), ord);
        start = 0;
    }
    return res;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
    if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
    return to_polynomial(spoly(to_ordered(f, ord), to_ordered(g, ord), ord), f.ring());
}

bool is_groebner_basis(std::span<const Polynomial> G, const TermOrder& ord) {
    require_nonzero(G);
    std::vector<OrderedPoly> basis;
    basis.reserve(G.size());
    for (const auto& g : G) basis.push_back(to_ordered(g, ord));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            // coprime leading monomials: the S-polynomial always reduces to 0
            if (coprime(basis[i].front().exponent, basis[j].front().exponent)) continue;
            if (!reduce(spoly(basis[i], basis[j], ord), basis, ord).empty()) return false;
        }
    }
    return true;
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> G, const TermOrder& ord) {
    require_nonzero(G);
    std::vector<OrderedPoly> basis;
    for (const auto& g : G) {
        basis.push_back(to_ordered(g, ord));
        make_monic(basis.back());
    }

    // pair queue: (lcm degree, lcm, i, j)
    using Pair = std::tuple<long, ExponentVector, std::size_t, std::size_t>;
    std::set<Pair> queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        const auto& a = basis[i].front().exponent;
        const auto& b = basis[j].front().exponent;
        if (coprime(a, b)) return;
        ExponentVector l = lcm(a, b);
        long d = l.degree();
        queue.emplace(d, std::move(l), i, j);
    };
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
    }
    while (!queue.empty()) {
        auto [d, l, i, j] = *queue.begin();
        queue.erase(queue.begin());
        OrderedPoly r = reduce(spoly(basis[i], basis[j], ord), basis, ord);
        if (r.empty()) continue;
        make_monic(r);
        basis.push_back(std::move(r));
        const std::size_t k = basis.size() - 1;
        for (std::size_t m = 0; m < k; ++m) push_pair(m, k);
    }

    // minimal basis: drop elements whose lead is divisible by another lead
    std::vector<OrderedPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& e = basis[i].front().exponent;
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& f = basis[j].front().exponent;
            if (f.divides(e) && (f != e || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // interreduce tails
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        OrderedPoly tail(minimal[i].begin() + 1, minimal[i].end());
        OrderedPoly red = reduce(std::move(tail), minimal, ord, i);
        red.insert(red.begin(), minimal[i].front());
        minimal[i] = std::move(red);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
        return ord.greater(a.front().exponent, b.front().exponent);
    });

    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& p : minimal) out.push_back(to_polynomial(p, G.front().ring()));
    return out;
}

std::vector<OrderClass> weight_vectors_realizing_gb(std::span<const Polynomial> G,
                                                    const DetectionOptions& opts) {
    auto classes = extract_weight_vectors(G);
    std::vector<char> pass(classes.size(), 0);
    parallel_for(classes.size(), opts.jobs,
                 [&](std::size_t i) { pass[i] = is_groebner_basis(G, classes[i].order()) ? 1 : 0; });
    std::vector<OrderClass> out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (pass[i]) out.push_back(classes[i]);
    }
    return out;
}

std::optional<OrderClass> universal_gb_counterexample(std::span<const Polynomial> G,
                                                      const DetectionOptions& opts) {
    auto classes = extract_weight_vectors(G);
    std::vector<char> pass(classes.size(), 0);
    parallel_for(classes.size(), opts.jobs,
                 [&](std::size_t i) { pass[i] = is_groebner_basis(G, classes[i].order()) ? 1 : 0; });
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!pass[i]) return classes[i];
    }
    return std::nullopt;
}

bool is_universal_gb(std::span<const Polynomial> G, const DetectionOptions& opts) {
    return !universal_gb_counterexample(G, opts).has_value();
}

} // namespace sgd
