#include "sgd/ordered_poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace sgd {

OrderedPoly to_ordered(const Polynomial& f, const TermOrder& ord) {
    OrderedPoly p;
    p.reserve(f.size());
    for (const auto& [e, c] : f.terms()) p.push_back({e, c});
    std::sort(p.begin(), p.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.exponent, b.exponent); });
    return p;
}

Polynomial to_polynomial(std::span<const Term> p, const Ring& ring) {
    return Polynomial::from_terms(ring, p);
}

OrderedPoly sub_scaled(std::span<const Term> p, const Rational& c, const ExponentVector& shift,
                       std::span<const Term> q, const TermOrder& ord) {
    OrderedPoly out;
    out.reserve(p.size() + q.size());
    std::size_t i = 0, j = 0;
    ExponentVector qe;
    bool have_q = false;
    while (i < p.size() || j < q.size()) {
        if (j < q.size() && !have_q) {
            qe = q[j].exponent + shift;
            have_q = true;
        }
        if (j >= q.size()) {
            out.push_back(p[i++]);
            continue;
        }
        if (i >= p.size()) {
            out.push_back({qe, -c * q[j].coefficient});
            ++j;
            have_q = false;
            continue;
        }
        auto cmp = ord.compare(p[i].exponent, qe);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(p[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back({qe, -c * q[j].coefficient});
            ++j;
            have_q = false;
        } else {
            Rational v = p[i].coefficient - c * q[j].coefficient;
            if (v != 0) out.push_back({qe, v});
            ++i;
            ++j;
            have_q = false;
        }
    }
    return out;
}

OrderedPoly multiply(std::span<const Term> a, std::span<const Term> b, const TermOrder& ord) {
    std::unordered_map<ExponentVector, Rational, ExponentVectorHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& ta : a) {
        for (const auto& tb : b) acc[ta.exponent + tb.exponent] += ta.coefficient * tb.coefficient;
    }
    OrderedPoly out;
    out.reserve(acc.size());
    for (auto& [e, c] : acc) {
        if (c != 0) out.push_back({e, c});
    }
    std::sort(out.begin(), out.end(),
              [&](const Term& x, const Term& y) { return ord.greater(x.exponent, y.exponent); });
    return out;
}

void make_monic(OrderedPoly& p) {
    if (p.empty() || p.front().coefficient == 1) return;
    Rational inv = 1 / p.front().coefficient;
    for (auto& t : p) t.coefficient *= inv;
}

} // namespace sgd
