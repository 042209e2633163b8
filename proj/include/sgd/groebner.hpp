#pragma once

// Multivariate division, S-polynomials, Buchberger's criterion and
// completion, and Groebner basis detection over term-order classes.

#include "sgd/orders.hpp"
#include "sgd/polyring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sgd {

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Division of f by G. The divisor used at each step is the first one in
/// list order whose leading monomial divides the current leading monomial.
DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> G, const TermOrder& ord);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

/// Buchberger's S-pair criterion.
bool is_groebner_basis(std::span<const Polynomial> G, const TermOrder& ord);

/// Reduced Groebner basis of <G>: monic, sorted by decreasing leading monomial.
std::vector<Polynomial> buchberger(std::span<const Polynomial> G, const TermOrder& ord);

struct DetectionOptions {
    unsigned jobs = 1;
};

/// Classes of extract_weight_vectors(G) for which G is a Groebner basis.
std::vector<OrderClass> weight_vectors_realizing_gb(std::span<const Polynomial> G,
                                                    const DetectionOptions& opts = {});

/// First class (in enumeration order) for which G is not a Groebner basis.
std::optional<OrderClass> universal_gb_counterexample(std::span<const Polynomial> G,
                                                      const DetectionOptions& opts = {});
bool is_universal_gb(std::span<const Polynomial> G, const DetectionOptions& opts = {});

} // namespace sgd
