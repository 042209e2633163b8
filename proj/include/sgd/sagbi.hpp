#pragma once

// Subduction, SAGBI criteria (toric S-polynomials and Hilbert functions),
// SAGBI detection over term-order classes, and rankings of the classes.

#include "sgd/orders.hpp"
#include "sgd/polyring.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgd {

/// One subtraction c * prod f_i^{v_i}.
struct SubductionStep {
    Rational coefficient;
    std::vector<int> exponents;
};

struct SubductionResult {
    Polynomial remainder;
    std::vector<SubductionStep> steps;
};

class SubductionLimitExceeded : public std::runtime_error {
public:
    explicit SubductionLimitExceeded(std::size_t steps)
        : std::runtime_error("subduction exceeded " + std::to_string(steps) + " steps") {}
};

class NonHomogeneousInput : public std::invalid_argument {
public:
    NonHomogeneousInput()
        : std::invalid_argument("generators are not homogeneous for any supported grading") {}
};

inline constexpr std::size_t default_subduction_cap = 10000;
inline constexpr long default_hilbert_cap = 12;

/// Rewrites leading terms of f as products of leading terms of F until the
/// leading monomial leaves the monoid they generate, or f becomes 0.
SubductionResult subduction(const Polynomial& f, std::span<const Polynomial> F, const TermOrder& ord,
                            std::size_t max_steps = default_subduction_cap);

/// SAGBI test: every lifted generator of the toric ideal of leading
/// monomials subduces to 0.
bool is_sagbi_subduction(std::span<const Polynomial> F, const OrderClass& cls);

/// Per-variable degrees of a grading in which every f is homogeneous of
/// positive degree: total degree if possible, otherwise the degree in a
/// single variable (the grading variable added by homogenize_with_t).
/// Throws NonHomogeneousInput.
std::vector<long> detect_grading(std::span<const Polynomial> F);

/// Degree bound s^2 d^(n+1) up to which Hilbert functions must agree.
Integer hilbert_degree_bound(std::span<const Polynomial> F);

struct HilbertCheck {
    bool agrees = true;
    long tested_up_to = 0;
    bool truncated = false; ///< tested_up_to is below the theoretical bound
    std::optional<long> failure_degree;
    std::vector<long> initial_values; ///< h of K[in(F)], t = 1..tested_up_to
    std::vector<long> algebra_values; ///< h of K[F] up to the failure degree
};

/// Compares h_{K[F]}(t) and h_{K[in F]}(t) for t = 1..min(cap, bound).
HilbertCheck sagbi_hilbert_check(std::span<const Polynomial> F, const OrderClass& cls,
                                 std::optional<long> cap = std::nullopt);
bool is_sagbi_hilbert(std::span<const Polynomial> F, const OrderClass& cls,
                      std::optional<long> cap = std::nullopt);

/// Warning text when `cap` truncates the theoretical degree bound.
std::optional<std::string> hilbert_bound_warning(std::span<const Polynomial> F, long cap);

/// values[t-1] = h_{K[in_cls(F)]}(t) for t = 1..bound.
struct HilbertVector {
    std::vector<long> values;
    friend bool operator==(const HilbertVector&, const HilbertVector&) = default;
    friend auto operator<=>(const HilbertVector&, const HilbertVector&) = default;
};

HilbertVector hilbert_vector(std::span<const Polynomial> F, const OrderClass& cls, long bound);

enum class SagbiMethod { subduction, hilbert };

struct SagbiOptions {
    SagbiMethod method = SagbiMethod::subduction;
    long hilbert_cap = default_hilbert_cap;
    unsigned jobs = 1;
};

bool is_sagbi(std::span<const Polynomial> F, const OrderClass& cls, const SagbiOptions& opts);

std::vector<OrderClass> weight_vectors_realizing_sagbi(std::span<const Polynomial> F,
                                                       const SagbiOptions& opts = {});
std::optional<OrderClass> universal_sagbi_counterexample(std::span<const Polynomial> F,
                                                         const SagbiOptions& opts = {});
bool is_universal_sagbi(std::span<const Polynomial> F, const SagbiOptions& opts = {});

enum class RankCriterion { preferable, nicer };

/// Classes that tie under the ranking criterion.
struct RankedGroup {
    std::vector<OrderClass> classes;
    long dimension = 0;     ///< nicer
    Integer degree = 0;     ///< nicer
    HilbertVector hilbert;  ///< preferable
};

/// Classes grouped by criterion value, best group first. `hilbert_cap` is the
/// length of the compared Hilbert vectors for the preferable criterion.
std::vector<RankedGroup> rank_orders(std::span<const Polynomial> F, RankCriterion criterion,
                                     long hilbert_cap = default_hilbert_cap);
std::vector<RankedGroup> rank_classes(std::span<const Polynomial> F, std::span<const OrderClass> classes,
                                      RankCriterion criterion, long hilbert_cap = default_hilbert_cap);

} // namespace sgd
