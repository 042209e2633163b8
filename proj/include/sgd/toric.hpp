#pragma once

// Toric ideals of monomial relations and nonnegative integer solutions of
// A v = b.

#include "sgd/polyring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sgd {

/// n x s matrix of nonnegative integers, stored by columns; column i is the
/// exponent vector of the i-th monomial.
class ExponentMatrix {
public:
    explicit ExponentMatrix(std::vector<ExponentVector> columns);

    std::size_t rows() const { return columns_.front().size(); }
    std::size_t cols() const { return columns_.size(); }
    const ExponentVector& column(std::size_t i) const { return columns_[i]; }
    const std::vector<ExponentVector>& columns() const { return columns_; }
    int operator()(std::size_t r, std::size_t c) const { return columns_[c][r]; }

    /// A * v.
    ExponentVector apply(std::span<const int> v) const;

private:
    std::vector<ExponentVector> columns_;
};

/// y^u - y^v with A u = A v, disjoint supports, u > v in graded lex.
struct ToricBinomial {
    std::vector<int> u;
    std::vector<int> v;
    friend bool operator==(const ToricBinomial&, const ToricBinomial&) = default;
    friend auto operator<=>(const ToricBinomial&, const ToricBinomial&) = default;
};

/// Graded-lex comparison of two y-exponent vectors.
bool graded_lex_greater(std::span<const int> a, std::span<const int> b);

/// Generating set of I_A, by eliminating x from <y_i - x^{a_i}>.
std::vector<ToricBinomial> toric_ideal_generators(const ExponentMatrix& A);

/// Some v >= 0 with A v = b, or nothing.
std::optional<std::vector<int>> solve_monomial_membership(const ExponentMatrix& A, const ExponentVector& b);

} // namespace sgd
