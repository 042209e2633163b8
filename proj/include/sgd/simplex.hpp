#pragma once

// Exact two-phase simplex over the rationals (Bland's rule).

#include "sgd/polyring.hpp"

#include <vector>

namespace sgd {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<Rational> x;
    Rational value;
};

/// maximize c.x subject to A x <= b, x >= 0. Any sign of b is allowed.
LpResult maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

} // namespace sgd
