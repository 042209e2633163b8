#pragma once

// Term lists kept sorted in decreasing order for one fixed TermOrder. This is
// the working representation of the division and subduction kernels.

#include "sgd/polyring.hpp"

#include <span>
#include <vector>

namespace sgd {

using OrderedPoly = std::vector<Term>;

OrderedPoly to_ordered(const Polynomial& f, const TermOrder& ord);
Polynomial to_polynomial(std::span<const Term> p, const Ring& ring);

/// p - c * x^shift * q. Terms of q are shifted, so order is preserved.
OrderedPoly sub_scaled(std::span<const Term> p, const Rational& c, const ExponentVector& shift,
                       std::span<const Term> q, const TermOrder& ord);

OrderedPoly multiply(std::span<const Term> a, std::span<const Term> b, const TermOrder& ord);

/// Divides by the leading coefficient.
void make_monic(OrderedPoly& p);

} // namespace sgd
