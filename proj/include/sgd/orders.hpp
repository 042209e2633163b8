#pragma once

// Term-order equivalence classes of a finite polynomial set, and lattice
// polytope utilities used to rank them.

#include "sgd/polyring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sgd {

/// One chosen leading exponent per input polynomial.
using LeadingTuple = std::vector<ExponentVector>;

/// An equivalence class of weight orders: its leading tuple and an integer
/// weight that strictly selects every entry of the tuple.
struct OrderClass {
    LeadingTuple tuple;
    WeightVector weight;

    TermOrder order() const { return TermOrder(weight); }
    friend bool operator==(const OrderClass&, const OrderClass&) = default;
};

/// Finds a primitive nonnegative integer weight w with
/// <w, t_i - u> > 0 for every u in support(f_i) \ {t_i}, by maximizing the
/// smallest slack over the box [0,1]^n. Returns nothing if no such w exists.
std::optional<WeightVector> cone_feasibility(std::span<const Polynomial> F, const LeadingTuple& t);

/// Same cone, different certificate: minimizes objective.w subject to
/// <w, t_i - u> >= 1 and w >= 0. `objective` must be strictly positive.
std::optional<WeightVector> cone_feasibility(std::span<const Polynomial> F, const LeadingTuple& t,
                                             std::span<const long> objective);

/// All classes whose cone meets the nonnegative orthant, sorted by tuple.
/// Throws std::invalid_argument on empty input, zero polynomials or mixed rings.
std::vector<OrderClass> extract_weight_vectors(std::span<const Polynomial> F);

/// Leading tuple that `ord` selects on F.
LeadingTuple leading_tuple(std::span<const Polynomial> F, const TermOrder& ord);

/// Finite set of lattice points; the polytope is their convex hull.
struct LatticePolytope {
    std::vector<ExponentVector> points;
};

/// Dimension of the affine hull of the points.
long polytope_dim(const LatticePolytope& P);

/// d! * volume of the hull, measured in the affine lattice the points span
/// (d = polytope_dim). A single point has volume 1.
Integer normalized_volume(const LatticePolytope& P);

} // namespace sgd
