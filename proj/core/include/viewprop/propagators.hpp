#pragma once

#include <cstdint>
#include <vector>

#include "viewprop/propagator.hpp"

namespace viewprop {

/*
 * The generic propagator catalog that seeds all derivations. Every
 * constructor states its completeness level; the oracle verifies each
 * declaration exhaustively on small universes.
 */

// bounds(Z) complete for max(x,y) = z.
PropagatorPtr max_ternary(VarId x, VarId y, VarId z);

// bounds(Z) complete for x1 + ... + xn = c (one interval round per call).
// Coefficients are not a separate propagator: use scale views.
PropagatorPtr linear_eq_unit(std::vector<VarId> xs, std::int64_t c);

// domain complete variant for n <= 3 (support filtering).
PropagatorPtr linear_eq_dom(std::vector<VarId> xs, std::int64_t c);

// domain complete for x1 + ... + xn != c.
PropagatorPtr linear_neq_unit(std::vector<VarId> xs, std::int64_t c);

// domain complete for x1 + ... + xn >= c over Booleans, watched-literal
// style counting. Use bool_neg views for the <= c transformation.
PropagatorPtr bool_card_geq(std::vector<VarId> xs, std::int64_t c);

// domain complete for x1 v ... v xn = y.
PropagatorPtr bool_or_n(std::vector<VarId> xs, VarId y);

// domain complete for (x <-> y) = z; xor derives via a negation view on z.
PropagatorPtr bool_eqv(VarId x, VarId y, VarId z);

// distinct(xs): domain complete by support search for n <= 6, fixed-value
// elimination (declared weak) otherwise.
PropagatorPtr distinct(std::vector<VarId> xs);

// domain complete for element(<c1..cn>, x) = y with 1-based index x.
PropagatorPtr element_vals(std::vector<std::int64_t> cs, VarId x, VarId y);

// bounds(R) complete for x * y = z, all domains strictly positive
// (UsageError otherwise); idempotent. Sign variants derive with minus views.
PropagatorPtr mult_ppp(VarId x, VarId y, VarId z);

// Interval-hull complete for x ∩ y = z; union derives via complement views.
PropagatorPtr set_intersect(VarId x, VarId y, VarId z);

// Interval-hull complete for x ⊆ y; membership derives via a singleton view.
PropagatorPtr subset(VarId x, VarId y);

// domain complete for (x = y) <-> b.
PropagatorPtr reified_eq(VarId x, VarId y, VarId b);

} // namespace viewprop
