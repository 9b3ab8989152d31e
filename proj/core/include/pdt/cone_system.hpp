#ifndef PDT_CONE_SYSTEM_HPP
#define PDT_CONE_SYSTEM_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pdt/rational_function.hpp"
#include "pdt/zx_matrix.hpp"

namespace pdt {

/// a . t + b >= 0, or > 0 when strict, for unknowns t over Q(x).
struct LinearConstraint {
  ZxVector a;
  ZxPoly b;
  bool strict = false;
};

struct ConeSystemResult {
  bool feasible = false;
  /// A point satisfying every constraint, when feasible.
  std::vector<RationalFunction> solution;
  /// When infeasible: y >= 0 with sum y_i a_i = 0 and either
  /// sum y_i b_i < 0, or sum y_i b_i = 0 with y_i > 0 on some strict row.
  ZxVector certificate;
};

/*
 * Fourier-Motzkin elimination over the ordered field Q(x), kept fraction
 * free in Z[x]. Every derived row remembers the nonnegative multipliers of
 * the input rows that produced it, so an infeasible system comes back
 * with a Farkas (or Gordan, for homogeneous systems) certificate. Feasible
 * systems are solved by back-substitution.
 */
ConeSystemResult solve_cone_system(const std::vector<LinearConstraint>& rows, std::size_t vars);

/// Exact check of an infeasibility certificate as described above.
bool verify_infeasibility(const std::vector<LinearConstraint>& rows, const ZxVector& y);

/// Exact check that t satisfies every row.
bool satisfies(const std::vector<LinearConstraint>& rows, const std::vector<RationalFunction>& t);

/// Clears denominators: returns the vector d * t in Z[x]^n for the least
/// positive common denominator d.
ZxVector clear_denominators(const std::vector<RationalFunction>& t);

/// Divides a nonzero vector by the positive gcd of its entries.
ZxVector primitive_vector(const ZxVector& v);

}  // namespace pdt

#endif  // PDT_CONE_SYSTEM_HPP
