#ifndef PDT_BOUNDED_SEARCH_HPP
#define PDT_BOUNDED_SEARCH_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "pdt/verdict.hpp"
#include "pdt/zx_matrix.hpp"

namespace pdt {

/// Upper limit on candidates tried by a single bounded search.
inline constexpr std::size_t kSearchCap = 200000;

struct SearchOutcome {
  bool found = false;
  /// True when the whole box was enumerated (so "not found" is exhaustive).
  bool complete = false;
  std::size_t visited = 0;
};

/// Visits integer vectors of length n with entries in [-box, box] in order
/// of increasing L1 norm, stopping at the first one `visit` accepts or after
/// `cap` candidates.
SearchOutcome enumerate_by_weight(std::size_t n, long box, std::size_t cap,
                                  const std::function<bool(const std::vector<long>&)>& visit);

/// Same over vectors of `count` polynomials of degree <= bounds.max_deg.
SearchOutcome enumerate_polynomial_vectors(std::size_t count, const Bounds& bounds, std::size_t cap,
                                           const std::function<bool(const ZxVector&)>& visit);

bool within_bounds(const ZxPoly& f, const Bounds& bounds);
bool within_bounds(const ZxVector& v, const Bounds& bounds);

/// max(2, 2 * largest entry degree) and box 12.
Bounds default_bounds(const std::vector<ZxVector>& generators);

}  // namespace pdt

#endif  // PDT_BOUNDED_SEARCH_HPP
