#ifndef PDT_MODULE_GROEBNER_HPP
#define PDT_MODULE_GROEBNER_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "pdt/zx_matrix.hpp"

namespace pdt {

/// Leading term of a nonzero vector under the position-over-term order:
/// the lowest coordinate index with a nonzero entry, then its top degree.
struct LeadTerm {
  std::size_t pos;
  long deg;
};

std::optional<LeadTerm> lead_term(const ZxVector& v);

/*
 * Strong Groebner basis of a submodule of Z[x]^dim.
 *
 * Coefficients live in the Euclidean ring Z, so completion uses both
 * S-vectors and gcd-vectors, and reduction replaces a coefficient c by its
 * nonnegative remainder modulo the leading coefficient of the reducer.
 * The stored basis is minimal (no leading term divides another), tail
 * reduced, and has positive leading coefficients; it depends only on the
 * input order of the generators.
 */
class StrongGroebnerBasis {
 public:
  static constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

  StrongGroebnerBasis() = default;
  StrongGroebnerBasis(const std::vector<ZxVector>& generators, std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ZxVector>& elements() const noexcept { return basis_; }

  struct Element {
    ZxVector v;
    std::size_t pos = 0;
    long deg = 0;
    Integer lc;
  };

  /// Normal form of v. Only coordinates with index < limit are reduced;
  /// reduction stops once the leading position reaches limit.
  ZxVector reduce(ZxVector v, std::size_t limit = kAll) const;

 private:
  std::size_t dim_ = 0;
  std::vector<ZxVector> basis_;
  std::vector<Element> indexed_;
};

}  // namespace pdt

#endif  // PDT_MODULE_GROEBNER_HPP
