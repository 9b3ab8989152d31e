#ifndef PDT_LATTICE_HPP
#define PDT_LATTICE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pdt/module_groebner.hpp"
#include "pdt/zx_matrix.hpp"

namespace pdt {

/// Coefficients c with sum_i c_i * generator_i equal to the query.
struct MembershipCertificate {
  ZxVector coefficients;
};

/*
 * Lattice: a finitely generated Z[x]-submodule of Z[x]^n.
 *
 * Construction computes a strong Groebner basis of the augmented vectors
 * (u_i | e_i) in Z[x]^(n+k). Basis elements leading in the first n
 * coordinates form a basis of the lattice with tracked cofactors, which
 * gives membership certificates; the remaining ones span the relations
 * among the generators.
 */
class Lattice {
 public:
  explicit Lattice(std::size_t ambient = 0);
  Lattice(std::size_t ambient, std::vector<ZxVector> generators);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<ZxVector>& generators() const noexcept { return generators_; }
  /// Groebner basis of the lattice itself (cofactor columns stripped).
  std::vector<ZxVector> groebner_basis() const;
  /// Generators of {c : sum c_i u_i = 0}, straight from the augmented basis.
  std::vector<ZxVector> generator_relations() const;

  std::size_t rank() const;
  bool is_zero() const;

  std::optional<MembershipCertificate> member(const ZxVector& v) const;
  bool contains(const ZxVector& v) const { return member(v).has_value(); }

  /// Drops zero generators and, greedily in order, every generator that is
  /// a Z[x]-combination of the remaining ones.
  Lattice minimalized() const;

 private:
  std::size_t ambient_;
  std::vector<ZxVector> generators_;
  StrongGroebnerBasis augmented_;
};

/// For a lattice known to be free of the given rank: minimalizes, then
/// merges generator pairs through relations with comaximal coefficients
/// until the count matches. May stop early; callers check the count.
Lattice free_basis(const Lattice& l, std::size_t expected_rank);

/// Kernel of U (generators are the columns of U), as a free lattice in
/// Z[x]^cols. Throws InternalInconsistency if no basis of the predicted
/// size cols - rank(U) is found.
Lattice syzygy_basis(const ZxMatrix& u);
/// Same with the columns given as a list of vectors of length rows.
Lattice syzygy_basis(const std::vector<ZxVector>& columns, std::size_t rows);

/// {phi : <phi, v> = 0 for all v in L}.
Lattice complement(const Lattice& l);
bool lattice_equal(const Lattice& a, const Lattice& b);
/// a contained in b.
bool lattice_subset(const Lattice& a, const Lattice& b);
Lattice intersect(const Lattice& a, const Lattice& b);
Lattice saturate(const Lattice& l);
bool is_toric(const Lattice& l);

}  // namespace pdt

#endif  // PDT_LATTICE_HPP
