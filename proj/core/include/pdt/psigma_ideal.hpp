#ifndef PDT_PSIGMA_IDEAL_HPP
#define PDT_PSIGMA_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pdt/lattice.hpp"
#include "pdt/semimodule.hpp"
#include "pdt/zx_matrix.hpp"

namespace pdt {

/// Y^e = prod y_i^(e_i) with every exponent in P[x].
class PSigmaMonomial {
 public:
  PSigmaMonomial() = default;
  explicit PSigmaMonomial(ZxVector exponents);

  const ZxVector& exponents() const noexcept { return exponents_; }
  std::size_t size() const noexcept { return exponents_.size(); }
  bool is_one() const { return is_zero(exponents_); }
  friend bool operator==(const PSigmaMonomial&, const PSigmaMonomial&) = default;

 private:
  ZxVector exponents_;
};

/// Y^plus - Y^minus.
struct Binomial {
  PSigmaMonomial plus;
  PSigmaMonomial minus;

  /// plus - minus.
  ZxVector exponent_difference() const;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Splits v into v+ (positive entries) and v- (negated negative entries).
Binomial binomial_from_vector(const ZxVector& v);

/// A binomial P[sigma]-ideal J_L, represented by its support lattice L and
/// one binomial per generator of L.
struct ToricIdealHandle {
  Lattice support;
  std::vector<Binomial> generators;
};

ToricIdealHandle binomials_from_lattice(const Lattice& l);
/// Support lattice Syz(U) for U given by its columns.
ToricIdealHandle toric_ideal_from_points(const ZxMatrix& u);
ToricIdealHandle toric_ideal_from_points(const std::vector<ZxVector>& points, std::size_t ambient);

bool binomial_member(const ToricIdealHandle& h, const Binomial& b);

struct HomogeneityResult {
  bool homogeneous = false;
  /// (v, g) with <u_i, v> = g for every point and g != 0, when found.
  std::optional<std::pair<ZxVector, ZxPoly>> witness;
};

HomogeneityResult is_homogeneous(const std::vector<ZxVector>& points, std::size_t ambient);
HomogeneityResult is_homogeneous(const ZxMatrix& u);

std::size_t sigma_dimension(const std::vector<ZxVector>& points, std::size_t ambient, bool projective);
std::size_t sigma_dimension(const ZxMatrix& u, bool projective);

/// The ideal of the invariant subvariety attached to a face: generated by
/// the coordinates y_j outside the face together with the toric binomials.
struct InvariantSubvariety {
  std::vector<std::size_t> vanishing_coordinates;
  /// Generators of the face; their characters generate k[F].
  std::vector<ZxVector> face_generators;
  ToricIdealHandle toric;
};

/// Throws NotAFace unless the face carries a valid witness or is_face
/// decides Yes within the bounds.
InvariantSubvariety invariant_subvariety_ideal(const AffineSemimodule& s, const Face& f,
                                               const Bounds& bounds);

}  // namespace pdt

#endif  // PDT_PSIGMA_IDEAL_HPP
