#ifndef PDT_SEMIMODULE_HPP
#define PDT_SEMIMODULE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pdt/lattice.hpp"
#include "pdt/verdict.hpp"
#include "pdt/zx_matrix.hpp"

namespace pdt {

/*
 * AffineSemimodule: S = P[x](U), all combinations sum g_i u_i of the
 * generators u_i in Z[x]^n with coefficients g_i in P[x].
 *
 * The Z[x]-span S^md and the syzygy lattice of U are computed once at
 * construction. Construction also rejects a generator that the bounded
 * solver proves to be a P[x]-combination of the others.
 */
class AffineSemimodule {
 public:
  AffineSemimodule(std::size_t ambient, std::vector<ZxVector> generators);
  AffineSemimodule(std::size_t ambient, std::vector<ZxVector> generators, const Bounds& check);

  /// Skips the redundancy check (used for internal reconstructions).
  static AffineSemimodule unchecked(std::size_t ambient, std::vector<ZxVector> generators);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<ZxVector>& generators() const noexcept { return generators_; }
  const ZxVector& generator(std::size_t i) const { return generators_.at(i); }
  const Lattice& md() const noexcept { return md_; }
  const Lattice& syz() const noexcept { return syz_; }
  std::size_t rank() const noexcept { return rank_; }
  /// n x m matrix with the generators as columns.
  ZxMatrix matrix() const;

  /// Z[x]-span of the generators with the given indices.
  Lattice sub_md(const std::vector<std::size_t>& indices) const;
  std::size_t sub_rank(const std::vector<std::size_t>& indices) const;

 private:
  struct Unchecked {};
  AffineSemimodule(Unchecked, std::size_t ambient, std::vector<ZxVector> generators);
  void check_minimal(const Bounds& bounds) const;

  std::size_t ambient_;
  std::vector<ZxVector> generators_;
  Lattice md_;
  Lattice syz_;
  std::size_t rank_;
};

struct MemberResult {
  Verdict verdict;
  /// Coefficients g with sum g_i u_i = w (Yes only).
  std::optional<ZxVector> coefficients;
  /// Nonnegative multipliers over the sign constraints proving that no
  /// Q(x) solution has the required signs (some No answers).
  std::optional<ZxVector> farkas;
};

/// Bounded P[x]-membership. Coefficients of generators whose index has
/// free[i] set range over all of Z[x]; the rest must lie in P[x].
MemberResult combination_member(const std::vector<ZxVector>& generators, std::size_t ambient,
                                 const Lattice& md, const Lattice& syz,
                                 const std::vector<bool>& free, const ZxVector& w,
                                 const Bounds& bounds);

MemberResult sm_member(const AffineSemimodule& s, const ZxVector& w, const Bounds& bounds);

/// A face given by generator indices (0-based, sorted). The witness holds
/// the values phi(u_i) of a separating functional: orthogonal to Syz(U),
/// zero on the face, positive on every other generator.
struct Face {
  std::vector<std::size_t> indices;
  std::optional<ZxVector> witness;
  std::size_t rank = 0;

  friend bool operator==(const Face& a, const Face& b) { return a.indices == b.indices; }
};

struct FaceResult {
  Verdict verdict;
  std::optional<ZxVector> witness;
  /// Gordan certificate when the positivity system is infeasible.
  std::optional<ZxVector> obstruction;
};

FaceResult is_face(const AffineSemimodule& s, std::vector<std::size_t> indices, const Bounds& bounds);

/// Exact check of a face witness.
bool verify_face_witness(const AffineSemimodule& s, const std::vector<std::size_t>& indices,
                         const ZxVector& witness);

struct FaceEnumeration {
  std::vector<Face> faces;  // Yes faces, sorted by index list
  std::vector<std::pair<std::vector<std::size_t>, Verdict>> unresolved;
  std::size_t no_count = 0;

  bool complete() const noexcept { return unresolved.empty(); }
};

FaceEnumeration enumerate_faces(const AffineSemimodule& s, const Bounds& bounds);

/// Faces of rank rank(S) - 1 / rank 1; throw UnresolvedFaces when the
/// enumeration left a subset undecided.
std::vector<Face> facets(const AffineSemimodule& s, const FaceEnumeration& faces);
std::vector<Face> edges(const AffineSemimodule& s, const FaceEnumeration& faces);
std::vector<Face> facets(const AffineSemimodule& s, const Bounds& bounds);
std::vector<Face> edges(const AffineSemimodule& s, const Bounds& bounds);

FaceResult is_pointed(const AffineSemimodule& s, const Bounds& bounds);
bool is_compact(const AffineSemimodule& s, const Bounds& bounds);

/// Values on the generators of the standard normal vector of a facet.
struct NormalVector {
  Face face;
  ZxVector values;
};

NormalVector standard_normal_vector(const AffineSemimodule& s, const Face& facet);

struct SmoothnessResult {
  Verdict verdict;
  std::vector<NormalVector> normals;
};

SmoothnessResult is_smooth_semimodule(const AffineSemimodule& s, const Bounds& bounds);

struct SaturationReport {
  Face face;
  bool violation = false;
  /// An element of saturate(F^md) in S^md outside F^md.
  std::optional<ZxVector> example;
};

std::vector<SaturationReport> face_saturation_check(const AffineSemimodule& s, const Bounds& bounds);

struct MorphismResult {
  Verdict verdict;
  /// Violated syzygy of the source generators (linearity failure).
  std::optional<ZxVector> violated_syzygy;
  /// P[x]-coefficients of each image over the target generators.
  std::vector<ZxVector> image_coefficients;
};

MorphismResult check_morphism(const AffineSemimodule& source, const AffineSemimodule& target,
                              const std::vector<ZxVector>& images, const Bounds& bounds);

}  // namespace pdt

#endif  // PDT_SEMIMODULE_HPP
