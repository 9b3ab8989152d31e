#ifndef PDT_FAN_HPP
#define PDT_FAN_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pdt/semimodule.hpp"

namespace pdt {

/// A finite collection of affine semimodules in one ambient Z[x]^n with
/// gluing elements u_ij (stored for i < j; u_ji = -u_ij).
class Fan {
 public:
  Fan() = default;
  Fan(std::vector<AffineSemimodule> cones, std::map<std::pair<std::size_t, std::size_t>, ZxVector> gluing);
  static Fan single(AffineSemimodule cone);

  std::size_t size() const noexcept { return cones_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<AffineSemimodule>& cones() const noexcept { return cones_; }
  const AffineSemimodule& cone(std::size_t i) const;
  /// Common difference lattice, taken from the first cone.
  const Lattice& md() const { return cone(0).md(); }
  std::size_t rank() const { return cones_.empty() ? 0 : cone(0).rank(); }

  std::optional<ZxVector> gluing(std::size_t i, std::size_t j) const;
  void set_gluing(std::size_t i, std::size_t j, ZxVector u);
  const std::map<std::pair<std::size_t, std::size_t>, ZxVector>& gluing_map() const noexcept {
    return gluing_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<AffineSemimodule> cones_;
  std::map<std::pair<std::size_t, std::size_t>, ZxVector> gluing_;
};

/// base + Z[x](v_1) + ... + Z[x](v_k).
class GluedSemimodule {
 public:
  GluedSemimodule(AffineSemimodule base, std::vector<ZxVector> free_part);

  const AffineSemimodule& base() const noexcept { return base_; }
  const std::vector<ZxVector>& free_part() const noexcept { return free_part_; }
  /// Base generators followed by the free part.
  const std::vector<ZxVector>& all_generators() const noexcept { return all_; }
  const std::vector<bool>& free_mask() const noexcept { return mask_; }
  const Lattice& md() const noexcept { return md_; }
  const Lattice& syz() const noexcept { return syz_; }

 private:
  AffineSemimodule base_;
  std::vector<ZxVector> free_part_;
  std::vector<ZxVector> all_;
  std::vector<bool> mask_;
  Lattice md_;
  Lattice syz_;
};

GluedSemimodule glued(const AffineSemimodule& s, const std::vector<ZxVector>& vs);
MemberResult glued_member(const GluedSemimodule& g, const ZxVector& w, const Bounds& bounds);

/// Every generator of a (and +-v for v in its free part) lies in b.
Verdict glued_contains(const GluedSemimodule& a, const GluedSemimodule& b, const Bounds& bounds);
Verdict glued_equal(const GluedSemimodule& a, const GluedSemimodule& b, const Bounds& bounds);

struct PairCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  ZxVector u;
  Verdict verdict;
};

struct TripleCheck {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  Verdict verdict;
};

struct FanCheck {
  Verdict verdict;
  bool same_md = false;
  std::vector<PairCheck> pairs;
  std::vector<TripleCheck> triples;
};

/// Condition (b) for a given u: u in S_i, -u in S_j, S_i + Z[x](-u) = S_j + Z[x](u).
Verdict check_gluing(const AffineSemimodule& si, const AffineSemimodule& sj, const ZxVector& u,
                     const Bounds& bounds);

/// Searches u among generators and generator differences, then among small
/// P[x]-combinations of the generators of si.
std::optional<ZxVector> find_gluing(const AffineSemimodule& si, const AffineSemimodule& sj,
                                    const Bounds& bounds);

/// Fills every missing gluing element by find_gluing; throws MissingGluing.
void complete_gluing(Fan& f, const Bounds& bounds);

/// Throws MissingGluing when a pair has no stored element and search fails.
FanCheck check_fan(const Fan& f, const Bounds& bounds);

/// Drops generators that are P[x]-combinations of the others (Yes only).
std::vector<ZxVector> minimal_generators(std::size_t ambient, std::vector<ZxVector> gens,
                                         const Bounds& bounds);

/// Cones P[x](U - u_i), gluing u_ij = u_j - u_i.
Fan projective_fan(const std::vector<ZxVector>& points, std::size_t ambient);
Fan projective_fan(const std::vector<ZxVector>& points, std::size_t ambient, const Bounds& bounds);

struct FaceMember {
  std::size_t cone = 0;
  Face face;
};

struct FaceClass {
  std::vector<FaceMember> members;
  std::size_t rank = 0;
  std::size_t corank = 0;
};

struct FaceClassification {
  std::vector<FaceClass> classes;  // ordered by first member (cone, indices)
  std::map<std::size_t, std::vector<std::size_t>> by_corank;
  std::vector<FaceEnumeration> cone_faces;
};

/// Throws UnresolvedFaces when any face verdict is undecided and
/// MissingGluing when a pair has no stored gluing element.
FaceClassification classify_faces(const Fan& f, const Bounds& bounds);

}  // namespace pdt

#endif  // PDT_FAN_HPP
