#include "pdt/semimodule.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "pdt/bounded_search.hpp"
#include "pdt/cone_system.hpp"
#include "pdt/error.hpp"

namespace pdt {

namespace {

std::string index_list(const std::vector<std::size_t>& idx) {
  std::string s = "{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(idx[k]);
  }
  return s + "}";
}

bool contains_index(const std::vector<std::size_t>& idx, std::size_t i) {
  return std::binary_search(idx.begin(), idx.end(), i);
}

// {phi in Z[x]^m : phi orthogonal to Syz(U), phi_i = 0 for i in indices}.
Lattice functional_space(const AffineSemimodule& s, const std::vector<std::size_t>& indices) {
  const std::size_t m = s.size();
  std::vector<ZxVector> rows = s.syz().generators();
  for (std::size_t i : indices) rows.push_back(unit_vector(m, i));
  return complement(Lattice(m, std::move(rows)));
}

bool positive_outside(const ZxVector& phi, const std::vector<std::size_t>& indices) {
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (!contains_index(indices, j) && order_sign(phi[j]) != OrderSign::Positive) return false;
  }
  return true;
}

bool signs_ok(const ZxVector& g, const std::vector<bool>& free) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!free[i] && !in_positive_cone(g[i])) return false;
  }
  return true;
}

}  // namespace

AffineSemimodule::AffineSemimodule(Unchecked, std::size_t ambient, std::vector<ZxVector> generators)
    : ambient_(ambient),
      generators_(std::move(generators)),
      md_(ambient_, generators_),
      syz_(syzygy_basis(generators_, ambient_)),
      rank_(md_.rank()) {}

AffineSemimodule AffineSemimodule::unchecked(std::size_t ambient, std::vector<ZxVector> generators) {
  return AffineSemimodule(Unchecked{}, ambient, std::move(generators));
}

AffineSemimodule::AffineSemimodule(std::size_t ambient, std::vector<ZxVector> generators)
    : AffineSemimodule(Unchecked{}, ambient, std::move(generators)) {
  check_minimal(default_bounds(generators_));
}

AffineSemimodule::AffineSemimodule(std::size_t ambient, std::vector<ZxVector> generators,
                                   const Bounds& check)
    : AffineSemimodule(Unchecked{}, ambient, std::move(generators)) {
  check_minimal(check);
}

void AffineSemimodule::check_minimal(const Bounds& bounds) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (is_zero(generators_[i])) {
      throw Error(ErrorKind::RedundantGenerator, "generator " + std::to_string(i) + " is zero");
    }
    std::vector<ZxVector> others;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (j != i) others.push_back(generators_[j]);
    }
    const auto rest = unchecked(ambient_, std::move(others));
    if (sm_member(rest, generators_[i], bounds).verdict.is_yes()) {
      throw Error(ErrorKind::RedundantGenerator,
                  "generator " + std::to_string(i) + " is a P[x]-combination of the others");
    }
  }
}

ZxMatrix AffineSemimodule::matrix() const { return ZxMatrix::from_columns(generators_, ambient_); }

Lattice AffineSemimodule::sub_md(const std::vector<std::size_t>& indices) const {
  std::vector<ZxVector> gens;
  for (std::size_t i : indices) gens.push_back(generators_.at(i));
  return Lattice(ambient_, std::move(gens));
}

std::size_t AffineSemimodule::sub_rank(const std::vector<std::size_t>& indices) const {
  if (indices.empty()) return 0;
  std::vector<ZxVector> gens;
  for (std::size_t i : indices) gens.push_back(generators_.at(i));
  return rank_qx(gens, ambient_);
}

MemberResult combination_member(const std::vector<ZxVector>& generators, std::size_t ambient,
                                 const Lattice& md, const Lattice& syz,
                                 const std::vector<bool>& free, const ZxVector& w,
                                 const Bounds& bounds) {
  if (w.size() != ambient) {
    throw Error(ErrorKind::DimensionMismatch, "query of length " + std::to_string(w.size()) +
                                                  " in Z[x]^" + std::to_string(ambient));
  }
  const std::size_t m = generators.size();
  MemberResult out;
  auto accept = [&](ZxVector g, std::string why) {
    if (combine(generators, g, ambient) != w) {
      throw Error(ErrorKind::InternalInconsistency, "membership certificate does not reproduce query");
    }
    out.verdict = Verdict::yes(std::move(why), bounds);
    out.coefficients = std::move(g);
    return out;
  };

  const auto cert = md.member(w);
  if (!cert) {
    out.verdict = Verdict::no("not in the Z[x]-span of the generators", bounds);
    return out;
  }
  const ZxVector& g0 = cert->coefficients;
  const std::vector<ZxVector>& params = syz.generators();
  const std::size_t r = params.size();

  if (r == 0) {
    if (!signs_ok(g0, free)) {
      out.verdict = Verdict::no("the unique Z[x] solution has a negative coefficient", bounds);
      return out;
    }
    if (within_bounds(g0, bounds)) return accept(g0, "unique solution");
    out.verdict = Verdict::unknown("unique solution lies outside the search bounds", bounds);
    return out;
  }

  // g = g0 + sum_j t_j s_j, with sign constraints on the non-free entries.
  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (free[i]) continue;
    LinearConstraint c;
    c.a.reserve(r);
    for (const auto& s : params) c.a.push_back(s[i]);
    c.b = g0[i];
    rows.push_back(std::move(c));
  }
  const ConeSystemResult cone = solve_cone_system(rows, r);
  if (!cone.feasible) {
    out.verdict = Verdict::no("sign constraints infeasible over Q(x) (Farkas certificate)", bounds);
    out.farkas = cone.certificate;
    return out;
  }

  auto candidate = [&](const ZxVector& t) {
    ZxVector g = g0;
    for (std::size_t j = 0; j < r; ++j) axpy(g, t[j], params[j]);
    return g;
  };
  bool integral = true;
  ZxVector t_star;
  for (const auto& v : cone.solution) {
    if (!v.den().is_one()) integral = false;
    t_star.push_back(v.num());
  }
  if (integral) {
    ZxVector g = candidate(t_star);
    if (signs_ok(g, free) && within_bounds(g, bounds)) return accept(std::move(g), "direct solution");
  }

  ZxVector found;
  const SearchOutcome search =
      enumerate_polynomial_vectors(r, bounds, kSearchCap, [&](const ZxVector& t) {
        ZxVector g = candidate(t);
        if (!signs_ok(g, free) || !within_bounds(g, bounds)) return false;
        found = std::move(g);
        return true;
      });
  if (search.found) return accept(std::move(found), "bounded search");
  out.verdict = Verdict::unknown(
      "no P[x] coefficients found after " + std::to_string(search.visited) + " candidates", bounds);
  return out;
}

MemberResult sm_member(const AffineSemimodule& s, const ZxVector& w, const Bounds& bounds) {
  return combination_member(s.generators(), s.ambient(), s.md(), s.syz(),
                            std::vector<bool>(s.size(), false), w, bounds);
}

bool verify_face_witness(const AffineSemimodule& s, const std::vector<std::size_t>& indices,
                         const ZxVector& witness) {
  if (witness.size() != s.size()) return false;
  for (const auto& z : s.syz().generators()) {
    if (!dot(witness, z).is_zero()) return false;
  }
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (contains_index(indices, i)) {
      if (!witness[i].is_zero()) return false;
    } else if (order_sign(witness[i]) != OrderSign::Positive) {
      return false;
    }
  }
  return true;
}

FaceResult is_face(const AffineSemimodule& s, std::vector<std::size_t> indices, const Bounds& bounds) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const std::size_t m = s.size();
  for (std::size_t i : indices) {
    if (i >= m) throw Error(ErrorKind::BadIndex, "generator index " + std::to_string(i));
  }
  FaceResult out;
  if (indices.size() == m) {
    out.verdict = Verdict::yes("the whole semimodule", bounds);
    out.witness = ZxVector(m);
    return out;
  }

  // A functional vanishing on the face vanishes on its Q(x)-span.
  const std::size_t face_rank = s.sub_rank(indices);
  for (std::size_t j = 0; j < m; ++j) {
    if (contains_index(indices, j)) continue;
    std::vector<std::size_t> with = indices;
    with.insert(std::upper_bound(with.begin(), with.end(), j), j);
    if (s.sub_rank(with) == face_rank) {
      out.verdict = Verdict::no("generator " + std::to_string(j) + " lies in the Q(x)-span of " +
                                    index_list(indices),
                                bounds);
      return out;
    }
  }

  const Lattice w = functional_space(s, indices);
  const std::vector<ZxVector>& basis = w.generators();
  if (basis.empty()) {
    out.verdict = Verdict::no("no functional vanishes on the face", bounds);
    return out;
  }

  auto accept_if_bounded = [&](ZxVector phi, const std::string& why) -> bool {
    phi = primitive_vector(phi);
    const auto c = w.member(phi);
    if (!c || !within_bounds(c->coefficients, bounds)) return false;
    if (!verify_face_witness(s, indices, phi)) {
      throw Error(ErrorKind::InternalInconsistency, "face witness failed verification");
    }
    out.verdict = Verdict::yes(why, bounds);
    out.witness = std::move(phi);
    return true;
  };

  if (basis.size() == 1) {
    const ZxVector& g = basis.front();
    bool all_pos = true;
    bool all_neg = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (contains_index(indices, j)) continue;
      const OrderSign sg = order_sign(g[j]);
      all_pos = all_pos && sg == OrderSign::Positive;
      all_neg = all_neg && sg == OrderSign::Negative;
    }
    if (!all_pos && !all_neg) {
      out.verdict = Verdict::no("the functionals vanishing on the face form a rank-1 module whose "
                                "generator has mixed signs",
                                bounds);
      return out;
    }
    if (accept_if_bounded(all_pos ? g : -g, "rank-1 functional module")) return out;
    out.verdict = Verdict::unknown("separating functional lies outside the search bounds", bounds);
    return out;
  }

  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < m; ++j) {
    if (contains_index(indices, j)) continue;
    LinearConstraint c;
    for (const auto& b : basis) c.a.push_back(b[j]);
    c.strict = true;
    rows.push_back(std::move(c));
  }
  const ConeSystemResult cone = solve_cone_system(rows, basis.size());
  if (!cone.feasible) {
    out.verdict = Verdict::no("no functional is positive off the face (Gordan certificate)", bounds);
    out.obstruction = cone.certificate;
    return out;
  }
  const ZxVector c = clear_denominators(cone.solution);
  if (accept_if_bounded(combine(basis, c, m), "separating functional")) return out;

  ZxVector found;
  const SearchOutcome search =
      enumerate_polynomial_vectors(basis.size(), bounds, kSearchCap, [&](const ZxVector& t) {
        ZxVector phi = combine(basis, t, m);
        if (!positive_outside(phi, indices)) return false;
        found = std::move(phi);
        return true;
      });
  if (search.found && verify_face_witness(s, indices, found)) {
    out.verdict = Verdict::yes("bounded search", bounds);
    out.witness = std::move(found);
    return out;
  }
  out.verdict = Verdict::unknown("no separating functional within the search bounds", bounds);
  return out;
}

FaceEnumeration enumerate_faces(const AffineSemimodule& s, const Bounds& bounds) {
  const std::size_t m = s.size();
  if (m > 20) throw Error(ErrorKind::DegenerateInput, "too many generators for face enumeration");
  FaceEnumeration out;
  std::vector<std::vector<std::size_t>> subsets;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::size_t{1} << i)) idx.push_back(i);
    }
    subsets.push_back(std::move(idx));
  }
  // Larger subsets first, so facets are found early.
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<std::pair<std::vector<std::size_t>, FaceResult>> results;
  for (const auto& idx : subsets) results.emplace_back(idx, is_face(s, idx, bounds));

  auto find = [&](const std::vector<std::size_t>& idx) -> FaceResult& {
    for (auto& [k, v] : results) {
      if (k == idx) return v;
    }
    throw Error(ErrorKind::InternalInconsistency, "missing subset");
  };

  // Faces are closed under intersection; witnesses add.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < results.size(); ++a) {
      if (!results[a].second.verdict.is_yes()) continue;
      for (std::size_t b = a + 1; b < results.size(); ++b) {
        if (!results[b].second.verdict.is_yes()) continue;
        std::vector<std::size_t> meet;
        std::set_intersection(results[a].first.begin(), results[a].first.end(),
                              results[b].first.begin(), results[b].first.end(),
                              std::back_inserter(meet));
        FaceResult& target = find(meet);
        if (target.verdict.is_yes()) continue;
        if (target.verdict.is_no()) {
          throw Error(ErrorKind::InternalInconsistency,
                      "intersection " + index_list(meet) + " of two faces rejected as a face");
        }
        ZxVector phi = primitive_vector(*results[a].second.witness + *results[b].second.witness);
        if (!verify_face_witness(s, meet, phi)) {
          throw Error(ErrorKind::InternalInconsistency, "sum of face witnesses failed verification");
        }
        target.verdict = Verdict::yes("intersection of faces " + index_list(results[a].first) +
                                          " and " + index_list(results[b].first),
                                      bounds);
        target.witness = std::move(phi);
        changed = true;
      }
    }
  }

  for (auto& [idx, res] : results) {
    switch (res.verdict.kind) {
      case VerdictKind::Yes:
        out.faces.push_back(Face{idx, res.witness, s.sub_rank(idx)});
        break;
      case VerdictKind::No:
        ++out.no_count;
        break;
      case VerdictKind::Unknown:
        out.unresolved.emplace_back(idx, res.verdict);
        break;
    }
  }
  std::sort(out.faces.begin(), out.faces.end(),
            [](const Face& a, const Face& b) { return a.indices < b.indices; });
  std::sort(out.unresolved.begin(), out.unresolved.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

void require_complete(const FaceEnumeration& faces) {
  if (faces.complete()) return;
  std::string names;
  for (const auto& [idx, v] : faces.unresolved) names += " " + index_list(idx);
  throw Error(ErrorKind::UnresolvedFaces, "undecided subsets:" + names);
}

std::vector<Face> faces_of_rank(const FaceEnumeration& faces, std::size_t rank) {
  require_complete(faces);
  std::vector<Face> out;
  for (const auto& f : faces.faces) {
    if (f.rank == rank) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<Face> facets(const AffineSemimodule& s, const FaceEnumeration& faces) {
  if (s.rank() == 0) return {};
  return faces_of_rank(faces, s.rank() - 1);
}

std::vector<Face> edges(const AffineSemimodule&, const FaceEnumeration& faces) {
  return faces_of_rank(faces, 1);
}

std::vector<Face> facets(const AffineSemimodule& s, const Bounds& bounds) {
  return facets(s, enumerate_faces(s, bounds));
}

std::vector<Face> edges(const AffineSemimodule& s, const Bounds& bounds) {
  return edges(s, enumerate_faces(s, bounds));
}

FaceResult is_pointed(const AffineSemimodule& s, const Bounds& bounds) { return is_face(s, {}, bounds); }

bool is_compact(const AffineSemimodule& s, const Bounds& bounds) {
  const auto fs = facets(s, bounds);
  if (fs.empty()) return s.rank() == 0;
  Lattice acc = s.sub_md(fs.front().indices);
  for (std::size_t k = 1; k < fs.size(); ++k) acc = intersect(acc, s.sub_md(fs[k].indices));
  return acc.rank() == 0;
}

NormalVector standard_normal_vector(const AffineSemimodule& s, const Face& facet) {
  std::vector<std::size_t> idx = facet.indices;
  std::sort(idx.begin(), idx.end());
  for (std::size_t i : idx) {
    if (i >= s.size()) throw Error(ErrorKind::BadIndex, "generator index " + std::to_string(i));
  }
  if (s.rank() == 0 || s.sub_rank(idx) + 1 != s.rank()) {
    throw Error(ErrorKind::NotAFacet, index_list(idx) + " does not have corank 1");
  }
  const Lattice v = functional_space(s, idx);
  if (v.generators().size() != 1) {
    throw Error(ErrorKind::RankMismatch, "functionals vanishing on " + index_list(idx) +
                                             " have rank " + std::to_string(v.generators().size()));
  }
  ZxVector phi = primitive_vector(v.generators().front());
  bool all_pos = true;
  bool all_neg = true;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (contains_index(idx, j)) continue;
    const OrderSign sg = order_sign(phi[j]);
    all_pos = all_pos && sg == OrderSign::Positive;
    all_neg = all_neg && sg == OrderSign::Negative;
  }
  if (!all_pos && !all_neg) {
    throw Error(ErrorKind::MixedSigns, "normal vector of " + index_list(idx) + " has mixed signs");
  }
  if (all_neg) phi = -phi;
  Face f = facet;
  f.indices = idx;
  return NormalVector{f, phi};
}

SmoothnessResult is_smooth_semimodule(const AffineSemimodule& s, const Bounds& bounds) {
  SmoothnessResult out;
  const auto fs = facets(s, bounds);
  std::vector<ZxVector> values;
  for (const auto& f : fs) {
    out.normals.push_back(standard_normal_vector(s, f));
    values.push_back(out.normals.back().values);
  }
  const Lattice n = complement(s.syz());
  const Lattice spanned(s.size(), values);
  if (!values.empty() && rank_qx(values, s.size()) != values.size()) {
    out.verdict = Verdict::no("facet normal vectors are linearly dependent", bounds);
    return out;
  }
  for (const auto& g : n.generators()) {
    if (!spanned.contains(g)) {
      out.verdict = Verdict::no("facet normal vectors do not generate the functional module", bounds);
      return out;
    }
  }
  out.verdict = Verdict::yes("facet normal vectors form a basis of the functional module", bounds);
  return out;
}

std::vector<SaturationReport> face_saturation_check(const AffineSemimodule& s, const Bounds& bounds) {
  const FaceEnumeration faces = enumerate_faces(s, bounds);
  require_complete(faces);
  std::vector<SaturationReport> out;
  for (const auto& f : faces.faces) {
    const Lattice fmd = s.sub_md(f.indices);
    const Lattice sat = intersect(saturate(fmd), s.md());
    SaturationReport rep{f, false, std::nullopt};
    for (const auto& g : sat.generators()) {
      if (!fmd.contains(g)) {
        rep.violation = true;
        rep.example = g;
        break;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

MorphismResult check_morphism(const AffineSemimodule& source, const AffineSemimodule& target,
                              const std::vector<ZxVector>& images, const Bounds& bounds) {
  if (images.size() != source.size()) {
    throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(source.size()) +
                                                  " images, got " + std::to_string(images.size()));
  }
  for (const auto& im : images) {
    if (im.size() != target.ambient()) throw Error(ErrorKind::DimensionMismatch, "image length");
  }
  MorphismResult out;
  for (const auto& z : source.syz().generators()) {
    if (!is_zero(combine(images, z, target.ambient()))) {
      out.verdict = Verdict::no("images violate a syzygy of the source generators", bounds);
      out.violated_syzygy = z;
      return out;
    }
  }
  bool unknown = false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const MemberResult r = sm_member(target, images[i], bounds);
    if (r.verdict.is_no()) {
      out.verdict = Verdict::no("image of generator " + std::to_string(i) +
                                    " is not in the target: " + r.verdict.reason,
                                bounds);
      out.image_coefficients.clear();
      return out;
    }
    if (r.verdict.is_unknown()) unknown = true;
    out.image_coefficients.push_back(r.coefficients.value_or(ZxVector{}));
  }
  if (unknown) {
    out.verdict = Verdict::unknown("some image could not be placed in the target", bounds);
    out.image_coefficients.clear();
    return out;
  }
  out.verdict = Verdict::yes("linear on syzygies and every image lies in the target", bounds);
  return out;
}

}  // namespace pdt
