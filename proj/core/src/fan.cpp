#include "pdt/fan.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pdt/bounded_search.hpp"
#include "pdt/error.hpp"

namespace pdt {

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_ambient(const ZxVector& v, std::size_t n) {
  if (v.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in Z[x]^" + std::to_string(n));
  }
}

}  // namespace

Fan::Fan(std::vector<AffineSemimodule> cones,
         std::map<std::pair<std::size_t, std::size_t>, ZxVector> gluing)
    : cones_(std::move(cones)) {
  if (cones_.empty()) throw Error(ErrorKind::DegenerateInput, "a fan needs at least one cone");
  ambient_ = cones_.front().ambient();
  for (const auto& c : cones_) {
    if (c.ambient() != ambient_) throw Error(ErrorKind::DimensionMismatch, "cones in different ambients");
  }
  for (auto& [key, u] : gluing) set_gluing(key.first, key.second, std::move(u));
}

Fan Fan::single(AffineSemimodule cone) {
  std::vector<AffineSemimodule> cones;
  cones.push_back(std::move(cone));
  return Fan(std::move(cones), {});
}

const AffineSemimodule& Fan::cone(std::size_t i) const {
  if (i >= cones_.size()) throw Error(ErrorKind::BadIndex, "cone index " + std::to_string(i));
  return cones_[i];
}

std::optional<ZxVector> Fan::gluing(std::size_t i, std::size_t j) const {
  if (i == j) return ZxVector(ambient_);
  const auto it = gluing_.find({std::min(i, j), std::max(i, j)});
  if (it == gluing_.end()) return std::nullopt;
  return i < j ? it->second : -it->second;
}

void Fan::set_gluing(std::size_t i, std::size_t j, ZxVector u) {
  if (i >= cones_.size() || j >= cones_.size() || i == j) {
    throw Error(ErrorKind::BadIndex, "gluing pair " + pair_name(i, j));
  }
  check_ambient(u, ambient_);
  if (i < j) {
    gluing_[{i, j}] = std::move(u);
  } else {
    gluing_[{j, i}] = -u;
  }
}

GluedSemimodule::GluedSemimodule(AffineSemimodule base, std::vector<ZxVector> free_part)
    : base_(std::move(base)), free_part_(std::move(free_part)) {
  for (const auto& v : free_part_) check_ambient(v, base_.ambient());
  all_ = base_.generators();
  all_.insert(all_.end(), free_part_.begin(), free_part_.end());
  mask_.assign(base_.size(), false);
  mask_.resize(all_.size(), true);
  md_ = Lattice(base_.ambient(), all_);
  syz_ = syzygy_basis(all_, base_.ambient());
}

GluedSemimodule glued(const AffineSemimodule& s, const std::vector<ZxVector>& vs) {
  return GluedSemimodule(s, vs);
}

MemberResult glued_member(const GluedSemimodule& g, const ZxVector& w, const Bounds& bounds) {
  return combination_member(g.all_generators(), g.base().ambient(), g.md(), g.syz(), g.free_mask(), w,
                            bounds);
}

Verdict glued_contains(const GluedSemimodule& a, const GluedSemimodule& b, const Bounds& bounds) {
  Verdict acc = Verdict::yes("every generator is a member", bounds);
  for (const auto& u : a.base().generators()) {
    acc = meet(acc, glued_member(b, u, bounds).verdict);
    if (acc.is_no()) return acc;
  }
  for (const auto& v : a.free_part()) {
    acc = meet(acc, glued_member(b, v, bounds).verdict);
    acc = meet(acc, glued_member(b, -v, bounds).verdict);
    if (acc.is_no()) return acc;
  }
  return acc;
}

Verdict glued_equal(const GluedSemimodule& a, const GluedSemimodule& b, const Bounds& bounds) {
  const Verdict ab = glued_contains(a, b, bounds);
  if (ab.is_no()) return ab;
  return meet(ab, glued_contains(b, a, bounds));
}

Verdict check_gluing(const AffineSemimodule& si, const AffineSemimodule& sj, const ZxVector& u,
                     const Bounds& bounds) {
  Verdict v = sm_member(si, u, bounds).verdict;
  if (v.is_no()) return Verdict::no("gluing element is not in the first cone", bounds);
  v = meet(v, sm_member(sj, -u, bounds).verdict);
  if (v.is_no()) return Verdict::no("negated gluing element is not in the second cone", bounds);
  v = meet(v, glued_equal(glued(si, {-u}), glued(sj, {u}), bounds));
  if (v.is_yes()) return Verdict::yes("glued semimodules coincide", bounds);
  return v;
}

std::optional<ZxVector> find_gluing(const AffineSemimodule& si, const AffineSemimodule& sj,
                                    const Bounds& bounds) {
  std::vector<ZxVector> candidates;
  for (const auto& a : si.generators()) candidates.push_back(a);
  for (const auto& b : sj.generators()) candidates.push_back(-b);
  for (const auto& a : si.generators()) {
    for (const auto& b : sj.generators()) candidates.push_back(a - b);
  }
  for (const auto& u : candidates) {
    if (check_gluing(si, sj, u, bounds).is_yes()) return u;
  }
  std::optional<ZxVector> found;
  enumerate_polynomial_vectors(si.size(), Bounds{0, 2}, 4096, [&](const ZxVector& g) {
    for (const auto& c : g) {
      if (order_sign(c) == OrderSign::Negative) return false;
    }
    const ZxVector u = combine(si.generators(), g, si.ambient());
    if (is_zero(u) || !check_gluing(si, sj, u, bounds).is_yes()) return false;
    found = u;
    return true;
  });
  return found;
}

void complete_gluing(Fan& f, const Bounds& bounds) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (f.gluing(i, j)) continue;
      auto u = find_gluing(f.cone(i), f.cone(j), bounds);
      if (!u) throw Error(ErrorKind::MissingGluing, "no gluing element found for " + pair_name(i, j));
      f.set_gluing(i, j, std::move(*u));
    }
  }
}

FanCheck check_fan(const Fan& f, const Bounds& bounds) {
  FanCheck out;
  out.verdict = Verdict::yes("all compatibility conditions certified", bounds);
  out.same_md = true;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!lattice_equal(f.cone(i).md(), f.md())) out.same_md = false;
  }
  if (!out.same_md) {
    out.verdict = Verdict::no("cones have different difference lattices", bounds);
    return out;
  }

  std::map<std::pair<std::size_t, std::size_t>, ZxVector> u;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      PairCheck pc{i, j, {}, {}};
      if (auto stored = f.gluing(i, j)) {
        pc.u = std::move(*stored);
        pc.verdict = check_gluing(f.cone(i), f.cone(j), pc.u, bounds);
      } else {
        auto found = find_gluing(f.cone(i), f.cone(j), bounds);
        if (!found) throw Error(ErrorKind::MissingGluing, "no gluing element found for " + pair_name(i, j));
        pc.u = std::move(*found);
        pc.verdict = Verdict::yes("gluing element found by search", bounds);
      }
      u[{i, j}] = pc.u;
      out.verdict = meet(out.verdict, pc.verdict);
      out.pairs.push_back(std::move(pc));
    }
  }

  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      for (std::size_t k = j + 1; k < f.size(); ++k) {
        const ZxVector& uij = u[{i, j}];
        const ZxVector& uik = u[{i, k}];
        const ZxVector& ujk = u[{j, k}];
        const GluedSemimodule gi = glued(f.cone(i), {-uij, -uik});
        const GluedSemimodule gj = glued(f.cone(j), {uij, -ujk});
        const GluedSemimodule gk = glued(f.cone(k), {uik, ujk});
        Verdict v = glued_equal(gi, gj, bounds);
        if (!v.is_no()) v = meet(v, glued_equal(gj, gk, bounds));
        if (v.is_yes()) v = Verdict::yes("triple glued semimodules coincide", bounds);
        out.verdict = meet(out.verdict, v);
        out.triples.push_back(TripleCheck{i, j, k, v});
      }
    }
  }
  return out;
}

std::vector<ZxVector> minimal_generators(std::size_t ambient, std::vector<ZxVector> gens,
                                         const Bounds& bounds) {
  std::vector<ZxVector> kept;
  for (auto& g : gens) {
    check_ambient(g, ambient);
    if (is_zero(g) || std::find(kept.begin(), kept.end(), g) != kept.end()) continue;
    kept.push_back(std::move(g));
  }
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<ZxVector> others = kept;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (others.empty()) break;
    const AffineSemimodule rest = AffineSemimodule::unchecked(ambient, others);
    if (sm_member(rest, kept[i], bounds).verdict.is_yes()) kept = std::move(others);
  }
  return kept;
}

Fan projective_fan(const std::vector<ZxVector>& points, std::size_t ambient) {
  return projective_fan(points, ambient, default_bounds(points));
}

Fan projective_fan(const std::vector<ZxVector>& points, std::size_t ambient, const Bounds& bounds) {
  if (points.size() < 2) throw Error(ErrorKind::DegenerateInput, "projective fan needs two points");
  for (const auto& p : points) check_ambient(p, ambient);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorKind::DegenerateInput, "points " + pair_name(i, j) + " coincide");
      }
    }
  }
  std::vector<AffineSemimodule> cones;
  std::map<std::pair<std::size_t, std::size_t>, ZxVector> gluing;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<ZxVector> diffs;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) diffs.push_back(points[j] - points[i]);
    }
    cones.push_back(AffineSemimodule::unchecked(ambient, minimal_generators(ambient, diffs, bounds)));
    for (std::size_t j = i + 1; j < points.size(); ++j) gluing[{i, j}] = points[j] - points[i];
  }
  return Fan(std::move(cones), std::move(gluing));
}

FaceClassification classify_faces(const Fan& f, const Bounds& bounds) {
  FaceClassification out;
  std::vector<FaceMember> nodes;
  std::vector<Lattice> mds;
  for (std::size_t i = 0; i < f.size(); ++i) {
    FaceEnumeration e = enumerate_faces(f.cone(i), bounds);
    if (!e.complete()) {
      std::string names;
      for (const auto& [idx, v] : e.unresolved) {
        names += " {";
        for (std::size_t k = 0; k < idx.size(); ++k) names += (k ? "," : "") + std::to_string(idx[k]);
        names += "}";
      }
      throw Error(ErrorKind::UnresolvedFaces, "cone " + std::to_string(i) + " undecided subsets:" + names);
    }
    for (const auto& face : e.faces) {
      nodes.push_back(FaceMember{i, face});
      mds.push_back(f.cone(i).sub_md(face.indices));
    }
    out.cone_faces.push_back(std::move(e));
  }

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      const std::size_t ci = nodes[a].cone;
      const std::size_t cj = nodes[b].cone;
      if (ci == cj || nodes[a].face.rank != nodes[b].face.rank) continue;
      const auto u = f.gluing(ci, cj);
      if (!u) throw Error(ErrorKind::MissingGluing, "no gluing element for " + pair_name(ci, cj));
      if (lattice_equal(mds[a], mds[b]) && mds[a].contains(*u)) {
        const std::size_t ra = root(a);
        const std::size_t rb = root(b);
        parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }

  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    const std::size_t r = root(a);
    auto [it, inserted] = class_of_root.try_emplace(r, out.classes.size());
    if (inserted) {
      FaceClass c;
      c.rank = nodes[a].face.rank;
      c.corank = f.rank() - c.rank;
      out.classes.push_back(std::move(c));
    }
    out.classes[it->second].members.push_back(nodes[a]);
  }
  for (std::size_t c = 0; c < out.classes.size(); ++c) out.by_corank[out.classes[c].corank].push_back(c);
  return out;
}

}  // namespace pdt
