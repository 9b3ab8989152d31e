#include "pdt/psigma_ideal.hpp"

#include <algorithm>
#include <string>

#include "pdt/error.hpp"

namespace pdt {

PSigmaMonomial::PSigmaMonomial(ZxVector exponents) : exponents_(std::move(exponents)) {
  for (const auto& e : exponents_) {
    if (!in_positive_cone(e)) {
      throw Error(ErrorKind::SchemaError, "monomial exponent " + e.to_string() + " is not in P[x]");
    }
  }
}

ZxVector Binomial::exponent_difference() const { return plus.exponents() - minus.exponents(); }

Binomial binomial_from_vector(const ZxVector& v) {
  ZxVector plus(v.size());
  ZxVector minus(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    switch (order_sign(v[i])) {
      case OrderSign::Positive: plus[i] = v[i]; break;
      case OrderSign::Negative: minus[i] = -v[i]; break;
      case OrderSign::Zero: break;
    }
  }
  return Binomial{PSigmaMonomial(std::move(plus)), PSigmaMonomial(std::move(minus))};
}

ToricIdealHandle binomials_from_lattice(const Lattice& l) {
  ToricIdealHandle h{l, {}};
  for (const auto& g : l.generators()) {
    if (!is_zero(g)) h.generators.push_back(binomial_from_vector(g));
  }
  return h;
}

ToricIdealHandle toric_ideal_from_points(const std::vector<ZxVector>& points, std::size_t ambient) {
  return binomials_from_lattice(syzygy_basis(points, ambient));
}

ToricIdealHandle toric_ideal_from_points(const ZxMatrix& u) {
  return toric_ideal_from_points(u.column_list(), u.rows());
}

bool binomial_member(const ToricIdealHandle& h, const Binomial& b) {
  if (b.plus.size() != h.support.ambient() || b.minus.size() != h.support.ambient()) {
    throw Error(ErrorKind::DimensionMismatch, "binomial in " + std::to_string(b.plus.size()) +
                                                  " variables, ideal in " +
                                                  std::to_string(h.support.ambient()));
  }
  return h.support.contains(b.exponent_difference());
}

HomogeneityResult is_homogeneous(const std::vector<ZxVector>& points, std::size_t ambient) {
  const std::size_t m = points.size();
  HomogeneityResult out;
  const Lattice syz = syzygy_basis(points, ambient);
  const ZxVector ones(m, ZxPoly(1));
  out.homogeneous = std::all_of(syz.generators().begin(), syz.generators().end(),
                                [&](const ZxVector& z) { return dot(ones, z).is_zero(); });
  if (!out.homogeneous || m == 0) return out;

  // Kernel of [U^T | -1]: vectors (v, g) with <u_i, v> = g for all i.
  std::vector<ZxVector> columns(ambient + 1, ZxVector(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ambient; ++j) columns[j][i] = points[i][j];
    columns[ambient][i] = ZxPoly(-1);
  }
  const Lattice kernel = syzygy_basis(columns, m);
  for (const auto& k : kernel.generators()) {
    if (k[ambient].is_zero()) continue;
    ZxVector v(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(ambient));
    ZxPoly g = k[ambient];
    if (order_sign(g) == OrderSign::Negative) {
      v = -v;
      g = -g;
    }
    out.witness = std::make_pair(std::move(v), std::move(g));
    break;
  }
  return out;
}

HomogeneityResult is_homogeneous(const ZxMatrix& u) { return is_homogeneous(u.column_list(), u.rows()); }

std::size_t sigma_dimension(const std::vector<ZxVector>& points, std::size_t ambient, bool projective) {
  if (points.empty()) return 0;
  if (!projective) return rank_qx(points, ambient);
  std::vector<ZxVector> diffs;
  for (std::size_t j = 1; j < points.size(); ++j) diffs.push_back(points[j] - points[0]);
  if (diffs.empty()) return 0;
  return rank_qx(diffs, ambient);
}

std::size_t sigma_dimension(const ZxMatrix& u, bool projective) {
  return sigma_dimension(u.column_list(), u.rows(), projective);
}

InvariantSubvariety invariant_subvariety_ideal(const AffineSemimodule& s, const Face& f,
                                               const Bounds& bounds) {
  std::vector<std::size_t> idx = f.indices;
  std::sort(idx.begin(), idx.end());
  const bool witnessed = f.witness && verify_face_witness(s, idx, *f.witness);
  if (!witnessed && !is_face(s, idx, bounds).verdict.is_yes()) {
    throw Error(ErrorKind::NotAFace, "indices do not designate a certified face");
  }
  InvariantSubvariety out{{}, {}, toric_ideal_from_points(s.generators(), s.ambient())};
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (std::binary_search(idx.begin(), idx.end(), j)) {
      out.face_generators.push_back(s.generator(j));
    } else {
      out.vanishing_coordinates.push_back(j);
    }
  }
  return out;
}

}  // namespace pdt
