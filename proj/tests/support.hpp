#ifndef PDT_TESTS_SUPPORT_HPP
#define PDT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "pdt/semimodule.hpp"
#include "pdt/zx_matrix.hpp"

namespace pdt::test {

inline const ZxPoly X = ZxPoly::x();

inline ZxVector vec(std::initializer_list<ZxPoly> entries) { return ZxVector(entries); }

inline ZxVector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

inline std::vector<ZxVector> standard_basis(std::size_t n) {
  std::vector<ZxVector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

// Running examples.
inline std::vector<ZxVector> line_gens() { return {ZxVector{X - 1}, ZxVector{X - 2}}; }
inline std::vector<ZxVector> plane_gens() { return {vec({X, 1}), vec({X, 2}), vec({X, 3})}; }
inline std::vector<ZxVector> space_gens() {
  return {vec({X, 1, 1}), vec({1, X, 1}), vec({1, 1, X}), vec({1, 1, 1})};
}
inline std::vector<ZxVector> unsaturated_gens() { return {vec({2, 0}), vec({1, 1}), vec({0, 1})}; }

inline AffineSemimodule line() { return AffineSemimodule(1, line_gens()); }
inline AffineSemimodule plane() { return AffineSemimodule(2, plane_gens()); }
inline AffineSemimodule space() { return AffineSemimodule(3, space_gens()); }
inline AffineSemimodule unsaturated() { return AffineSemimodule(2, unsaturated_gens()); }
inline AffineSemimodule orthant(std::size_t n) { return AffineSemimodule(n, standard_basis(n)); }

/// {0, e_1, ..., e_n}.
inline std::vector<ZxVector> simplex_points(std::size_t n) {
  std::vector<ZxVector> out{zero_vector(n)};
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  return out;
}

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

  ZxPoly poly(int max_deg, long box) {
    std::vector<Integer> c;
    const int deg = static_cast<int>(integer(-1, max_deg));
    for (int d = 0; d <= deg; ++d) c.emplace_back(integer(-box, box));
    return ZxPoly(std::move(c));
  }

  ZxPoly positive_poly(int max_deg, long box) {
    ZxPoly f = poly(max_deg, box);
    return order_sign(f) == OrderSign::Negative ? -f : f;
  }

  ZxVector vector(std::size_t n, int max_deg, long box) {
    ZxVector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(poly(max_deg, box));
    return v;
  }

  std::mt19937_64 gen;
};

// Oracles below use only evaluation and rational arithmetic, never the
// module code under test.

/// Sign of f in the order of Z[x]: the sign of f(N) for N beyond every root.
inline int sign_by_evaluation(const ZxPoly& f) {
  Integer bound = 1;
  for (const auto& c : f.coeffs()) bound += abs(c);
  const Integer v = f.evaluate(bound + 1);
  return sgn(v);
}

/// Exact rank over Q of a rational matrix given as rows.
inline std::size_t rank_q(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rank over Q(x) of a list of vectors: the maximum rank over several
/// integer specializations of x (equal to the generic rank for all but
/// finitely many points).
inline std::size_t rank_by_evaluation(const std::vector<ZxVector>& vecs, std::size_t n) {
  std::size_t best = 0;
  for (long at : {3L, 7L, 11L, 101L, 1009L, -13L, 65537L}) {
    std::vector<std::vector<mpq_class>> m;
    for (const auto& v : vecs) {
      std::vector<mpq_class> row;
      for (std::size_t i = 0; i < n; ++i) row.emplace_back(v[i].evaluate(Integer(at)));
      m.push_back(std::move(row));
    }
    best = std::max(best, rank_q(std::move(m)));
  }
  return best;
}

/// Determinant by cofactor expansion (small matrices only).
inline ZxPoly det(const std::vector<std::vector<ZxPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return ZxPoly(1);
  if (n == 1) return m[0][0];
  ZxPoly out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<ZxPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<ZxPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    const ZxPoly term = m[0][j] * det(minor);
    out = (j % 2 == 0) ? out + term : out - term;
  }
  return out;
}

/// gcd of the k x k minors of m (k = number of rows minus free rank).
inline ZxPoly minors_gcd(const ZxMatrix& m, std::size_t k) {
  if (k == 0) return ZxPoly(1);
  ZxPoly g;
  std::vector<std::size_t> rows(k);
  std::vector<std::size_t> cols(k);
  std::function<void(std::size_t, std::size_t)> pick_cols;
  std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      pick_cols(0, 0);
      return;
    }
    for (std::size_t r = from; r < m.rows(); ++r) {
      rows[at] = r;
      pick_rows(at + 1, r + 1);
    }
  };
  pick_cols = [&](std::size_t at, std::size_t from) {
    if (at == k) {
      std::vector<std::vector<ZxPoly>> sub(k, std::vector<ZxPoly>(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) sub[a][b] = m.at(rows[a], cols[b]);
      }
      g = gcd(g, det(sub));
      return;
    }
    for (std::size_t c = from; c < m.cols(); ++c) {
      cols[at] = c;
      pick_cols(at + 1, c + 1);
    }
  };
  pick_rows(0, 0);
  return g;
}

}  // namespace pdt::test

#endif  // PDT_TESTS_SUPPORT_HPP
