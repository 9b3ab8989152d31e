#include "pdt/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pdt/error.hpp"

namespace pdt {

namespace {

std::vector<ZxVector> augmented_generators(const std::vector<ZxVector>& gens, std::size_t n) {
  std::vector<ZxVector> out;
  out.reserve(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ZxVector a = gens[i];
    a.resize(n + gens.size());
    a[n + i] = ZxPoly(1);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

Lattice::Lattice(std::size_t ambient) : ambient_(ambient), augmented_({}, ambient) {}

Lattice::Lattice(std::size_t ambient, std::vector<ZxVector> generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.size() != ambient_) {
      throw Error(ErrorKind::DimensionMismatch, "generator of length " + std::to_string(g.size()) +
                                                    " in Z[x]^" + std::to_string(ambient_));
    }
  }
  augmented_ = StrongGroebnerBasis(augmented_generators(generators_, ambient_),
                                   ambient_ + generators_.size());
}

std::vector<ZxVector> Lattice::groebner_basis() const {
  std::vector<ZxVector> out;
  for (const auto& e : augmented_.elements()) {
    const auto lt = lead_term(e);
    if (lt->pos < ambient_) out.emplace_back(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(ambient_));
  }
  return out;
}

std::vector<ZxVector> Lattice::generator_relations() const {
  std::vector<ZxVector> out;
  for (const auto& e : augmented_.elements()) {
    const auto lt = lead_term(e);
    if (lt->pos >= ambient_) out.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(ambient_), e.end());
  }
  return out;
}

std::size_t Lattice::rank() const {
  if (generators_.empty()) return 0;
  return rank_qx(generators_, ambient_);
}

bool Lattice::is_zero() const {
  for (const auto& g : generators_) {
    if (!pdt::is_zero(g)) return false;
  }
  return true;
}

std::optional<MembershipCertificate> Lattice::member(const ZxVector& v) const {
  if (v.size() != ambient_) {
    throw Error(ErrorKind::DimensionMismatch, "query of length " + std::to_string(v.size()) +
                                                  " in Z[x]^" + std::to_string(ambient_));
  }
  ZxVector a = v;
  a.resize(ambient_ + generators_.size());
  a = augmented_.reduce(std::move(a), ambient_);
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (!a[i].is_zero()) return std::nullopt;
  }
  MembershipCertificate cert;
  cert.coefficients.reserve(generators_.size());
  for (std::size_t i = 0; i < generators_.size(); ++i) cert.coefficients.push_back(-a[ambient_ + i]);
  if (combine(generators_, cert.coefficients, ambient_) != v) {
    throw Error(ErrorKind::InternalInconsistency, "membership certificate does not reproduce query");
  }
  return cert;
}

Lattice Lattice::minimalized() const {
  std::vector<ZxVector> gens;
  for (const auto& g : generators_) {
    if (!pdt::is_zero(g)) gens.push_back(g);
  }
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<ZxVector> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    if (Lattice(ambient_, others).contains(gens[i])) {
      gens = std::move(others);
    } else {
      ++i;
    }
  }
  return Lattice(ambient_, std::move(gens));
}

namespace {

// Coefficients of f modulo p, lowest degree first, trailing zeros dropped.
std::vector<long> reduce_mod(const ZxPoly& f, long p) {
  std::vector<long> out;
  for (const auto& c : f.coeffs()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(r.get_si());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

long inverse_mod(long a, long p) {
  long r = 1;
  for (long e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

// Degree of gcd(a, b) in F_p[x]; -1 when both are zero.
long gcd_degree_mod(std::vector<long> a, std::vector<long> b, long p) {
  while (!b.empty()) {
    const long inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const long q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = ((a[k + shift] - q * b[k]) % p + p) % p;
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

// Comaximal pairs stay coprime modulo every prime; a cheap necessary test.
bool coprime_mod_small_primes(const ZxPoly& a, const ZxPoly& b) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    if (gcd_degree_mod(reduce_mod(a, p), reduce_mod(b, p), p) != 0) return false;
  }
  return true;
}

using UnitCache = std::map<std::pair<ZxPoly, ZxPoly>, std::optional<std::pair<ZxPoly, ZxPoly>>>;

// s, t with s*a + t*b = 1, when a and b are comaximal in Z[x].
std::optional<std::pair<ZxPoly, ZxPoly>> unit_combination(const ZxPoly& a, const ZxPoly& b, UnitCache& cache) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const auto key = std::make_pair(a, b);
  if (const auto it = cache.find(key); it != cache.end()) return it->second;
  std::optional<std::pair<ZxPoly, ZxPoly>> out;
  if (coprime_mod_small_primes(a, b)) {
    const Lattice ideal(1, {{a}, {b}});
    if (auto cert = ideal.member({ZxPoly(1)})) out = std::make_pair(cert->coefficients[0], cert->coefficients[1]);
  }
  cache.emplace(key, out);
  return out;
}

// Interreduces the entries of a relation a (sum a_i g_i = 0). Each step
// a_j -= c x^k a_l is matched by g_l += c x^k g_j, so the relation and the
// generated module are preserved.
void reduce_relation(ZxVector& a, std::vector<ZxVector>& gens) {
  bool changed = true;
  for (int round = 0; changed && round < 64; ++round) {
    changed = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (long d = a[j].degree(); d >= 0; --d) {
        for (std::size_t l = 0; l < a.size(); ++l) {
          if (l == j || a[l].is_zero() || a[l].degree() > d) continue;
          const Integer c = a[j].coeff(static_cast<std::size_t>(d));
          if (abs(c) < abs(a[l].lead())) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), c.get_mpz_t(), a[l].lead().get_mpz_t());
          const auto shift = static_cast<std::size_t>(d - a[l].degree());
          a[j].add_scaled(a[l], Integer(-q), shift);
          const ZxPoly m = ZxPoly::monomial(q, shift);
          axpy(gens[l], m, gens[j]);
          changed = true;
        }
      }
    }
  }
}

// If a_i s + a_j t = 1, the generators other than g_i, g_j together with
// s g_j - t g_i still generate.
bool fold_pair(const ZxVector& a, std::vector<ZxVector>& gens, UnitCache& cache) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      auto st = unit_combination(a[i], a[j], cache);
      if (!st) continue;
      ZxVector folded = scale(st->first, gens[j]) - scale(st->second, gens[i]);
      std::vector<ZxVector> next;
      for (std::size_t l = 0; l < gens.size(); ++l) {
        if (l != i && l != j) next.push_back(gens[l]);
      }
      next.push_back(std::move(folded));
      gens = std::move(next);
      return true;
    }
  }
  return false;
}

// Nonzero polynomials of degree <= 2 with coefficients in [-2, 2].
const std::vector<ZxPoly>& small_multipliers() {
  static const std::vector<ZxPoly> all = [] {
    std::vector<ZxPoly> out;
    for (long c2 = -2; c2 <= 2; ++c2) {
      for (long c1 = -2; c1 <= 2; ++c1) {
        for (long c0 = -2; c0 <= 2; ++c0) {
          ZxPoly p{c0, c1, c2};
          if (!p.is_zero()) out.push_back(p);
        }
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ZxPoly& a, const ZxPoly& b) { return a.degree() < b.degree(); });
    return out;
  }();
  return all;
}

// One step towards a basis of a free module, driven by the relations among
// the generators: drop a generator whose coefficient became a unit, or fold
// a comaximal pair. Returns false if no relation allows either.
bool fold_comaximal_pair(std::vector<ZxVector>& gens, std::size_t n) {
  const Lattice span(n, gens);
  const Lattice relations = Lattice(gens.size(), span.generator_relations()).minimalized();
  UnitCache cache;
  for (ZxVector a : relations.generators()) {
    std::vector<ZxVector> moved = gens;
    reduce_relation(a, moved);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j].is_constant() && abs(a[j].lead()) == 1) {
        moved.erase(moved.begin() + static_cast<std::ptrdiff_t>(j));
        gens = std::move(moved);
        return true;
      }
    }
    if (fold_pair(a, moved, cache)) {
      gens = std::move(moved);
      return true;
    }
  }
  // A unimodular row of length >= 3 need not have a comaximal pair, but
  // a single elementary move a_j += c a_l usually creates one.
  for (const ZxVector& a0 : relations.generators()) {
    for (std::size_t j = 0; j < a0.size(); ++j) {
      for (std::size_t l = 0; l < a0.size(); ++l) {
        if (l == j || a0[l].is_zero()) continue;
        for (const ZxPoly& c : small_multipliers()) {
          ZxVector a = a0;
          std::vector<ZxVector> moved = gens;
          a[j] += c * a[l];
          axpy(moved[l], -c, moved[j]);
          if (fold_pair(a, moved, cache)) {
            gens = std::move(moved);
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace

Lattice free_basis(const Lattice& l, std::size_t expected_rank) {
  std::vector<ZxVector> gens = l.minimalized().generators();
  while (gens.size() > expected_rank) {
    if (!fold_comaximal_pair(gens, l.ambient())) break;
    gens = Lattice(l.ambient(), std::move(gens)).minimalized().generators();
  }
  return Lattice(l.ambient(), std::move(gens));
}

Lattice syzygy_basis(const std::vector<ZxVector>& columns, std::size_t rows) {
  const std::size_t m = columns.size();
  const Lattice span(rows, columns);
  const std::size_t expected = m - span.rank();
  Lattice kernel = free_basis(Lattice(m, span.generator_relations()), expected);

  // The basis search depends on the Groebner basis, which depends on the
  // column order; retry under other orders before giving up.
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  while (kernel.generators().size() != expected && std::next_permutation(perm.begin(), perm.end())) {
    std::vector<ZxVector> permuted;
    for (std::size_t i : perm) permuted.push_back(columns[i]);
    const Lattice pspan(rows, permuted);
    const Lattice pkernel = free_basis(Lattice(m, pspan.generator_relations()), expected);
    if (pkernel.generators().size() != expected) continue;
    std::vector<ZxVector> back;
    for (const auto& g : pkernel.generators()) {
      ZxVector v(m);
      for (std::size_t i = 0; i < m; ++i) v[perm[i]] = g[i];
      back.push_back(std::move(v));
    }
    kernel = Lattice(m, std::move(back));
  }

  const ZxMatrix u = ZxMatrix::from_columns(columns, rows);
  for (const auto& g : kernel.generators()) {
    if (!is_zero(u * g)) throw Error(ErrorKind::InternalInconsistency, "syzygy does not annihilate");
  }
  if (kernel.generators().size() != expected || kernel.rank() != expected) {
    throw Error(ErrorKind::InternalInconsistency,
                "syzygy module: " + std::to_string(kernel.generators().size()) +
                    " generators after minimalization, rank " + std::to_string(expected) +
                    " predicted");
  }
  return kernel;
}

Lattice syzygy_basis(const ZxMatrix& u) { return syzygy_basis(u.column_list(), u.rows()); }

namespace {

// Generators of {phi : <phi, g> = 0 for all generators g}, as the relations
// among the columns of the matrix whose rows are the generators of l.
Lattice complement_relations(const Lattice& l, std::vector<ZxVector>& columns) {
  const std::size_t n = l.ambient();
  const auto& gens = l.generators();
  columns.assign(n, ZxVector(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) columns[j][i] = gens[i][j];
  }
  return Lattice(n, Lattice(gens.size(), columns).generator_relations());
}

}  // namespace

Lattice complement(const Lattice& l) {
  std::vector<ZxVector> columns;
  complement_relations(l, columns);
  return syzygy_basis(columns, l.generators().size());
}

bool lattice_subset(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "lattice ambient sizes differ");
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

bool lattice_equal(const Lattice& a, const Lattice& b) {
  return lattice_subset(a, b) && lattice_subset(b, a);
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.ambient();
  if (n != b.ambient()) throw Error(ErrorKind::DimensionMismatch, "lattice ambient sizes differ");
  std::vector<ZxVector> columns = a.generators();
  for (const auto& g : b.generators()) columns.push_back(-g);
  const Lattice span(n, columns);
  const std::size_t ka = a.generators().size();
  std::vector<ZxVector> out;
  for (const auto& rel : span.generator_relations()) {
    ZxVector coeffs(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(ka));
    ZxVector w = combine(a.generators(), coeffs, n);
    if (!is_zero(w)) out.push_back(std::move(w));
  }
  return Lattice(n, std::move(out)).minimalized();
}

// Only the spans matter here, so no basis is extracted.
Lattice saturate(const Lattice& l) {
  std::vector<ZxVector> columns;
  const Lattice c = complement_relations(l, columns).minimalized();
  return complement_relations(c, columns).minimalized();
}

bool is_toric(const Lattice& l) { return lattice_equal(l, saturate(l)); }

}  // namespace pdt
