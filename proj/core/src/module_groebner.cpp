#include "pdt/module_groebner.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace pdt {

namespace {

using Element = StrongGroebnerBasis::Element;

Element make_element(ZxVector v) {
  const auto lt = lead_term(v);
  Element e;
  e.pos = lt->pos;
  e.deg = lt->deg;
  e.lc = v[e.pos].lead();
  e.v = std::move(v);
  return e;
}

// v -= q * x^shift * g
void subtract_multiple(ZxVector& v, const ZxVector& g, const Integer& q, std::size_t shift) {
  const Integer neg = -q;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!g[i].is_zero()) v[i].add_scaled(g[i], neg, shift);
  }
}

bool divides(const Integer& a, const Integer& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
}

// Reduces the single term of v at (p, d) as far as the basis allows.
void reduce_term(const std::vector<Element>& basis, const std::vector<std::size_t>& skip,
                 ZxVector& v, std::size_t p, long d) {
  auto usable = [&](std::size_t k) {
    const Element& g = basis[k];
    return g.pos == p && g.deg <= d &&
           std::find(skip.begin(), skip.end(), k) == skip.end();
  };
  const auto du = static_cast<std::size_t>(d);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!usable(k)) continue;
    const Integer& c = v[p].coeff(du);
    if (c == 0) return;
    if (divides(basis[k].lc, c)) {
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), basis[k].lc.get_mpz_t());
      subtract_multiple(v, basis[k].v, q, static_cast<std::size_t>(d - basis[k].deg));
      return;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!usable(k)) continue;
      const Integer c = v[p].coeff(du);
      if (c == 0) return;
      if (c < 0 || c >= basis[k].lc) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), basis[k].lc.get_mpz_t());
        subtract_multiple(v, basis[k].v, q, static_cast<std::size_t>(d - basis[k].deg));
        changed = true;
      }
    }
  }
}

ZxVector reduce_with(const std::vector<Element>& basis, const std::vector<std::size_t>& skip,
                     ZxVector v, std::size_t limit) {
  const std::size_t end = std::min(limit, v.size());
  for (std::size_t p = 0; p < end; ++p) {
    for (long d = v[p].degree(); d >= 0; --d) {
      if (v[p].coeff(static_cast<std::size_t>(d)) != 0) reduce_term(basis, skip, v, p, d);
    }
  }
  return v;
}

void normalize_sign(ZxVector& v) {
  const auto lt = lead_term(v);
  if (lt && v[lt->pos].lead() < 0) {
    for (auto& f : v) f = -f;
  }
}

struct Pair {
  std::size_t i;
  std::size_t j;
};

// Larger is "smaller term": higher position index, then lower degree.
auto pair_key(const std::vector<Element>& g, const Pair& pr) {
  const long deg = std::max(g[pr.i].deg, g[pr.j].deg);
  return std::make_tuple(g[pr.i].pos, -deg, pr.j, pr.i);
}

}  // namespace

std::optional<LeadTerm> lead_term(const ZxVector& v) {
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (!v[p].is_zero()) return LeadTerm{p, v[p].degree()};
  }
  return std::nullopt;
}

StrongGroebnerBasis::StrongGroebnerBasis(const std::vector<ZxVector>& generators,
                                         std::size_t dim)
    : dim_(dim) {
  std::vector<Element> g;
  std::vector<Pair> pairs;
  const std::vector<std::size_t> no_skip;

  auto insert = [&](ZxVector h) {
    h = reduce_with(g, no_skip, std::move(h), kAll);
    if (!lead_term(h)) return;
    normalize_sign(h);
    Element e = make_element(std::move(h));
    const std::size_t idx = g.size();
    for (std::size_t k = 0; k < idx; ++k) {
      if (g[k].pos == e.pos) pairs.push_back({k, idx});
    }
    g.push_back(std::move(e));
  };

  for (const auto& gen : generators) insert(gen);

  while (!pairs.empty()) {
    // Smallest lcm term first keeps intermediate coefficients small.
    auto best = std::max_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return pair_key(g, a) < pair_key(g, b);
    });
    const Pair pr = *best;
    pairs.erase(best);

    const Element& a = g[pr.i];
    const Element& b = g[pr.j];
    const long deg = std::max(a.deg, b.deg);
    const auto sa = static_cast<std::size_t>(deg - a.deg);
    const auto sb = static_cast<std::size_t>(deg - b.deg);

    Integer l;
    mpz_lcm(l.get_mpz_t(), a.lc.get_mpz_t(), b.lc.get_mpz_t());
    Integer ma;
    Integer mb;
    mpz_divexact(ma.get_mpz_t(), l.get_mpz_t(), a.lc.get_mpz_t());
    mpz_divexact(mb.get_mpz_t(), l.get_mpz_t(), b.lc.get_mpz_t());
    ZxVector s(dim_);
    subtract_multiple(s, a.v, Integer(-ma), sa);
    subtract_multiple(s, b.v, mb, sb);

    std::optional<ZxVector> gv;
    if (!divides(a.lc, b.lc) && !divides(b.lc, a.lc)) {
      Integer gg;
      Integer u;
      Integer w;
      mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), a.lc.get_mpz_t(),
                 b.lc.get_mpz_t());
      ZxVector t(dim_);
      subtract_multiple(t, a.v, Integer(-u), sa);
      subtract_multiple(t, b.v, Integer(-w), sb);
      gv = std::move(t);
    }
    if (gv) insert(std::move(*gv));
    insert(std::move(s));
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (g[j].pos != g[i].pos || g[j].deg > g[i].deg || !divides(g[j].lc, g[i].lc)) continue;
      const bool same = g[j].deg == g[i].deg && g[j].lc == g[i].lc;
      if (!same || j < i) keep[i] = false;
    }
  }
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep[i]) minimal.push_back(std::move(g[i]));
  }
  std::sort(minimal.begin(), minimal.end(), [](const Element& a, const Element& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.lc < b.lc;
  });

  // Tail reduction leaves every leading term in place.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Element& e = minimal[i];
    ZxVector head(dim_);
    head[e.pos] = ZxPoly::monomial(e.lc, static_cast<std::size_t>(e.deg));
    ZxVector tail = e.v - head;
    tail = reduce_with(minimal, {i}, std::move(tail), kAll);
    e.v = head + tail;
  }

  basis_.reserve(minimal.size());
  for (const auto& e : minimal) basis_.push_back(e.v);
  indexed_ = std::move(minimal);
}

ZxVector StrongGroebnerBasis::reduce(ZxVector v, std::size_t limit) const {
  return reduce_with(indexed_, {}, std::move(v), limit);
}

}  // namespace pdt
