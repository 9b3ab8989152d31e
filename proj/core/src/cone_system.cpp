#include "pdt/cone_system.hpp"

#include <algorithm>
#include <utility>

#include "pdt/error.hpp"

namespace pdt {

namespace {

struct Row {
  ZxVector a;
  ZxPoly b;
  bool strict = false;
  ZxVector y;  // multipliers of the input rows
};

bool all_zero(const ZxVector& v) { return is_zero(v); }

void normalize(Row& r) {
  ZxPoly g;
  for (const auto& f : r.a) g = gcd(g, f);
  g = gcd(g, r.b);
  for (const auto& f : r.y) g = gcd(g, f);
  if (g.is_zero() || g.is_one()) return;
  auto div = [&](ZxPoly& f) { f = *divide_exact(f, g); };
  for (auto& f : r.a) div(f);
  div(r.b);
  for (auto& f : r.y) div(f);
}

// A row without variables that cannot hold.
bool contradictory(const Row& r) {
  const OrderSign s = order_sign(r.b);
  return s == OrderSign::Negative || (s == OrderSign::Zero && r.strict);
}

bool same_constraint(const Row& p, const Row& q) {
  return p.strict == q.strict && p.b == q.b && p.a == q.a;
}

RationalFunction evaluate_rest(const Row& r, const std::vector<RationalFunction>& t,
                               std::size_t k) {
  RationalFunction acc(r.b);
  for (std::size_t j = 0; j < k; ++j) {
    if (!r.a[j].is_zero()) acc = acc + RationalFunction(r.a[j]) * t[j];
  }
  return acc;
}

struct Interval {
  std::optional<RationalFunction> lower;
  bool lower_strict = false;
  std::optional<RationalFunction> upper;
  bool upper_strict = false;

  bool admits(const RationalFunction& v) const {
    if (lower) {
      const auto c = v <=> *lower;
      if (c < 0 || (c == 0 && lower_strict)) return false;
    }
    if (upper) {
      const auto c = v <=> *upper;
      if (c > 0 || (c == 0 && upper_strict)) return false;
    }
    return true;
  }
};

RationalFunction pick(const Interval& iv) {
  std::vector<RationalFunction> candidates{RationalFunction()};
  if (iv.lower) {
    candidates.push_back(*iv.lower);
    candidates.push_back(*iv.lower + RationalFunction(ZxPoly(1)));
  }
  if (iv.upper) {
    candidates.push_back(*iv.upper);
    candidates.push_back(*iv.upper - RationalFunction(ZxPoly(1)));
  }
  for (const auto& c : candidates) {
    if (iv.admits(c)) return c;
  }
  if (iv.lower && iv.upper) {
    return (*iv.lower + *iv.upper) / RationalFunction(ZxPoly(2));
  }
  throw Error(ErrorKind::InternalInconsistency, "empty interval during back-substitution");
}

}  // namespace

ConeSystemResult solve_cone_system(const std::vector<LinearConstraint>& input, std::size_t vars) {
  const std::size_t m = input.size();
  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (input[i].a.size() != vars) throw Error(ErrorKind::DimensionMismatch, "constraint length");
    Row r{input[i].a, input[i].b, input[i].strict, unit_vector(m, i)};
    rows.push_back(std::move(r));
  }

  ConeSystemResult result;
  auto fail = [&](const Row& r) {
    result.feasible = false;
    result.certificate = r.y;
    if (!verify_infeasibility(input, r.y)) {
      throw Error(ErrorKind::InternalInconsistency, "elimination produced an invalid certificate");
    }
    return result;
  };

  // stages[k] holds the rows that involve only variables 0..k.
  std::vector<std::vector<Row>> stages(vars);
  for (std::size_t step = vars; step-- > 0;) {
    for (const auto& r : rows) {
      if (all_zero(r.a) && contradictory(r)) return fail(r);
    }
    stages[step] = rows;
    std::vector<Row> pos;
    std::vector<Row> neg;
    std::vector<Row> next;
    for (auto& r : rows) {
      switch (order_sign(r.a[step])) {
        case OrderSign::Positive: pos.push_back(std::move(r)); break;
        case OrderSign::Negative: neg.push_back(std::move(r)); break;
        case OrderSign::Zero: next.push_back(std::move(r)); break;
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        const ZxPoly alpha = p.a[step];
        const ZxPoly beta = -q.a[step];
        Row c;
        c.a = scale(beta, p.a) + scale(alpha, q.a);
        c.b = beta * p.b + alpha * q.b;
        c.strict = p.strict || q.strict;
        c.y = scale(beta, p.y) + scale(alpha, q.y);
        normalize(c);
        if (std::none_of(next.begin(), next.end(),
                         [&](const Row& o) { return same_constraint(o, c); })) {
          next.push_back(std::move(c));
        }
      }
    }
    // Rows without variables that hold carry no information.
    std::erase_if(next, [](const Row& r) { return all_zero(r.a) && !contradictory(r); });
    rows = std::move(next);
  }
  for (const auto& r : rows) {
    if (contradictory(r)) return fail(r);
  }

  result.feasible = true;
  result.solution.assign(vars, RationalFunction());
  for (std::size_t k = 0; k < vars; ++k) {
    Interval iv;
    for (const auto& r : stages[k]) {
      const OrderSign s = order_sign(r.a[k]);
      if (s == OrderSign::Zero) continue;
      const RationalFunction bound = -evaluate_rest(r, result.solution, k) / RationalFunction(r.a[k]);
      if (s == OrderSign::Positive) {
        if (!iv.lower || bound > *iv.lower) {
          iv.lower = bound;
          iv.lower_strict = r.strict;
        } else if (bound == *iv.lower) {
          iv.lower_strict = iv.lower_strict || r.strict;
        }
      } else {
        if (!iv.upper || bound < *iv.upper) {
          iv.upper = bound;
          iv.upper_strict = r.strict;
        } else if (bound == *iv.upper) {
          iv.upper_strict = iv.upper_strict || r.strict;
        }
      }
    }
    result.solution[k] = pick(iv);
  }
  if (!satisfies(input, result.solution)) {
    throw Error(ErrorKind::InternalInconsistency, "back-substitution missed a constraint");
  }
  return result;
}

bool verify_infeasibility(const std::vector<LinearConstraint>& rows, const ZxVector& y) {
  if (y.size() != rows.size() || rows.empty()) return false;
  const std::size_t n = rows.front().a.size();
  ZxVector combo(n);
  ZxPoly rhs;
  bool strict_used = false;
  bool any = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (order_sign(y[i]) == OrderSign::Negative) return false;
    if (y[i].is_zero()) continue;
    any = true;
    axpy(combo, y[i], rows[i].a);
    rhs += y[i] * rows[i].b;
    strict_used = strict_used || rows[i].strict;
  }
  if (!any || !is_zero(combo)) return false;
  const OrderSign s = order_sign(rhs);
  return s == OrderSign::Negative || (s == OrderSign::Zero && strict_used);
}

bool satisfies(const std::vector<LinearConstraint>& rows, const std::vector<RationalFunction>& t) {
  for (const auto& r : rows) {
    RationalFunction acc(r.b);
    for (std::size_t j = 0; j < t.size(); ++j) acc = acc + RationalFunction(r.a[j]) * t[j];
    const OrderSign s = order_sign(acc.num());
    if (s == OrderSign::Negative || (s == OrderSign::Zero && r.strict)) return false;
  }
  return true;
}

ZxVector clear_denominators(const std::vector<RationalFunction>& t) {
  ZxPoly d(1);
  for (const auto& v : t) {
    const ZxPoly g = gcd(d, v.den());
    d = *divide_exact(d * v.den(), g);
  }
  ZxVector out;
  out.reserve(t.size());
  for (const auto& v : t) out.push_back(*divide_exact(v.num() * d, v.den()));
  return out;
}

ZxVector primitive_vector(const ZxVector& v) {
  ZxPoly g;
  for (const auto& f : v) g = gcd(g, f);
  if (g.is_zero() || g.is_one()) return v;
  ZxVector out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(*divide_exact(f, g));
  return out;
}

}  // namespace pdt
