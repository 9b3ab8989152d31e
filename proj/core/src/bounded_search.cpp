#include "pdt/bounded_search.hpp"

#include <algorithm>
#include <cstdlib>

namespace pdt {

namespace {

// Emits every vector with |entries| summing to `left`, each <= box.
class WeightWalker {
 public:
  WeightWalker(std::size_t n, long box, std::size_t cap,
               const std::function<bool(const std::vector<long>&)>& visit)
      : n_(n), box_(box), cap_(cap), visit_(visit), cur_(n, 0) {}

  // Returns true to stop (found or capped).
  bool walk(std::size_t i, long left) {
    if (i == n_) {
      if (left != 0) return false;
      if (visited_ >= cap_) {
        capped_ = true;
        return true;
      }
      ++visited_;
      if (visit_(cur_)) {
        found_ = true;
        return true;
      }
      return false;
    }
    const long remaining_slots = static_cast<long>(n_ - i - 1);
    for (long mag = 0; mag <= std::min(left, box_); ++mag) {
      if (left - mag > remaining_slots * box_) continue;
      for (int sign : {1, -1}) {
        if (mag == 0 && sign < 0) continue;
        cur_[i] = sign * mag;
        if (walk(i + 1, left - mag)) return true;
      }
    }
    cur_[i] = 0;
    return false;
  }

  bool found() const { return found_; }
  bool capped() const { return capped_; }
  std::size_t visited() const { return visited_; }

 private:
  std::size_t n_;
  long box_;
  std::size_t cap_;
  const std::function<bool(const std::vector<long>&)>& visit_;
  std::vector<long> cur_;
  std::size_t visited_ = 0;
  bool found_ = false;
  bool capped_ = false;
};

}  // namespace

SearchOutcome enumerate_by_weight(std::size_t n, long box, std::size_t cap,
                                  const std::function<bool(const std::vector<long>&)>& visit) {
  WeightWalker walker(n, box, cap, visit);
  const long max_weight = static_cast<long>(n) * std::max(box, 0L);
  for (long w = 0; w <= max_weight; ++w) {
    if (walker.walk(0, w)) break;
  }
  SearchOutcome out;
  out.found = walker.found();
  out.complete = !walker.found() && !walker.capped();
  out.visited = walker.visited();
  return out;
}

SearchOutcome enumerate_polynomial_vectors(std::size_t count, const Bounds& bounds, std::size_t cap,
                                           const std::function<bool(const ZxVector&)>& visit) {
  if (bounds.max_deg < 0) {
    SearchOutcome out;
    out.found = visit(ZxVector(count));
    out.visited = 1;
    out.complete = !out.found;
    return out;
  }
  const auto width = static_cast<std::size_t>(bounds.max_deg) + 1;
  return enumerate_by_weight(count * width, bounds.coeff_box, cap, [&](const std::vector<long>& c) {
    ZxVector v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Integer> coeffs;
      coeffs.reserve(width);
      for (std::size_t d = 0; d < width; ++d) coeffs.emplace_back(c[i * width + d]);
      v.emplace_back(std::move(coeffs));
    }
    return visit(v);
  });
}

bool within_bounds(const ZxPoly& f, const Bounds& bounds) {
  if (f.is_zero()) return true;
  if (f.degree() > bounds.max_deg) return false;
  for (const auto& c : f.coeffs()) {
    if (abs(c) > bounds.coeff_box) return false;
  }
  return true;
}

bool within_bounds(const ZxVector& v, const Bounds& bounds) {
  return std::all_of(v.begin(), v.end(), [&](const ZxPoly& f) { return within_bounds(f, bounds); });
}

Bounds default_bounds(const std::vector<ZxVector>& generators) {
  long deg = 0;
  for (const auto& g : generators) {
    for (const auto& f : g) deg = std::max(deg, f.degree());
  }
  Bounds b;
  b.max_deg = static_cast<int>(std::max(2L, 2 * deg));
  b.coeff_box = 12;
  return b;
}

}  // namespace pdt
