#ifndef PDT_RATIONAL_FUNCTION_HPP
#define PDT_RATIONAL_FUNCTION_HPP

#include <compare>
#include <string>

#include "pdt/zx_poly.hpp"

namespace pdt {

/// An element of Q(x) kept as num/den with gcd(num, den) = 1 and den > 0.
/// The order of Z[x] extends to this field: p/q > 0 iff p > 0 (q > 0).
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(ZxPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(ZxPoly num, ZxPoly den);

  const ZxPoly& num() const noexcept { return num_; }
  const ZxPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const { return {-num_, den_}; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b);

  std::string to_string() const;

 private:
  ZxPoly num_;
  ZxPoly den_;
};

}  // namespace pdt

#endif  // PDT_RATIONAL_FUNCTION_HPP
