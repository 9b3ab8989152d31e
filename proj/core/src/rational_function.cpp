#include "pdt/rational_function.hpp"

#include <utility>

#include "pdt/error.hpp"

namespace pdt {

RationalFunction::RationalFunction(ZxPoly num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(ZxPoly num, ZxPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = ZxPoly(1);
    return;
  }
  ZxPoly g = gcd(num, den);
  if (order_sign(den) == OrderSign::Negative) g = -g;
  num_ = *divide_exact(num, g);
  den_ = *divide_exact(den, g);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero in Q(x)");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
  // Denominators are positive, so cross-multiplication preserves the order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace pdt
