#ifndef PDT_ZX_POLY_HPP
#define PDT_ZX_POLY_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pdt {

using Integer = mpz_class;

/*
 * ZxPoly: an element of Z[x] with arbitrary-precision coefficients.
 *
 * Storage is dense, lowest degree first, with no trailing zeros; the zero
 * polynomial is the empty coefficient list. Values are immutable from the
 * outside; the arithmetic operators return fresh canonical values.
 *
 * Z[x] is totally ordered by comparing coefficients from the top degree
 * down: f > g iff the highest coefficient where they differ is larger in f.
 * Equivalently f > 0 iff its leading coefficient is positive. The positive
 * cone P[x] = {f : f >= 0} is closed under + and *.
 */
class ZxPoly {
 public:
  ZxPoly() = default;
  ZxPoly(long constant);  // NOLINT(google-explicit-constructor)
  ZxPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  ZxPoly(std::initializer_list<long> coeffs_low_to_high);
  explicit ZxPoly(std::vector<Integer> coeffs_low_to_high);

  static ZxPoly x();
  static ZxPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i; zero beyond the degree.
  const Integer& coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  const Integer& lead() const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  ZxPoly& operator+=(const ZxPoly& other);
  ZxPoly& operator-=(const ZxPoly& other);
  ZxPoly& operator*=(const ZxPoly& other);
  ZxPoly& operator*=(const Integer& c);

  /// this += c * x^shift * other, the workhorse of every reduction loop.
  void add_scaled(const ZxPoly& other, const Integer& c, std::size_t shift);

  ZxPoly shifted(std::size_t k) const;  // multiply by x^k
  ZxPoly scaled(const Integer& c) const;
  Integer evaluate(const Integer& at) const;

  friend ZxPoly operator+(ZxPoly a, const ZxPoly& b) { return a += b; }
  friend ZxPoly operator-(ZxPoly a, const ZxPoly& b) { return a -= b; }
  friend ZxPoly operator*(const ZxPoly& a, const ZxPoly& b);
  ZxPoly operator-() const;

  friend bool operator==(const ZxPoly& a, const ZxPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  /// The total order of Z[x] described above.
  friend std::strong_ordering operator<=>(const ZxPoly& a, const ZxPoly& b);

  /// Human-readable form such as "x^2-1", "2x+4", "-x", "0".
  std::string to_string() const;

 private:
  void canonicalize();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const ZxPoly& f);

enum class OrderSign { Negative = -1, Zero = 0, Positive = 1 };

OrderSign order_sign(const ZxPoly& f);
OrderSign operator*(OrderSign a, OrderSign b);

enum class Comparison { Less, Equal, Greater };
Comparison compare(const ZxPoly& f, const ZxPoly& g);

/// Membership in the positive cone P[x] (zero included).
inline bool in_positive_cone(const ZxPoly& f) {
  return order_sign(f) != OrderSign::Negative;
}

struct ContentSplit {
  Integer content;   // positive gcd of the coefficients
  ZxPoly primitive;  // f / content, sign kept
};

/// Throws Error(ZeroPolynomial) on f = 0.
ContentSplit content_primitive(const ZxPoly& f);

/// Integer gcd of the coefficients (0 for the zero polynomial).
Integer integer_content(const ZxPoly& f);

/// f / g when g divides f in Z[x]; nullopt otherwise (including g = 0).
std::optional<ZxPoly> divide_exact(const ZxPoly& f, const ZxPoly& g);

/// Divides every coefficient by the integer c, which must divide them all.
ZxPoly divide_integer_exact(const ZxPoly& f, const Integer& c);

/// gcd in the UFD Z[x], normalised to a positive leading coefficient;
/// gcd(0, 0) = 0.
ZxPoly gcd(const ZxPoly& f, const ZxPoly& g);

}  // namespace pdt

#endif  // PDT_ZX_POLY_HPP
