#ifndef PDT_DIVISOR_HPP
#define PDT_DIVISOR_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pdt/fan.hpp"
#include "pdt/presentation.hpp"
#include "pdt/semimodule.hpp"

namespace pdt {

/// phi(u) = sum c_i * values_i for u = sum c_i u_i over the parent's
/// generators. Throws BadCertificate when c does not reproduce u.
ZxPoly char_value(const AffineSemimodule& s, const NormalVector& nv, const ZxVector& u,
                  const ZxVector& certificate);
/// Same, finding the certificate; BadCertificate when u is outside S^md.
ZxPoly char_value(const AffineSemimodule& s, const NormalVector& nv, const ZxVector& u);

/// f = sum alpha_u chi^u with distinct exponents and nonzero coefficients.
class SupportedElement {
 public:
  struct Term {
    ZxVector exponent;
    mpq_class coefficient;
  };

  SupportedElement() = default;
  explicit SupportedElement(std::vector<Term> terms);
  static SupportedElement character(ZxVector u);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

 private:
  std::vector<Term> terms_;
};

/// min over the support of char_value, in the total order of Z[x].
ZxPoly valuation(const AffineSemimodule& s, const NormalVector& nv, const SupportedElement& f);
/// valuation(f) - valuation(g).
ZxPoly valuation(const AffineSemimodule& s, const NormalVector& nv, const SupportedElement& f,
                 const SupportedElement& g);

/// One prime divisor per corank-1 face class, with the normal vector of
/// its first member facet.
struct PrimeDivisor {
  std::size_t class_id = 0;
  std::size_t cone = 0;
  NormalVector normal;
};

/*
 * DivisorContext: a fan with its face classes resolved and one standard
 * normal vector per prime divisor. Construction throws UnresolvedFaces or
 * MissingGluing from classification and MixedSigns from a misclassified
 * facet.
 */
class DivisorContext {
 public:
  DivisorContext(Fan fan, const Bounds& bounds);

  const Fan& fan() const noexcept { return fan_; }
  const Bounds& bounds() const noexcept { return bounds_; }
  const FaceClassification& classification() const noexcept { return classes_; }
  const std::vector<PrimeDivisor>& primes() const noexcept { return primes_; }
  std::size_t prime_count() const noexcept { return primes_.size(); }
  /// Prime index for a face class id; BadIndex otherwise.
  std::size_t prime_index(std::size_t class_id) const;
  /// Prime indices with a member facet in the given cone.
  std::vector<std::size_t> primes_meeting(std::size_t cone) const;
  /// phi_k(u) for u in M.
  ZxPoly functional(std::size_t k, const ZxVector& u) const;

 private:
  Fan fan_;
  Bounds bounds_;
  FaceClassification classes_;
  std::vector<PrimeDivisor> primes_;
};

/// Coefficients indexed by prime index (the k-th corank-1 class).
struct WeilDivisor {
  std::vector<ZxPoly> coeffs;

  bool is_zero() const;
  friend bool operator==(const WeilDivisor&, const WeilDivisor&) = default;
};

WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b);
WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b);
WeilDivisor operator*(const ZxPoly& g, const WeilDivisor& d);

WeilDivisor div_character(const DivisorContext& ctx, const ZxVector& u);
WeilDivisor div_principal(const DivisorContext& ctx, const SupportedElement& f);

/// Relations: characteristic divisors of the generators of the first cone.
ModulePresentation class_module(const DivisorContext& ctx);

struct CartierLocalData {
  /// u_i in M per cone, with coefficients over that cone's generators.
  std::vector<ZxVector> characters;
  std::vector<ZxVector> certificates;
};

struct CartierResult {
  Verdict verdict;
  std::optional<CartierLocalData> data;
};

CartierResult is_cartier(const DivisorContext& ctx, const WeilDivisor& d);

/// Generators of the Cartier divisors (projection of the local-data kernel).
Lattice cartier_divisors(const DivisorContext& ctx);
ModulePresentation pic_module(const DivisorContext& ctx);

struct SmoothVarietyResult {
  Verdict verdict;
  std::string cl_shape;
  std::string pic_shape;
  /// Set when both presentations reduced to a recognized shape.
  std::optional<bool> shapes_agree;
};

SmoothVarietyResult is_smooth_variety(const DivisorContext& ctx);

struct RestrictedDivisor {
  DivisorContext chart;
  WeilDivisor divisor;
};

/// Restriction to the single-cone fan of cone i.
RestrictedDivisor restrict_divisor(const DivisorContext& ctx, std::size_t i, const WeilDivisor& d);

}  // namespace pdt

#endif  // PDT_DIVISOR_HPP
