#include "pdt/divisor.hpp"

#include <algorithm>
#include <string>

#include "pdt/error.hpp"

namespace pdt {

namespace {

void require_length(const WeilDivisor& d, std::size_t k) {
  if (d.coeffs.size() != k) {
    throw Error(ErrorKind::DimensionMismatch, "divisor with " + std::to_string(d.coeffs.size()) +
                                                  " coefficients, expected " + std::to_string(k));
  }
}

bool has_member_in(const FaceClass& c, std::size_t cone) {
  return std::any_of(c.members.begin(), c.members.end(),
                     [&](const FaceMember& m) { return m.cone == cone; });
}

}  // namespace

ZxPoly char_value(const AffineSemimodule& s, const NormalVector& nv, const ZxVector& u,
                  const ZxVector& certificate) {
  if (certificate.size() != s.size() || nv.values.size() != s.size() ||
      combine(s.generators(), certificate, s.ambient()) != u) {
    throw Error(ErrorKind::BadCertificate, "certificate does not express the exponent");
  }
  return dot(nv.values, certificate);
}

ZxPoly char_value(const AffineSemimodule& s, const NormalVector& nv, const ZxVector& u) {
  if (u.size() != s.ambient()) throw Error(ErrorKind::DimensionMismatch, "exponent length");
  const auto cert = s.md().member(u);
  if (!cert) throw Error(ErrorKind::BadCertificate, "exponent is not in the difference lattice");
  return char_value(s, nv, u, cert->coefficients);
}

SupportedElement::SupportedElement(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (std::size_t a = 0; a < terms_.size(); ++a) {
    if (terms_[a].coefficient == 0) throw Error(ErrorKind::SchemaError, "zero coefficient in support");
    for (std::size_t b = 0; b < a; ++b) {
      if (terms_[a].exponent == terms_[b].exponent) {
        throw Error(ErrorKind::SchemaError, "repeated exponent in support");
      }
    }
  }
}

SupportedElement SupportedElement::character(ZxVector u) {
  return SupportedElement({Term{std::move(u), mpq_class(1)}});
}

ZxPoly valuation(const AffineSemimodule& s, const NormalVector& nv, const SupportedElement& f) {
  if (f.empty()) throw Error(ErrorKind::EmptySupport, "valuation of an element with empty support");
  std::optional<ZxPoly> best;
  for (const auto& t : f.terms()) {
    ZxPoly v = char_value(s, nv, t.exponent);
    if (!best || compare(v, *best) == Comparison::Less) best = std::move(v);
  }
  return *best;
}

ZxPoly valuation(const AffineSemimodule& s, const NormalVector& nv, const SupportedElement& f,
                 const SupportedElement& g) {
  return valuation(s, nv, f) - valuation(s, nv, g);
}

DivisorContext::DivisorContext(Fan fan, const Bounds& bounds)
    : fan_(std::move(fan)), bounds_(bounds), classes_(classify_faces(fan_, bounds_)) {
  auto it = classes_.by_corank.find(1);
  if (it == classes_.by_corank.end()) return;
  for (std::size_t id : it->second) {
    const FaceMember& m = classes_.classes[id].members.front();
    primes_.push_back(PrimeDivisor{id, m.cone, standard_normal_vector(fan_.cone(m.cone), m.face)});
  }
}

std::size_t DivisorContext::prime_index(std::size_t class_id) const {
  for (std::size_t k = 0; k < primes_.size(); ++k) {
    if (primes_[k].class_id == class_id) return k;
  }
  throw Error(ErrorKind::BadIndex, "face class " + std::to_string(class_id) + " is not a prime divisor");
}

std::vector<std::size_t> DivisorContext::primes_meeting(std::size_t cone) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < primes_.size(); ++k) {
    if (has_member_in(classes_.classes[primes_[k].class_id], cone)) out.push_back(k);
  }
  return out;
}

ZxPoly DivisorContext::functional(std::size_t k, const ZxVector& u) const {
  const PrimeDivisor& p = primes_.at(k);
  return char_value(fan_.cone(p.cone), p.normal, u);
}

bool WeilDivisor::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const ZxPoly& c) { return c.is_zero(); });
}

WeilDivisor operator+(const WeilDivisor& a, const WeilDivisor& b) {
  require_length(b, a.coeffs.size());
  return WeilDivisor{a.coeffs + b.coeffs};
}

WeilDivisor operator-(const WeilDivisor& a, const WeilDivisor& b) {
  require_length(b, a.coeffs.size());
  return WeilDivisor{a.coeffs - b.coeffs};
}

WeilDivisor operator*(const ZxPoly& g, const WeilDivisor& d) { return WeilDivisor{scale(g, d.coeffs)}; }

WeilDivisor div_character(const DivisorContext& ctx, const ZxVector& u) {
  WeilDivisor d;
  for (std::size_t k = 0; k < ctx.prime_count(); ++k) d.coeffs.push_back(ctx.functional(k, u));
  return d;
}

WeilDivisor div_principal(const DivisorContext& ctx, const SupportedElement& f) {
  if (f.empty()) throw Error(ErrorKind::EmptySupport, "principal divisor of an empty support");
  WeilDivisor d;
  for (const auto& p : ctx.primes()) d.coeffs.push_back(valuation(ctx.fan().cone(p.cone), p.normal, f));
  return d;
}

ModulePresentation class_module(const DivisorContext& ctx) {
  std::vector<ZxVector> cols;
  for (const auto& u : ctx.fan().cone(0).generators()) cols.push_back(div_character(ctx, u).coeffs);
  return ModulePresentation(ZxMatrix::from_columns(cols, ctx.prime_count()));
}

CartierResult is_cartier(const DivisorContext& ctx, const WeilDivisor& d) {
  require_length(d, ctx.prime_count());
  const Bounds& b = ctx.bounds();
  CartierLocalData data;
  for (std::size_t i = 0; i < ctx.fan().size(); ++i) {
    const AffineSemimodule& s = ctx.fan().cone(i);
    const std::vector<std::size_t> ks = ctx.primes_meeting(i);
    std::vector<ZxVector> cols;
    for (const auto& u : s.generators()) {
      ZxVector col;
      for (std::size_t k : ks) col.push_back(ctx.functional(k, u));
      cols.push_back(std::move(col));
    }
    ZxVector target;
    for (std::size_t k : ks) target.push_back(d.coeffs[k]);
    const auto cert = Lattice(ks.size(), cols).member(target);
    if (!cert) {
      return CartierResult{Verdict::no("no character matches the divisor on cone " + std::to_string(i), b),
                           std::nullopt};
    }
    ZxVector u = combine(s.generators(), cert->coefficients, s.ambient());
    for (std::size_t a = 0; a < ks.size(); ++a) {
      if (ctx.functional(ks[a], u) != target[a]) {
        throw Error(ErrorKind::InternalInconsistency, "local character does not reproduce the divisor");
      }
    }
    data.characters.push_back(std::move(u));
    data.certificates.push_back(cert->coefficients);
  }
  return CartierResult{Verdict::yes("locally characteristic on every cone", b), std::move(data)};
}

Lattice cartier_divisors(const DivisorContext& ctx) {
  const std::size_t k = ctx.prime_count();
  // Unknowns: a (k entries), then the coordinates c_i of every cone.
  std::vector<ZxVector> rows;
  std::size_t offset = k;
  std::size_t unknowns = k;
  for (const auto& s : ctx.fan().cones()) unknowns += s.size();
  for (std::size_t i = 0; i < ctx.fan().size(); ++i) {
    const AffineSemimodule& s = ctx.fan().cone(i);
    for (std::size_t p : ctx.primes_meeting(i)) {
      ZxVector row(unknowns);
      row[p] = ZxPoly(1);
      for (std::size_t j = 0; j < s.size(); ++j) row[offset + j] = -ctx.functional(p, s.generator(j));
      rows.push_back(std::move(row));
    }
    offset += s.size();
  }
  std::vector<ZxVector> gens;
  if (rows.empty()) {
    for (std::size_t p = 0; p < k; ++p) gens.push_back(unit_vector(k, p));
  } else {
    const Lattice kernel = syzygy_basis(ZxMatrix::from_rows(rows, unknowns));
    for (const auto& z : kernel.generators()) gens.emplace_back(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k));
  }
  const Lattice all(k, gens);
  const Lattice basis = free_basis(all, all.rank());
  return basis.generators().size() == all.rank() ? basis : all.minimalized();
}

ModulePresentation pic_module(const DivisorContext& ctx) {
  if (ctx.fan().size() == 1) return ModulePresentation(ZxMatrix(0, 0));
  const Lattice cdiv = cartier_divisors(ctx);
  const std::size_t t = cdiv.generators().size();
  std::vector<ZxVector> cols = cdiv.generator_relations();
  for (const auto& u : ctx.fan().cone(0).generators()) {
    const auto cert = cdiv.member(div_character(ctx, u).coeffs);
    if (!cert) throw Error(ErrorKind::InternalInconsistency, "characteristic divisor is not Cartier");
    cols.push_back(cert->coefficients);
  }
  return ModulePresentation(ZxMatrix::from_columns(cols, t));
}

SmoothVarietyResult is_smooth_variety(const DivisorContext& ctx) {
  const Bounds& b = ctx.bounds();
  SmoothVarietyResult out;
  const ModulePresentation cl = class_module(ctx);
  const ModulePresentation pic = pic_module(ctx);
  out.cl_shape = cl.shape();
  out.pic_shape = pic.shape();
  if (cl.recognized() && pic.recognized()) out.shapes_agree = cl.shape() == pic.shape();

  const Lattice& m = ctx.fan().md();
  if (free_basis(m, m.rank()).generators().size() != m.rank()) {
    out.verdict = Verdict::unknown("could not certify that the difference lattice is free", b);
    return out;
  }
  out.verdict = Verdict::yes("every cone is smooth", b);
  for (std::size_t i = 0; i < ctx.fan().size(); ++i) {
    const Verdict v = is_smooth_semimodule(ctx.fan().cone(i), b).verdict;
    if (v.is_no()) {
      out.verdict = Verdict::no("cone " + std::to_string(i) + ": " + v.reason, b);
      return out;
    }
    out.verdict = meet(out.verdict, v);
  }
  return out;
}

RestrictedDivisor restrict_divisor(const DivisorContext& ctx, std::size_t i, const WeilDivisor& d) {
  if (i >= ctx.fan().size()) throw Error(ErrorKind::BadIndex, "cone index " + std::to_string(i));
  require_length(d, ctx.prime_count());
  RestrictedDivisor out{DivisorContext(Fan::single(ctx.fan().cone(i)), ctx.bounds()), {}};
  out.divisor.coeffs.assign(out.chart.prime_count(), ZxPoly());
  for (std::size_t k = 0; k < ctx.prime_count(); ++k) {
    for (const auto& m : ctx.classification().classes[ctx.primes()[k].class_id].members) {
      if (m.cone != i) continue;
      for (std::size_t q = 0; q < out.chart.prime_count(); ++q) {
        const PrimeDivisor& p = out.chart.primes()[q];
        if (out.chart.classification().classes[p.class_id].members.front().face.indices == m.face.indices) {
          out.divisor.coeffs[q] = d.coeffs[k];
        }
      }
    }
  }
  return out;
}

}  // namespace pdt
