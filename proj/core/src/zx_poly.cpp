#include "pdt/zx_poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "pdt/error.hpp"

namespace pdt {

namespace {

const Integer& zero_integer() {
  static const Integer zero{0};
  return zero;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
ZxPoly pseudo_remainder(ZxPoly a, const ZxPoly& b) {
  const long db = b.degree();
  const Integer& lb = b.lead();
  while (!a.is_zero() && a.degree() >= db) {
    const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
    Integer la = a.lead();
    a *= lb;
    a.add_scaled(b, -la, shift);
  }
  return a;
}

ZxPoly primitive_part(const ZxPoly& f) {
  if (f.is_zero()) return f;
  return content_primitive(f).primitive;
}

}  // namespace

ZxPoly::ZxPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

ZxPoly::ZxPoly(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

ZxPoly::ZxPoly(std::initializer_list<long> coeffs_low_to_high) {
  coeffs_.reserve(coeffs_low_to_high.size());
  for (long c : coeffs_low_to_high) coeffs_.emplace_back(c);
  canonicalize();
}

ZxPoly::ZxPoly(std::vector<Integer> coeffs_low_to_high)
    : coeffs_(std::move(coeffs_low_to_high)) {
  canonicalize();
}

ZxPoly ZxPoly::x() { return ZxPoly{0, 1}; }

ZxPoly ZxPoly::monomial(const Integer& c, std::size_t degree) {
  ZxPoly m;
  if (c == 0) return m;
  m.coeffs_.assign(degree + 1, Integer{0});
  m.coeffs_[degree] = c;
  return m;
}

void ZxPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool ZxPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Integer& ZxPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_integer();
}

const Integer& ZxPoly::lead() const {
  return coeffs_.empty() ? zero_integer() : coeffs_.back();
}

ZxPoly& ZxPoly::operator+=(const ZxPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  canonicalize();
  return *this;
}

ZxPoly& ZxPoly::operator-=(const ZxPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  canonicalize();
  return *this;
}

ZxPoly operator*(const ZxPoly& a, const ZxPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer{0});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return ZxPoly(std::move(out));
}

ZxPoly& ZxPoly::operator*=(const ZxPoly& other) {
  *this = *this * other;
  return *this;
}

ZxPoly& ZxPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

void ZxPoly::add_scaled(const ZxPoly& other, const Integer& c, std::size_t shift) {
  if (c == 0 || other.is_zero()) return;
  const std::size_t need = other.coeffs_.size() + shift;
  if (need > coeffs_.size()) coeffs_.resize(need);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i + shift].get_mpz_t(), other.coeffs_[i].get_mpz_t(), c.get_mpz_t());
  }
  canonicalize();
}

ZxPoly ZxPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Integer> out(k, Integer{0});
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return ZxPoly(std::move(out));
}

ZxPoly ZxPoly::scaled(const Integer& c) const {
  ZxPoly out = *this;
  out *= c;
  return out;
}

Integer ZxPoly::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

ZxPoly ZxPoly::operator-() const {
  ZxPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const ZxPoly& a, const ZxPoly& b) {
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t k = n; k-- > 0;) {
    const int c = cmp(a.coeff(k), b.coeff(k));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string ZxPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (k == 0 || mag != 1) os << mag.get_str();
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ZxPoly& f) { return os << f.to_string(); }

OrderSign order_sign(const ZxPoly& f) {
  if (f.is_zero()) return OrderSign::Zero;
  return sgn(f.lead()) > 0 ? OrderSign::Positive : OrderSign::Negative;
}

OrderSign operator*(OrderSign a, OrderSign b) {
  return static_cast<OrderSign>(static_cast<int>(a) * static_cast<int>(b));
}

Comparison compare(const ZxPoly& f, const ZxPoly& g) {
  const auto c = f <=> g;
  if (c < 0) return Comparison::Less;
  if (c > 0) return Comparison::Greater;
  return Comparison::Equal;
}

Integer integer_content(const ZxPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ContentSplit content_primitive(const ZxPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "content of the zero polynomial");
  Integer c = integer_content(f);
  return {c, divide_integer_exact(f, c)};
}

ZxPoly divide_integer_exact(const ZxPoly& f, const Integer& c) {
  if (c == 1) return f;
  std::vector<Integer> out = f.coeffs();
  for (auto& a : out) {
    if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t())) {
      throw Error(ErrorKind::InternalInconsistency,
                  "integer " + c.get_str() + " does not divide " + f.to_string());
    }
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  }
  return ZxPoly(std::move(out));
}

std::optional<ZxPoly> divide_exact(const ZxPoly& f, const ZxPoly& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return ZxPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  ZxPoly rem = f;
  std::vector<Integer> quot(static_cast<std::size_t>(f.degree() - g.degree() + 1), Integer{0});
  const Integer& lg = g.lead();
  while (!rem.is_zero() && rem.degree() >= g.degree()) {
    if (!mpz_divisible_p(rem.lead().get_mpz_t(), lg.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), rem.lead().get_mpz_t(), lg.get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - g.degree());
    quot[shift] = q;
    rem.add_scaled(g, -q, shift);
  }
  if (!rem.is_zero()) return std::nullopt;
  return ZxPoly(std::move(quot));
}

ZxPoly gcd(const ZxPoly& f, const ZxPoly& g) {
  auto normalized = [](ZxPoly p) { return order_sign(p) == OrderSign::Negative ? -p : p; };
  if (f.is_zero()) return normalized(g);
  if (g.is_zero()) return normalized(f);
  Integer c;
  const Integer cf = integer_content(f);
  const Integer cg = integer_content(g);
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  ZxPoly a = primitive_part(f);
  ZxPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    ZxPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  a = normalized(primitive_part(a));
  a *= c;
  return a;
}

}  // namespace pdt
