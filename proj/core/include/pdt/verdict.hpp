#ifndef PDT_VERDICT_HPP
#define PDT_VERDICT_HPP

#include <string>
#include <string_view>
#include <utility>

namespace pdt {

/// Search space for certificates: polynomial degree at most max_deg and
/// integer coefficients in [-coeff_box, coeff_box].
struct Bounds {
  int max_deg = 2;
  long coeff_box = 12;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

enum class VerdictKind { Yes, No, Unknown };

std::string_view to_string(VerdictKind kind);

/*
 * Outcome of a search-bounded decision. Yes and No are always backed by
 * exact evidence kept next to the verdict by the operation that produced
 * it (a certificate or an obstruction); Unknown records the bounds that
 * were exhausted. `reason` is a short human-readable summary.
 */
struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;
  Bounds bounds;

  static Verdict yes(std::string reason, Bounds b) { return {VerdictKind::Yes, std::move(reason), b}; }
  static Verdict no(std::string reason, Bounds b) { return {VerdictKind::No, std::move(reason), b}; }
  static Verdict unknown(std::string reason, Bounds b) {
    return {VerdictKind::Unknown, std::move(reason), b};
  }

  bool is_yes() const noexcept { return kind == VerdictKind::Yes; }
  bool is_no() const noexcept { return kind == VerdictKind::No; }
  bool is_unknown() const noexcept { return kind == VerdictKind::Unknown; }
};

/// Conjunction: the first No, else the first Unknown, else a.
inline Verdict meet(const Verdict& a, const Verdict& b) {
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return a;
}

inline std::string_view to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Yes: return "yes";
    case VerdictKind::No: return "no";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace pdt

#endif  // PDT_VERDICT_HPP
