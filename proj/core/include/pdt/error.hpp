#ifndef PDT_ERROR_HPP
#define PDT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdt {

enum class ErrorKind {
  ZeroPolynomial,
  DimensionMismatch,
  BadIndex,
  NotAFace,
  NotAFacet,
  RankMismatch,
  MixedSigns,
  BadCertificate,
  EmptySupport,
  UnresolvedFaces,
  MissingGluing,
  DegenerateInput,
  RedundantGenerator,
  InternalInconsistency,
  SchemaError,
  UnknownCommand,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code logic) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::MixedSigns: return "MixedSigns";
    case ErrorKind::BadCertificate: return "BadCertificate";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::UnresolvedFaces: return "UnresolvedFaces";
    case ErrorKind::MissingGluing: return "MissingGluing";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::RedundantGenerator: return "RedundantGenerator";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::UnknownCommand: return "UnknownCommand";
  }
  return "Error";
}

}  // namespace pdt

#endif  // PDT_ERROR_HPP
