#ifndef PDT_SERIALIZE_HPP
#define PDT_SERIALIZE_HPP

#include <cstddef>
#include <optional>

#include <nlohmann/json.hpp>

#include "pdt/divisor.hpp"
#include "pdt/fan.hpp"
#include "pdt/presentation.hpp"
#include "pdt/psigma_ideal.hpp"
#include "pdt/semimodule.hpp"

namespace pdt {

/// Insertion-ordered, so output field order is stable.
using Json = nlohmann::ordered_json;

/*
 * Encodings: a polynomial is an array of integer coefficients, lowest
 * degree first (x - 2 is [-2, 1], zero is []). Coefficients outside the
 * int64 range are written as decimal strings and accepted either way.
 * Parse failures throw SchemaError.
 */
Json to_json(const ZxPoly& f);
ZxPoly poly_from_json(const Json& j);

Json to_json(const ZxVector& v);
ZxVector vector_from_json(const Json& j, std::optional<std::size_t> length = std::nullopt);
Json vectors_to_json(const std::vector<ZxVector>& vs);

/// Array of rows.
Json to_json(const ZxMatrix& m);

Json to_json(const Bounds& b);
Bounds bounds_from_json(const Json& j);
Json to_json(const Verdict& v);

/// {"ambient": n, "generators": [...]}
Json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const Json& j);
Json semimodule_to_json(const AffineSemimodule& s);
/// Runs the redundancy check under the given bounds.
AffineSemimodule semimodule_from_json(const Json& j, const Bounds& check);

Json to_json(const Face& f);
Json to_json(const PSigmaMonomial& m);
Json to_json(const Binomial& b);
Binomial binomial_from_json(const Json& j);

Json fan_to_json(const Fan& f);
Fan fan_from_json(const Json& j, const Bounds& check);

/// {"classes": [{"id": class id, "coeff": poly}, ...]}
Json divisor_to_json(const DivisorContext& ctx, const WeilDivisor& d);
/// Missing classes default to zero.
WeilDivisor divisor_from_json(const DivisorContext& ctx, const Json& j);

/// [{"exponent": [...], "coeff": "p/q"}, ...]
SupportedElement element_from_json(const Json& j, std::size_t ambient);

Json to_json(const ModulePresentation& p);

}  // namespace pdt

#endif  // PDT_SERIALIZE_HPP
