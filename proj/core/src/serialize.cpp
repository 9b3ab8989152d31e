#include "pdt/serialize.hpp"

#include <string>

#include "pdt/error.hpp"

namespace pdt {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema(std::string("expected an object with field \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    schema(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) schema("bad integer string " + j.get<std::string>());
    return z;
  }
  schema("polynomial coefficients must be integers, got " + j.dump());
}

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::vector<ZxVector> vectors_from_json(const Json& j, std::size_t length) {
  if (!j.is_array()) schema("expected an array of vectors");
  std::vector<ZxVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v, length));
  return out;
}

}  // namespace

Json to_json(const ZxPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(integer_to_json(c));
  return out;
}

ZxPoly poly_from_json(const Json& j) {
  if (!j.is_array()) schema("a polynomial is an array of integers, got " + j.dump());
  std::vector<Integer> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c));
  return ZxPoly(std::move(coeffs));
}

Json to_json(const ZxVector& v) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(to_json(f));
  return out;
}

ZxVector vector_from_json(const Json& j, std::optional<std::size_t> length) {
  if (!j.is_array()) schema("a vector is an array of polynomials, got " + j.dump());
  ZxVector out;
  for (const auto& f : j) out.push_back(poly_from_json(f));
  if (length && out.size() != *length) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(out.size()) +
                                                  ", expected " + std::to_string(*length));
  }
  return out;
}

Json vectors_to_json(const std::vector<ZxVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const ZxMatrix& m) { return vectors_to_json(m.row_list()); }

Json to_json(const Bounds& b) { return Json{{"max_deg", b.max_deg}, {"coeff_box", b.coeff_box}}; }

Bounds bounds_from_json(const Json& j) {
  Bounds b;
  const Json& d = field(j, "max_deg");
  const Json& c = field(j, "coeff_box");
  if (!d.is_number_integer() || !c.is_number_integer()) schema("bounds must be integers");
  b.max_deg = d.get<int>();
  b.coeff_box = c.get<long>();
  if (b.coeff_box < 0) schema("coeff_box must be nonnegative");
  return b;
}

Json to_json(const Verdict& v) {
  return Json{{"verdict", std::string(to_string(v.kind))}, {"reason", v.reason}, {"bounds", to_json(v.bounds)}};
}

Json lattice_to_json(const Lattice& l) {
  return Json{{"ambient", l.ambient()}, {"generators", vectors_to_json(l.generators())}};
}

Lattice lattice_from_json(const Json& j) {
  const std::size_t n = size_field(j, "ambient");
  return Lattice(n, vectors_from_json(field(j, "generators"), n));
}

Json semimodule_to_json(const AffineSemimodule& s) {
  return Json{{"ambient", s.ambient()}, {"generators", vectors_to_json(s.generators())}};
}

AffineSemimodule semimodule_from_json(const Json& j, const Bounds& check) {
  const std::size_t n = size_field(j, "ambient");
  return AffineSemimodule(n, vectors_from_json(field(j, "generators"), n), check);
}

Json to_json(const Face& f) {
  return Json{{"indices", f.indices},
              {"witness", f.witness ? to_json(*f.witness) : Json(nullptr)},
              {"rank", f.rank}};
}

Json to_json(const PSigmaMonomial& m) { return to_json(m.exponents()); }

Json to_json(const Binomial& b) { return Json{{"plus", to_json(b.plus)}, {"minus", to_json(b.minus)}}; }

Binomial binomial_from_json(const Json& j) {
  return Binomial{PSigmaMonomial(vector_from_json(field(j, "plus"))),
                  PSigmaMonomial(vector_from_json(field(j, "minus")))};
}

Json fan_to_json(const Fan& f) {
  Json cones = Json::array();
  for (const auto& c : f.cones()) cones.push_back(semimodule_to_json(c));
  Json gluing = Json::array();
  for (const auto& [key, u] : f.gluing_map()) {
    gluing.push_back(Json{{"i", key.first}, {"j", key.second}, {"u", to_json(u)}});
  }
  return Json{{"cones", cones}, {"gluing", gluing}};
}

Fan fan_from_json(const Json& j, const Bounds& check) {
  const Json& cj = field(j, "cones");
  if (!cj.is_array() || cj.empty()) schema("\"cones\" must be a nonempty array");
  std::vector<AffineSemimodule> cones;
  for (const auto& c : cj) cones.push_back(semimodule_from_json(c, check));
  std::map<std::pair<std::size_t, std::size_t>, ZxVector> gluing;
  Fan f(std::move(cones), {});
  if (j.contains("gluing")) {
    const Json& gj = j["gluing"];
    if (!gj.is_array()) schema("\"gluing\" must be an array");
    for (const auto& g : gj) {
      f.set_gluing(size_field(g, "i"), size_field(g, "j"), vector_from_json(field(g, "u"), f.ambient()));
    }
  }
  return f;
}

Json divisor_to_json(const DivisorContext& ctx, const WeilDivisor& d) {
  Json classes = Json::array();
  for (std::size_t k = 0; k < d.coeffs.size(); ++k) {
    if (d.coeffs[k].is_zero()) continue;
    classes.push_back(Json{{"id", ctx.primes().at(k).class_id}, {"coeff", to_json(d.coeffs[k])}});
  }
  return Json{{"classes", classes}};
}

WeilDivisor divisor_from_json(const DivisorContext& ctx, const Json& j) {
  WeilDivisor d{ZxVector(ctx.prime_count())};
  const Json& cj = field(j, "classes");
  if (!cj.is_array()) schema("\"classes\" must be an array");
  for (const auto& c : cj) d.coeffs[ctx.prime_index(size_field(c, "id"))] = poly_from_json(field(c, "coeff"));
  return d;
}

SupportedElement element_from_json(const Json& j, std::size_t ambient) {
  if (!j.is_array()) schema("an element is an array of terms");
  std::vector<SupportedElement::Term> terms;
  for (const auto& t : j) {
    mpq_class q(1);
    if (t.contains("coeff")) {
      const Json& c = t["coeff"];
      if (c.is_string()) {
        if (q.set_str(c.get<std::string>(), 10) != 0) schema("bad rational " + c.get<std::string>());
        q.canonicalize();
      } else {
        q = mpq_class(integer_from_json(c));
      }
    }
    terms.push_back({vector_from_json(field(t, "exponent"), ambient), q});
  }
  return SupportedElement(std::move(terms));
}

Json to_json(const ModulePresentation& p) {
  return Json{{"gens", p.gens()},
              {"relations", to_json(p.relations())},
              {"reduced", to_json(p.reduced())},
              {"shape", p.shape()}};
}

}  // namespace pdt
