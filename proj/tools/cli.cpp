#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include <openssl/evp.h>

#include "pdt/bounded_search.hpp"
#include "pdt/error.hpp"

namespace pdt::cli {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("payload needs field \"") + key + "\"");
  return j.at(key);
}

void require_kind(const InputDocument& in, std::initializer_list<const char*> kinds) {
  for (const char* k : kinds) {
    if (in.kind == k) return;
  }
  std::string list;
  for (const char* k : kinds) list += std::string(list.empty() ? "" : ", ") + k;
  schema("input kind \"" + in.kind + "\" not accepted here (expected " + list + ")");
}

std::vector<ZxVector> raw_vectors(const Json& sm) {
  std::vector<ZxVector> out;
  const Json& gens = member(sm, "generators");
  if (!gens.is_array()) schema("\"generators\" must be an array");
  for (const auto& g : gens) out.push_back(vector_from_json(g));
  return out;
}

// The object holding the geometry: the payload itself or, for divisor
// queries, its "fan" or "semimodule" member.
const Json& geometry(const InputDocument& in, std::string& kind) {
  if (in.kind != "divisor-query") {
    kind = in.kind;
    return in.payload;
  }
  for (const char* k : {"fan", "semimodule", "points"}) {
    if (in.payload.is_object() && in.payload.contains(k)) {
      kind = k;
      return in.payload.at(k);
    }
  }
  schema("divisor-query needs a \"fan\", \"semimodule\" or \"points\" field");
}

std::vector<ZxVector> all_vectors(const InputDocument& in) {
  std::string kind;
  const Json& g = geometry(in, kind);
  if (kind != "fan") return raw_vectors(g);
  std::vector<ZxVector> out;
  for (const auto& c : member(g, "cones")) {
    auto v = raw_vectors(c);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

Bounds resolve_bounds(const InputDocument& in, const RunOptions& opt) {
  Bounds b = in.bounds ? *in.bounds : opt.env_bounds ? *opt.env_bounds : default_bounds(all_vectors(in));
  if (opt.bounds_deg) b.max_deg = *opt.bounds_deg;
  if (opt.bounds_box) b.coeff_box = *opt.bounds_box;
  return b;
}

std::size_t ambient_of(const Json& j) {
  const Json& a = member(j, "ambient");
  if (!a.is_number_integer() || a.get<long long>() < 0) schema("\"ambient\" must be a nonnegative integer");
  return a.get<std::size_t>();
}

std::vector<ZxVector> load_points(const InputDocument& in, std::size_t& ambient) {
  std::string kind;
  const Json& g = geometry(in, kind);
  if (kind == "fan") schema("expected points or a semimodule, got a fan");
  ambient = ambient_of(g);
  auto pts = raw_vectors(g);
  for (const auto& p : pts) {
    if (p.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "point length differs from ambient");
  }
  return pts;
}

AffineSemimodule load_semimodule(const InputDocument& in, const Bounds& b) {
  std::string kind;
  const Json& g = geometry(in, kind);
  if (kind == "fan") schema("expected a semimodule, got a fan");
  return semimodule_from_json(g, b);
}

Fan load_fan(const InputDocument& in, const Bounds& b) {
  std::string kind;
  const Json& g = geometry(in, kind);
  if (kind == "fan") {
    Fan f = fan_from_json(g, b);
    complete_gluing(f, b);
    return f;
  }
  if (kind == "points") {
    std::size_t n = 0;
    auto pts = load_points(in, n);
    return projective_fan(pts, n, b);
  }
  return Fan::single(semimodule_from_json(g, b));
}

Json indices_json(const std::vector<std::size_t>& idx) { return Json(idx); }

Json faces_json(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (const auto& f : faces) out.push_back(to_json(f));
  return out;
}

Json unresolved_json(const FaceEnumeration& e) {
  Json out = Json::array();
  for (const auto& [idx, v] : e.unresolved) out.push_back(Json{{"indices", idx}, {"verdict", to_json(v)}});
  return out;
}

Json presentation_json(const ModulePresentation& p) { return to_json(p); }

using Handler = std::function<Json(const InputDocument&, const Bounds&, VerdictCounts&)>;

Json cmd_faces(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"semimodule"});
  const AffineSemimodule s = load_semimodule(in, b);
  const FaceEnumeration e = enumerate_faces(s, b);
  c.yes += e.faces.size();
  c.no += e.no_count;
  c.unknown += e.unresolved.size();
  return Json{{"count", e.faces.size()},
              {"faces", faces_json(e.faces)},
              {"rejected", e.no_count},
              {"unresolved", unresolved_json(e)}};
}

Json cmd_facets(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"semimodule"});
  const AffineSemimodule s = load_semimodule(in, b);
  const FaceEnumeration e = enumerate_faces(s, b);
  c.unknown += e.unresolved.size();
  if (!e.complete()) return Json{{"facets", nullptr}, {"unresolved", unresolved_json(e)}};
  const auto fs = facets(s, e);
  c.yes += fs.size();
  return Json{{"count", fs.size()}, {"facets", faces_json(fs)}};
}

Json face_result_json(const FaceResult& r) {
  return Json{{"verdict", to_json(r.verdict)},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"obstruction", r.obstruction ? to_json(*r.obstruction) : Json(nullptr)}};
}

Json cmd_pointed(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"semimodule"});
  const FaceResult r = is_pointed(load_semimodule(in, b), b);
  c.add(r.verdict);
  return face_result_json(r);
}

Json cmd_compact(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"semimodule"});
  const bool compact = is_compact(load_semimodule(in, b), b);
  ++(compact ? c.yes : c.no);
  return Json{{"compact", compact}};
}

Json normal_json(const NormalVector& nv) {
  return Json{{"indices", nv.face.indices}, {"values", to_json(nv.values)}};
}

Json cmd_smooth(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  if (in.kind == "semimodule") {
    const SmoothnessResult r = is_smooth_semimodule(load_semimodule(in, b), b);
    c.add(r.verdict);
    Json normals = Json::array();
    for (const auto& nv : r.normals) normals.push_back(normal_json(nv));
    return Json{{"verdict", to_json(r.verdict)}, {"normals", normals}};
  }
  require_kind(in, {"fan", "points", "divisor-query"});
  const DivisorContext ctx(load_fan(in, b), b);
  const SmoothVarietyResult r = is_smooth_variety(ctx);
  c.add(r.verdict);
  return Json{{"verdict", to_json(r.verdict)},
              {"cl_shape", r.cl_shape},
              {"pic_shape", r.pic_shape},
              {"shapes_agree", r.shapes_agree ? Json(*r.shapes_agree) : Json(nullptr)}};
}

Json cmd_toric_ideal(const InputDocument& in, const Bounds&, VerdictCounts&) {
  require_kind(in, {"points", "semimodule"});
  std::size_t n = 0;
  const auto pts = load_points(in, n);
  const ToricIdealHandle h = toric_ideal_from_points(pts, n);
  Json bins = Json::array();
  for (const auto& bn : h.generators) bins.push_back(to_json(bn));
  return Json{{"support", lattice_to_json(h.support)}, {"binomials", bins}, {"toric", is_toric(h.support)}};
}

Json cmd_homogeneous(const InputDocument& in, const Bounds&, VerdictCounts&) {
  require_kind(in, {"points", "semimodule"});
  std::size_t n = 0;
  const auto pts = load_points(in, n);
  const HomogeneityResult r = is_homogeneous(pts, n);
  Json w = nullptr;
  if (r.witness) w = Json{{"v", to_json(r.witness->first)}, {"g", to_json(r.witness->second)}};
  return Json{{"homogeneous", r.homogeneous}, {"witness", w}};
}

Json cmd_sigma_dim(const InputDocument& in, const Bounds&, VerdictCounts&) {
  require_kind(in, {"points", "semimodule"});
  std::size_t n = 0;
  const auto pts = load_points(in, n);
  return Json{{"affine", sigma_dimension(pts, n, false)}, {"projective", sigma_dimension(pts, n, true)}};
}

Json cmd_projective_fan(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  require_kind(in, {"points"});
  std::size_t n = 0;
  const auto pts = load_points(in, n);
  return fan_to_json(projective_fan(pts, n, b));
}

Json cmd_fan_check(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"fan", "points"});
  Fan f;
  if (in.kind == "fan") {
    f = fan_from_json(in.payload, b);
  } else {
    f = load_fan(in, b);
  }
  const FanCheck r = check_fan(f, b);
  c.add(r.verdict);
  Json pairs = Json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(Json{{"i", p.i}, {"j", p.j}, {"u", to_json(p.u)}, {"verdict", to_json(p.verdict)}});
  }
  Json triples = Json::array();
  for (const auto& t : r.triples) {
    triples.push_back(Json{{"i", t.i}, {"j", t.j}, {"k", t.k}, {"verdict", to_json(t.verdict)}});
  }
  return Json{{"verdict", to_json(r.verdict)}, {"same_md", r.same_md}, {"pairs", pairs}, {"triples", triples}};
}

Json cmd_classify(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  const Fan f = load_fan(in, b);
  const FaceClassification fc = classify_faces(f, b);
  Json classes = Json::array();
  for (std::size_t id = 0; id < fc.classes.size(); ++id) {
    Json members = Json::array();
    for (const auto& m : fc.classes[id].members) {
      members.push_back(Json{{"cone", m.cone}, {"indices", indices_json(m.face.indices)}});
    }
    classes.push_back(Json{{"id", id},
                           {"rank", fc.classes[id].rank},
                           {"corank", fc.classes[id].corank},
                           {"members", members}});
  }
  Json by = Json::object();
  for (const auto& [r, ids] : fc.by_corank) by[std::to_string(r)] = ids;
  return Json{{"classes", classes}, {"by_corank", by}};
}

Json cmd_normal_vectors(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  Json out = Json::array();
  if (in.kind == "semimodule") {
    const AffineSemimodule s = load_semimodule(in, b);
    for (const auto& f : facets(s, b)) out.push_back(normal_json(standard_normal_vector(s, f)));
    return Json{{"normals", out}};
  }
  const DivisorContext ctx(load_fan(in, b), b);
  for (const auto& p : ctx.primes()) {
    Json j = normal_json(p.normal);
    j["cone"] = p.cone;
    j["class"] = p.class_id;
    out.push_back(std::move(j));
  }
  return Json{{"normals", out}};
}

Json cmd_div_char(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  require_kind(in, {"divisor-query"});
  const DivisorContext ctx(load_fan(in, b), b);
  const ZxVector u = vector_from_json(member(in.payload, "u"), ctx.fan().ambient());
  return Json{{"divisor", divisor_to_json(ctx, div_character(ctx, u))}};
}

Json cmd_div_principal(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  require_kind(in, {"divisor-query"});
  const DivisorContext ctx(load_fan(in, b), b);
  const SupportedElement f = element_from_json(member(in.payload, "element"), ctx.fan().ambient());
  return Json{{"divisor", divisor_to_json(ctx, div_principal(ctx, f))}};
}

Json cmd_class_module(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  const DivisorContext ctx(load_fan(in, b), b);
  return presentation_json(class_module(ctx));
}

Json cmd_cartier(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"divisor-query"});
  const DivisorContext ctx(load_fan(in, b), b);
  const WeilDivisor d = divisor_from_json(ctx, member(in.payload, "divisor"));
  const CartierResult r = is_cartier(ctx, d);
  c.add(r.verdict);
  Json data = nullptr;
  if (r.data) data = Json{{"characters", vectors_to_json(r.data->characters)}};
  return Json{{"verdict", to_json(r.verdict)}, {"local_data", data}};
}

Json cmd_pic(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  const DivisorContext ctx(load_fan(in, b), b);
  return presentation_json(pic_module(ctx));
}

Json cmd_face_saturation(const InputDocument& in, const Bounds& b, VerdictCounts&) {
  require_kind(in, {"semimodule"});
  Json out = Json::array();
  bool saturated = true;
  for (const auto& r : face_saturation_check(load_semimodule(in, b), b)) {
    saturated = saturated && !r.violation;
    out.push_back(Json{{"indices", r.face.indices},
                       {"violation", r.violation},
                       {"example", r.example ? to_json(*r.example) : Json(nullptr)}});
  }
  return Json{{"face_saturated", saturated}, {"faces", out}};
}

Json cmd_morphism_check(const InputDocument& in, const Bounds& b, VerdictCounts& c) {
  require_kind(in, {"semimodule"});
  const AffineSemimodule source = load_semimodule(in, b);
  const AffineSemimodule target = semimodule_from_json(member(in.payload, "target"), b);
  std::vector<ZxVector> images;
  for (const auto& im : member(in.payload, "images")) images.push_back(vector_from_json(im, target.ambient()));
  const MorphismResult r = check_morphism(source, target, images, b);
  c.add(r.verdict);
  return Json{{"verdict", to_json(r.verdict)},
              {"violated_syzygy", r.violated_syzygy ? to_json(*r.violated_syzygy) : Json(nullptr)},
              {"image_coefficients", vectors_to_json(r.image_coefficients)}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"faces", cmd_faces},
      {"facets", cmd_facets},
      {"pointed", cmd_pointed},
      {"compact", cmd_compact},
      {"smooth", cmd_smooth},
      {"toric-ideal", cmd_toric_ideal},
      {"homogeneous", cmd_homogeneous},
      {"sigma-dim", cmd_sigma_dim},
      {"projective-fan", cmd_projective_fan},
      {"fan-check", cmd_fan_check},
      {"classify", cmd_classify},
      {"normal-vectors", cmd_normal_vectors},
      {"div-char", cmd_div_char},
      {"div-principal", cmd_div_principal},
      {"class-module", cmd_class_module},
      {"cartier", cmd_cartier},
      {"pic", cmd_pic},
      {"face-saturation", cmd_face_saturation},
      {"morphism-check", cmd_morphism_check},
  };
  return table;
}

}  // namespace

void VerdictCounts::add(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Yes: ++yes; break;
    case VerdictKind::No: ++no; break;
    case VerdictKind::Unknown: ++unknown; break;
  }
}

std::optional<Bounds> parse_bounds_spec(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    Bounds b;
    b.max_deg = std::stoi(spec.substr(0, comma), &used);
    if (used != comma) return std::nullopt;
    const std::string box = spec.substr(comma + 1);
    b.coeff_box = std::stol(box, &used);
    if (used != box.size() || b.coeff_box < 0) return std::nullopt;
    return b;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    schema("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
  InputDocument in;
  if (!j.is_object()) schema("input must be a JSON object");
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) schema("\"kind\" must be a string");
  in.kind = kind.get<std::string>();
  if (in.kind != "points" && in.kind != "semimodule" && in.kind != "fan" && in.kind != "divisor-query") {
    schema("unknown input kind \"" + in.kind + "\"");
  }
  in.payload = member(j, "payload");
  if (j.contains("bounds") && !j["bounds"].is_null()) in.bounds = bounds_from_json(j["bounds"]);
  in.digest = sha256_hex(text);
  return in;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

ResultDocument run(const std::string& command, const InputDocument& input, const RunOptions& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw Error(ErrorKind::UnknownCommand, "unknown command \"" + command + "\"");
  const auto start = std::chrono::steady_clock::now();
  ResultDocument doc;
  doc.command = command;
  doc.input_digest = input.digest;
  const Bounds b = resolve_bounds(input, options);
  try {
    doc.result = it->second(input, b, doc.counts);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnresolvedFaces) throw;
    doc.result = Json{{"unresolved", e.what()}};
    ++doc.counts.unknown;
  }
  doc.result["bounds"] = to_json(b);
  doc.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

Json ResultDocument::to_json(bool with_time) const {
  Json j{{"command", command},
         {"input_digest", input_digest},
         {"result", result},
         {"verdicts", Json{{"yes", counts.yes}, {"no", counts.no}, {"unknown", counts.unknown}}}};
  if (with_time) j["wall_time_ms"] = wall_time_ms;
  return j;
}

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::UnresolvedFaces ? 2 : 1; }

std::string render_text(const ResultDocument& doc) {
  std::ostringstream os;
  os << "command: " << doc.command << "\n";
  os << "input:   sha256 " << doc.input_digest << "\n";
  for (const auto& [key, value] : doc.result.items()) os << key << ": " << value.dump() << "\n";
  os << "verdicts: yes " << doc.counts.yes << ", no " << doc.counts.no << ", unknown " << doc.counts.unknown
     << "\n";
  os << "time: " << std::fixed << std::setprecision(1) << doc.wall_time_ms << " ms\n";
  return os.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::InternalInconsistency, "SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(md[k]);
  return os.str();
}

}  // namespace pdt::cli
