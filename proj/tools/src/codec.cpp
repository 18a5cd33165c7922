#include "netcurve/cli/codec.hpp"

#include <fstream>
#include <sstream>

namespace netcurve::cli {

namespace {

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::uint64_t as_uint(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw ParseError(where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Raw as_element(const Json& j, const Field& f, const std::string& where) {
  const std::uint64_t v = as_uint(j, where);
  if (v >= f.order()) {
    throw ParseError(where + ": " + std::to_string(v) + " is not an element of " + f.to_string());
  }
  return static_cast<Raw>(v);
}

Vector as_vector(const Json& j, const Field& f, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of integers");
  if (j.size() != n) {
    throw ParseError(where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  }
  Vector v;
  v.reserve(n);
  for (const auto& x : j) v.push_back(as_element(x, f, where));
  return v;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json field_to_json(const FieldSpec& spec) {
  Json j;
  j["p"] = spec.p;
  j["k"] = spec.k;
  if (spec.k > 1) j["modulus"] = spec.modulus;
  return j;
}

Field field_from_json(const Json& j) {
  FieldSpec spec;
  const std::uint64_t p = as_uint(require(j, "p", "field"), "field.p");
  const std::uint64_t k = j.contains("k") ? as_uint(j.at("k"), "field.k") : 1;
  if (p > kMaxFieldOrder || k > 16) throw ParseError("field: order exceeds 2^16");
  spec.p = static_cast<std::uint32_t>(p);
  spec.k = static_cast<std::uint32_t>(k);
  try {
    if (j.contains("modulus")) {
      const auto& m = j.at("modulus");
      if (!m.is_array()) throw ParseError("field.modulus: expected a list of integers");
      for (const auto& c : m) spec.modulus.push_back(static_cast<std::uint32_t>(as_uint(c, "field.modulus")));
      if (spec.k == 1) spec.modulus.clear();
    } else if (spec.k > 1) {
      spec.modulus = find_irreducible(spec.p, spec.k);
    }
    return Field(std::move(spec));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

CodeSpec code_spec_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("code spec: expected a JSON object");
  const Field field = field_from_json(require(j, "field", "code spec"));
  const std::uint64_t n = as_uint(require(j, "n", "code spec"), "n");
  if (n == 0 || n > 4096) throw ParseError("n: out of range");

  const auto& jm = require(j, "members", "code spec");
  if (!jm.is_array()) throw ParseError("members: expected a list");
  std::vector<Member> members;
  for (std::size_t i = 0; i < jm.size(); ++i) {
    const auto& m = jm[i];
    const std::string label = as_string(require(m, "label", "member " + std::to_string(i)), "label");
    const std::string where = "member " + label;
    const auto& jb = require(m, "basis", where);
    if (!jb.is_array()) throw ParseError(where + ": basis must be a list of rows");
    std::vector<Vector> rows;
    for (const auto& r : jb) rows.push_back(as_vector(r, field, n, where + " basis"));
    Subspace space = Subspace::span(field, n, rows);
    std::optional<ProjPoint> point;
    if (m.contains("point") && !m.at("point").is_null()) {
      Vector v = as_vector(m.at("point"), field, n, where + " point");
      if (is_zero(v)) throw ParseError(where + ": point is the zero vector");
      point = ProjPoint(field, std::move(v));
    }
    members.push_back({label, std::move(space), std::move(point)});
  }

  CodeSpec out{[&] {
    try {
      return NetworkCode(field, n, std::move(members));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }(), Mode::plain, std::nullopt, std::nullopt};

  if (j.contains("options")) {
    const auto& o = j.at("options");
    if (!o.is_object()) throw ParseError("options: expected an object");
    try {
      if (o.contains("mode")) out.mode = parse_mode(as_string(o.at("mode"), "options.mode"));
      if (o.contains("points")) {
        const auto& jp = o.at("points");
        if (!jp.is_array()) throw ParseError("options.points: expected a list");
        std::vector<std::string> tokens;
        for (const auto& t : jp) tokens.push_back(as_string(t, "options.points"));
        out.points = parse_point_list(tokens);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
    if (o.contains("seed")) out.seed = as_uint(o.at("seed"), "options.seed");
  }
  return out;
}

Json vectors_to_json(const std::vector<Vector>& rows) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(r);
  return j;
}

Json subspace_to_json(const Subspace& s) { return vectors_to_json(s.basis().row_list()); }

Json code_spec_to_json(const CodeSpec& spec) {
  const NetworkCode& code = spec.code;
  Json j;
  j["field"] = field_to_json(code.field().spec());
  j["n"] = code.ambient();
  Json members = Json::array();
  for (const auto& m : code.members()) {
    Json jm;
    jm["label"] = m.label;
    jm["basis"] = subspace_to_json(m.space);
    if (m.point) jm["point"] = m.point->coords();
    members.push_back(std::move(jm));
  }
  j["members"] = std::move(members);
  Json options;
  options["mode"] = to_string(spec.mode);
  if (spec.points) {
    Json pts = Json::array();
    for (const auto& p : *spec.points) pts.push_back(p.to_string());
    options["points"] = std::move(pts);
  }
  if (spec.seed) options["seed"] = *spec.seed;
  j["options"] = std::move(options);
  return j;
}

Json curve_to_json(const PolyCurve& curve) {
  Json j;
  j["field"] = field_to_json(curve.field().spec());
  j["n"] = curve.ambient();
  j["degree"] = curve.degree_bound();
  Json coords = Json::array();
  for (const auto& f : curve.coords()) {
    Vector c(curve.degree_bound() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.coeff(i);
    coords.push_back(std::move(c));
  }
  j["coords"] = std::move(coords);
  return j;
}

PolyCurve curve_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("curve: expected a JSON object");
  const Field field = field_from_json(require(j, "field", "curve"));
  const auto& jc = require(j, "coords", "curve");
  if (!jc.is_array() || jc.empty()) throw ParseError("curve.coords: expected a non-empty list");
  if (j.contains("n") && as_uint(j.at("n"), "curve.n") != jc.size()) {
    throw ParseError("curve: n does not match the number of coordinates");
  }
  std::size_t longest = 0;
  for (const auto& c : jc) {
    if (!c.is_array()) throw ParseError("curve.coords: expected lists of integers");
    longest = std::max<std::size_t>(longest, c.size());
  }
  const std::size_t degree =
      j.contains("degree") ? as_uint(j.at("degree"), "curve.degree") : (longest == 0 ? 0 : longest - 1);
  std::vector<Polynomial> coords;
  for (const auto& c : jc) {
    std::vector<Raw> coeffs;
    for (const auto& x : c) coeffs.push_back(as_element(x, field, "curve.coords"));
    coords.emplace_back(field, std::move(coeffs));
  }
  try {
    return PolyCurve(field, degree, std::move(coords));
  } catch (const Error& e) {
    throw ParseError(std::string("curve: ") + e.what());
  }
}

Json realization_to_json(const Realization& r, const VerificationReport& report) {
  const auto& plan = r.plan;
  Json j;
  j["field"] = field_to_json(plan.field.spec());
  j["n"] = plan.ambient;
  j["mode"] = to_string(plan.mode);
  j["degree"] = plan.degree;
  j["eta"] = plan.eta_total();

  Json members = Json::array();
  for (const auto& m : plan.members) {
    Json jm;
    jm["label"] = m.label;
    jm["location"] = m.location.to_string();
    jm["point"] = m.marked.coords();
    jm["dim"] = m.dim;
    jm["eta"] = m.eta;
    jm["subspace"] = subspace_to_json(m.space);
    jm["designated_basis"] = vectors_to_json(m.designated_basis);
    members.push_back(std::move(jm));
  }
  j["plan"] = std::move(members);
  j["projection"] = vectors_to_json(r.projection.matrix.row_list());
  j["curve"] = curve_to_json(r.curve);

  Json checks = Json::array();
  for (const auto& m : report.members) {
    Json jm;
    jm["label"] = m.label;
    jm["location"] = m.location.to_string();
    for (const auto& c : m.checks) {
      jm[c.name] = {{"result", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}};
    }
    checks.push_back(std::move(jm));
  }
  j["verification"] = {{"passed", report.passed()}, {"members", std::move(checks)}};
  return j;
}

std::vector<P1Point> parse_point_list(const std::vector<std::string>& tokens) {
  std::vector<P1Point> out;
  for (const auto& raw : tokens) {
    std::stringstream ss(raw);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        out.push_back(P1Point::parse(tok));
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }
  }
  return out;
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace netcurve::cli
