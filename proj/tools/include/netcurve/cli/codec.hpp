#pragma once

// JSON documents read and written by the netcurve tool. Every field element
// is its canonical integer encoding; vectors are integer lists.
//
// Code spec:
//   {"field": {"p": 3, "k": 1},
//    "n": 3,
//    "members": [{"label": "a", "basis": [[1,0,0]], "point": [1,0,0]}, ...],
//    "options": {"mode": "plain", "points": ["t=0", "inf"], "seed": 7}}
//
// Curve:
//   {"field": {...}, "n": 3, "degree": 2, "coords": [[c_0, ..., c_d], ...]}
//
// `modulus` (low-to-high) appears in "field" only when k > 1.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "netcurve/curve.hpp"
#include "netcurve/errors.hpp"
#include "netcurve/field.hpp"
#include "netcurve/netcode.hpp"
#include "netcurve/realize.hpp"

namespace netcurve::cli {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

struct CodeSpec {
  NetworkCode code;
  Mode mode = Mode::plain;
  std::optional<std::vector<P1Point>> points;
  std::optional<std::uint64_t> seed;
};

Json field_to_json(const FieldSpec& spec);
Field field_from_json(const Json& j);

// Throws ParseError on malformed documents, including ones that violate the
// NetworkCode invariants.
CodeSpec code_spec_from_json(const Json& j);
Json code_spec_to_json(const CodeSpec& spec);

Json curve_to_json(const PolyCurve& curve);
PolyCurve curve_from_json(const Json& j);

Json vectors_to_json(const std::vector<Vector>& rows);
Json subspace_to_json(const Subspace& s);

Json realization_to_json(const Realization& r, const VerificationReport& report);

// Comma-separated "t=<int>" / "inf" tokens.
std::vector<P1Point> parse_point_list(const std::vector<std::string>& tokens);

Json parse_text(const std::string& text);
// Two-space indented dump with a trailing newline.
std::string to_text(const Json& j);

std::string read_file(const std::string& path);

}  // namespace netcurve::cli
