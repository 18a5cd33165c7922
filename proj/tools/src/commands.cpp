#include "netcurve/cli/commands.hpp"

#include <fstream>
#include <ostream>

#include "netcurve/cli/codec.hpp"
#include "netcurve/errors.hpp"

namespace netcurve::cli {

namespace {

int report(std::ostream& err, int code, const std::string& message) {
  err << "netcurve: " << message << "\n";
  return code;
}

bool write_output(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path) {
    out << text;
    return true;
  }
  std::ofstream f(*path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int cmd_realize(const std::string& input, const RealizeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    CodeSpec spec = code_spec_from_json(parse_text(read_file(input)));
    const Mode mode = opts.mode.value_or(spec.mode);
    const auto& points = opts.points ? opts.points : spec.points;

    const Realization r = construct(spec.code, mode, points);
    const VerificationReport rep = verify_realization(r);
    if (!write_output(opts.output, to_text(realization_to_json(r, rep)), out)) {
      return report(err, kOutputError, "cannot write " + *opts.output);
    }
    if (!rep.passed()) {
      for (const auto& m : rep.members)
        for (const auto& c : m.checks)
          if (!c.passed) err << "netcurve: member " << m.label << " failed " << c.name << ": " << c.detail << "\n";
      return kVerificationFailed;
    }
    return kOk;
  } catch (const HallViolation& e) {
    return report(err, kHallViolation, e.what());
  } catch (const TooManyMembers& e) {
    return report(err, kTooManyMembers, e.what());
  } catch (const OrdinaryModeDimension& e) {
    return report(err, kOrdinaryModeDimension, e.what());
  } catch (const Error& e) {
    return report(err, kInvalidInput, e.what());
  }
}

int cmd_distances(const std::string& input, std::ostream& out, std::ostream& err) {
  try {
    const CodeSpec spec = code_spec_from_json(parse_text(read_file(input)));
    const auto& members = spec.code.members();
    Json j;
    Json labels = Json::array();
    for (const auto& m : members) labels.push_back(m.label);
    j["labels"] = std::move(labels);
    if (members.size() < 2) {
      j["matrix"] = Json::array();
      j["min_distance"] = "n/a";
    } else {
      j["matrix"] = distance_matrix(spec.code);
      j["min_distance"] = min_distance(spec.code);
    }
    out << to_text(j);
    return kOk;
  } catch (const Error& e) {
    return report(err, kInvalidInput, e.what());
  }
}

int cmd_inspect(const std::string& input, const InspectOptions& opts, std::ostream& out, std::ostream& err) {
  std::optional<PolyCurve> parsed;
  try {
    const Json doc = parse_text(read_file(input));
    parsed = curve_from_json(doc.is_object() && doc.contains("curve") ? doc.at("curve") : doc);
  } catch (const Error& e) {
    return report(err, kInvalidInput, e.what());
  }
  const PolyCurve& curve = *parsed;
  const auto points = opts.points.value_or(enumerate_p1(curve.field()));

  Json j;
  j["curve"] = curve_to_json(curve);
  Json rows = Json::array();
  for (const auto& p : points) {
    Json jp;
    jp["point"] = p.to_string();
    try {
      const auto exp = local_expansion(curve, p);
      const auto orders = full_order_sequence(curve, p).orders;
      jp["status"] = "ok";
      jp["image"] = ProjPoint(curve.field(), exp.coefficients[0]).coords();
      jp["expansion"] = vectors_to_json(exp.coefficients);
      jp["orders"] = orders;
      jp["ramification"] = unramified_at(curve, p) ? "unramified" : "ramified";
      std::vector<std::size_t> xs;
      if (opts.xs) {
        xs = *opts.xs;
      } else {
        for (std::size_t x = 0; x < orders.size(); ++x) xs.push_back(x);
      }
      Json osc = Json::array();
      for (auto x : xs) {
        Json jx;
        jx["x"] = x;
        try {
          jx["basis"] = subspace_to_json(osculating_space(curve, p, x));
          if (x + 1 < orders.size()) {
            jx["e"] = orders[x + 1];
            jx["ordinary"] = orders[x + 1] == x + 1;
          }
        } catch (const RankDeficient& e) {
          jx["error"] = e.what();
        }
        osc.push_back(std::move(jx));
      }
      jp["osculating"] = std::move(osc);
    } catch (const BasePointError& e) {
      jp["status"] = "base_point";
      jp["message"] = e.what();
    } catch (const ConfigError& e) {
      jp["status"] = "invalid_point";
      jp["message"] = e.what();
    }
    rows.push_back(std::move(jp));
  }
  j["points"] = std::move(rows);
  out << to_text(j);
  return kOk;
}

}  // namespace netcurve::cli
