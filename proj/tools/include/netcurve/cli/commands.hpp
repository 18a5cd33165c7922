#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netcurve/curve.hpp"
#include "netcurve/realize.hpp"

namespace netcurve::cli {

// Process exit statuses. Every error path of the tool maps to exactly one.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kHallViolation = 2,
  kTooManyMembers = 3,
  kOrdinaryModeDimension = 4,
  kInvalidInput = 5,  // unreadable/malformed input, invalid code or options
  kOutputError = 6,   // output file cannot be written
  kUsage = 64,        // bad command line
};

struct RealizeOptions {
  std::optional<Mode> mode;                   // overrides options.mode
  std::optional<std::vector<P1Point>> points; // overrides options.points
  std::optional<std::string> output;          // stdout when absent
};

int cmd_realize(const std::string& input, const RealizeOptions& opts, std::ostream& out, std::ostream& err);

int cmd_distances(const std::string& input, std::ostream& out, std::ostream& err);

struct InspectOptions {
  std::optional<std::vector<P1Point>> points;  // all of P^1(F_q) when absent
  std::optional<std::vector<std::size_t>> xs;  // every reachable x when absent
};

// Accepts a curve document or a realization document (its "curve" entry).
int cmd_inspect(const std::string& input, const InspectOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace netcurve::cli
