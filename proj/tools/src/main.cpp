#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netcurve/cli/codec.hpp"
#include "netcurve/cli/commands.hpp"

using namespace netcurve;

int main(int argc, char** argv) {
  CLI::App app{"Realize network codes as osculating spaces of rational curves over F_q"};
  app.require_subcommand(1);

  std::string input;
  std::string mode;
  std::vector<std::string> points;
  std::string output;
  std::vector<std::size_t> xs;

  auto* realize = app.add_subcommand("realize", "Build and verify a curve realizing a code spec");
  realize->add_option("input", input, "Code spec (JSON)")->required();
  realize->add_option("--mode", mode, "plain or ordinary")->check(CLI::IsMember({"plain", "ordinary"}));
  realize->add_option("--points", points, "Curve points per member, e.g. t=0,t=1,inf")->delimiter(',');
  realize->add_option("--output,-o", output, "Write the realization here instead of stdout");

  auto* distances = app.add_subcommand("distances", "Pairwise subspace distances of a code spec");
  distances->add_option("input", input, "Code spec (JSON)")->required();

  auto* inspect = app.add_subcommand("inspect", "Local expansions, orders and osculating spaces of a curve");
  inspect->add_option("input", input, "Curve or realization (JSON)")->required();
  inspect->add_option("--points", points, "Points to inspect (default: all of P^1)")->delimiter(',');
  inspect->add_option("--x", xs, "Osculating dimensions to report")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  try {
    if (*realize) {
      cli::RealizeOptions opts;
      if (!mode.empty()) opts.mode = parse_mode(mode);
      if (realize->count("--points")) opts.points = cli::parse_point_list(points);
      if (!output.empty()) opts.output = output;
      return cli::cmd_realize(input, opts, std::cout, std::cerr);
    }
    if (*distances) return cli::cmd_distances(input, std::cout, std::cerr);
    cli::InspectOptions opts;
    if (inspect->count("--points")) opts.points = cli::parse_point_list(points);
    if (inspect->count("--x")) opts.xs = xs;
    return cli::cmd_inspect(input, opts, std::cout, std::cerr);
  } catch (const Error& e) {
    std::cerr << "netcurve: " << e.what() << "\n";
    return cli::kInvalidInput;
  }
}
