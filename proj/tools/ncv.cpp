#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"
#include "ncv/errors.hpp"

int main(int argc, char** argv) {
  using namespace ncv::cli;
  Options o;
  CLI::App app{"Punctured convex bodies: constructions, exact measures, verifiers"};
  app.require_subcommand(1);

  auto* construct_cmd = app.add_subcommand("construct", "Build an instance file");
  construct_cmd->add_option("kind", o.kind, "disc | six | five")
      ->required()
      ->check(CLI::IsMember({"disc", "six", "five"}));
  construct_cmd->add_option("--lambda", o.lambda, "Number of holes of the disc");
  construct_cmd->add_option("--n", o.n, "Number of polytope vertices");
  construct_cmd->add_option("--seed", o.seed);
  construct_cmd->add_option("--max-tries", o.max_tries);
  construct_cmd->add_flag("--refine", o.refine, "Double the boundary witnesses of the disc");
  construct_cmd->add_option("--out", o.out);

  auto* solve_cmd = app.add_subcommand("solve", "Exact omega / chi / gamma on the witnesses");
  solve_cmd->add_option("--instance", o.instance)->required();
  solve_cmd->add_option("--measure", o.measure)->required()->check(CLI::IsMember({"omega", "chi", "gamma"}));
  solve_cmd->add_option("--capacity", o.capacity);
  solve_cmd->add_option("--out", o.out);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verifier");
  verify_cmd->add_option("--check", o.check)
      ->required()
      ->check(CLI::IsMember({"coloring", "acyclic", "neighborly", "faces", "gadget", "certificate"}));
  verify_cmd->add_option("--instance", o.instance);
  verify_cmd->add_option("--certificate", o.certificate);
  verify_cmd->add_option("--kind", o.kind, "Gadget: tournament | rainbow");
  verify_cmd->add_option("--n", o.n);
  verify_cmd->add_option("--d", o.d);
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--max-tries", o.max_tries);
  verify_cmd->add_option("--max-len", o.max_len);
  verify_cmd->add_option("--samples", o.samples);
  verify_cmd->add_option("--target", o.target);
  verify_cmd->add_option("--capacity", o.capacity);
  verify_cmd->add_option("--out", o.out);

  auto* plot_cmd = app.add_subcommand("plot", "SVG of a planar instance or a face slice");
  plot_cmd->add_option("--instance", o.instance)->required();
  plot_cmd->add_option("--certificate", o.certificate);
  plot_cmd->add_option("--face", o.face, "Face labels i,j,k");
  plot_cmd->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*construct_cmd) return construct(o);
    if (*solve_cmd) return solve(o);
    if (*verify_cmd) return verify(o);
    return plot(o);
  } catch (const ncv::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const ncv::CapacityError& e) {
    std::cerr << "capacity exceeded: " << e.what() << '\n';
    return 3;
  } catch (const ncv::SearchFailure& e) {
    std::cerr << "search failed: " << e.what() << " (best " << e.best() << ")\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  }
}
