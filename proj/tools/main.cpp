#include <iostream>

#include "CLI11.hpp"
#include "bgg/errors.hpp"
#include "bgg/version.hpp"
#include "cli.hpp"

namespace {

void add_common(CLI::App& cmd, bgg::cli::RunConfig& cfg, std::string& format) {
  cmd.add_option("--series", cfg.series, "Cartan type (A, B, C, D, G)")->required();
  cmd.add_option("--rank", cfg.rank, "Rank of the root system")->required();
  cmd.add_option("--highest-weight", cfg.highest_weight, "Fundamental coordinates, comma separated")
      ->delimiter(',');
  cmd.add_option("--max-height", cfg.max_height, "Height cutoff below the highest weight");
  cmd.add_option("--jobs", cfg.jobs, "Worker threads (default: BGG_JOBS or 1)");
  cmd.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  cmd.add_option("--output", cfg.output, "Write the report to a file instead of stdout");
  cmd.add_flag("--timings", cfg.timings, "Include wall time in the report");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bgg::cli;
  CLI::App app{"Dual BGG complexes in the polynomial model, verified in exact arithmetic", "bgg"};
  app.set_version_flag("--version", std::string(bgg::kVersion));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  auto* verify = app.add_subcommand("verify", "Build the complex and check exactness weight by weight");
  auto* singular = app.add_subcommand("singular-vectors", "List the singular vector on every Bruhat edge");
  auto* character = app.add_subcommand("character", "Weight multiplicities of V and Verma weight-space dimensions");
  for (auto* cmd : {verify, singular, character}) add_common(*cmd, cfg, format);

  try {
    cfg.jobs = jobs_from_env();
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  } catch (const bgg::InvalidInput& e) {
    std::cerr << "bgg: " << e.what() << "\n";
    return kInvalidInput;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;

  try {
    if (*verify) return cmd_verify(cfg, std::cout);
    if (*singular) return cmd_singular_vectors(cfg, std::cout);
    return cmd_character(cfg, std::cout);
  } catch (const bgg::InvalidInput& e) {
    std::cerr << "bgg: invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "bgg: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
