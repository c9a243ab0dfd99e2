#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bgg/bggcomplex.hpp"
#include "bgg/rootsys.hpp"

namespace bgg::cli {

enum class Format { Json, Text };

struct RunConfig {
  std::string series = "A";
  int rank = 1;
  std::vector<int> highest_weight;  // empty means zero
  std::optional<int> max_height;
  unsigned jobs = 1;
  Format format = Format::Json;
  std::string output;  // empty means stdout
  bool timings = false;
};

/// Exit codes of the bgg binary.
enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kInternalError = 3 };

/// A validated configuration with the root system resolved.
struct Resolved {
  RunConfig config;
  std::shared_ptr<const RootSystem> roots;
  Weight lambda;
};

/// Throws InvalidInput on an unknown series, unsupported rank, a highest
/// weight of the wrong length or with negative entries, or a negative height.
Resolved resolve(const RunConfig& config);

/// Worker count from BGG_JOBS, or 1 when unset. Throws InvalidInput on garbage.
unsigned jobs_from_env();

/// Height of lambda - w0 lambda: the depth of the lowest weight of V(lambda).
int weight_depth(const RootSystem& rs, const Weight& lambda);

/// Cutoff used by `verify` when none is given.
int default_verify_cutoff(const RootSystem& rs, const Weight& lambda);

nlohmann::json rational_json(const Rational& q);

nlohmann::json verify_json(const Resolved& run, const BGGComplex& complex, const ComplexReport& report);
nlohmann::json singular_vectors_json(const Resolved& run, const BGGComplex& complex);
nlohmann::json character_json(const Resolved& run);

void write_verify_text(std::ostream& out, const nlohmann::json& report);
void write_singular_vectors_text(std::ostream& out, const nlohmann::json& report);
void write_character_text(std::ostream& out, const nlohmann::json& report);

/// Subcommand drivers. They write the report to config.output (or `out`) and
/// return an ExitCode; exceptions propagate to the caller.
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_singular_vectors(const RunConfig& config, std::ostream& out);
int cmd_character(const RunConfig& config, std::ostream& out);

}  // namespace bgg::cli
