#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bgg/errors.hpp"
#include "bgg/polmodel.hpp"
#include "bgg/version.hpp"

namespace bgg::cli {

using nlohmann::json;

namespace {

constexpr int kCutoffCap = 12;

json weight_json(const Weight& w) { return w.coords; }

json word_json(const WeylElement& w) {
  json out = json::array();
  for (int i : w.reduced_word) out.push_back(i + 1);
  return out;
}

std::string word_text(const WeylElement& w) {
  if (w.reduced_word.empty()) return "e";
  std::string s;
  for (int i : w.reduced_word) s += "s" + std::to_string(i + 1);
  return s;
}

std::string weight_text(const json& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + std::to_string(coords[i].get<int>());
  return s + ")";
}

std::string rational_text(const json& q) {
  const auto& den = q["den"].get_ref<const std::string&>();
  return den == "1" ? q["num"].get<std::string>() : q["num"].get<std::string>() + "/" + den;
}

json config_json(const RunConfig& c) {
  json out{{"series", c.series}, {"rank", c.rank}, {"highest_weight", c.highest_weight}};
  if (c.max_height) out["max_height"] = *c.max_height;
  return out;
}

json header(const Resolved& run, const char* command) {
  json out{{"tool", "bgg"}, {"version", kVersion}, {"command", command}, {"config", config_json(run.config)}};
  json roots = json::array();
  for (const auto& r : run.roots->positive_roots()) roots.push_back(r.coords);
  out["positive_roots"] = std::move(roots);
  return out;
}

json envelope_json(const Algebra& alg, const EnvElement& u) {
  json terms = json::array();
  for (const auto& [key, c] : u.terms())
    terms.push_back({{"exponents", alg.e_exponents(key)}, {"coeff", rational_json(c)}});
  return terms;
}

json edges_json(const BGGComplex& complex) {
  const RootSystem& rs = complex.roots();
  json out = json::array();
  for (const auto& e : complex.edges()) {
    json entry{{"from", word_json(rs.weyl()[e.from])},
               {"to", word_json(rs.weyl()[e.to])},
               {"source_weight", weight_json(complex.space(e.from).mu())},
               {"target_weight", weight_json(complex.space(e.to).mu())},
               {"root", rs.positive_roots()[e.root].coords},
               {"u_psi", envelope_json(complex.algebra(), e.u_psi)},
               {"u_psi_text", complex.algebra().format(e.u_psi)},
               {"scalar", rational_json(e.scalar)}};
    auto d = derivative_scalar(complex, e);
    entry["derivative_scalar"] = d ? rational_json(*d) : json(nullptr);
    out.push_back(std::move(entry));
  }
  return out;
}

void emit(const RunConfig& config, std::ostream& out, const json& report,
          void (*text)(std::ostream&, const json&)) {
  std::ostringstream buffer;
  if (config.format == Format::Json)
    buffer << report.dump(2) << '\n';
  else
    text(buffer, report);
  if (config.output.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw InvalidInput("cannot open output file: " + config.output);
  file << buffer.str();
}

BGGComplex build_complex(const Resolved& run) {
  auto algebra = std::make_shared<const Algebra>(run.roots);
  return fix_signs(assemble(algebra, run.lambda, run.config.jobs));
}

}  // namespace

Resolved resolve(const RunConfig& config) {
  Resolved run{config, nullptr, {}};
  Series series = parse_series(config.series);
  if (config.rank < 1) throw InvalidInput("rank must be at least 1");
  run.roots = build_root_system(series, config.rank);
  run.config.series = series_name(series);
  if (run.config.highest_weight.empty()) run.config.highest_weight.assign(config.rank, 0);
  if (static_cast<int>(run.config.highest_weight.size()) != config.rank)
    throw InvalidInput("highest weight needs " + std::to_string(config.rank) + " entries");
  for (int c : run.config.highest_weight)
    if (c < 0) throw InvalidInput("highest weight entries must be nonnegative");
  if (config.max_height && *config.max_height < 0) throw InvalidInput("max height must be nonnegative");
  if (config.jobs < 1) throw InvalidInput("jobs must be at least 1");
  run.lambda = Weight{run.config.highest_weight};
  return run;
}

unsigned jobs_from_env() {
  const char* env = std::getenv("BGG_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) throw InvalidInput(std::string("BGG_JOBS is not a worker count: ") + env);
  return static_cast<unsigned>(v);
}

int weight_depth(const RootSystem& rs, const Weight& lambda) {
  return rs.to_root(lambda - rs.weyl()[rs.longest_element()].apply(lambda))->height();
}

int default_verify_cutoff(const RootSystem& rs, const Weight& lambda) {
  return std::max(weight_depth(rs, lambda), default_height_cutoff(rs, lambda, kCutoffCap));
}

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

json verify_json(const Resolved& run, const BGGComplex& complex, const ComplexReport& report) {
  json out = header(run, "verify");
  out["height_cutoff"] = report.height_cutoff;
  out["weyl_dimension"] = report.weyl_dimension;
  out["kernel0_total"] = report.kernel0_total;
  out["covers_all_weights"] = report.covers_all_weights;
  out["verdict"] = report.verdict;
  json blocks = json::array();
  for (const auto& b : report.blocks) {
    json exact = json::array();
    for (bool e : b.exact_at) exact.push_back(e);
    blocks.push_back({{"nu", weight_json(b.nu)},
                      {"height", b.height},
                      {"dims", b.dims},
                      {"ranks", b.ranks},
                      {"exact", exact},
                      {"kernel0_dim", b.kernel0_dim},
                      {"euler_char", b.euler_char},
                      {"freudenthal", b.v_multiplicity},
                      {"d_squared_zero", b.d_squared_zero},
                      {"kostant_dims_match", b.kostant_dims_match},
                      {"ok", b.ok()}});
  }
  out["blocks"] = std::move(blocks);
  out["singular_vectors"] = edges_json(complex);
  if (run.config.timings) out["wall_time_ms"] = report.elapsed_ms;
  return out;
}

json singular_vectors_json(const Resolved& run, const BGGComplex& complex) {
  json out = header(run, "singular-vectors");
  out["singular_vectors"] = edges_json(complex);
  return out;
}

json character_json(const Resolved& run) {
  const RootSystem& rs = *run.roots;
  const int depth = weight_depth(rs, run.lambda);
  const int verma_height = run.config.max_height.value_or(depth);
  json out = header(run, "character");
  out["weyl_dimension"] = weyl_dimension(rs, run.lambda);

  auto mult = weight_multiplicities(rs, run.lambda);
  json weights = json::array();
  std::uint64_t total = 0;
  for (const auto& nu : weights_below(rs, run.lambda, depth)) {
    auto it = mult.find(nu);
    if (it == mult.end()) continue;
    total += it->second;
    weights.push_back({{"nu", weight_json(nu)}, {"height", rs.to_root(run.lambda - nu)->height()},
                       {"multiplicity", it->second}});
  }
  out["weights"] = std::move(weights);
  out["multiplicity_total"] = total;

  json verma = json::array();
  for (const auto& nu : weights_below(rs, run.lambda, verma_height)) {
    Root beta = *rs.to_root(run.lambda - nu);
    verma.push_back({{"nu", weight_json(nu)}, {"height", beta.height()}, {"dim", kostant_partition(rs, beta)}});
  }
  out["verma_height"] = verma_height;
  out["verma_dims"] = std::move(verma);
  return out;
}

void write_verify_text(std::ostream& out, const json& r) {
  const auto& cfg = r["config"];
  out << "BGG complex for " << cfg["series"].get<std::string>() << cfg["rank"].get<int>()
      << ", lambda = " << weight_text(cfg["highest_weight"]) << ", height cutoff " << r["height_cutoff"] << "\n";
  out << "blocks checked: " << r["blocks"].size() << "\n";
  std::size_t failed = 0;
  for (const auto& b : r["blocks"]) {
    if (b["ok"].get<bool>()) continue;
    ++failed;
    out << "  FAILED nu = " << weight_text(b["nu"]) << " dims " << b["dims"].dump() << " ranks "
        << b["ranks"].dump() << " exact " << b["exact"].dump() << "\n";
  }
  out << "failed blocks: " << failed << "\n";
  out << "kernel of d0: " << r["kernel0_total"] << " (Weyl dimension " << r["weyl_dimension"] << ")\n";
  if (!r["covers_all_weights"].get<bool>()) out << "cutoff does not reach every weight of V\n";
  out << "edges: " << r["singular_vectors"].size() << "\n";
  for (const auto& e : r["singular_vectors"]) {
    if (rational_text(e["scalar"]) == "1") continue;
    out << "  scalar " << rational_text(e["scalar"]) << " on " << e["from"].dump() << " -> " << e["to"].dump()
        << "\n";
  }
  if (r.contains("wall_time_ms")) out << "wall time: " << std::fixed << std::setprecision(1) << r["wall_time_ms"].get<double>() << " ms\n";
  out << "verdict: " << (r["verdict"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void write_singular_vectors_text(std::ostream& out, const json& r) {
  const auto& cfg = r["config"];
  out << "Singular vectors for " << cfg["series"].get<std::string>() << cfg["rank"].get<int>()
      << ", lambda = " << weight_text(cfg["highest_weight"]) << "\n";
  for (const auto& e : r["singular_vectors"]) {
    out << e["from"].dump() << " -> " << e["to"].dump() << "  M" << weight_text(e["source_weight"]) << " <- M"
        << weight_text(e["target_weight"]) << "  u = " << e["u_psi_text"].get<std::string>() << "\n";
  }
}

void write_character_text(std::ostream& out, const json& r) {
  const auto& cfg = r["config"];
  out << "V(" << weight_text(cfg["highest_weight"]) << ") for " << cfg["series"].get<std::string>()
      << cfg["rank"].get<int>() << ": dimension " << r["weyl_dimension"] << "\n";
  for (const auto& w : r["weights"]) out << "  " << weight_text(w["nu"]) << "  " << w["multiplicity"] << "\n";
  out << "Verma weight spaces to height " << r["verma_height"] << ":\n";
  for (const auto& w : r["verma_dims"]) out << "  " << weight_text(w["nu"]) << "  " << w["dim"] << "\n";
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  Resolved run = resolve(config);
  if (!run.config.max_height) run.config.max_height = default_verify_cutoff(*run.roots, run.lambda);
  auto start = std::chrono::steady_clock::now();
  BGGComplex complex = build_complex(run);
  ComplexReport report = verify_all(complex, *run.config.max_height, run.config.jobs);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(run.config, out, verify_json(run, complex, report), write_verify_text);
  return report.verdict ? kOk : kVerificationFailed;
}

int cmd_singular_vectors(const RunConfig& config, std::ostream& out) {
  Resolved run = resolve(config);
  BGGComplex complex = build_complex(run);
  emit(run.config, out, singular_vectors_json(run, complex), write_singular_vectors_text);
  return kOk;
}

int cmd_character(const RunConfig& config, std::ostream& out) {
  Resolved run = resolve(config);
  emit(run.config, out, character_json(run), write_character_text);
  return kOk;
}

}  // namespace bgg::cli
