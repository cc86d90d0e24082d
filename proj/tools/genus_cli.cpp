// genus: run verification scenarios and emit JSON reports.
//
//   genus branch-density --lambda 0110 --depth 3
//   genus soluble-decode --lambda 10110 --len 5 --out report.json
//   genus all --seed 7
//
// Exit codes: 0 PASS, 1 FAIL or ERROR, 2 usage error, 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "genus/scenario.hpp"

namespace {

constexpr int kUsageError = 2;

std::string scenario_list() {
  std::string s;
  for (const auto& n : genus::scenario_names()) s += "  " + n + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-level verification of profinite-genus constructions"};
  app.footer("Scenarios:\n" + scenario_list());

  std::string scenario;
  std::string config_path;
  std::string out_path;
  genus::ScenarioConfig cfg;
  std::string lambda, mu, nu, elem;
  std::int64_t depth = -1, level = -1, period = -1, len = -1, samples = -1;
  std::uint64_t seed = 0;
  bool quiet = false;

  app.add_option("scenario", scenario, "Scenario to run");
  app.add_option("--config", config_path, "JSON scenario config (flags override it)");
  app.add_option("--lambda", lambda, "Bitstring for lambda");
  app.add_option("--mu", mu, "Bitstring for mu (alpha in soluble scenarios)");
  app.add_option("--nu", nu, "Bitstring for nu (beta in soluble scenarios)");
  app.add_option("--elem", elem, "Ring element, e.g. \"6*v[e2] - 6\"");
  app.add_option("--depth", depth, "Tree depth, or conjugator level for soluble scenarios");
  app.add_option("--level", level, "Level n for power closure");
  app.add_option("--period", period, "Period m of the normal subgroup N_m");
  app.add_option("--len", len, "Decode length");
  app.add_option("--samples", samples, "Number of sampled elements");
  auto* seed_opt = app.add_option("--seed", seed, "Master seed (default: $GENUS_SEED or 1)");
  app.add_option("--budget-ms", cfg.budget_ms, "Time cap per check in ms (0: none)");
  app.add_option("--out", out_path, "Write the JSON report here instead of stdout");
  app.add_flag("-q,--quiet", quiet, "No per-check summary on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kUsageError;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw genus::ConfigError("cannot read config '" + config_path + "'");
      genus::json j;
      try {
        in >> j;
      } catch (const genus::json::exception& ex) {
        throw genus::ConfigError(std::string("config is not valid JSON: ") + ex.what());
      }
      if (!scenario.empty()) j["scenario"] = scenario;
      auto budget = cfg.budget_ms;
      cfg = genus::ScenarioConfig::from_json(j);
      if (budget != 0) cfg.budget_ms = budget;
    } else {
      if (scenario.empty()) throw genus::ConfigError("no scenario given");
      cfg.scenario = scenario;
      cfg.seed = genus::default_seed();
    }
    if (!lambda.empty()) cfg.lambda = lambda;
    if (!mu.empty()) cfg.mu = mu;
    if (!nu.empty()) cfg.nu = nu;
    if (!elem.empty()) cfg.elem = elem;
    if (depth >= 0) cfg.depth = depth;
    if (level >= 0) cfg.level = level;
    if (period >= 0) cfg.period = period;
    if (len >= 0) cfg.len = len;
    if (samples >= 0) cfg.samples = samples;
    if (seed_opt->count() > 0) cfg.seed = seed;
    cfg.validate();
  } catch (const genus::ConfigError& ex) {
    std::cerr << "genus: " << ex.what() << "\n" << app.help();
    return kUsageError;
  }

  genus::Report report = genus::run_scenario(cfg);
  if (!quiet) {
    for (const auto& c : report.checks) {
      std::cerr << genus::to_string(c.status) << "  " << c.name << " (" << c.elapsed_ms
                << " ms)\n";
    }
    std::cerr << "overall: " << genus::to_string(report.overall()) << "\n";
  }
  try {
    if (out_path.empty()) {
      std::cout << report.canonical();
    } else {
      genus::emit_report(report, out_path);
    }
  } catch (const std::exception& ex) {
    std::cerr << "genus: " << ex.what() << "\n";
    return 1;
  }
  return genus::exit_code(report.overall());
}
