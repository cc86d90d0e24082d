#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "budget.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "solring/checks.hpp"
#include "treewreath.hpp"

namespace genus {

class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "branch-density",        "branch-power-closure", "branch-distinguish",
      "branch-conditions",     "branch-portraits",     "soluble-decode",
      "soluble-conjugator",    "soluble-ideal-equality", "soluble-translate",
      "soluble-membership",    "all"};
  return names;
}

inline std::uint64_t default_seed() {
  if (const char* s = std::getenv("GENUS_SEED")) {
    try {
      std::size_t pos = 0;
      auto v = std::stoull(s, &pos);
      if (pos == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("GENUS_SEED is not an unsigned integer");
  }
  return 1;
}

struct ScenarioConfig {
  std::string scenario;
  std::optional<std::string> lambda, mu, nu, elem;
  std::optional<std::int64_t> depth, level, period, len, samples;
  std::uint64_t seed = 1;
  std::int64_t budget_ms = 0;  // 0: unlimited

  static ScenarioConfig from_json(const json& j) {
    static const std::set<std::string> known{"scenario", "lambda", "mu", "nu", "elem",
                                             "depth", "level", "period", "len", "samples",
                                             "seed", "budget_ms"};
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (const auto& [k, v] : j.items()) {
      if (!known.contains(k)) throw ConfigError("unknown config key '" + k + "'");
    }
    ScenarioConfig c;
    try {
      c.scenario = j.at("scenario").get<std::string>();
      auto str = [&](const char* k, std::optional<std::string>& out) {
        if (j.contains(k)) out = j.at(k).get<std::string>();
      };
      auto num = [&](const char* k, std::optional<std::int64_t>& out) {
        if (j.contains(k)) out = j.at(k).get<std::int64_t>();
      };
      str("lambda", c.lambda);
      str("mu", c.mu);
      str("nu", c.nu);
      str("elem", c.elem);
      num("depth", c.depth);
      num("level", c.level);
      num("period", c.period);
      num("len", c.len);
      num("samples", c.samples);
      c.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : default_seed();
      if (j.contains("budget_ms")) c.budget_ms = j.at("budget_ms").get<std::int64_t>();
    } catch (const json::exception& ex) {
      throw ConfigError(std::string("bad config value: ") + ex.what());
    }
    c.validate();
    return c;
  }

  json parameters() const {
    json p = json::object();
    auto put = [&](const char* k, const auto& v) {
      if (v) p[k] = *v;
    };
    put("lambda", lambda);
    put("mu", mu);
    put("nu", nu);
    put("elem", elem);
    put("depth", depth);
    put("level", level);
    put("period", period);
    put("len", len);
    put("samples", samples);
    p["seed"] = seed;
    p["budget_ms"] = budget_ms;
    return p;
  }

  void validate() const {
    bool known = false;
    for (const auto& n : scenario_names()) known = known || n == scenario;
    if (!known) throw ConfigError("unknown scenario '" + scenario + "'");
    for (const auto* b : {&lambda, &mu, &nu}) {
      if (*b) {
        try {
          (void)LambdaSeq::parse(**b, 0);
        } catch (const std::invalid_argument& ex) {
          throw ConfigError(ex.what());
        }
      }
    }
    auto positive = [](const char* name, const std::optional<std::int64_t>& v, std::int64_t lo,
                       std::int64_t hi) {
      if (v && (*v < lo || *v > hi)) {
        throw ConfigError(std::string("--") + name + " must lie in [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
      }
    };
    positive("depth", depth, 0, 4);
    positive("level", level, 0, 4);
    positive("period", period, 1, 64);
    positive("len", len, 1, 24);
    positive("samples", samples, 0, 1'000'000);
    if (budget_ms < 0) throw ConfigError("--budget-ms must be >= 0");
    if (scenario == "soluble-membership" && !elem) {
      throw ConfigError("soluble-membership needs --elem");
    }
    if (elem) {
      try {
        (void)sol::parse_ring_elem(*elem);
      } catch (const std::invalid_argument& ex) {
        throw ConfigError(ex.what());
      }
    }
  }

  Deadline deadline() const { return budget_ms > 0 ? Deadline::after_ms(budget_ms) : Deadline(); }
};

namespace detail {

// Wraps a check so that budget exhaustion and check-level errors are
// reported instead of propagated.
inline Check guarded(const std::string& name, const std::function<Check()>& body) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const BudgetExceeded& ex) {
    c.name = name;
    c.status = Status::Inconclusive;
    c.details = {{"reason", ex.what()}};
  } catch (const std::exception& ex) {
    c.name = name;
    c.status = Status::Error;
    c.details = {{"error", ex.what()}};
  }
  c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return c;
}

inline std::size_t opt_size(const std::optional<std::int64_t>& v, std::int64_t dflt) {
  return static_cast<std::size_t>(v.value_or(dflt));
}

inline std::vector<Check> run_named(const ScenarioConfig& cfg, std::uint64_t seed) {
  const std::string& s = cfg.scenario;
  std::vector<Check> out;
  auto add = [&](const std::string& name, const std::function<Check()>& body) {
    out.push_back(guarded(name, body));
  };
  auto tree_seq = [](const std::optional<std::string>& v, const char* dflt) {
    return LambdaSeq::parse(v.value_or(dflt), 0);
  };
  auto chain_seq = [](const std::optional<std::string>& v, const char* dflt) {
    return LambdaSeq::parse(v.value_or(dflt), 1);
  };

  if (s == "branch-density") {
    auto l = tree_seq(cfg.lambda, "0");
    auto depth = opt_size(cfg.depth, 2);
    add("density", [&] { return density_check(l, depth, cfg.deadline()); });
  } else if (s == "branch-power-closure") {
    auto m = opt_size(cfg.depth, 2);
    auto n = opt_size(cfg.level, 1);
    auto samples = opt_size(cfg.samples, 50);
    add("power closure", [&] { return power_closure_check(m, n, samples, seed, cfg.deadline()); });
  } else if (s == "branch-distinguish") {
    auto mu = tree_seq(cfg.mu, "000");
    auto nu = tree_seq(cfg.nu, "010");
    auto depth = opt_size(cfg.depth, 3);
    add("distinguish", [&] { return distinguish_pair(mu, nu, depth); });
  } else if (s == "branch-conditions") {
    add("conditions", [] { return condition_check(); });
  } else if (s == "branch-portraits") {
    auto l = tree_seq(cfg.lambda, "0");
    auto depth = opt_size(cfg.depth, 2);
    add("portraits", [&] {
      return timed_check("portraits", [&](Check& c) {
        auto g = gamma_generators(l, depth);
        c.details = {{"lambda", l.to_string()},
                     {"depth", depth},
                     {"xi", portrait_to_json(g.xi)},
                     {"eta", portrait_to_json(g.eta)},
                     {"a", portrait_to_json(g.a)},
                     {"b", portrait_to_json(g.b)}};
        c.status = Status::Pass;
      });
    });
  } else if (s == "soluble-decode") {
    auto l = chain_seq(cfg.lambda, "10110");
    auto len = opt_size(cfg.len, static_cast<std::int64_t>(l.word_length()));
    add("decode", [&] { return sol::decode_check(l, len); });
  } else if (s == "soluble-conjugator") {
    auto a = chain_seq(cfg.mu, "0110");
    auto b = chain_seq(cfg.nu, "1011");
    auto n = cfg.depth.value_or(7);
    add("conjugator", [&] { return sol::conjugator_check(a, b, n); });
  } else if (s == "soluble-ideal-equality") {
    auto a = chain_seq(cfg.mu, "101");
    auto b = chain_seq(cfg.nu, "011");
    auto samples = opt_size(cfg.samples, 500);
    std::vector<std::int64_t> periods;
    if (cfg.period) {
      periods.push_back(*cfg.period);
    } else {
      periods = {1, 2, 3};
    }
    for (auto m : periods) {
      add("ideal equality m=" + std::to_string(m), [&] {
        return sol::verify_annihilator_equality(a, b, sol::NormalN(m), samples,
                                                derive_seed(seed, "m" + std::to_string(m)));
      });
    }
  } else if (s == "soluble-translate") {
    auto a = chain_seq(cfg.mu, "1101");
    auto b = chain_seq(cfg.nu, "0110");
    auto n = cfg.depth.value_or(7);
    auto samples = opt_size(cfg.samples, 500);
    add("translate", [&] {
      return sol::translate_check(a, sol::conjugator(a, b, n), samples, seed);
    });
  } else if (s == "soluble-membership") {
    auto l = chain_seq(cfg.lambda, "0");
    add("membership", [&] {
      return timed_check("membership", [&](Check& c) {
        auto r = sol::parse_ring_elem(*cfg.elem);
        c.details = {{"lambda", l.to_string()}, {"elem", r.to_string()}};
        auto m = sol::in_J(l, r);
        c.details["in_J"] = m.member;
        c.details["in_V_ideal"] = sol::in_V_ideal(r);
        if (!m.member) {
          c.details["witness_level"] = m.witness->level;
          c.details["witness_coset"] = m.witness->representative.to_string();
          c.details["witness_sum"] = m.witness->sum.str();
        }
        if (cfg.period) {
          c.details["in_I"] = sol::in_I(l, sol::NormalN(*cfg.period), r).member;
        }
        c.status = Status::Pass;
      });
    });
  }
  return out;
}

inline std::vector<ScenarioConfig> default_suite(const ScenarioConfig& master) {
  std::vector<ScenarioConfig> suite;
  auto make = [&](std::string name) {
    ScenarioConfig c;
    c.scenario = std::move(name);
    c.budget_ms = master.budget_ms;
    c.seed = master.seed;
    return c;
  };
  suite.push_back(make("branch-conditions"));
  for (const char* l : {"0", "0110", "1", "10101", "111"}) {
    for (std::int64_t d = 1; d <= 3; ++d) {
      auto c = make("branch-density");
      c.lambda = l;
      c.depth = d;
      suite.push_back(c);
    }
  }
  suite.push_back(make("branch-power-closure"));
  suite.push_back(make("branch-distinguish"));
  {
    auto c = make("branch-distinguish");
    c.mu = "010";
    c.nu = "011";
    suite.push_back(c);
  }
  suite.push_back(make("soluble-decode"));
  suite.push_back(make("soluble-conjugator"));
  suite.push_back(make("soluble-ideal-equality"));
  suite.push_back(make("soluble-translate"));
  return suite;
}

}  // namespace detail

// Runs a named scenario. Deterministic given (config, seed) apart from
// elapsed times.
inline Report run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  Report r;
  r.scenario = cfg.scenario;
  r.parameters = cfg.parameters();
  if (cfg.scenario != "all") {
    r.checks = detail::run_named(cfg, derive_seed(cfg.seed, cfg.scenario));
    return r;
  }
  auto suite = detail::default_suite(cfg);
  std::vector<std::future<std::vector<Check>>> jobs;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto seed = derive_seed(cfg.seed, suite[i].scenario + "#" + std::to_string(i));
    jobs.push_back(std::async(std::launch::async, [sc = suite[i], seed] {
      return detail::run_named(sc, seed);
    }));
  }
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (auto& c : jobs[i].get()) {
      c.name = suite[i].scenario + ": " + c.name;
      c.details["scenario_parameters"] = suite[i].parameters();
      r.checks.push_back(std::move(c));
    }
  }
  return r;
}

}  // namespace genus
