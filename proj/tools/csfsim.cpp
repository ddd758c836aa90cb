// csfsim: batch simulator front end. Subcommands:
//   run       simulate a scenario, write a trace, print a summary
//   explain   per-frame fitness/preference/salience table for one tick
//   validate  semantic diagnostics for a scenario document
//   list      built-in scenario names

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "csf/engine.hpp"
#include "csf/errors.hpp"
#include "csf/scenario.hpp"
#include "csf/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1; // parse/validation/domain failures
constexpr int kExitIo = 2;     // unreadable input, unwritable output

struct IoError {
  std::string message;
};

struct Overrides {
  std::optional<double> epsilon;
  std::optional<double> alpha;
  std::optional<std::string> policy;
  std::optional<double> lambda;
  std::optional<double> theta;
};

bool color_enabled() {
  if (std::getenv("CSFSIM_NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

const char* kBold = "\033[1m";
const char* kGreen = "\033[32m";
const char* kRed = "\033[31m";
const char* kReset = "\033[0m";

std::string styled(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string(code) + text + kReset;
}

bool is_builtin_name(const std::string& name) {
  for (const auto& n : csf::builtin_names())
    if (n == name) return true;
  return false;
}

// A scenario argument is a file path first, a built-in name second.
csf::Scenario load_scenario(const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::exists(spec)) {
    std::ifstream in(spec, std::ios::binary);
    if (!in) throw IoError{"cannot read scenario file: " + spec};
    std::ostringstream text;
    text << in.rdbuf();
    return csf::parse_scenario(text.str());
  }
  if (is_builtin_name(spec)) return csf::builtin(spec);
  throw IoError{"no such scenario file or built-in: " + spec};
}

void apply_overrides(csf::Scenario& scenario, const Overrides& o) {
  auto& p = scenario.params;
  if (o.epsilon) p.epsilon_salience = *o.epsilon;
  if (o.lambda) p.decay_lambda = *o.lambda;
  if (o.theta) p.decay_theta = *o.theta;
  if (o.policy) {
    if (*o.policy == "instant") p.policy = csf::DeploymentPolicy::instant;
    else if (*o.policy == "undeploy_hook") p.policy = csf::DeploymentPolicy::undeploy_hook;
    else if (*o.policy == "decay") p.policy = csf::DeploymentPolicy::decay;
  }
  if (o.alpha) {
    p.alpha_default = *o.alpha;
    for (auto& [aid, spec] : scenario.agents) spec.profile.alpha = *o.alpha; // force all agents
  }
}

int print_diagnostics(const std::vector<csf::Diagnostic>& diagnostics) {
  int errors = 0;
  for (const auto& d : diagnostics) {
    bool is_error = d.severity == csf::Severity::error;
    errors += is_error ? 1 : 0;
    std::cerr << (is_error ? "error" : "warning") << ": " << d.message << " [" << d.where
              << "]\n";
  }
  return errors;
}

// Returns the validated scenario or an exit code.
int prepare(const std::string& spec, const Overrides& overrides, csf::Scenario& out) {
  try {
    out = load_scenario(spec);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitIo;
  } catch (const csf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const csf::ReferenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const csf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  apply_overrides(out, overrides);
  if (print_diagnostics(csf::validate(out)) > 0) return kExitDomain;
  return -1; // ready
}

struct AgentTally {
  std::map<std::string, std::uint64_t> salient;
  std::map<std::string, std::uint64_t> deployed;
  std::map<std::string, std::uint64_t> actions;
  std::uint64_t conflicts = 0;
};

void print_histogram(const std::map<std::string, std::uint64_t>& counts) {
  if (counts.empty()) {
    std::cout << " (none)";
    return;
  }
  for (const auto& [name, n] : counts) std::cout << " " << name << "=" << n;
}

int cmd_run(const std::string& spec, std::uint64_t ticks, std::uint64_t seed,
            const std::string& trace_path, const Overrides& overrides) {
  csf::Scenario scenario;
  if (int code = prepare(spec, overrides, scenario); code >= 0) return code;

  auto trace = csf::Simulation(scenario, seed).run(ticks);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write trace file: " << trace_path << "\n";
      return kExitIo;
    }
    csf::write_trace(out, trace);
    if (!out) {
      std::cerr << "error: short write on trace file: " << trace_path << "\n";
      return kExitIo;
    }
  }

  std::map<std::string, AgentTally> tallies;
  std::uint64_t total_actions = 0, total_conflicts = 0;
  for (const auto& event : trace) {
    auto& tally = tallies[event.agent];
    if (event.stage == csf::Stage::update) {
      for (const auto& fid : event.payload.at("salient"))
        tally.salient[fid.get<std::string>()] += 1;
      for (const auto& row : event.payload.at("deployed"))
        tally.deployed[row.at("resource").get<std::string>()] += 1;
    } else if (event.stage == csf::Stage::execute) {
      for (const auto& row : event.payload.at("actions")) {
        tally.actions[row.at("verb").get<std::string>()] += 1;
        total_actions += 1;
      }
    } else if (event.stage == csf::Stage::interpret) {
      auto n = event.payload.at("conflicts").size();
      tally.conflicts += n;
      total_conflicts += n;
    }
  }

  std::cout << styled("scenario " + scenario.name, kBold) << ": " << ticks << " tick(s), "
            << scenario.agents.size() << " agent(s), seed " << seed << "\n";
  for (const auto& [aid, tally] : tallies) {
    std::cout << "agent " << aid << "\n";
    std::cout << "  salient frames (ticks):";
    print_histogram(tally.salient);
    std::cout << "\n  deployed resources (ticks):";
    print_histogram(tally.deployed);
    std::cout << "\n  actions:";
    print_histogram(tally.actions);
    std::cout << "\n  conflicts observed: " << tally.conflicts << "\n";
  }
  std::cout << "total actions " << total_actions << ", total conflicts " << total_conflicts
            << "\n";
  return kExitOk;
}

int cmd_explain(const std::string& spec, std::uint64_t ticks, std::uint64_t seed,
                std::uint64_t tick, const std::string& agent, const Overrides& overrides) {
  csf::Scenario scenario;
  if (int code = prepare(spec, overrides, scenario); code >= 0) return code;

  auto trace = csf::Simulation(scenario, seed).run(ticks);
  const csf::TraceEvent* found = nullptr;
  for (const auto& event : trace) {
    if (event.stage == csf::Stage::update && event.tick == tick && event.agent == agent) {
      found = &event;
      break;
    }
  }
  if (!found) {
    std::cerr << "error: no update record for agent \"" << agent << "\" at tick " << tick
              << " (ran " << ticks << " tick(s))\n";
    return kExitDomain;
  }

  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };

  std::cout << styled("agent " + agent + ", tick " + std::to_string(tick), kBold) << "\n";
  std::cout << "epsilon_salience " << num(scenario.params.epsilon_salience) << "\n";
  for (const auto& row : found->payload.at("salience")) {
    bool salient = row.at("salient").get<bool>();
    std::cout << "  frame " << row.at("frame").get<std::string>() << ": fitness "
              << num(row.at("fitness").get<double>()) << ", preference "
              << num(row.at("preference").get<double>()) << ", salience "
              << num(row.at("salience").get<double>()) << " -> "
              << (salient ? styled("salient", kGreen) : styled("below threshold", kRed))
              << "\n";
  }
  std::cout << "deployed:";
  bool any = false;
  for (const auto& row : found->payload.at("deployed")) {
    std::cout << " " << row.at("resource").get<std::string>() << " (residual "
              << num(row.at("residual").get<double>()) << ")";
    any = true;
  }
  if (!any) std::cout << " (none)";
  std::cout << "\n";
  return kExitOk;
}

int cmd_validate(const std::string& spec) {
  csf::Scenario scenario;
  try {
    scenario = load_scenario(spec);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitIo;
  } catch (const csf::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const csf::ReferenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const csf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  int errors = print_diagnostics(csf::validate(scenario));
  if (errors == 0) std::cout << "ok: " << scenario.name << " is runnable\n";
  return errors == 0 ? kExitOk : kExitDomain;
}

int cmd_list() {
  for (const auto& name : csf::builtin_names()) std::cout << name << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"csfsim: socially framed agent batch simulator"};
  app.require_subcommand(1);

  std::string scenario_spec;
  std::uint64_t ticks = 10;
  std::uint64_t seed = 0;
  std::string trace_path;
  std::uint64_t explain_tick = 0;
  std::string explain_agent;
  Overrides overrides;

  auto add_common = [&](CLI::App* cmd, bool with_run_knobs) {
    cmd->add_option("--scenario", scenario_spec, "Scenario file path or built-in name")
        ->required();
    if (with_run_knobs) {
      cmd->add_option("--ticks", ticks, "Number of ticks to simulate");
      cmd->add_option("--seed", seed, "Seed for scripted stochastic events");
      cmd->add_option("--epsilon", overrides.epsilon, "Override the salience threshold")
          ->check(CLI::Range(-1.0, 1.0));
      cmd->add_option("--alpha", overrides.alpha,
                      "Override the fitness/preference balance for every agent")
          ->check(CLI::Range(0.0, 1.0));
      cmd->add_option("--policy", overrides.policy, "Override the deployment policy")
          ->check(CLI::IsMember({"instant", "undeploy_hook", "decay"}));
      cmd->add_option("--lambda", overrides.lambda, "Override the decay step")
          ->check(CLI::Range(1e-9, 1.0));
      cmd->add_option("--theta", overrides.theta, "Override the decay removal threshold")
          ->check(CLI::Range(0.0, 0.999999999));
    }
  };

  auto* run = app.add_subcommand("run", "Simulate and write a trace");
  add_common(run, true);
  run->add_option("--trace", trace_path, "Trace output path (line-delimited JSON)");

  auto* explain = app.add_subcommand("explain", "Per-frame salience breakdown for one tick");
  add_common(explain, true);
  explain->add_option("--tick", explain_tick, "Tick to explain")->required();
  explain->add_option("--agent", explain_agent, "Agent to explain")->required();

  auto* validate = app.add_subcommand("validate", "Check a scenario document");
  add_common(validate, false);

  app.add_subcommand("list", "List built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e); // prints usage/help; 0 for --help
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (app.got_subcommand("run"))
      return cmd_run(scenario_spec, ticks, seed, trace_path, overrides);
    if (app.got_subcommand("explain"))
      return cmd_explain(scenario_spec, ticks, seed, explain_tick, explain_agent, overrides);
    if (app.got_subcommand("validate")) return cmd_validate(scenario_spec);
    return cmd_list();
  } catch (const csf::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const csf::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
