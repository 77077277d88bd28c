// Command-line harness: run adversary-vs-algorithm matchups, verify and
// replay trace files, sweep parameter ranges, and query the exact chromatic
// number of a recorded instance.
//
// Exit codes: 0 all checks pass, 1 verification/run failure, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "kcb/kcb.hpp"

namespace {

struct Range {
  int from = 0;
  int to = 0;
};

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int value = std::stoi(text);
      return {value, value};
    }
    const int from = std::stoi(text.substr(0, dots));
    const int to = std::stoi(text.substr(dots + 2));
    if (to < from) throw std::invalid_argument("range upper bound below lower bound");
    return {from, to};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse '" + text + "' as a value or range a..b");
  }
}

std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path path(out);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("KCB_OUT_DIR")) path = std::filesystem::path(dir) / path;
  }
  return path;
}

struct StrategyFlags {
  std::string name;
  std::string kappa, t, n, rounds;
  std::string ck_free;
  bool force = false;

  // Returns the single populated parameter flag as (key, raw text).
  std::pair<std::string, std::string> parameter() const {
    std::vector<std::pair<std::string, std::string>> given;
    if (!kappa.empty()) given.push_back({"kappa", kappa});
    if (!t.empty()) given.push_back({"t", t});
    if (!n.empty()) given.push_back({"n", n});
    if (!rounds.empty()) given.push_back({"rounds", rounds});
    const std::string expected = kcb::sweep_param_key(name);
    if (given.size() != 1 || given.front().first != expected) {
      throw std::invalid_argument("strategy '" + name + "' takes exactly --" + expected);
    }
    return given.front();
  }

  void guard_budget(int value) const {
    if (name == "universal" && value > 7 && !force) {
      throw std::invalid_argument(
          "universal with t > 7 builds a very large instance; pass --force to override");
    }
  }

  nlohmann::json spec(int value) const {
    nlohmann::json spec{{"name", name}, {kcb::sweep_param_key(name), value}};
    if (!ck_free.empty()) {
      if (name != "universal") {
        throw std::invalid_argument("--ck-free applies to the universal strategy only");
      }
      spec["ck_free"] = parse_range(ck_free).from;
    }
    return spec;
  }
};

void add_strategy_flags(CLI::App* cmd, StrategyFlags& flags) {
  cmd->add_option("--strategy", flags.name, "strategy name")->required();
  cmd->add_option("--kappa", flags.kappa, "component budget (forest, cbip-tree)");
  cmd->add_option("--t", flags.t, "target bin count (universal)");
  cmd->add_option("--n", flags.n, "vertex count (clique, ff-bipartite)");
  cmd->add_option("--rounds", flags.rounds, "round count (ff-3col)");
  cmd->add_option("--ck-free", flags.ck_free, "forbid cycles of length <= k (universal)");
  cmd->add_flag("--force", flags.force, "allow large universal instances");
}

nlohmann::json algorithm_spec(const std::string& name, std::uint64_t seed, bool seed_given) {
  nlohmann::json spec{{"name", name}};
  if (seed_given) {
    if (name != "baseline") {
      throw std::invalid_argument("--seed applies to the baseline algorithm only");
    }
    spec["seed"] = seed;
  }
  return spec;
}

int cmd_run(const StrategyFlags& flags, const std::string& algorithm, std::uint64_t seed,
            bool seed_given, const std::string& out) {
  const auto [key, raw] = flags.parameter();
  const Range range = parse_range(raw);
  if (range.from != range.to) throw std::invalid_argument("run takes a single --" + key);
  flags.guard_budget(range.from);

  const kcb::MatchupTrace trace =
      kcb::run_matchup(flags.spec(range.from), algorithm_spec(algorithm, seed, seed_given));
  const kcb::VerifyReport report = kcb::verify_trace(trace);

  std::ostream& info = out.empty() ? std::cerr : std::cout;
  info << "strategy " << trace.strategy_name() << " vs " << trace.algorithm_name()
       << ": bins=" << trace.summary.bins_used << " vertices=" << trace.summary.vertices
       << " max_components=" << trace.summary.max_components << "\n"
       << report.to_string();
  if (out.empty()) {
    std::cout << trace.to_jsonl();
  } else {
    trace.save(resolve_out(out).string());
    info << "trace written to " << resolve_out(out).string() << "\n";
  }
  return report.all_passed() ? 0 : 1;
}

int cmd_verify(const std::string& path) {
  const kcb::VerifyReport report = kcb::verify_trace_file(path);
  std::cout << report.to_string();
  return report.all_passed() ? 0 : 1;
}

int cmd_sweep(const StrategyFlags& flags, const std::string& algorithm, std::uint64_t seed,
              bool seed_given, const std::string& format, const std::string& out) {
  const auto [key, raw] = flags.parameter();
  const Range range = parse_range(raw);
  flags.guard_budget(range.to);

  const auto rows = kcb::sweep(flags.spec(range.from), algorithm_spec(algorithm, seed, seed_given),
                               range.from, range.to);
  std::string rendered;
  if (format == "csv") {
    rendered = kcb::sweep_csv(rows);
  } else if (format == "json") {
    rendered = kcb::sweep_json(rows).dump(2) + "\n";
  } else {
    throw std::invalid_argument("--format must be csv or json");
  }
  if (out.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream file(resolve_out(out));
    if (!file) throw std::invalid_argument("cannot write " + out);
    file << rendered;
  }
  return 0;
}

int cmd_chromatic(const std::string& path, int limit, std::uint64_t budget) {
  const kcb::MatchupTrace trace = kcb::MatchupTrace::load(path);
  const kcb::OnlineGraph graph = trace.to_graph();
  const int cap = limit > 0 ? limit : static_cast<int>(graph.vertex_count());
  const auto result = kcb::chromatic_number(graph, cap, budget);
  switch (result.status) {
    case kcb::ChromaticResult::Status::exact:
      std::cout << "chromatic_number " << result.value << "\n";
      return 0;
    case kcb::ChromaticResult::Status::exceeds_limit:
      std::cout << "chromatic_number exceeds limit " << result.value << "\n";
      return 1;
    case kcb::ChromaticResult::Status::budget_exhausted:
      std::cout << "indeterminate: search budget exhausted at k=" << result.value << "\n";
      return 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online graph coloring under component-bounded adversaries"};
  app.require_subcommand(1);

  StrategyFlags run_flags, sweep_flags;
  std::string run_algorithm, sweep_algorithm;
  std::uint64_t run_seed = 0, sweep_seed = 0;
  std::string run_out, sweep_out, sweep_format = "csv";
  std::string verify_path, chromatic_path;
  int chromatic_limit = 0;
  std::uint64_t chromatic_budget = 50'000'000;

  CLI::App* run = app.add_subcommand("run", "run one matchup, verify it, emit the trace");
  add_strategy_flags(run, run_flags);
  run->add_option("--algorithm", run_algorithm, "firstfit, cbip, or baseline")->required();
  CLI::Option* run_seed_opt = run->add_option("--seed", run_seed, "baseline seed");
  run->add_option("--out", run_out, "trace file (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "re-check a recorded trace");
  verify->add_option("trace", verify_path, "trace file (JSON lines)")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "run a matchup across a parameter range");
  add_strategy_flags(sweep, sweep_flags);
  sweep->add_option("--algorithm", sweep_algorithm, "firstfit, cbip, or baseline")->required();
  CLI::Option* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "baseline seed");
  sweep->add_option("--format", sweep_format, "csv or json");
  sweep->add_option("--out", sweep_out, "output file (default: stdout)");

  CLI::App* chromatic = app.add_subcommand("chromatic", "exact chromatic number of a trace's graph");
  chromatic->add_option("trace", chromatic_path, "trace file (JSON lines)")->required();
  chromatic->add_option("--limit", chromatic_limit, "largest k to try (default: vertex count)");
  chromatic->add_option("--budget", chromatic_budget, "search node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    std::cerr << error.what() << "\n";
    return 2;
  }

  try {
    if (run->parsed()) {
      return cmd_run(run_flags, run_algorithm, run_seed, run_seed_opt->count() > 0, run_out);
    }
    if (verify->parsed()) return cmd_verify(verify_path);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_flags, sweep_algorithm, sweep_seed, sweep_seed_opt->count() > 0,
                       sweep_format, sweep_out);
    }
    if (chromatic->parsed()) return cmd_chromatic(chromatic_path, chromatic_limit, chromatic_budget);
  } catch (const kcb::ContractViolation& error) {
    std::cerr << "run error: " << error.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& error) {
    std::cerr << "usage error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 2;
}
