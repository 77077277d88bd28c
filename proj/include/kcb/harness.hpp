#pragma once

#include <future>

#include "kcb/adversaries.hpp"
#include "kcb/chromatic.hpp"
#include "kcb/component_types.hpp"
#include "kcb/layered_adversary.hpp"
#include "kcb/trace.hpp"

namespace kcb {

inline std::unique_ptr<AdversaryStrategy> make_strategy(const nlohmann::json& spec) {
  const std::string name = spec.value("name", std::string{});
  auto need = [&](const char* key) -> int {
    if (!spec.contains(key)) {
      throw std::invalid_argument("strategy '" + name + "' needs parameter '" + key + "'");
    }
    return spec.at(key).get<int>();
  };
  if (name == "clique") return std::make_unique<CliqueAdversary>(need("n"));
  if (name == "ff-bipartite") return std::make_unique<FfBipartiteAdversary>(need("n"));
  if (name == "ff-3col") return std::make_unique<FfThreeColorAdversary>(need("rounds"));
  if (name == "forest") return std::make_unique<ForestAdversary>(need("kappa"));
  if (name == "cbip-tree") return std::make_unique<CbipTreeAdversary>(need("kappa"));
  if (name == "universal") {
    std::optional<int> guard;
    if (spec.contains("ck_free")) guard = spec.at("ck_free").get<int>();
    return std::make_unique<LayeredAdversary>(need("t"), guard);
  }
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

inline std::unique_ptr<OnlineColorer> make_colorer(const nlohmann::json& spec) {
  const std::string name = spec.value("name", std::string{});
  if (name == "firstfit") return std::make_unique<FirstFitColorer>();
  if (name == "cbip") return std::make_unique<CbipColorer>();
  if (name == "baseline") {
    return std::make_unique<SeededColorer>(spec.value("seed", std::uint64_t{0}));
  }
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

// Drives the adaptive loop: the strategy emits a move, the colorer answers a
// bin, the strategy observes it. Precondition violations (e.g. CBIP fed a
// non-bipartite component) propagate as ContractViolation.
inline MatchupTrace run_matchup(AdversaryStrategy& strategy, OnlineColorer& colorer,
                                nlohmann::json strategy_spec, nlohmann::json algorithm_spec) {
  MatchupTrace trace;
  trace.strategy = std::move(strategy_spec);
  trace.algorithm = std::move(algorithm_spec);
  trace.declared_kappa = strategy.declared_kappa();
  trace.declared_chi = strategy.declared_chi();

  OnlineGraph graph;
  ComponentTracker tracker;
  std::set<Bin> bins_seen;
  std::size_t max_components = 0;
  while (auto move = strategy.next_move()) {
    const VertexId v = move->step.vertex;
    const std::size_t components = add_vertex(graph, tracker, std::move(move->step));
    const Bin bin = colorer.place(graph.steps().back());
    strategy.observe_bin(v, bin);
    trace.records.push_back({v, graph.pre_neighbors(v), bin, move->color, components});
    bins_seen.insert(bin);
    max_components = std::max(max_components, components);
  }
  if (strategy.defers_colors()) trace.final_color_map = strategy.final_colors();
  trace.summary = {static_cast<int>(bins_seen.size()), trace.records.size(), max_components};
  return trace;
}

inline MatchupTrace run_matchup(const nlohmann::json& strategy_spec,
                                const nlohmann::json& algorithm_spec) {
  auto strategy = make_strategy(strategy_spec);
  auto colorer = make_colorer(algorithm_spec);
  return run_matchup(*strategy, *colorer, strategy_spec, algorithm_spec);
}

struct CheckResult {
  enum class Status { pass, fail, skipped };
  std::string check;
  Status status = Status::pass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& check : checks) {
      if (check.status == CheckResult::Status::fail) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& check : checks) {
      const char* tag = check.status == CheckResult::Status::pass      ? "PASS"
                        : check.status == CheckResult::Status::skipped ? "SKIP"
                                                                       : "FAIL";
      out += tag;
      out += "  ";
      out += check.check;
      if (!check.detail.empty()) {
        out += ": ";
        out += check.detail;
      }
      out += '\n';
    }
    return out;
  }
};

namespace detail {

// Bins seen at even/odd BFS depth from `root`.
inline std::pair<std::set<Bin>, std::set<Bin>> depth_parity_bins(const OnlineGraph& graph,
                                                                 VertexId root,
                                                                 const std::vector<Bin>& bins) {
  std::vector<int> depth(graph.vertex_count(), -1);
  std::vector<VertexId> queue{root};
  depth[root] = 0;
  std::pair<std::set<Bin>, std::set<Bin>> out;
  out.first.insert(bins[root]);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId x = queue[head];
    for (VertexId y : graph.neighbors(x)) {
      if (depth[y] >= 0) continue;
      depth[y] = depth[x] + 1;
      (depth[y] % 2 == 0 ? out.first : out.second).insert(bins[y]);
      queue.push_back(y);
    }
  }
  return out;
}

inline std::set<Bin> bin_range(int from, int to, int skip = 0) {
  std::set<Bin> out;
  for (int b = from; b <= to; ++b) {
    if (b != skip) out.insert(b);
  }
  return out;
}

}  // namespace detail

// Runs every applicable oracle against a trace: replay determinism for bins
// and component counts, summary consistency, the kappa bound, properness of
// both labelings, the chromatic bound when feasible, and strategy-specific
// claims (forced bin counts, saturation, tree bin sets, size budgets,
// inductiveness, cycle guards, CBIP type structure).
inline VerifyReport verify_trace(const MatchupTrace& trace) {
  VerifyReport report;
  auto add = [&](std::string check, bool ok, std::string detail = {}) {
    report.checks.push_back({std::move(check),
                             ok ? CheckResult::Status::pass : CheckResult::Status::fail,
                             std::move(detail)});
  };
  auto skip = [&](std::string check, std::string detail) {
    report.checks.push_back({std::move(check), CheckResult::Status::skipped, std::move(detail)});
  };

  OnlineGraph graph;
  ComponentTracker tracker;
  bool replay_components_ok = true;
  std::string replay_components_detail;
  std::size_t max_components = 0;
  try {
    for (const auto& record : trace.records) {
      const std::size_t components =
          add_vertex(graph, tracker, make_step(record.vertex, record.pre));
      max_components = std::max(max_components, components);
      if (components != record.components_after && replay_components_ok) {
        replay_components_ok = false;
        replay_components_detail =
            "component count mismatch at vertex " + std::to_string(record.vertex + 1);
      }
    }
  } catch (const std::exception& error) {
    add("replay-components", false, error.what());
    return report;
  }
  add("replay-components", replay_components_ok, replay_components_detail);

  const std::vector<Bin> bins = trace.bins();
  {
    bool ok = true;
    std::string detail;
    try {
      auto colorer = make_colorer(trace.algorithm);
      for (const auto& record : trace.records) {
        const Bin bin = colorer->place(make_step(record.vertex, record.pre));
        if (bin != record.bin) {
          ok = false;
          detail = "bin mismatch at vertex " + std::to_string(record.vertex + 1) + " (recorded " +
                   std::to_string(record.bin) + ", replayed " + std::to_string(bin) + ")";
          break;
        }
      }
    } catch (const std::exception& error) {
      ok = false;
      detail = error.what();
    }
    add("replay-bins", ok, detail);
  }

  {
    std::set<Bin> distinct(bins.begin(), bins.end());
    const TraceSummary recomputed{static_cast<int>(distinct.size()), trace.records.size(),
                                  max_components};
    add("summary", recomputed == trace.summary,
        recomputed == trace.summary ? "" : "summary fields disagree with records");
  }

  {
    const auto result = check_kappa_cb(trace.steps(), trace.declared_kappa);
    add("kappa-cb", result.ok,
        result.ok ? "" : "prefix " + std::to_string(result.first_violation) + " exceeds kappa");
  }

  add("algorithm-proper", check_proper(graph, bins).ok);

  const std::vector<AdversaryColor> colors = trace.colors();
  {
    const auto proper = check_proper(graph, colors);
    const int used = proper.ok ? distinct_labels(colors) : 0;
    add("adversary-proper", proper.ok && used <= trace.declared_chi,
        proper.ok ? (used <= trace.declared_chi
                         ? ""
                         : "adversary used " + std::to_string(used) + " colors")
                  : "coloring improper at edge (" + std::to_string(proper.u + 1) + "," +
                        std::to_string(proper.v + 1) + ")");
  }

  if (trace.declared_chi < static_cast<int>(graph.vertex_count()) &&
      graph.vertex_count() <= 500) {
    switch (k_colorable(graph, trace.declared_chi)) {
      case Feasibility::yes:
        add("chi-bound", true);
        break;
      case Feasibility::no:
        add("chi-bound", false, "graph is not declared_chi-colorable");
        break;
      case Feasibility::unknown:
        skip("chi-bound", "search budget exhausted");
        break;
    }
  } else {
    skip("chi-bound", "not checked at this size");
  }

  const std::string strategy = trace.strategy_name();
  const std::string algorithm = trace.algorithm_name();

  if (strategy == "clique") {
    const int n = trace.strategy_param<int>("n").value_or(0);
    add("clique-bins", trace.summary.bins_used == n,
        "clique must force one bin per vertex");
    add("clique-single-component", max_components == 1);
  }
  if (strategy == "ff-bipartite" && algorithm == "firstfit") {
    const int n = trace.strategy_param<int>("n").value_or(0);
    bool pattern = trace.summary.bins_used == n / 2;
    for (int k = 1; pattern && k <= n / 2; ++k) {
      pattern = bins[2 * k - 2] == k && bins[2 * k - 1] == k;
    }
    add("paired-bins", pattern, pattern ? "" : "bins do not pair up one per round");
  }
  if (strategy == "ff-3col" && algorithm == "firstfit") {
    const int rounds = trace.strategy_param<int>("rounds").value_or(0);
    add("forced-bins", trace.summary.bins_used == rounds);
    const auto saturation = saturation_report(bins, colors);
    bool saturated = true;
    for (Bin b = 1; b <= rounds; ++b) saturated = saturated && saturation.saturation_of(b) >= 3;
    add("saturation", saturated, saturated ? "" : "some bin below 3-saturated");
    std::map<AdversaryColor, std::set<Bin>> spread;
    for (std::size_t v = 0; v < bins.size(); ++v) spread[colors[v]].insert(bins[v]);
    bool classes = spread.size() == 3;
    for (const auto& [color, seen] : spread) {
      classes = classes && static_cast<int>(seen.size()) >= rounds;
    }
    add("class-spread", classes,
        classes ? "" : "a color class misses a bin, saturated-bin argument broken");
  }
  if (strategy == "forest" && algorithm == "firstfit") {
    const int kappa = trace.strategy_param<int>("kappa").value_or(0);
    add("forced-bins", trace.summary.bins_used == kappa + 1);
    add("vertex-count", trace.records.size() == (std::size_t{1} << kappa));
  }
  if (strategy == "cbip-tree" && algorithm == "cbip") {
    const int kappa = trace.strategy_param<int>("kappa").value_or(0);
    const int level = 2 * kappa;
    add("forced-bins", trace.summary.bins_used == level);
    if (!trace.records.empty()) {
      const auto [even, odd] =
          detail::depth_parity_bins(graph, trace.records.back().vertex, bins);
      add("tree-bin-sets",
          even == detail::bin_range(1, level, level - 1) &&
              odd == detail::bin_range(1, level - 1),
          "root-parity bin sets must be [L] minus L-1 and [L-1]");
    }
  }
  if (strategy == "universal") {
    const int t = trace.strategy_param<int>("t").value_or(0);
    add("forced-bins", trace.summary.bins_used >= t);
    long long budget = 20LL * t;
    for (int p = 0; p < t - 3; ++p) budget *= t + 1;
    const auto guard = trace.strategy_param<int>("ck_free");
    if (guard) budget *= *guard + 1;
    add("vertex-budget", static_cast<long long>(trace.records.size()) <= budget);
    add("two-inductive", max_back_degree(graph) <= 2);
    if (guard) {
      add("cycle-guard", !girth_at_most(graph, *guard),
          "construction may not contain a cycle of length <= k");
    }
  }

  if (algorithm == "cbip") {
    TypeReplay replay(trace.declared_kappa);
    std::optional<std::string> violation;
    for (const auto& record : trace.records) {
      violation = replay.advance(make_step(record.vertex, record.pre), record.bin);
      if (violation) break;
    }
    add("type-structure", !violation, violation.value_or(""));
  }

  return report;
}

inline VerifyReport verify_trace_file(const std::string& path) {
  return verify_trace(MatchupTrace::load(path));
}

struct SweepRow {
  int param = 0;
  std::size_t vertices = 0;
  int bins = 0;
  std::size_t components = 0;
};

inline std::string sweep_param_key(const std::string& strategy) {
  if (strategy == "clique" || strategy == "ff-bipartite") return "n";
  if (strategy == "ff-3col") return "rounds";
  if (strategy == "forest" || strategy == "cbip-tree") return "kappa";
  if (strategy == "universal") return "t";
  throw std::invalid_argument("unknown strategy '" + strategy + "'");
}

// Rows run concurrently; each matchup owns its state.
inline std::vector<SweepRow> sweep(const nlohmann::json& strategy_base,
                                   const nlohmann::json& algorithm_spec, int from, int to) {
  const std::string key = sweep_param_key(strategy_base.value("name", std::string{}));
  std::vector<std::future<SweepRow>> pending;
  for (int value = from; value <= to; ++value) {
    pending.push_back(std::async(std::launch::async, [&, value]() {
      nlohmann::json spec = strategy_base;
      spec[key] = value;
      const MatchupTrace trace = run_matchup(spec, algorithm_spec);
      return SweepRow{value, trace.summary.vertices, trace.summary.bins_used,
                      trace.summary.max_components};
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pending.size());
  for (auto& future : pending) rows.push_back(future.get());
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "param,vertices,bins,components\n";
  for (const auto& row : rows) {
    out += std::to_string(row.param) + "," + std::to_string(row.vertices) + "," +
           std::to_string(row.bins) + "," + std::to_string(row.components) + "\n";
  }
  return out;
}

inline nlohmann::json sweep_json(const std::vector<SweepRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    out.push_back({{"param", row.param},
                   {"vertices", row.vertices},
                   {"bins", row.bins},
                   {"components", row.components}});
  }
  return out;
}

}  // namespace kcb
