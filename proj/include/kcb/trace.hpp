#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "kcb/adversary.hpp"
#include "kcb/component_tracker.hpp"

namespace kcb {

struct TraceRecord {
  VertexId vertex = 0;
  std::vector<VertexId> pre;
  Bin bin = 0;
  std::optional<AdversaryColor> color;
  std::size_t components_after = 0;
};

struct TraceSummary {
  int bins_used = 0;
  std::size_t vertices = 0;
  std::size_t max_components = 0;

  bool operator==(const TraceSummary&) const = default;
};

// Replayable record of one adversary-vs-algorithm run. Serialized as JSON
// Lines: a metadata object, one record per vertex (ids rendered 1-based), an
// optional color-map line when the strategy colors at termination, and a
// summary line.
struct MatchupTrace {
  nlohmann::json strategy;   // {"name": ..., strategy parameters...}
  nlohmann::json algorithm;  // {"name": ..., "seed"?}
  int declared_kappa = 0;
  int declared_chi = 0;
  std::vector<TraceRecord> records;
  std::optional<std::vector<AdversaryColor>> final_color_map;
  TraceSummary summary;

  std::string strategy_name() const { return strategy.value("name", std::string{}); }
  std::string algorithm_name() const { return algorithm.value("name", std::string{}); }

  template <typename T>
  std::optional<T> strategy_param(const std::string& key) const {
    if (!strategy.contains(key)) return std::nullopt;
    return strategy.at(key).get<T>();
  }

  OnlineGraph to_graph() const {
    OnlineGraph graph;
    for (const auto& record : records) graph.add_step(make_step(record.vertex, record.pre));
    return graph;
  }

  std::vector<PresentationStep> steps() const {
    std::vector<PresentationStep> out;
    out.reserve(records.size());
    for (const auto& record : records) out.push_back(make_step(record.vertex, record.pre));
    return out;
  }

  std::vector<Bin> bins() const {
    std::vector<Bin> out;
    out.reserve(records.size());
    for (const auto& record : records) out.push_back(record.bin);
    return out;
  }

  // Adversary coloring: the final map when present, else per-record colors.
  std::vector<AdversaryColor> colors() const {
    if (final_color_map) return *final_color_map;
    std::vector<AdversaryColor> out;
    out.reserve(records.size());
    for (const auto& record : records) out.push_back(record.color.value_or(0));
    return out;
  }

  std::string to_jsonl() const {
    std::ostringstream out;
    nlohmann::json meta{{"kind", "meta"},
                        {"strategy", strategy},
                        {"algorithm", algorithm},
                        {"declared_kappa", declared_kappa},
                        {"declared_chi", declared_chi}};
    out << meta.dump() << '\n';
    for (const auto& record : records) {
      nlohmann::json pre = nlohmann::json::array();
      for (VertexId u : record.pre) pre.push_back(u + 1);
      nlohmann::json line{{"kind", "step"},
                          {"v", record.vertex + 1},
                          {"pre", std::move(pre)},
                          {"bin", record.bin},
                          {"cc", record.components_after}};
      line["color"] = record.color ? nlohmann::json(*record.color) : nlohmann::json();
      out << line.dump() << '\n';
    }
    if (final_color_map) {
      nlohmann::json line{{"kind", "colors"}, {"map", *final_color_map}};
      out << line.dump() << '\n';
    }
    nlohmann::json tail{{"kind", "summary"},
                        {"bins_used", summary.bins_used},
                        {"vertices", summary.vertices},
                        {"max_components", summary.max_components}};
    out << tail.dump() << '\n';
    return out.str();
  }

  static MatchupTrace from_jsonl(const std::string& text) {
    MatchupTrace trace;
    std::istringstream in(text);
    std::string line;
    bool saw_meta = false;
    bool saw_summary = false;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json parsed;
      try {
        parsed = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error& error) {
        throw std::invalid_argument(std::string("trace: bad JSON line: ") + error.what());
      }
      const std::string kind = parsed.value("kind", std::string{});
      if (kind == "meta") {
        trace.strategy = parsed.at("strategy");
        trace.algorithm = parsed.at("algorithm");
        trace.declared_kappa = parsed.at("declared_kappa").get<int>();
        trace.declared_chi = parsed.at("declared_chi").get<int>();
        saw_meta = true;
      } else if (kind == "step") {
        TraceRecord record;
        const auto v = parsed.at("v").get<std::int64_t>();
        if (v < 1) throw std::invalid_argument("trace: vertex ids are 1-based");
        record.vertex = static_cast<VertexId>(v - 1);
        for (const auto& u : parsed.at("pre")) {
          const auto id = u.get<std::int64_t>();
          if (id < 1) throw std::invalid_argument("trace: vertex ids are 1-based");
          record.pre.push_back(static_cast<VertexId>(id - 1));
        }
        record.bin = parsed.at("bin").get<Bin>();
        if (!parsed.at("color").is_null()) record.color = parsed.at("color").get<AdversaryColor>();
        record.components_after = parsed.at("cc").get<std::size_t>();
        trace.records.push_back(std::move(record));
      } else if (kind == "colors") {
        trace.final_color_map = parsed.at("map").get<std::vector<AdversaryColor>>();
      } else if (kind == "summary") {
        trace.summary.bins_used = parsed.at("bins_used").get<int>();
        trace.summary.vertices = parsed.at("vertices").get<std::size_t>();
        trace.summary.max_components = parsed.at("max_components").get<std::size_t>();
        saw_summary = true;
      } else {
        throw std::invalid_argument("trace: unknown line kind '" + kind + "'");
      }
    }
    if (!saw_meta || !saw_summary) {
      throw std::invalid_argument("trace: missing meta or summary line");
    }
    return trace;
  }

  static MatchupTrace load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open trace file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_jsonl(buffer.str());
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write trace file: " + path);
    out << to_jsonl();
  }
};

}  // namespace kcb
