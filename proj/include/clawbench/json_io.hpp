#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "clawbench/construction.hpp"
#include "clawbench/relaxations.hpp"

namespace clawbench {

using nlohmann::json;

// --- PseudoMoment: {"level": L, "entries": [{"set": [...], "value": "a/b"}]}

inline json pseudo_moment_to_json(const PseudoMoment& y) {
  json entries = json::array();
  for (const auto& [mask, value] : y.entries) {
    json e;
    e["set"] = detail::mask_to_vec(mask);  // ascending by construction
    e["value"] = format_rational(value);
    entries.push_back(std::move(e));
  }
  return json{{"level", y.level}, {"entries", std::move(entries)}};
}

inline PseudoMoment pseudo_moment_from_json(const json& j) {
  PseudoMoment y;
  y.level = j.at("level").get<int>();
  for (const auto& e : j.at("entries")) {
    std::vector<int> set = e.at("set").get<std::vector<int>>();
    y.entries[detail::vec_to_mask(set)] =
        parse_rational(e.at("value").get<std::string>());
  }
  return y;
}

// --- FractionalPoint: {"values": ["a/b", ...]}

inline json fractional_point_to_json(const FractionalPoint& x) {
  json vals = json::array();
  for (const auto& v : x.values) vals.push_back(format_rational(v));
  return json{{"values", std::move(vals)}};
}

inline FractionalPoint fractional_point_from_json(const json& j) {
  FractionalPoint x;
  for (const auto& v : j.at("values"))
    x.values.push_back(parse_rational(v.get<std::string>()));
  return x;
}

// --- Construction labels ----------------------------------------------------

inline json labels_to_json(const ConstructionLabels& labels) {
  json entries = json::array();
  for (const auto& e : labels.entries) {
    entries.push_back(json{
        {"vertex", e.vertex},
        {"block", e.block},
        {"class", edge_class_name(e.cls)},
        {"end1", {{"copy", e.end1.copy}, {"local", e.end1.local}}},
        {"end2", {{"copy", e.end2.copy}, {"local", e.end2.local}}},
    });
  }
  return json{{"blocks", labels.blocks},
              {"entries", std::move(entries)},
              {"scaffold", graph_to_dimacs(labels.scaffold)}};
}

inline ConstructionLabels labels_from_json(const json& j) {
  ConstructionLabels labels;
  labels.blocks = j.at("blocks").get<int>();
  labels.scaffold = graph_from_dimacs(j.at("scaffold").get<std::string>());
  for (const auto& e : j.at("entries")) {
    MatchingEdgeLabel lab;
    lab.vertex = e.at("vertex").get<int>();
    lab.block = e.at("block").get<int>();
    std::string cls = e.at("class").get<std::string>();
    lab.cls = cls == "H1H2"  ? EdgeClass::H1H2
              : cls == "H2Q" ? EdgeClass::H2Q
                             : EdgeClass::QH1next;
    lab.end1 = {e.at("end1").at("copy").get<std::string>(),
                e.at("end1").at("local").get<int>()};
    lab.end2 = {e.at("end2").at("copy").get<std::string>(),
                e.at("end2").at("local").get<int>()};
    labels.entries.push_back(std::move(lab));
  }
  return labels;
}

// --- Files ------------------------------------------------------------------

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

// Weights file: one rational or integer per line, line i = vertex i-1.
inline std::vector<Rational> weights_from_text(const std::string& text) {
  std::vector<Rational> w;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    w.push_back(parse_rational(line));
  }
  return w;
}

}  // namespace clawbench
