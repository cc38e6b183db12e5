#pragma once

// JSON formats: maps, strong involutions, doodles, reduction traces and the
// classification table.

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sdmap/coxeter.hpp"
#include "sdmap/error.hpp"
#include "sdmap/families.hpp"
#include "sdmap/map.hpp"
#include "sdmap/orbifold.hpp"
#include "sdmap/reduction.hpp"

namespace sdmap {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::FileNotFound, path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::FormatError, path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::FileNotFound, "cannot write " + path);
  out << text;
}

inline void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

// ---------------------------------------------------------------------------
// Map: {"vertices": [labels], "rotation": {label: [neighbor labels, ccw]}}

inline Json map_to_json(const SphericalMap& g) {
  Json j;
  j["vertices"] = Json::array();
  j["rotation"] = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    j["vertices"].push_back(g.label(v));
    Json r = Json::array();
    for (DartId d : g.rotation(v)) r.push_back(g.label(g.head(d)));
    j["rotation"][g.label(v)] = r;
  }
  return j;
}

inline SphericalMap map_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("rotation") || !j["vertices"].is_array() ||
      !j["rotation"].is_object())
    throw Error(Errc::FormatError, "map needs 'vertices' array and 'rotation' object");
  std::vector<std::string> labels;
  std::map<std::string, int> id;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw Error(Errc::FormatError, "vertex labels must be strings");
    auto s = v.get<std::string>();
    if (!id.emplace(s, static_cast<int>(labels.size())).second) throw Error(Errc::FormatError, "duplicate label " + s);
    labels.push_back(s);
  }
  std::vector<std::vector<VertexId>> ccw(labels.size());
  std::set<std::pair<int, int>> arcs;
  for (auto it = j["rotation"].begin(); it != j["rotation"].end(); ++it) {
    auto v = id.find(it.key());
    if (v == id.end()) throw Error(Errc::FormatError, "rotation for unknown vertex " + it.key());
    if (!it.value().is_array()) throw Error(Errc::FormatError, "rotation of " + it.key() + " is not an array");
    for (const auto& w : it.value()) {
      if (!w.is_string() || !id.count(w.get<std::string>()))
        throw Error(Errc::FormatError, "unknown neighbor of " + it.key());
      const int x = id.at(w.get<std::string>());
      if (!arcs.emplace(v->second, x).second)
        throw Error(Errc::FormatError, "parallel edge " + it.key() + " - " + w.get<std::string>());
      ccw[v->second].push_back(x);
    }
  }
  for (auto [a, b] : arcs)
    if (!arcs.count({b, a}))
      throw Error(Errc::FormatError, "asymmetric adjacency " + labels[a] + " -> " + labels[b]);
  return from_neighbor_lists(ccw, labels);
}

// ---------------------------------------------------------------------------
// Strong involution: {vertex label: [face vertex cycle]}

inline Json assignment_to_json(const SphericalMap& g, const std::vector<FaceId>& tau) {
  Json j = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json cyc = Json::array();
    for (VertexId w : g.face_vertices(tau[v])) cyc.push_back(g.label(w));
    j[g.label(v)] = cyc;
  }
  return j;
}

inline std::vector<FaceId> assignment_from_json(const SphericalMap& g, const Json& j) {
  if (!j.is_object()) throw Error(Errc::FormatError, "involution must be an object");
  LabeledAssignment a;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_array()) throw Error(Errc::FormatError, "face of " + it.key() + " is not an array");
    for (const auto& w : it.value()) {
      if (!w.is_string()) throw Error(Errc::FormatError, "face labels must be strings");
      a[it.key()].push_back(w.get<std::string>());
    }
  }
  return resolve_assignment(g, a);
}

// ---------------------------------------------------------------------------
// Doodle: {"points": [{label, xyz, color, wall}], "arcs": [{from, to, midpoint?}]}

inline Json doodle_to_json(const ColoredDoodle& d) {
  Json j;
  j["points"] = Json::array();
  for (const auto& p : d.points)
    j["points"].push_back({{"label", p.label},
                           {"xyz", {p.position.x(), p.position.y(), p.position.z()}},
                           {"color", color_name(p.color)},
                           {"wall", p.wall}});
  j["arcs"] = Json::array();
  for (auto [a, b] : d.arcs) j["arcs"].push_back({{"from", d.points[a].label}, {"to", d.points[b].label}});
  return j;
}

inline ColoredDoodle doodle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("arcs"))
    throw Error(Errc::FormatError, "doodle needs 'points' and 'arcs'");
  ColoredDoodle d;
  try {
    for (const auto& p : j.at("points")) {
      auto xyz = p.at("xyz");
      if (!xyz.is_array() || xyz.size() != 3) throw Error(Errc::FormatError, "xyz needs three numbers");
      Vec3 v(xyz[0].get<double>(), xyz[1].get<double>(), xyz[2].get<double>());
      auto label = p.at("label").get<std::string>();
      if (d.find(label)) throw Error(Errc::FormatError, "duplicate point " + label);
      d.points.push_back({label, v, parse_color(p.at("color").get<std::string>()), p.value("wall", "")});
    }
    for (const auto& a : j.at("arcs")) {
      auto from = d.find(a.at("from").get<std::string>()), to = d.find(a.at("to").get<std::string>());
      if (!from || !to) throw Error(Errc::FormatError, "arc names an unknown point");
      d.arcs.emplace_back(*from, *to);
    }
  } catch (const Json::exception& e) {
    throw Error(Errc::FormatError, e.what());
  }
  return d;
}

// ---------------------------------------------------------------------------
// Reduction trace

inline Json code_to_json(const CanonicalCode& c) { return c.code; }

inline Json trace_to_json(const ReductionTrace& t) {
  Json j;
  j["start"] = {{"code", code_to_json(canonical_code(t.start))}, {"pairing", t.start_pairing}};
  j["steps"] = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    j["steps"].push_back({{"contracted", {s.contracted.first, s.contracted.second}},
                          {"deleted", {s.deleted.first, s.deleted.second}},
                          {"code", code_to_json(s.code)},
                          {"pairing", s.pairing},
                          {"map", map_to_json(t.maps[i])}});
  }
  j["terminal"] = {{"wheel", t.terminal.params.q}, {"map", map_to_json(t.terminal.map)}};
  return j;
}

// ---------------------------------------------------------------------------
// Classification table

inline Json classification_to_json(const std::vector<ClassificationRow>& rows) {
  Json j = Json::array();
  for (const auto& r : rows)
    j.push_back({{"pairing", r.record.table_name()},
                 {"alpha_in_dual", r.alpha_in_dual},
                 {"alpha_in_aut", r.alpha_in_aut},
                 {"lemma_clause_dual", r.clause_dual},
                 {"lemma_clause_aut", r.clause_aut},
                 {"antipodal", r.antipodal}});
  return j;
}

inline std::string classification_table(const std::vector<ClassificationRow>& rows) {
  auto cell = [](bool in, int clause) { return std::string(in ? "yes" : "no") + " (" + std::to_string(clause) + ")"; };
  std::size_t w = std::string("Self-dual pairing").size();
  for (const auto& r : rows) w = std::max(w, r.record.table_name().size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w) + 2) << "Self-dual pairing" << std::setw(12) << "a in Dual"
     << std::setw(12) << "a in Aut" << "antipodal\n";
  for (const auto& r : rows)
    os << std::setw(static_cast<int>(w) + 2) << r.record.table_name() << std::setw(12)
       << cell(r.alpha_in_dual, r.clause_dual) << std::setw(12) << cell(r.alpha_in_aut, r.clause_aut)
       << (r.antipodal ? "*" : "") << "\n";
  return os.str();
}

}  // namespace sdmap
