#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qhstruct/binary_tree.hpp"
#include "qhstruct/deconcat.hpp"
#include "qhstruct/order.hpp"
#include "qhstruct/qh_poset.hpp"
#include "qhstruct/quiver.hpp"
#include "qhstruct/standard.hpp"

namespace qhstruct {

inline constexpr const char* kSchema = "qhstruct/1";

using nlohmann::json;

// All JSON I/O is 1-based.

inline json to_json(const Quiver& q) {
  json arrows = json::array();
  for (auto [u, v] : q.arrows) arrows.push_back({u + 1, v + 1});
  return {{"schema", kSchema}, {"vertices", q.n}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("arrows"))
    throw Error("quiver JSON needs \"vertices\" and \"arrows\"");
  Quiver q;
  q.n = j.at("vertices").get<int>();
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw Error("arrow must be a pair");
    q.arrows.emplace_back(a[0].get<int>() - 1, a[1].get<int>() - 1);
  }
  q.validate();
  return q;
}

inline json to_json(const PartialOrder& o) {
  json pairs = json::array();
  for (auto [i, j] : o.pairs()) pairs.push_back({i + 1, j + 1});
  return {{"schema", kSchema}, {"n", o.n}, {"pairs", pairs}};
}

inline PartialOrder order_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw Error("pair must have two entries");
    int a = p[0].get<int>(), b = p[1].get<int>();
    if (a < 1 || a > n || b < 1 || b > n) throw Error("pair entry out of range");
    pairs.emplace_back(a - 1, b - 1);
  }
  return transitive_closure(n, pairs);
}

inline json vset_to_json(Vset s) {
  json arr = json::array();
  for (int v : bits(s)) arr.push_back(v + 1);
  return arr;
}

inline json to_json(const StandardSystem& sys) {
  json delta = json::object(), nabla = json::object();
  for (int i : bits(sys.active)) {
    json dmult = json::object(), nmult = json::object();
    for (int j : bits(sys.delta_supp[i]))
      dmult[std::to_string(j + 1)] = sys.delta_dim[i][j];
    for (int j : bits(sys.nabla_supp[i]))
      nmult[std::to_string(j + 1)] = sys.nabla_dim[i][j];
    delta[std::to_string(i + 1)] = {{"support", vset_to_json(sys.delta_supp[i])},
                                    {"multiplicities", dmult}};
    nabla[std::to_string(i + 1)] = {{"support", vset_to_json(sys.nabla_supp[i])},
                                    {"multiplicities", nmult}};
  }
  return {{"schema", kSchema}, {"delta", delta}, {"nabla", nabla}};
}

inline json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  json arr = json::array();
  for (auto [i, j] : pairs) arr.push_back({i + 1, j + 1});
  return arr;
}

inline json to_json(const QhPoset& p) {
  json structures = json::array();
  for (const QhStructure& s : p.structures) {
    json entry = {{"min_order", pairs_to_json(s.min_order.pairs())},
                  {"dec", pairs_to_json(s.decinc.dec_pairs())},
                  {"inc", pairs_to_json(s.decinc.inc_pairs())},
                  {"representative", pairs_to_json(s.representative.pairs())}};
    if (s.tilting) {
      json t = json::object();
      for (int i : bits(p.active))
        t[std::to_string(i + 1)] = vset_to_json((*s.tilting)[i]);
      entry["tilting_supports"] = t;
    }
    structures.push_back(std::move(entry));
  }
  return {{"schema", kSchema},
          {"quiver", to_json(p.quiver)},
          {"count", p.size()},
          {"structures", structures},
          {"hasse", pairs_to_json(hasse_covers(p.leq))}};
}

inline json to_json(const Deconcatenation& d) {
  json parts = json::array();
  for (const DeconcatPart& part : d.parts) {
    json arrows = json::array();
    for (auto [u, v] : part.quiver.arrows) arrows.push_back({u + 1, v + 1});
    parts.push_back({{"vertices", vset_to_json(part.vertices)}, {"arrows", arrows}});
  }
  json cuts = json::array();
  for (auto [v, is_sink] : d.cuts)
    cuts.push_back({{"vertex", v + 1}, {"kind", is_sink ? "sink" : "source"}});
  return {{"schema", kSchema}, {"cuts", cuts}, {"parts", parts}};
}

// ---------------------------------------------------------------------------
// DOT output
// ---------------------------------------------------------------------------

inline std::string order_label(const PartialOrder& o) {
  auto pairs = o.pairs();
  if (pairs.empty()) return "{}";
  std::string s;
  for (auto [i, j] : pairs) {
    if (!s.empty()) s += " ";
    s += std::to_string(i + 1) + "<" + std::to_string(j + 1);
  }
  return s;
}

/// Hasse diagram of (qh.str, ⪯); one node per structure labeled by the
/// strict pairs of its minimal adapted order.
inline std::string to_dot(const QhPoset& p) {
  std::ostringstream out;
  out << "digraph qhstr {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    out << "  n" << i << " [label=\"" << order_label(p.structures[i].min_order)
        << "\"];\n";
  for (auto [a, b] : hasse_covers(p.leq)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const TreePoset& tp) {
  std::ostringstream out;
  out << "digraph tamari {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < (int)tp.trees.size(); ++i)
    out << "  n" << i << " [label=\"" << tp.trees[i].to_parens() << "\"];\n";
  for (auto [a, b] : hasse_covers(tp.leq))
    out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Input helpers
// ---------------------------------------------------------------------------

/// Loads a quiver from a catalog name or a JSON file path.
inline Quiver load_quiver(const std::string& spec) {
  if (auto q = catalog(spec)) return *q;
  std::ifstream in(spec);
  if (!in)
    throw Error("'" + spec + "' is neither a catalog name nor a readable file");
  json j;
  in >> j;
  return quiver_from_json(j);
}

inline PartialOrder load_order(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read order file '" + path + "'");
  json j;
  in >> j;
  return order_from_json(j);
}

}  // namespace qhstruct
