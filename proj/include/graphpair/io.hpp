#pragma once

#include "pairing.hpp"
#include "ribbon.hpp"
#include "verify.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace graphpair {

using json = nlohmann::ordered_json;

inline constexpr const char* schema_tag = "graphpair/1";

// ---- names ----

inline const char* name(vertex_kind k) {
  switch (k) {
    case vertex_kind::white: return "white";
    case vertex_kind::ext_black: return "extBlack";
    case vertex_kind::int_black: return "intBlack";
  }
  return "?";
}

inline const char* name(edge_kind k) { return k == edge_kind::dashed ? "dashed" : "solid"; }

inline const char* name(disk_role r) {
  switch (r) {
    case disk_role::base: return "base";
    case disk_role::leaf: return "leaf";
    case disk_role::node: return "node";
  }
  return "?";
}

inline vertex_kind parse_vertex_kind(const std::string& s) {
  if (s == "white") return vertex_kind::white;
  if (s == "extBlack") return vertex_kind::ext_black;
  if (s == "intBlack") return vertex_kind::int_black;
  throw std::invalid_argument("unknown vertex kind '" + s + "'");
}

inline edge_kind parse_edge_kind(const std::string& s) {
  if (s == "dashed") return edge_kind::dashed;
  if (s == "solid") return edge_kind::solid;
  throw std::invalid_argument("unknown edge kind '" + s + "'");
}

// ---- rationals ----

inline json to_json(const rational& q) { return {{"num", q.numerator()}, {"den", q.denominator()}}; }

inline rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  auto den = j.at("den").get<std::int64_t>();
  if (den == 0) throw std::invalid_argument("zero denominator");
  return rational(j.at("num").get<std::int64_t>(), den);
}

// ---- plain graphs ----

inline std::string generator_id(generator x) {
  return (x.kind == gen_kind::vertex ? "v" : "e") + std::to_string(x.index);
}

inline json to_json(const plain_graph& g) {
  json vs = json::array(), es = json::array(), order = json::array();
  for (int i = 0; i < g.vertex_count(); ++i) vs.push_back({{"id", i}, {"kind", name(g.vertices[i].kind)}});
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    es.push_back({{"id", i}, {"kind", name(e.kind)}, {"src", e.src}, {"dst", e.dst}});
  }
  for (auto x : g.order) order.push_back(generator_id(x));
  return {{"vertices", vs}, {"edges", es}, {"label", {{"order", order}}}};
}

// Ids may be arbitrary integers; they are renumbered by position. The label
// refers to them as "v<id>" / "e<id>". A missing label gets the canonical one.
inline plain_graph plain_graph_from_json(const json& j) {
  plain_graph g;
  std::map<std::int64_t, int> vid, eid;
  for (const auto& v : j.at("vertices")) {
    auto id = v.at("id").get<std::int64_t>();
    if (!vid.emplace(id, g.vertex_count()).second)
      throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    g.add_vertex(parse_vertex_kind(v.at("kind").get<std::string>()));
  }
  auto vertex_ref = [&](const json& x) {
    auto it = vid.find(x.get<std::int64_t>());
    if (it == vid.end()) throw std::invalid_argument("edge refers to unknown vertex");
    return it->second;
  };
  for (const auto& e : j.at("edges")) {
    auto id = e.at("id").get<std::int64_t>();
    if (!eid.emplace(id, g.edge_count()).second)
      throw std::invalid_argument("duplicate edge id " + std::to_string(id));
    g.add_edge(parse_edge_kind(e.at("kind").get<std::string>()), vertex_ref(e.at("src")),
               vertex_ref(e.at("dst")));
  }
  if (!j.contains("label")) {
    g.set_canonical_order();
  } else {
    for (const auto& x : j.at("label").at("order")) {
      auto s = x.get<std::string>();
      if (s.size() < 2 || (s[0] != 'v' && s[0] != 'e'))
        throw std::invalid_argument("bad generator id '" + s + "'");
      auto id = std::stoll(s.substr(1));
      auto& table = s[0] == 'v' ? vid : eid;
      auto it = table.find(id);
      if (it == table.end()) throw std::invalid_argument("label refers to unknown generator " + s);
      g.order.push_back({s[0] == 'v' ? gen_kind::vertex : gen_kind::edge, it->second});
    }
  }
  require_well_formed(g);
  return g;
}

// ---- parity tables ----

inline json to_json(const parity_table& pt) {
  auto par = [](bool odd) { return odd ? "odd" : "even"; };
  return {{"generator",
           {{"dashed", par(pt.dashed)},
            {"solid", par(pt.solid)},
            {"white", par(pt.white)},
            {"extBlack", par(pt.ext_black)},
            {"intBlack", par(pt.int_black)}}},
          {"reversal", {{"dashed", par(pt.dashed_reversal)}, {"solid", par(pt.solid_reversal)}}}};
}

inline parity_table parity_table_from_json(const json& j) {
  auto odd = [](const json& x) {
    auto s = x.get<std::string>();
    if (s == "odd") return true;
    if (s == "even") return false;
    throw std::invalid_argument("parity must be 'odd' or 'even'");
  };
  parity_table pt;
  const auto& g = j.at("generator");
  const auto& r = j.at("reversal");
  pt.dashed = odd(g.at("dashed"));
  pt.solid = odd(g.at("solid"));
  pt.white = odd(g.at("white"));
  pt.ext_black = odd(g.at("extBlack"));
  pt.int_black = odd(g.at("intBlack"));
  pt.dashed_reversal = odd(r.at("dashed"));
  pt.solid_reversal = odd(r.at("solid"));
  return pt;
}

// ---- chord diagrams ----

inline json to_json(const chord_diagram& c) {
  json chords = json::array();
  for (const auto& ch : c.chords)
    chords.push_back({{"src", {ch.src.line, ch.src.level}},
                      {"dst", {ch.dst.line, ch.dst.level}},
                      {"sign", ch.sign}});
  return {{"lines", c.lines}, {"chords", chords}};
}

inline chord_diagram chord_diagram_from_json(const json& j) {
  chord_diagram c;
  c.lines = j.at("lines").get<std::vector<int>>();
  auto vtx = [](const json& x) {
    if (!x.is_array() || x.size() != 2) throw std::invalid_argument("chord end must be [line, level]");
    return diagram_vertex{x[0].get<int>(), x[1].get<int>()};
  };
  for (const auto& ch : j.at("chords"))
    c.chords.push_back({vtx(ch.at("src")), vtx(ch.at("dst")), ch.value("sign", 1)});
  require_valid(c);
  return c;
}

// ---- structures, formal sums ----

inline json to_json(const graph_on_diagram& s) {
  json lines = json::array();
  for (const auto& es : s.line_edges) {
    json l = json::array();
    for (auto [a, b] : es) l.push_back({a, b});
    lines.push_back(l);
  }
  return {{"solid", lines}};
}

// {"terms":[{"graph":{...},"weight":{"num":..,"den":..}}]}
inline formal_sum formal_sum_from_json(const json& j, const parity_table& pt) {
  formal_sum h(pt);
  for (const auto& t : j.at("terms"))
    h.add(plain_graph_from_json(t.at("graph")), rational_from_json(t.at("weight")));
  return h;
}

inline json to_json(const formal_sum& h) {
  json terms = json::array();
  for (const auto& t : h.terms())
    terms.push_back({{"graph", to_json(t.graph)}, {"weight", to_json(t.weight)}, {"aut", t.aut}});
  return {{"terms", terms}};
}

// ---- ribbon presentations ----

inline json to_json(const ribbon_presentation& p) {
  json disks = json::array(), bands = json::array(), xs = json::array();
  for (int d = 0; d < p.disk_count(); ++d) {
    json x = {{"id", d}, {"role", name(p.disks[d].role)}};
    if (p.disks[d].copy) x["copy"] = true;
    disks.push_back(x);
  }
  for (int b = 0; b < p.band_count(); ++b)
    bands.push_back({{"id", b}, {"ends", {p.bands[b].child, p.bands[b].parent}}});
  for (const auto& x : p.crossings)
    xs.push_back({{"id", x.id}, {"band", x.band}, {"disk", x.disk}, {"sign", x.sign}, {"star", x.starred}});
  json out = {{"disks", disks}, {"bands", bands}, {"crossings", xs}};
  out["markedQ"] = p.marked_q ? json{p.marked_q->first, p.marked_q->second} : json(nullptr);
  return out;
}

// ---- reports ----

inline json to_json(const hairy_spec& s) {
  return {{"family", s.family == hairy_family::theta ? "theta" : "y"}, {"hairs", s.hairs}};
}

inline json to_json(const verification_report& r, bool with_timing = false) {
  json per = json::array();
  for (const auto& e : r.per_structure)
    per.push_back({{"iso_class", e.iso_class}, {"sign", e.sign}, {"aut", e.aut}});
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"id", c.id}, {"pass", c.passed}, {"detail", c.detail}});
  json out = {{"schema", schema_tag},
              {"subject", to_json(r.subject)},
              {"good_only", r.good_only}};
  if (r.subject.family == hairy_family::y) out["condition"] = r.condition;
  out["diagram"] = to_json(r.diagram);
  out["structures"] = r.good_only ? r.good_structures : r.structures;
  out["counts"] = {{"G", r.structures}, {"G_good", r.good_structures}, {"resolutions", r.resolutions},
                   {"iso_classes", r.iso_classes}, {"degenerate_classes", r.degenerate_classes}};
  out["value"] = to_json(r.value);
  out["weight_sum"] = to_json(r.weight_sum);
  out["epsilon"] = r.epsilon;
  out["sign_uniform"] = r.sign_uniform;
  out["weights_consistent"] = r.weights_consistent;
  out["resolution_signs"] = r.resolution_signs;
  out["per_structure"] = per;
  out["assertions"] = checks;
  out["all_pass"] = r.all_passed();
  if (with_timing) out["wall_ms"] = r.wall_ms;
  return out;
}

inline json to_json(const cardinality_report& r) {
  return {{"G", r.full},
          {"G_good", r.good},
          {"sum_pow", r.printed_full},
          {"sum_fact", r.printed_good},
          {"prod_fact", r.product_full},
          {"prod_pow", r.product_good},
          {"G_matches", r.full_matches},
          {"G_good_matches", r.good_matches}};
}

// ---- DOT / TikZ ----

inline std::string to_dot(const plain_graph& g) {
  std::ostringstream os;
  os << "graph plain {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << v << "\"";
    switch (g.vertices[v].kind) {
      case vertex_kind::white: os << ", shape=circle, style=solid"; break;
      case vertex_kind::ext_black: os << ", shape=circle, style=filled, fillcolor=black, fontcolor=white"; break;
      case vertex_kind::int_black: os << ", shape=square, style=filled, fillcolor=black, fontcolor=white"; break;
    }
    os << "];\n";
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    os << "  v" << e.src << " -- v" << e.dst << " [label=\"e" << i << "\", dir=forward";
    if (e.kind == edge_kind::dashed) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const chord_diagram& c) {
  std::ostringstream os;
  os << "digraph chords {\n  rankdir=BT;\n";
  for (int l = 0; l < c.s(); ++l) {
    os << "  subgraph cluster_line" << l << " {\n    label=\"line " << l << "\";\n";
    for (int lev = 0; lev <= c.lines[l]; ++lev)
      os << "    p" << l << "_" << lev << " [label=\"(" << l << "," << lev << ")\", shape=point];\n";
    for (int lev = 1; lev <= c.lines[l]; ++lev)
      os << "    p" << l << "_" << lev - 1 << " -> p" << l << "_" << lev << " [color=blue];\n";
    os << "  }\n";
  }
  for (int i = 0; i < c.k(); ++i) {
    const auto& ch = c.chords[i];
    os << "  p" << ch.src.line << "_" << ch.src.level << " -> p" << ch.dst.line << "_" << ch.dst.level
       << " [style=dashed, constraint=false, label=\"" << i + 1 << (ch.sign < 0 ? "-" : "+") << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

// Lines drawn upwards from the axis, left to right; chords as dashed arcs.
inline std::string to_tikz(const chord_diagram& c) {
  std::ostringstream os;
  os << "\\begin{tikzpicture}[x=1cm,y=1cm]\n";
  int top = 0;
  for (int t : c.lines) top = std::max(top, t);
  os << "  \\draw[gray] (-0.5,0) -- (" << c.s() << ".5,0);\n";
  for (int l = 0; l < c.s(); ++l) {
    os << "  \\draw[-stealth, blue] (" << l + 0.5 << ",0) -- (" << l + 0.5 << "," << c.lines[l] + 0.5 << ");\n";
    for (int lev = 0; lev <= c.lines[l]; ++lev)
      os << "  \\fill (" << l + 0.5 << "," << lev << ") circle (2pt);\n";
  }
  for (int i = 0; i < c.k(); ++i) {
    const auto& ch = c.chords[i];
    os << "  \\draw[-stealth, dashed] (" << ch.src.line + 0.5 << "," << ch.src.level << ") to[bend left=20] node[midway, above] {\\tiny "
       << i + 1 << (ch.sign < 0 ? "$-$" : "") << "} (" << ch.dst.line + 0.5 << "," << ch.dst.level << ");\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

inline std::string to_dot(const ribbon_presentation& p) {
  std::ostringstream os;
  os << "graph ribbon {\n";
  for (int d = 0; d < p.disk_count(); ++d) {
    os << "  d" << d << " [label=\"" << name(p.disks[d].role) << " " << d << "\"";
    if (p.disks[d].role == disk_role::base) os << ", shape=box";
    if (p.disks[d].copy) os << ", style=dotted";
    os << "];\n";
  }
  for (int b = 0; b < p.band_count(); ++b)
    os << "  d" << p.bands[b].child << " -- d" << p.bands[b].parent << " [label=\"b" << b << "\", penwidth=3];\n";
  for (const auto& x : p.crossings)
    os << "  d" << p.bands[x.band].child << " -- d" << x.disk << " [style=dashed, color="
       << (x.sign > 0 ? "red" : "blue") << ", label=\"x" << x.id << (x.starred ? "*" : "") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace graphpair
