#pragma once

#include "chord_diagram.hpp"
#include "isomorphism.hpp"
#include "rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace graphpair {

using level_edge = std::pair<int, int>;  // (lower level, higher level) on one line

struct graph_on_diagram {
  chord_diagram diagram;
  std::vector<std::vector<level_edge>> line_edges;  // per line, sorted
  bool operator==(const graph_on_diagram&) const = default;
};

inline bool solid_tree_is_path(int t, const std::vector<level_edge>& es) {
  std::vector<int> deg(t + 1, 0);
  for (auto [a, b] : es)
    if (++deg[a] > 2 || ++deg[b] > 2) return false;
  return true;
}

// Solid structures on one line with levels 0..t: exactly t edges, each joining
// two distinct levels, every level > 0 fed by an edge from a strictly lower
// level. Sorted lexicographically.
inline std::vector<std::vector<level_edge>> line_structures(int t, bool good_only) {
  std::vector<level_edge> all;
  for (int b = 1; b <= t; ++b)
    for (int a = 0; a < b; ++a) all.push_back({a, b});
  std::vector<std::vector<level_edge>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == t) {
      std::vector<bool> fed(t + 1, false);
      std::vector<level_edge> es;
      for (int i : pick) {
        es.push_back(all[i]);
        fed[all[i].second] = true;
      }
      for (int m = 1; m <= t; ++m)
        if (!fed[m]) return;
      if (good_only && !solid_tree_is_path(t, es)) return;
      std::sort(es.begin(), es.end());
      out.push_back(std::move(es));
      return;
    }
    for (std::size_t i = from; i < all.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<graph_on_diagram> enumerate_structures(const chord_diagram& c, bool good_only) {
  require_valid(c);
  std::vector<std::vector<std::vector<level_edge>>> per_line;
  for (int t : c.lines) per_line.push_back(line_structures(t, good_only));
  std::vector<graph_on_diagram> out;
  graph_on_diagram cur{c, std::vector<std::vector<level_edge>>(c.lines.size())};
  auto rec = [&](auto&& self, std::size_t l) -> void {
    if (l == per_line.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& es : per_line[l]) {
      cur.line_edges[l] = es;
      self(self, l + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Level edges go upward within a line and every point above level 0 is fed from below.
inline bool structure_conditions_hold(const chord_diagram& c,
                                      const std::vector<std::vector<level_edge>>& le) {
  if (le.size() != c.lines.size()) return false;
  for (std::size_t l = 0; l < le.size(); ++l) {
    int t = c.lines[l];
    std::vector<bool> fed(t + 1, false);
    for (auto [a, b] : le[l]) {
      if (a < 0 || b > t || a >= b) return false;
      fed[b] = true;
    }
    for (int m = 1; m <= t; ++m)
      if (!fed[m]) return false;
  }
  return true;
}

// Builds the realized graph from arbitrary level edges without checking
// the fed-from-below rule; realize() is the checked entry point.
inline plain_graph realize_unchecked(const chord_diagram& c,
                                     const std::vector<std::vector<level_edge>>& le,
                                     int* phase_one = nullptr) {
  auto pos = vertex_positions(c);
  plain_graph g;
  for (int i = 0; i < 2 * c.k(); ++i) g.add_vertex(vertex_kind::ext_black);
  // ingoing solid edges per vertex position, sorted by the lower level
  std::vector<std::vector<std::pair<int, int>>> ingoing(2 * c.k());
  for (std::size_t l = 0; l < le.size(); ++l)
    for (auto [a, b] : le[l]) {
      int lo = pos.at({static_cast<int>(l), a});
      int hi = pos.at({static_cast<int>(l), b});
      ingoing[hi].push_back({a, lo});
    }
  for (auto& v : ingoing) std::sort(v.begin(), v.end());
  int first = 0;
  for (int i = 0; i < c.k(); ++i)
    for (auto [lev, lo] : ingoing[2 * i]) {
      g.add_edge(edge_kind::solid, lo, 2 * i);
      ++first;
    }
  for (int i = 0; i < c.k(); ++i) {
    g.add_edge(edge_kind::dashed, 2 * i, 2 * i + 1);
    for (auto [lev, lo] : ingoing[2 * i + 1]) g.add_edge(edge_kind::solid, lo, 2 * i + 1);
  }
  g.set_canonical_order();
  if (phase_one) *phase_one = first;
  return g;
}

// Realized graph with the induced label: vertices in V(C) order, edges in the
// two-phase order. `phase_one` receives the number of solid edges ordered in
// the first phase.
inline plain_graph realize(const graph_on_diagram& s, int* phase_one = nullptr) {
  require_valid(s.diagram);
  if (!structure_conditions_hold(s.diagram, s.line_edges))
    throw std::invalid_argument("realize: structure has a non-upward edge or an unfed level");
  return realize_unchecked(s.diagram, s.line_edges, phase_one);
}

// ---- graph-chord pairing ----

struct matching {
  std::vector<diagram_vertex> sigma;  // graph vertex -> diagram vertex
  int sign;
};

namespace detail {

// Graph g relabelled by the label a bijection onto C induces.
inline plain_graph induced_label(const plain_graph& g, const chord_diagram& c,
                                 const std::vector<diagram_vertex>& sigma) {
  auto pos = vertex_positions(c);
  int nv = g.vertex_count();
  std::vector<int> at(nv);  // graph vertex -> V(C) position
  std::vector<int> who(nv);
  for (int v = 0; v < nv; ++v) {
    at[v] = pos.at(sigma[v]);
    who[at[v]] = v;
  }
  plain_graph out = g;
  std::vector<std::vector<std::pair<int, int>>> ingoing(nv);  // (lower level, edge)
  std::vector<std::vector<int>> dashed_at(c.k());
  for (int i = 0; i < g.edge_count(); ++i) {
    auto& e = out.edges[i];
    if (e.kind == edge_kind::dashed) {
      if (at[e.src] % 2 == 1) std::swap(e.src, e.dst);
      dashed_at[at[e.src] / 2].push_back(i);
    } else {
      if (sigma[e.src].level > sigma[e.dst].level) std::swap(e.src, e.dst);
      ingoing[e.dst].push_back({sigma[e.src].level, i});
    }
  }
  for (auto& v : ingoing) std::sort(v.begin(), v.end());
  out.order.clear();
  for (int p = 0; p < nv; ++p) out.order.push_back({gen_kind::vertex, who[p]});
  for (int i = 0; i < c.k(); ++i)
    for (auto [lev, e] : ingoing[who[2 * i]]) out.order.push_back({gen_kind::edge, e});
  for (int i = 0; i < c.k(); ++i) {
    for (int e : dashed_at[i]) out.order.push_back({gen_kind::edge, e});
    for (auto [lev, e] : ingoing[who[2 * i + 1]]) out.order.push_back({gen_kind::edge, e});
  }
  return out;
}

}  // namespace detail

// All bijections sigma: B(g) -> V(C) that send dashed edges to chords, solid components to lines, and leave
// no point above level 0 unfed. Signs attached.
inline std::vector<matching> matchings(const plain_graph& g, const chord_diagram& c,
                                       const parity_table& pt) {
  require_valid(c);
  if (!is_admissible(g)) throw std::invalid_argument("matchings: graph is not admissible");
  std::vector<matching> out;
  int k = c.k();
  int nv = g.vertex_count();
  if (g.count(vertex_kind::white) != 0 || g.count(vertex_kind::int_black) != 0) return out;
  if (nv != 2 * k || g.count(edge_kind::dashed) != k) return out;
  std::vector<int> partner(nv, -1);
  for (const auto& e : g.edges) {
    if (e.kind != edge_kind::dashed) continue;
    if (e.src == e.dst || partner[e.src] >= 0 || partner[e.dst] >= 0) return out;
    partner[e.src] = e.dst;
    partner[e.dst] = e.src;
  }
  for (const auto& e : g.edges)
    if (e.kind == edge_kind::solid && e.src == e.dst) return out;
  auto comp = components(g, false, true);
  int nc = detail::distinct(comp);
  if (nc != c.s()) return out;
  std::vector<std::vector<int>> comp_vertices(nc);
  for (int v = 0; v < nv; ++v) comp_vertices[comp[v]].push_back(v);

  // diagram vertices indexed by V(C) position
  std::vector<diagram_vertex> dv(2 * k);
  for (int i = 0; i < k; ++i) {
    dv[2 * i] = c.chords[i].src;
    dv[2 * i + 1] = c.chords[i].dst;
  }
  std::vector<int> assign(2 * k, -1), inv(nv, -1), line_comp(c.s(), -1), comp_line(nc, -1);
  std::vector<int> line_left(c.s());
  for (int l = 0; l < c.s(); ++l) line_left[l] = c.lines[l] + 1;

  auto finish = [&]() {
    std::vector<diagram_vertex> sigma(nv);
    for (int v = 0; v < nv; ++v) sigma[v] = dv[inv[v]];
    // every point above level 0 fed from below
    std::vector<bool> fed(nv, false);
    for (const auto& e : g.edges) {
      if (e.kind != edge_kind::solid) continue;
      int lo = e.src, hi = e.dst;
      if (sigma[lo].level > sigma[hi].level) std::swap(lo, hi);
      if (sigma[lo].level < sigma[hi].level) fed[hi] = true;
    }
    for (int v = 0; v < nv; ++v)
      if (sigma[v].level > 0 && !fed[v]) return;
    int sign = label_sign(g, detail::induced_label(g, c, sigma), pt);
    out.push_back({std::move(sigma), sign});
  };

  auto rec = [&](auto&& self, int placed) -> void {
    if (placed == 2 * k) {
      finish();
      return;
    }
    // most constrained diagram vertex first
    int pick = -1, best = 3;
    for (int p = 0; p < 2 * k && best > 0; ++p) {
      if (assign[p] >= 0) continue;
      int score = assign[p ^ 1] >= 0 ? 0 : line_comp[dv[p].line] >= 0 ? 1 : 2;
      if (score < best) {
        best = score;
        pick = p;
      }
    }
    int line = dv[pick].line;
    std::vector<int> cand;
    if (assign[pick ^ 1] >= 0) {
      int x = partner[assign[pick ^ 1]];
      if (inv[x] < 0) cand.push_back(x);
    } else if (line_comp[line] >= 0) {
      for (int x : comp_vertices[line_comp[line]])
        if (inv[x] < 0) cand.push_back(x);
    } else {
      for (int x = 0; x < nv; ++x)
        if (inv[x] < 0) cand.push_back(x);
    }
    for (int x : cand) {
      int cx = comp[x];
      bool bind = false;
      if (line_comp[line] < 0) {
        if (comp_line[cx] >= 0 ||
            static_cast<int>(comp_vertices[cx].size()) != c.lines[line] + 1)
          continue;
        line_comp[line] = cx;
        comp_line[cx] = line;
        bind = true;
      } else if (line_comp[line] != cx) {
        continue;
      }
      assign[pick] = x;
      inv[x] = pick;
      self(self, placed + 1);
      assign[pick] = -1;
      inv[x] = -1;
      if (bind) {
        line_comp[line] = -1;
        comp_line[cx] = -1;
      }
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const matching& a, const matching& b) {
    return a.sigma < b.sigma;
  });
  return out;
}

inline int pairing_value(const plain_graph& g, const chord_diagram& c, const parity_table& pt) {
  int v = 0;
  for (const auto& m : matchings(g, c, pt)) v += m.sign;
  return v;
}

// ---- formal sums ----

// H = sum w(G)/|Aut(G)| G over labelled plain graphs; stores w(G) per class.
class formal_sum {
 public:
  struct term {
    plain_graph graph;  // representative with its label
    canonical_form form;
    rational weight;
    std::int64_t aut;
  };

  explicit formal_sum(parity_table pt) : pt_(pt) {}

  const parity_table& parity() const { return pt_; }
  const std::vector<term>& terms() const { return terms_; }

  // Adds w * g. Classes with an orientation-reversing automorphism are rejected.
  void add(const plain_graph& g, rational w) {
    require_well_formed(g);
    auto cf = canonicalize(g, true);
    auto it = index_.find(cf.code);
    if (it == index_.end()) {
      if (has_orientation_reversing_automorphism(g, pt_, cf))
        throw std::invalid_argument("formal_sum: graph has an orientation-reversing automorphism");
      std::int64_t aut = cf.vertex_automorphisms * parallel_edge_factor(g);
      cf.automorphisms.clear();
      index_.emplace(cf.code, terms_.size());
      terms_.push_back({g, std::move(cf), w, aut});
      return;
    }
    auto& t = terms_[it->second];
    t.weight += relative_sign(t, g, cf) * w;
  }

  // Coefficient of the class of g, expressed relative to g's own label.
  std::optional<rational> coefficient(const plain_graph& g) const {
    auto cf = canonicalize(g);
    auto it = index_.find(cf.code);
    if (it == index_.end()) return std::nullopt;
    const auto& t = terms_[it->second];
    return relative_sign(t, g, cf) * t.weight;
  }

 private:
  int relative_sign(const term& t, const plain_graph& g, const canonical_form& cf) const {
    auto m = iso(t.graph, g, t.form, cf);
    if (!m) throw std::logic_error("formal_sum: canonical forms agree but no isomorphism");
    return label_sign(g, transport(t.graph, m->vertex_map, m->edge_map, g), pt_);
  }

  parity_table pt_;
  std::vector<term> terms_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline void check_counting_preconditions(const formal_sum& h, const chord_diagram& c,
                                         bool good_only) {
  for (const auto& t : h.terms()) {
    if (!is_admissible(t.graph)) throw std::invalid_argument("counting: term is not admissible");
    if (order(t.graph) > c.k()) throw std::invalid_argument("counting: term order exceeds k");
    if (t.graph.count(vertex_kind::int_black) > 0)
      throw std::invalid_argument("counting: term has an internal black vertex");
    if (good_only && !is_good(t.graph)) throw std::invalid_argument("counting: term is not good");
  }
}

// (-1)^{r(C)} sum over structures of w(G) s(G, realized structure)
inline rational counting_formula(const formal_sum& h, const chord_diagram& c, bool good_only) {
  check_counting_preconditions(h, c, good_only);
  rational sum = 0;
  for (const auto& s : enumerate_structures(c, good_only))
    if (auto w = h.coefficient(realize(s))) sum += *w;
  return negative_count(c) % 2 ? -sum : sum;
}

// ---- resolutions of hairy graphs ----

// One resolution: every vertex of a hairy graph absorbed into a line is
// replaced by solid edges; parents[l][m] is the solid parent of level m > 0.
struct resolution {
  plain_graph graph;
  std::vector<std::vector<int>> parents;
};

inline std::vector<resolution> stu_resolutions(const hairy_spec& spec, bool good_only = false) {
  auto lay = make_layout(make_skeleton(spec));
  int nl = static_cast<int>(lay.lines.size());
  std::vector<int> height(nl), offset(nl + 1, 0);
  for (int l = 0; l < nl; ++l) {
    height[l] = static_cast<int>(lay.lines[l].ends.size()) - 1;
    offset[l + 1] = offset[l] + height[l] + 1;
  }
  std::vector<resolution> out;
  std::vector<std::vector<int>> par(nl);
  for (int l = 0; l < nl; ++l) par[l].assign(height[l] + 1, -1);
  auto emit = [&]() {
    resolution r;
    r.parents = par;
    auto& g = r.graph;
    for (int v = 0; v < offset[nl]; ++v) g.add_vertex(vertex_kind::ext_black);
    for (const auto& seg : lay.segments)
      if (!seg.contracted)
        g.add_edge(edge_kind::dashed, offset[seg.src_line] + seg.src_level,
                   offset[seg.dst_line] + seg.dst_level);
    for (int l = 0; l < nl; ++l)
      for (int m = 1; m <= height[l]; ++m)
        g.add_edge(edge_kind::solid, offset[l] + par[l][m], offset[l] + m);
    g.set_canonical_order();
    out.push_back(std::move(r));
  };
  auto path_ok = [&](int l) {
    std::vector<int> deg(height[l] + 1, 0);
    for (int m = 1; m <= height[l]; ++m)
      if (++deg[m] > 2 || ++deg[par[l][m]] > 2) return false;
    return true;
  };
  auto rec = [&](auto&& self, int l, int m) -> void {
    if (l == nl) {
      emit();
      return;
    }
    if (m > height[l]) {
      if (!good_only || path_ok(l)) self(self, l + 1, 1);
      return;
    }
    for (int p = 0; p < m; ++p) {
      par[l][m] = p;
      self(self, l, m + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace graphpair
