#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphpair {

enum class vertex_kind { white, ext_black, int_black };
enum class edge_kind { dashed, solid };

struct vertex {
  vertex_kind kind;
  bool operator==(const vertex&) const = default;
};

// orientation is src -> dst
struct edge {
  edge_kind kind;
  int src;
  int dst;
  bool operator==(const edge&) const = default;
};

enum class gen_kind { vertex, edge };

struct generator {
  gen_kind kind;
  int index;
  auto operator<=>(const generator&) const = default;
};

// Vertex i and edge i are addressed by position. The label is `order` together
// with the src/dst orientation of every edge.
struct plain_graph {
  std::vector<vertex> vertices;
  std::vector<edge> edges;
  std::vector<generator> order;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int count(vertex_kind k) const {
    return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                          [k](const vertex& v) { return v.kind == k; }));
  }
  int count(edge_kind k) const {
    return static_cast<int>(
        std::count_if(edges.begin(), edges.end(), [k](const edge& e) { return e.kind == k; }));
  }

  // vertices then edges, each in index order
  void set_canonical_order() {
    order.clear();
    for (int i = 0; i < vertex_count(); ++i) order.push_back({gen_kind::vertex, i});
    for (int i = 0; i < edge_count(); ++i) order.push_back({gen_kind::edge, i});
  }

  int add_vertex(vertex_kind k) {
    vertices.push_back({k});
    return vertex_count() - 1;
  }
  int add_edge(edge_kind k, int src, int dst) {
    edges.push_back({k, src, dst});
    return edge_count() - 1;
  }
};

struct grading_params {
  int n = 5;
  int j = 3;
};

inline void validate(const grading_params& gp) {
  if (gp.n < 4) throw std::invalid_argument("n must be >= 4");
  if (gp.j < 2) throw std::invalid_argument("j must be >= 2");
  if (gp.n - gp.j < 2) throw std::invalid_argument("n - j must be >= 2");
}

inline int top_degree(int k, int g, const grading_params& gp) {
  if (k < 1 || g < 1) throw std::invalid_argument("top_degree needs k >= 1 and g >= 1");
  return k * (gp.n - gp.j - 2) + (gp.j - 1) * (g - 1);
}

// true = odd
struct parity_table {
  bool dashed = false;
  bool solid = false;
  bool white = false;
  bool ext_black = false;
  bool int_black = false;
  bool dashed_reversal = false;
  bool solid_reversal = false;

  bool odd(vertex_kind k) const {
    switch (k) {
      case vertex_kind::white: return white;
      case vertex_kind::ext_black: return ext_black;
      case vertex_kind::int_black: return int_black;
    }
    return false;
  }
  bool odd(edge_kind k) const { return k == edge_kind::dashed ? dashed : solid; }
  bool reversal_odd(edge_kind k) const {
    return k == edge_kind::dashed ? dashed_reversal : solid_reversal;
  }
  bool odd(const plain_graph& g, generator x) const {
    return x.kind == gen_kind::vertex ? odd(g.vertices.at(x.index).kind)
                                      : odd(g.edges.at(x.index).kind);
  }
  bool operator==(const parity_table&) const = default;
};

// A dashed edge carries an (n-1)-form, a solid edge a (j-1)-form; white
// vertices move in R^n, black ones in R^j. Reversing a dashed edge is the
// antipodal map of S^{n-1}. Solid edges reverse with their own generator
// parity: with the antipodal degree instead, unit weights stop being a class
// function on the theta resolutions.
inline parity_table default_parity(const grading_params& gp) {
  parity_table pt;
  pt.dashed = (gp.n - 1) % 2 != 0;
  pt.solid = (gp.j - 1) % 2 != 0;
  pt.white = gp.n % 2 != 0;
  pt.ext_black = gp.j % 2 != 0;
  pt.int_black = gp.j % 2 != 0;
  pt.dashed_reversal = gp.n % 2 != 0;
  pt.solid_reversal = (gp.j - 1) % 2 != 0;
  return pt;
}

// ---- basic accounting ----

inline int order(const plain_graph& g) {
  return g.count(edge_kind::dashed) - g.count(vertex_kind::white);
}

struct degree_info {
  int dashed = 0;
  int solid = 0;
};

inline std::vector<degree_info> degrees(const plain_graph& g) {
  std::vector<degree_info> d(g.vertices.size());
  for (const auto& e : g.edges) {
    auto bump = [&](int v) {
      (e.kind == edge_kind::dashed ? d[v].dashed : d[v].solid) += 1;
    };
    bump(e.src);
    bump(e.dst);
  }
  return d;
}

// union-find over the given edge kinds; returns component id per vertex
inline std::vector<int> components(const plain_graph& g, bool use_dashed = true,
                                   bool use_solid = true) {
  std::vector<int> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    if (e.kind == edge_kind::dashed && !use_dashed) continue;
    if (e.kind == edge_kind::solid && !use_solid) continue;
    parent[find(e.src)] = find(e.dst);
  }
  std::vector<int> id(g.vertices.size(), -1);
  int next = 0;
  std::vector<int> root_id(g.vertices.size(), -1);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    int r = find(static_cast<int>(v));
    if (root_id[r] < 0) root_id[r] = next++;
    id[v] = root_id[r];
  }
  return id;
}

inline int component_count(const plain_graph& g) {
  auto c = components(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

inline int betti_number(const plain_graph& g) {
  return g.edge_count() - g.vertex_count() + component_count(g);
}

inline bool is_admissible(const plain_graph& g) {
  auto d = degrees(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.vertices[v].kind == vertex_kind::ext_black && d[v].dashed == 0) return false;
  return true;
}

inline bool is_good(const plain_graph& g) {
  if (g.count(vertex_kind::int_black) > 0) return false;
  auto comp = components(g, false, true);
  int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> nv(nc, 0), ne(nc, 0);
  auto d = degrees(g);
  for (int v = 0; v < g.vertex_count(); ++v) {
    ++nv[comp[v]];
    if (d[v].solid > 2) return false;
  }
  for (const auto& e : g.edges) {
    if (e.kind != edge_kind::solid) continue;
    if (e.src == e.dst) return false;
    ++ne[comp[e.src]];
  }
  // a connected graph with max degree 2 and |E| = |V| - 1 is a path
  for (int c = 0; c < nc; ++c)
    if (ne[c] != nv[c] - 1) return false;
  return true;
}

// Structural rules of a plain graph. Empty result means well-formed.
inline std::vector<std::string> violations(const plain_graph& g) {
  std::vector<std::string> out;
  int nv = g.vertex_count();
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv)
      out.push_back("edge " + std::to_string(i) + " has an endpoint out of range");
  }
  if (!out.empty()) return out;
  auto d = degrees(g);
  for (int v = 0; v < nv; ++v) {
    auto k = g.vertices[v].kind;
    if (k == vertex_kind::white && (d[v].dashed < 3 || d[v].solid != 0))
      out.push_back("white vertex " + std::to_string(v) + " needs >=3 dashed and no solid edges");
    if (k == vertex_kind::int_black && (d[v].solid < 3 || d[v].dashed != 0))
      out.push_back("internal black vertex " + std::to_string(v) +
                    " needs >=3 solid and no dashed edges");
  }
  auto comp = components(g);
  int nc = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<bool> has_ext(nc, false);
  for (int v = 0; v < nv; ++v)
    if (g.vertices[v].kind == vertex_kind::ext_black) has_ext[comp[v]] = true;
  for (int c = 0; c < nc; ++c)
    if (!has_ext[c]) out.push_back("component " + std::to_string(c) + " has no external black vertex");

  std::vector<int> seen_v(nv, 0), seen_e(g.edges.size(), 0);
  bool bad_label = g.order.size() != g.vertices.size() + g.edges.size();
  for (auto x : g.order) {
    if (x.kind == gen_kind::vertex) {
      if (x.index < 0 || x.index >= nv || seen_v[x.index]++) bad_label = true;
    } else {
      if (x.index < 0 || x.index >= g.edge_count() || seen_e[x.index]++) bad_label = true;
    }
  }
  if (bad_label) out.push_back("label order is not a permutation of vertices and edges");
  return out;
}

inline void require_well_formed(const plain_graph& g) {
  auto v = violations(g);
  if (!v.empty()) throw std::invalid_argument("malformed plain graph: " + v.front());
}

// ---- orientation signs ----

inline int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

// Sign relating two labels of the same underlying graph. `a` and `b` must
// agree on vertex kinds and on every edge's kind and endpoint set; they may
// differ in the generator order and in edge orientations.
inline int label_sign(const plain_graph& a, const plain_graph& b, const parity_table& pt) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size())
    throw std::invalid_argument("label_sign: labels over different generator sets");
  int sign = 1;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const auto& ea = a.edges[i];
    const auto& eb = b.edges[i];
    bool same = ea.src == eb.src && ea.dst == eb.dst;
    bool flipped = ea.src == eb.dst && ea.dst == eb.src;
    if (ea.kind != eb.kind || (!same && !flipped))
      throw std::invalid_argument("label_sign: edge " + std::to_string(i) + " differs");
    if (!same && pt.reversal_odd(ea.kind)) sign = -sign;
  }
  auto odd_seq = [&](const plain_graph& g) {
    std::vector<generator> s;
    for (auto x : g.order)
      if (pt.odd(g, x)) s.push_back(x);
    return s;
  };
  auto sa = odd_seq(a);
  auto sb = odd_seq(b);
  if (sa.size() != sb.size() || a.order.size() != b.order.size())
    throw std::invalid_argument("label_sign: labels over different generator sets");
  std::vector<generator> sorted_b = sb;
  std::sort(sorted_b.begin(), sorted_b.end());
  std::vector<int> perm(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    auto it = std::lower_bound(sorted_b.begin(), sorted_b.end(), sa[i]);
    if (it == sorted_b.end() || !(*it == sa[i]))
      throw std::invalid_argument("label_sign: labels over different generator sets");
    // position of sa[i] inside b's odd sequence
    perm[i] = static_cast<int>(std::find(sb.begin(), sb.end(), sa[i]) - sb.begin());
  }
  return sign * permutation_sign(perm);
}

// Copy of g carrying g's structure transported along a vertex map and edge
// map into the index space of a target graph. Used to pull a label back along
// an isomorphism: result[i] refers to target indices.
inline plain_graph transport(const plain_graph& g, const std::vector<int>& vmap,
                             const std::vector<int>& emap, const plain_graph& target) {
  plain_graph out = target;
  for (int i = 0; i < g.edge_count(); ++i) {
    auto& e = out.edges[emap[i]];
    e.src = vmap[g.edges[i].src];
    e.dst = vmap[g.edges[i].dst];
  }
  out.order.clear();
  for (auto x : g.order)
    out.order.push_back({x.kind, x.kind == gen_kind::vertex ? vmap[x.index] : emap[x.index]});
  return out;
}

// ---- support bound ----

// True iff g has >= 2k external black vertices carrying a dashed edge. When it
// holds, the structural conclusion is re-checked and a violation throws.
inline bool support_check(const plain_graph& g, int k) {
  if (order(g) > k) throw std::invalid_argument("support_check: order exceeds k");
  auto d = degrees(g);
  int with_dashed = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.vertices[v].kind == vertex_kind::ext_black && d[v].dashed > 0) ++with_dashed;
  if (with_dashed < 2 * k) return false;
  bool ok = g.count(vertex_kind::white) == 0 && g.count(edge_kind::dashed) == k &&
            with_dashed == 2 * k;
  if (ok && is_admissible(g)) ok = g.count(vertex_kind::ext_black) == 2 * k;
  if (!ok) throw std::logic_error("support_check: conclusion fails on a graph of order <= k");
  return true;
}

}  // namespace graphpair
