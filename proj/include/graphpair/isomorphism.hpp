#pragma once

#include "plain_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace graphpair {

// Canonical labelling by individualization/refinement with full backtracking.
// Orientation is ignored: two plain graphs are isomorphic when a bijection
// preserves vertex kinds, edge kinds and endpoint multisets.
struct canonical_form {
  std::vector<int> code;      // complete invariant
  std::vector<int> position;  // position[v] = canonical slot of vertex v
  std::int64_t vertex_automorphisms = 0;
  std::vector<std::vector<int>> automorphisms;  // filled on request
};

namespace detail {

struct adjacency {
  // per vertex: (edge kind, neighbour), loops listed once per loop
  std::vector<std::vector<std::pair<int, int>>> nbr;
};

inline adjacency make_adjacency(const plain_graph& g) {
  adjacency a;
  a.nbr.resize(g.vertices.size());
  for (const auto& e : g.edges) {
    int k = e.kind == edge_kind::dashed ? 0 : 1;
    if (e.src == e.dst) {
      a.nbr[e.src].push_back({k + 2, e.src});
    } else {
      a.nbr[e.src].push_back({k, e.dst});
      a.nbr[e.dst].push_back({k, e.src});
    }
  }
  return a;
}

template <class Key>
std::vector<int> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}

inline int distinct(const std::vector<int>& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

inline std::vector<int> refine(const adjacency& adj, std::vector<int> color) {
  int cells = distinct(color);
  for (;;) {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(color.size());
    for (std::size_t v = 0; v < color.size(); ++v) {
      sig[v].first = color[v];
      for (auto [k, u] : adj.nbr[v]) sig[v].second.push_back({k, color[u]});
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto next = rank_keys(sig);
    int c = distinct(next);
    color = std::move(next);
    if (c == cells) return color;
    cells = c;
  }
}

inline std::vector<int> leaf_code(const plain_graph& g, const std::vector<int>& pos) {
  std::vector<int> code;
  code.reserve(g.vertices.size() + 3 * g.edges.size() + 2);
  code.push_back(g.vertex_count());
  code.push_back(g.edge_count());
  std::vector<int> kinds(g.vertices.size());
  for (int v = 0; v < g.vertex_count(); ++v) kinds[pos[v]] = static_cast<int>(g.vertices[v].kind);
  code.insert(code.end(), kinds.begin(), kinds.end());
  std::vector<std::tuple<int, int, int>> es;
  for (const auto& e : g.edges) {
    int a = pos[e.src], b = pos[e.dst];
    es.push_back({std::min(a, b), std::max(a, b), static_cast<int>(e.kind)});
  }
  std::sort(es.begin(), es.end());
  for (auto [a, b, k] : es) {
    code.push_back(a);
    code.push_back(b);
    code.push_back(k);
  }
  return code;
}

struct search_state {
  const plain_graph* g;
  adjacency adj;
  bool keep_automorphisms;
  canonical_form best;
  std::vector<std::vector<int>> best_leaves;
};

inline void search(search_state& st, const std::vector<int>& color) {
  int n = static_cast<int>(color.size());
  int cells = distinct(color);
  if (cells == n) {
    auto code = leaf_code(*st.g, color);
    if (st.best.code.empty() || code < st.best.code) {
      st.best.code = std::move(code);
      st.best.position = color;
      st.best.vertex_automorphisms = 1;
      st.best_leaves.assign(1, color);
    } else if (code == st.best.code) {
      ++st.best.vertex_automorphisms;
      if (st.keep_automorphisms) st.best_leaves.push_back(color);
    }
    return;
  }
  std::vector<int> size(cells, 0);
  for (int c : color) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<std::pair<int, int>> key(n);
    for (int u = 0; u < n; ++u) key[u] = {color[u], u == v ? 0 : 1};
    search(st, refine(st.adj, rank_keys(key)));
  }
}

}  // namespace detail

inline canonical_form canonicalize(const plain_graph& g, bool keep_automorphisms = false) {
  detail::search_state st{&g, detail::make_adjacency(g), keep_automorphisms, {}, {}};
  if (g.vertices.empty()) {
    st.best.code = detail::leaf_code(g, {});
    st.best.vertex_automorphisms = 1;
    if (keep_automorphisms) st.best.automorphisms.push_back({});
    return st.best;
  }
  auto d = degrees(g);
  std::vector<std::tuple<int, int, int>> init(g.vertices.size());
  for (int v = 0; v < g.vertex_count(); ++v)
    init[v] = {static_cast<int>(g.vertices[v].kind), d[v].dashed, d[v].solid};
  detail::search(st, detail::refine(st.adj, detail::rank_keys(init)));
  if (keep_automorphisms) {
    int n = g.vertex_count();
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[st.best.position[v]] = v;
    for (const auto& leaf : st.best_leaves) {
      std::vector<int> perm(n);
      for (int v = 0; v < n; ++v) perm[v] = inv[leaf[v]];
      st.best.automorphisms.push_back(std::move(perm));
    }
  }
  return st.best;
}

struct isomorphism {
  std::vector<int> vertex_map;  // g1 vertex -> g2 vertex
  std::vector<int> edge_map;    // g1 edge -> g2 edge
};

// Extend a vertex bijection to edges, pairing parallel edges in index order.
inline std::optional<std::vector<int>> match_edges(const plain_graph& g1, const plain_graph& g2,
                                                   const std::vector<int>& vmap) {
  if (g1.edges.size() != g2.edges.size()) return std::nullopt;
  std::map<std::tuple<int, int, int>, std::vector<int>> pool;
  for (int i = g2.edge_count() - 1; i >= 0; --i) {
    const auto& e = g2.edges[i];
    pool[{static_cast<int>(e.kind), std::min(e.src, e.dst), std::max(e.src, e.dst)}].push_back(i);
  }
  std::vector<int> emap(g1.edges.size());
  for (int i = 0; i < g1.edge_count(); ++i) {
    const auto& e = g1.edges[i];
    int a = vmap[e.src], b = vmap[e.dst];
    auto it = pool.find({static_cast<int>(e.kind), std::min(a, b), std::max(a, b)});
    if (it == pool.end() || it->second.empty()) return std::nullopt;
    emap[i] = it->second.back();
    it->second.pop_back();
  }
  return emap;
}

inline std::optional<isomorphism> iso(const plain_graph& g1, const plain_graph& g2,
                                      const canonical_form& c1, const canonical_form& c2) {
  if (c1.code != c2.code) return std::nullopt;
  int n = g1.vertex_count();
  std::vector<int> inv2(n);
  for (int v = 0; v < n; ++v) inv2[c2.position[v]] = v;
  isomorphism out;
  out.vertex_map.resize(n);
  for (int v = 0; v < n; ++v) out.vertex_map[v] = inv2[c1.position[v]];
  auto emap = match_edges(g1, g2, out.vertex_map);
  if (!emap) return std::nullopt;
  out.edge_map = std::move(*emap);
  return out;
}

inline std::optional<isomorphism> iso(const plain_graph& g1, const plain_graph& g2) {
  return iso(g1, g2, canonicalize(g1), canonicalize(g2));
}

// m! for every class of m parallel edges of one kind
inline std::int64_t parallel_edge_factor(const plain_graph& g) {
  std::map<std::tuple<int, int, int>, int> mult;
  for (const auto& e : g.edges)
    ++mult[{static_cast<int>(e.kind), std::min(e.src, e.dst), std::max(e.src, e.dst)}];
  std::int64_t f = 1;
  for (const auto& [key, m] : mult)
    for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

inline std::int64_t automorphism_count(const plain_graph& g) {
  return canonicalize(g).vertex_automorphisms * parallel_edge_factor(g);
}

// Whether some automorphism acts on the orientation by -1. Checks every vertex
// automorphism, every transposition of parallel edges and every loop flip;
// these generate the full automorphism group of the multigraph.
inline bool has_orientation_reversing_automorphism(const plain_graph& g, const parity_table& pt,
                                                   const canonical_form& cf) {
  for (const auto& a : cf.automorphisms) {
    auto emap = match_edges(g, g, a);
    if (!emap) continue;
    if (label_sign(g, transport(g, a, *emap, g), pt) < 0) return true;
  }
  std::vector<int> id(g.vertices.size());
  std::iota(id.begin(), id.end(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edges[i];
    if (e.src == e.dst && pt.reversal_odd(e.kind)) return true;
    for (int j = i + 1; j < g.edge_count(); ++j) {
      const auto& f = g.edges[j];
      if (f.kind != e.kind || std::min(f.src, f.dst) != std::min(e.src, e.dst) ||
          std::max(f.src, f.dst) != std::max(e.src, e.dst))
        continue;
      std::vector<int> emap(g.edges.size());
      std::iota(emap.begin(), emap.end(), 0);
      std::swap(emap[i], emap[j]);
      if (label_sign(g, transport(g, id, emap, g), pt) < 0) return true;
    }
  }
  return false;
}

inline bool has_orientation_reversing_automorphism(const plain_graph& g, const parity_table& pt) {
  return has_orientation_reversing_automorphism(g, pt, canonicalize(g, true));
}

}  // namespace graphpair
