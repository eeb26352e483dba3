#pragma once

#include <graphpair/graphpair.hpp>

#include <algorithm>
#include <numeric>
#include <random>

namespace graphpair::testing {

// Every (p,q,r) with p,r >= 1, q >= 0 and p+q+r <= bound.
inline std::vector<std::array<int, 3>> theta_params(int bound) {
  std::vector<std::array<int, 3>> out;
  for (int p = 1; p <= bound; ++p)
    for (int q = 0; p + q <= bound; ++q)
      for (int r = 1; p + q + r <= bound; ++r) out.push_back({p, q, r});
  return out;
}

inline rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
  return rational(num(rng), den(rng));
}

// one random value per class, spread with transport signs
inline std::vector<rational> random_class_weights(const class_data& cls, std::mt19937_64& rng) {
  std::vector<rational> per;
  for (std::size_t i = 0; i < cls.reps.size(); ++i) per.push_back(random_rational(rng));
  return class_weights(cls, per);
}

// H with w as its weight function: one term per isomorphism class
inline formal_sum sum_of(const std::vector<resolution>& res, const class_data& cls,
                         const std::vector<rational>& w, const parity_table& pt) {
  formal_sum h(pt);
  for (int i : cls.reps)
    if (w[i] != rational(0)) h.add(res[i].graph, w[i]);
  return h;
}

struct relabelled {
  plain_graph graph;
  std::vector<int> vmap;  // old vertex -> new vertex
  std::vector<int> emap;  // old edge -> new edge
};

// Renumbers vertices and edges, flips random edges and shuffles the order.
inline relabelled random_relabel(const plain_graph& g, std::mt19937_64& rng) {
  relabelled r;
  r.vmap.resize(g.vertex_count());
  r.emap.resize(g.edge_count());
  std::iota(r.vmap.begin(), r.vmap.end(), 0);
  std::iota(r.emap.begin(), r.emap.end(), 0);
  std::shuffle(r.vmap.begin(), r.vmap.end(), rng);
  std::shuffle(r.emap.begin(), r.emap.end(), rng);
  auto& h = r.graph;
  h.vertices.resize(g.vertex_count());
  h.edges.resize(g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) h.vertices[r.vmap[v]] = g.vertices[v];
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < g.edge_count(); ++i) {
    edge e{g.edges[i].kind, r.vmap[g.edges[i].src], r.vmap[g.edges[i].dst]};
    if (flip(rng)) std::swap(e.src, e.dst);
    h.edges[r.emap[i]] = e;
  }
  h.set_canonical_order();
  std::shuffle(h.order.begin(), h.order.end(), rng);
  return r;
}

// Sign of the new label against the old one carried across the renumbering.
inline int relabel_sign(const plain_graph& g, const relabelled& r, const parity_table& pt) {
  return label_sign(r.graph, transport(g, r.vmap, r.emap, r.graph), pt);
}

// |Aut| by trying every kind-preserving vertex permutation, times m! per
// bundle of m parallel edges.
inline std::int64_t brute_automorphisms(const plain_graph& g) {
  int n = g.vertex_count();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  auto edge_multiset = [&](const std::vector<int>& m) {
    std::vector<std::tuple<int, int, int>> es;
    for (const auto& e : g.edges) {
      int a = m[e.src], b = m[e.dst];
      es.push_back({static_cast<int>(e.kind), std::min(a, b), std::max(a, b)});
    }
    std::sort(es.begin(), es.end());
    return es;
  };
  auto base = edge_multiset(p);
  std::int64_t count = 0;
  do {
    bool kinds = true;
    for (int v = 0; v < n && kinds; ++v) kinds = g.vertices[v].kind == g.vertices[p[v]].kind;
    if (kinds && edge_multiset(p) == base) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count * parallel_edge_factor(g);
}

// Solid structures on one line with levels 0..t by brute force over every
// subset of level pairs: a spanning tree in which each level above 0 has an
// edge to a strictly lower level.
struct line_census {
  std::size_t trees = 0;
  std::size_t paths = 0;
};

inline line_census brute_line_census(int t) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a <= t; ++a)
    for (int b = a + 1; b <= t; ++b) pairs.push_back({a, b});
  line_census out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<int> root(t + 1);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    std::vector<bool> fed(t + 1, false);
    std::vector<int> deg(t + 1, 0);
    int edges = 0;
    bool cycle = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      auto [a, b] = pairs[i];
      ++edges;
      fed[b] = true;
      ++deg[a];
      ++deg[b];
      int ra = find(a), rb = find(b);
      if (ra == rb) cycle = true;
      root[ra] = rb;
    }
    if (cycle || edges != t) continue;
    bool ok = true;
    for (int m = 1; m <= t; ++m) ok = ok && fed[m];
    if (!ok) continue;
    ++out.trees;
    if (std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; })) ++out.paths;
  }
  return out;
}

}  // namespace graphpair::testing
