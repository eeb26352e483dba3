#pragma once

#include "plain_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace graphpair {

enum class hairy_family { theta, y };

struct hairy_spec {
  hairy_family family;
  std::vector<int> hairs;  // theta: p,q,r  y: p1..p6

  static hairy_spec theta(int p, int q, int r) { return {hairy_family::theta, {p, q, r}}; }
  static hairy_spec y(const std::array<int, 6>& p) {
    return {hairy_family::y, std::vector<int>(p.begin(), p.end())};
  }
  int total_hairs() const { return std::accumulate(hairs.begin(), hairs.end(), 0); }
  int loops() const { return family == hairy_family::theta ? 2 : 3; }
  int order() const { return total_hairs() + loops() - 1; }
  std::string name() const {
    std::string s = family == hairy_family::theta ? "theta(" : "y(";
    for (std::size_t i = 0; i < hairs.size(); ++i) s += (i ? "," : "") + std::to_string(hairs[i]);
    return s + ")";
  }
};

// Which of the three 3-loop hair conditions holds, 0 if none.
inline int y_condition(const std::vector<int>& p) {
  if (p.size() != 6) return 0;
  for (int x : p)
    if (x < 0) return 0;
  if (p[0] >= 1 && p[5] >= 1 && p[2] >= 1 && p[3] >= 1) return 1;
  if (p[0] >= 1 && p[5] >= 1 && p[3] >= 1 && p[1] == 0 && p[2] == 0 && p[4] == 0) return 2;
  if (p[0] >= 1 && p[5] >= 1 && p[1] == 0 && p[2] == 0 && p[3] == 0 && p[4] == 0) return 3;
  return 0;
}

inline void validate(const hairy_spec& s) {
  if (s.family == hairy_family::theta) {
    if (s.hairs.size() != 3) throw std::invalid_argument("theta needs three hair counts");
    if (s.hairs[0] < 1 || s.hairs[2] < 1 || s.hairs[1] < 0)
      throw std::invalid_argument("theta(p,q,r) needs p >= 1, r >= 1, q >= 0");
  } else {
    if (s.hairs.size() != 6) throw std::invalid_argument("y needs six hair counts");
    if (y_condition(s.hairs) == 0)
      throw std::invalid_argument("y hair vector matches none of the three supported hair patterns");
  }
}

enum class vertex_type { type_I, type_II };  // I: two edges in, II: two edges out

struct skeleton_vertex {
  vertex_type type;
  int designated;  // outgoing skeleton edge whose tail hair absorbs this vertex
};

struct skeleton_edge {
  int tail;
  int head;
  int hairs;
};

struct hairy_skeleton {
  std::vector<skeleton_vertex> vertices;
  std::vector<skeleton_edge> edges;
};

inline hairy_skeleton make_skeleton(const hairy_spec& s) {
  validate(s);
  hairy_skeleton k;
  const auto& h = s.hairs;
  if (s.family == hairy_family::theta) {
    // A = 0, B = 1; upper A->B, middle B->A, lower B->A
    k.vertices = {{vertex_type::type_I, 0}, {vertex_type::type_II, 2}};
    k.edges = {{0, 1, h[0]}, {1, 0, h[1]}, {1, 0, h[2]}};
  } else {
    // top = 0, center = 1, BL = 2, BR = 3; edge i of the picture is index i-1
    k.vertices = {{vertex_type::type_I, 0},
                  {vertex_type::type_I, 5},
                  {vertex_type::type_II, 2},
                  {vertex_type::type_II, 3}};
    k.edges = {{0, 2, h[0]}, {3, 0, h[1]}, {2, 3, h[2]},
               {3, 1, h[3]}, {2, 1, h[4]}, {1, 0, h[5]}};
  }
  return k;
}

// A hairy graph as a plain graph plus bookkeeping of where everything went.
struct hairy_graph {
  hairy_spec spec;
  hairy_skeleton skeleton;
  plain_graph graph;
  std::vector<int> skeleton_vertex;              // skeleton vertex -> graph vertex
  std::vector<std::vector<int>> hair_vertex;     // [edge][i] -> attachment vertex
  std::vector<std::vector<int>> hair_tip;        // [edge][i] -> extBlack tip
  std::vector<std::vector<int>> segment_edge;    // [edge][s] -> dashed graph edge, s = 0..hairs
};

inline hairy_graph build_hairy(const hairy_spec& s) {
  hairy_graph hg;
  hg.spec = s;
  hg.skeleton = make_skeleton(s);
  auto& g = hg.graph;
  const auto& sk = hg.skeleton;
  for (std::size_t v = 0; v < sk.vertices.size(); ++v)
    hg.skeleton_vertex.push_back(g.add_vertex(vertex_kind::white));
  hg.hair_vertex.resize(sk.edges.size());
  hg.hair_tip.resize(sk.edges.size());
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    for (int i = 0; i < sk.edges[e].hairs; ++i) {
      hg.hair_vertex[e].push_back(g.add_vertex(vertex_kind::white));
      hg.hair_tip[e].push_back(g.add_vertex(vertex_kind::ext_black));
    }
  }
  hg.segment_edge.resize(sk.edges.size());
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    int prev = hg.skeleton_vertex[sk.edges[e].tail];
    for (int i = 0; i <= sk.edges[e].hairs; ++i) {
      int next = i < sk.edges[e].hairs ? hg.hair_vertex[e][i] : hg.skeleton_vertex[sk.edges[e].head];
      hg.segment_edge[e].push_back(g.add_edge(edge_kind::dashed, prev, next));
      prev = next;
    }
  }
  for (std::size_t e = 0; e < sk.edges.size(); ++e)
    for (int i = 0; i < sk.edges[e].hairs; ++i)
      g.add_edge(edge_kind::dashed, hg.hair_vertex[e][i], hg.hair_tip[e][i]);
  g.set_canonical_order();
  return hg;
}

inline plain_graph build_theta(int p, int q, int r) {
  return build_hairy(hairy_spec::theta(p, q, r)).graph;
}

inline plain_graph build_y(const std::array<int, 6>& p) { return build_hairy(hairy_spec::y(p)).graph; }

// ---- line layout shared by the diagram and the resolution constructions ----
//
// Every hair becomes one oriented line. A skeleton vertex is absorbed into the
// line of the first hair on its designated edge; if that edge is bare, it is
// absorbed into whatever absorbs the edge's head. Segments joining a vertex to
// its absorber are contracted; every other segment u->v becomes a chord from
// the line of v to the line of u.

struct line_end {
  int edge;      // skeleton edge of the segment
  int segment;   // index along that edge
  bool out;      // chord source
  bool at_hair;  // the end sits at the hair attachment (not a skeleton vertex)
};

struct line_group {
  int hair_edge;
  int hair_pos;
  std::vector<int> absorbed;   // skeleton vertices merged into this line
  std::vector<line_end> ends;  // sorted by level
};

struct layout_segment {
  int edge;
  int segment;
  bool contracted;
  int src_line = -1, src_level = -1;  // out end (head side of the segment)
  int dst_line = -1, dst_level = -1;  // in end (tail side of the segment)
};

struct line_layout {
  std::vector<line_group> lines;
  std::vector<layout_segment> segments;  // by (edge, segment)
};

inline line_layout make_layout(const hairy_skeleton& sk) {
  line_layout lay;
  std::vector<std::vector<int>> hair_line(sk.edges.size());
  for (std::size_t e = 0; e < sk.edges.size(); ++e)
    for (int i = 0; i < sk.edges[e].hairs; ++i) {
      hair_line[e].push_back(static_cast<int>(lay.lines.size()));
      lay.lines.push_back({static_cast<int>(e), i, {}, {}});
    }
  int nv = static_cast<int>(sk.vertices.size());
  std::vector<int> vertex_line(nv, -1);
  for (int v = 0; v < nv; ++v) {
    int x = v;
    for (int steps = 0; vertex_line[v] < 0; ++steps) {
      if (steps > nv) throw std::logic_error("layout: designated edges form a bare cycle");
      const auto& d = sk.edges[sk.vertices[x].designated];
      if (d.tail != x) throw std::logic_error("layout: designated edge must leave its vertex");
      if (d.hairs > 0) vertex_line[v] = hair_line[sk.vertices[x].designated][0];
      else x = d.head;
    }
    lay.lines[vertex_line[v]].absorbed.push_back(v);
  }
  // node endpoints of segment (e, s): tail side and head side
  auto node_line = [&](int e, int s, bool head_side) {
    int h = sk.edges[e].hairs;
    int idx = head_side ? s : s - 1;  // hair index, or out of range for a skeleton vertex
    if (idx >= 0 && idx < h) return std::pair{hair_line[e][idx], true};
    int v = head_side ? sk.edges[e].head : sk.edges[e].tail;
    return std::pair{vertex_line[v], false};
  };
  for (std::size_t e = 0; e < sk.edges.size(); ++e) {
    for (int s = 0; s <= sk.edges[e].hairs; ++s) {
      layout_segment seg{static_cast<int>(e), s, false};
      int tail = sk.edges[e].tail;
      seg.contracted = s == 0 && sk.vertices[tail].designated == static_cast<int>(e);
      if (!seg.contracted) {
        auto [hl, hh] = node_line(static_cast<int>(e), s, true);
        auto [tl, th] = node_line(static_cast<int>(e), s, false);
        lay.lines[hl].ends.push_back({static_cast<int>(e), s, true, hh});
        lay.lines[tl].ends.push_back({static_cast<int>(e), s, false, th});
      }
      lay.segments.push_back(seg);
    }
  }
  for (std::size_t l = 0; l < lay.lines.size(); ++l) {
    auto& ends = lay.lines[l].ends;
    std::sort(ends.begin(), ends.end(), [](const line_end& a, const line_end& b) {
      return std::tuple{!a.out, a.at_hair, a.edge, a.segment} <
             std::tuple{!b.out, b.at_hair, b.edge, b.segment};
    });
    for (int lev = 0; lev < static_cast<int>(ends.size()); ++lev) {
      const auto& en = ends[lev];
      int idx = 0;
      for (int e = 0; e < en.edge; ++e) idx += sk.edges[e].hairs + 1;
      auto& seg = lay.segments[idx + en.segment];
      if (en.out) {
        seg.src_line = static_cast<int>(l);
        seg.src_level = lev;
      } else {
        seg.dst_line = static_cast<int>(l);
        seg.dst_level = lev;
      }
    }
  }
  return lay;
}

}  // namespace graphpair
