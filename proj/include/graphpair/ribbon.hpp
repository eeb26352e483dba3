#pragma once

#include "chord_diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphpair {

enum class disk_role { base, leaf, node };

struct disk {
  disk_role role;
  bool copy = false;  // node copy made by a cross-change
  bool operator==(const disk&) const = default;
};

// child -> parent, towards the base disk
struct band {
  int child;
  int parent;
  bool operator==(const band&) const = default;
};

// `band` passes through `disk`
struct crossing {
  int id;
  int band;
  int disk;
  int sign;
  bool starred;
  bool operator==(const crossing&) const = default;
};

struct ribbon_presentation {
  std::vector<disk> disks;  // disk 0 is the base
  std::vector<band> bands;
  std::vector<crossing> crossings;
  std::optional<std::pair<int, int>> marked_q;
  int next_crossing_id = 0;
  bool operator==(const ribbon_presentation&) const = default;

  int disk_count() const { return static_cast<int>(disks.size()); }
  int band_count() const { return static_cast<int>(bands.size()); }
  int starred_count() const {
    return static_cast<int>(std::count_if(crossings.begin(), crossings.end(),
                                          [](const crossing& x) { return x.starred; }));
  }
  // the band leaving disk d towards the base, -1 for the base
  int band_of(int d) const {
    for (int b = 0; b < band_count(); ++b)
      if (bands[b].child == d) return b;
    return -1;
  }
  std::vector<int> nodes() const {
    std::vector<int> out;
    for (int d = 0; d < disk_count(); ++d)
      if (disks[d].role == disk_role::node) out.push_back(d);
    return out;
  }
  bool pierced(int d) const {
    return std::any_of(crossings.begin(), crossings.end(),
                       [d](const crossing& x) { return x.disk == d; });
  }
};

inline std::vector<std::string> violations(const ribbon_presentation& p) {
  std::vector<std::string> out;
  int nd = p.disk_count();
  if (nd == 0 || p.disks[0].role != disk_role::base) {
    out.push_back("disk 0 must be the base");
    return out;
  }
  std::vector<int> up(nd, -1), incident(nd, 0), ups(nd, 0);
  for (const auto& b : p.bands) {
    if (b.child <= 0 || b.child >= nd || b.parent < 0 || b.parent >= nd || b.child == b.parent) {
      out.push_back("band with bad endpoints");
      continue;
    }
    up[b.child] = b.parent;
    ++ups[b.child];
    ++incident[b.child];
    ++incident[b.parent];
  }
  if (!out.empty()) return out;
  for (int d = 1; d < nd; ++d) {
    if (ups[d] != 1) out.push_back("disk " + std::to_string(d) + " needs exactly one band towards the base");
    int x = d;
    for (int steps = 0; x > 0 && steps <= nd; ++steps) x = up[x];
    if (x != 0) out.push_back("disk " + std::to_string(d) + " does not reach the base");
    if (p.disks[d].role == disk_role::leaf && incident[d] != 1)
      out.push_back("leaf " + std::to_string(d) + " is incident to " + std::to_string(incident[d]) + " bands");
    if (p.disks[d].role == disk_role::node && incident[d] < 2)
      out.push_back("node " + std::to_string(d) + " has fewer than two bands");
    if (p.disks[d].role == disk_role::base) out.push_back("second base disk " + std::to_string(d));
  }
  for (const auto& x : p.crossings) {
    if (x.band < 0 || x.band >= p.band_count() || x.disk < 0 || x.disk >= nd) {
      out.push_back("crossing " + std::to_string(x.id) + " out of range");
      continue;
    }
    if (p.disks[x.disk].role != disk_role::leaf)
      out.push_back("crossing " + std::to_string(x.id) + " pierces a non-leaf disk");
    if (p.bands[x.band].child == x.disk)
      out.push_back("crossing " + std::to_string(x.id) + " pierces its own band's disk");
    if (x.sign != 1 && x.sign != -1) out.push_back("crossing " + std::to_string(x.id) + " has a bad sign");
  }
  if (p.marked_q) {
    for (int d : {p.marked_q->first, p.marked_q->second})
      if (d <= 0 || d >= nd || p.disks[d].role != disk_role::leaf)
        out.push_back("marked disk " + std::to_string(d) + " is not a leaf");
  }
  return out;
}

// One leaf per line origin; each chord source above level 0 opens a node on
// the line's spine with a new leaf; each chord target is a segment of the
// spine band it lies on; every chord becomes a starred crossing.
inline ribbon_presentation from_signed_diagram(const chord_diagram& c) {
  require_valid(c);
  ribbon_presentation p;
  p.disks.push_back({disk_role::base});
  std::map<diagram_vertex, int> source_disk;
  std::map<diagram_vertex, int> target_band;
  std::set<diagram_vertex> sources;
  for (const auto& ch : c.chords) sources.insert(ch.src);
  std::vector<std::pair<int, int>> node_leaves;  // (spine child, new leaf) per node
  for (int l = 0; l < c.s(); ++l) {
    int origin = p.disk_count();
    p.disks.push_back({disk_role::leaf});
    source_disk[{l, 0}] = origin;
    int below = origin;
    std::vector<diagram_vertex> on_band;
    auto close_band = [&](int parent) {
      int b = p.band_count();
      p.bands.push_back({below, parent});
      for (auto v : on_band) target_band[v] = b;
      on_band.clear();
    };
    for (int lev = 1; lev <= c.lines[l]; ++lev) {
      diagram_vertex v{l, lev};
      if (!sources.count(v)) {
        on_band.push_back(v);
        continue;
      }
      int node = p.disk_count();
      p.disks.push_back({disk_role::node});
      close_band(node);
      int leaf = p.disk_count();
      p.disks.push_back({disk_role::leaf});
      p.bands.push_back({leaf, node});
      source_disk[v] = leaf;
      node_leaves.push_back({below, leaf});
      below = node;
    }
    close_band(0);
  }
  for (const auto& ch : c.chords)
    p.crossings.push_back({p.next_crossing_id++, target_band.at(ch.dst), source_disk.at(ch.src),
                           ch.sign, true});
  if (node_leaves.size() == 1 && p.disks[node_leaves[0].first].role == disk_role::leaf)
    p.marked_q = node_leaves[0];
  return p;
}

inline ribbon_presentation epsilon_variant(const ribbon_presentation& p, const std::vector<int>& eps) {
  if (static_cast<int>(eps.size()) != p.starred_count())
    throw std::invalid_argument("epsilon_variant: need " + std::to_string(p.starred_count()) +
                                " entries, got " + std::to_string(eps.size()));
  ribbon_presentation out = p;
  out.crossings.clear();
  std::size_t j = 0;
  for (const auto& x : p.crossings) {
    if (!x.starred) {
      out.crossings.push_back(x);
      continue;
    }
    int e = eps[j++];
    if (e == 1) {
      auto y = x;
      y.starred = false;
      out.crossings.push_back(y);
    } else if (e != -1) {
      throw std::invalid_argument("epsilon_variant: entries must be +1 or -1");
    }
  }
  return out;
}

// Copies `source_node` as a new leaf hanging off it and lets `target_band`
// pass through the copy; the new crossing carries no star.
inline ribbon_presentation cross_change(const ribbon_presentation& p, int target_band, int source_node) {
  if (source_node < 0 || source_node >= p.disk_count() || p.disks[source_node].role != disk_role::node)
    throw std::invalid_argument("cross_change: source is not a node");
  if (target_band < 0 || target_band >= p.band_count())
    throw std::invalid_argument("cross_change: no such band");
  ribbon_presentation out = p;
  int copy = out.disk_count();
  out.disks.push_back({disk_role::leaf, true});
  out.bands.push_back({copy, source_node});
  out.crossings.push_back({out.next_crossing_id++, target_band, copy, 1, false});
  return out;
}

// Two cross-changes from the node, one into each band that passes through a
// marked disk.
inline ribbon_presentation primed(const ribbon_presentation& p) {
  if (!p.marked_q) throw std::invalid_argument("primed: presentation has no marked pair");
  auto ns = p.nodes();
  if (ns.size() != 1) throw std::invalid_argument("primed: expected exactly one node");
  ribbon_presentation out = p;
  for (int d : {p.marked_q->first, p.marked_q->second}) {
    auto it = std::find_if(p.crossings.begin(), p.crossings.end(),
                           [d](const crossing& x) { return x.disk == d; });
    if (it == p.crossings.end()) throw std::invalid_argument("primed: marked disk is not pierced");
    out = cross_change(out, it->band, ns[0]);
  }
  return out;
}

// ---- resolution closure ----
//
// Rules, each deleting crossings only:
//  pull-out   an unpierced leaf drags its band free: drop every crossing of that band
//  copy-slide a crossing through a marked disk goes once an unstarred crossing of
//             the same band through a node copy exists
//  node-free  a node whose non-copy subtree is unpierced frees its own band and
//             takes its copies' crossings with it

struct closure_result {
  ribbon_presentation reduced;
  std::set<int> resolved;  // disks pierced by no crossing
};

namespace detail {

inline std::vector<int> subtree(const ribbon_presentation& p, int root) {
  std::vector<int> out{root};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& b : p.bands)
      if (b.parent == out[i]) out.push_back(b.child);
  return out;
}

// crossing ids deletable by one rule instance each
inline std::vector<std::vector<int>> applicable(const ribbon_presentation& p) {
  std::vector<std::vector<int>> moves;
  auto ids_where = [&](auto pred) {
    std::vector<int> ids;
    for (const auto& x : p.crossings)
      if (pred(x)) ids.push_back(x.id);
    return ids;
  };
  for (int d = 1; d < p.disk_count(); ++d) {
    if (p.disks[d].role != disk_role::leaf || p.pierced(d)) continue;
    int b = p.band_of(d);
    auto ids = ids_where([b](const crossing& x) { return x.band == b; });
    if (!ids.empty()) moves.push_back(ids);
  }
  if (p.marked_q) {
    for (const auto& x : p.crossings) {
      if (x.disk != p.marked_q->first && x.disk != p.marked_q->second) continue;
      bool slide = std::any_of(p.crossings.begin(), p.crossings.end(), [&](const crossing& y) {
        return y.band == x.band && !y.starred && p.disks[y.disk].copy;
      });
      if (slide) moves.push_back({x.id});
    }
  }
  for (int n : p.nodes()) {
    bool free = true;
    std::vector<int> copies;
    for (int d : subtree(p, n)) {
      if (d == n) continue;
      if (p.disks[d].copy) {
        copies.push_back(d);
        continue;
      }
      if (p.pierced(d)) free = false;
    }
    if (!free) continue;
    int b = p.band_of(n);
    auto ids = ids_where([&](const crossing& x) {
      return x.band == b || std::find(copies.begin(), copies.end(), x.disk) != copies.end();
    });
    if (!ids.empty()) moves.push_back(ids);
  }
  return moves;
}

}  // namespace detail

// Applies the rules until none fires. With `rng` the next rule instance is
// chosen at random, which must not change the result.
inline closure_result resolution_closure(const ribbon_presentation& p, std::mt19937* rng = nullptr) {
  closure_result r{p, {}};
  auto& q = r.reduced;
  for (;;) {
    auto moves = detail::applicable(q);
    if (moves.empty()) break;
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(*rng);
    const auto& ids = moves[pick];
    std::erase_if(q.crossings, [&](const crossing& x) {
      return std::find(ids.begin(), ids.end(), x.id) != ids.end();
    });
  }
  for (int d = 0; d < q.disk_count(); ++d)
    if (!q.pierced(d)) r.resolved.insert(d);
  return r;
}

inline bool is_degenerate(const ribbon_presentation& p) {
  if (!p.marked_q) throw std::invalid_argument("is_degenerate: presentation has no marked pair");
  auto r = resolution_closure(p);
  return r.resolved.count(p.marked_q->first) || r.resolved.count(p.marked_q->second);
}

inline bool is_trivial(const ribbon_presentation& p) {
  return resolution_closure(p).reduced.crossings.empty();
}

// leaves hanging directly off a node, copies excluded
inline std::vector<int> node_adjacent_leaves(const ribbon_presentation& p) {
  std::vector<int> out;
  for (const auto& b : p.bands)
    if (p.disks[b.parent].role == disk_role::node && p.disks[b.child].role == disk_role::leaf &&
        !p.disks[b.child].copy)
      out.push_back(b.child);
  std::sort(out.begin(), out.end());
  return out;
}

// 3-loop analogue of degeneracy: some leaf next to a node ends up unpierced
inline bool resolves_node_leaf(const ribbon_presentation& p) {
  auto r = resolution_closure(p);
  for (int d : node_adjacent_leaves(p))
    if (r.resolved.count(d)) return true;
  return false;
}

struct sweep_row {
  std::vector<int> eps;
  bool degenerate;
  bool trivial;
};

// Every sign vector over the starred crossings, all +1 first; the i-th bit of
// the row index set means entry i is -1.
inline std::vector<sweep_row> sweep_epsilon(const ribbon_presentation& p) {
  int k = p.starred_count();
  if (k > 20) throw std::invalid_argument("sweep_epsilon: too many starred crossings");
  std::vector<sweep_row> rows;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> eps(k);
    for (int i = 0; i < k; ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
    auto v = epsilon_variant(p, eps);
    bool deg = p.marked_q ? is_degenerate(v) : resolves_node_leaf(v);
    rows.push_back({eps, deg, is_trivial(v)});
  }
  return rows;
}

}  // namespace graphpair
