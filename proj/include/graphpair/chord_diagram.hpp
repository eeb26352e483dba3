#pragma once

#include "hairy.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphpair {

struct diagram_vertex {
  int line;
  int level;
  auto operator<=>(const diagram_vertex&) const = default;
};

struct chord {
  diagram_vertex src;
  diagram_vertex dst;
  int sign = 1;
  bool operator==(const chord&) const = default;
};

struct chord_diagram {
  std::vector<int> lines;  // t_i; line i has levels 0..t_i
  std::vector<chord> chords;

  int k() const { return static_cast<int>(chords.size()); }
  int s() const { return static_cast<int>(lines.size()); }
  int vertex_count() const {
    return std::accumulate(lines.begin(), lines.end(), 0, [](int a, int t) { return a + t + 1; });
  }
  bool operator==(const chord_diagram&) const = default;
};

inline std::vector<std::string> violations(const chord_diagram& c) {
  std::vector<std::string> out;
  for (int t : c.lines)
    if (t < 0) out.push_back("negative line height");
  if (!out.empty()) return out;
  if (c.vertex_count() != 2 * c.k())
    out.push_back("vertex count " + std::to_string(c.vertex_count()) + " is not 2k = " +
                  std::to_string(2 * c.k()));
  std::map<diagram_vertex, int> hits;
  auto in_range = [&](diagram_vertex v) {
    return v.line >= 0 && v.line < c.s() && v.level >= 0 && v.level <= c.lines[v.line];
  };
  for (int i = 0; i < c.k(); ++i) {
    const auto& ch = c.chords[i];
    std::string tag = "chord " + std::to_string(i + 1);
    if (!in_range(ch.src) || !in_range(ch.dst)) {
      out.push_back(tag + " has an endpoint outside the diagram");
      continue;
    }
    if (ch.sign != 1 && ch.sign != -1) out.push_back(tag + " has sign other than +1/-1");
    if (ch.src.level == 0 && ch.dst.level == 0) out.push_back(tag + " joins two level-0 vertices");
    if (ch.dst.level == 0) out.push_back(tag + " ends at a level-0 vertex");
    ++hits[ch.src];
    ++hits[ch.dst];
  }
  for (int l = 0; l < c.s(); ++l)
    for (int lev = 0; lev <= c.lines[l]; ++lev) {
      int h = hits.count({l, lev}) ? hits[{l, lev}] : 0;
      if (h != 1)
        out.push_back("vertex (" + std::to_string(l) + "," + std::to_string(lev) + ") lies on " +
                      std::to_string(h) + " chords");
    }
  return out;
}

inline bool is_valid(const chord_diagram& c) { return violations(c).empty(); }

inline void require_valid(const chord_diagram& c) {
  auto v = violations(c);
  if (!v.empty()) throw std::invalid_argument("invalid chord diagram: " + v.front());
}

// canonical V(C) order: source of chord i -> 2i, its target -> 2i+1 (0-based)
inline std::map<diagram_vertex, int> vertex_positions(const chord_diagram& c) {
  std::map<diagram_vertex, int> pos;
  for (int i = 0; i < c.k(); ++i) {
    pos[c.chords[i].src] = 2 * i;
    pos[c.chords[i].dst] = 2 * i + 1;
  }
  return pos;
}

inline int negative_count(const chord_diagram& c) {
  return static_cast<int>(
      std::count_if(c.chords.begin(), c.chords.end(), [](const chord& x) { return x.sign < 0; }));
}

inline chord_diagram flip_sign(chord_diagram c, int chord_index) {
  c.chords.at(chord_index).sign = -c.chords.at(chord_index).sign;
  return c;
}

struct planetary_system {
  bool star;   // level-0 point present
  int orbits;  // t_i
  bool operator==(const planetary_system&) const = default;
};

inline std::vector<planetary_system> planetary_summary(const chord_diagram& c) {
  std::vector<planetary_system> out;
  for (int t : c.lines) out.push_back({true, t});
  return out;
}

// Same diagram up to renumbering the lines.
inline bool diagram_isomorphic(const chord_diagram& a, const chord_diagram& b) {
  if (a.k() != b.k() || a.s() != b.s()) return false;
  std::vector<int> perm(a.s(), -1), used(b.s(), 0);
  auto bind = [&](diagram_vertex x, diagram_vertex y) {
    if (x.level != y.level || a.lines[x.line] != b.lines[y.line]) return false;
    if (perm[x.line] < 0) {
      if (used[y.line]) return false;
      perm[x.line] = y.line;
      used[y.line] = 1;
    }
    return perm[x.line] == y.line;
  };
  for (int i = 0; i < a.k(); ++i) {
    const auto& x = a.chords[i];
    const auto& y = b.chords[i];
    if (x.sign != y.sign || !bind(x.src, y.src) || !bind(x.dst, y.dst)) return false;
  }
  return true;
}

// Chord order rule: chords sorted by their source vertex (line, level).
inline bool chords_in_canonical_order(const chord_diagram& c) {
  for (int i = 1; i < c.k(); ++i)
    if (!(c.chords[i - 1].src < c.chords[i].src)) return false;
  return true;
}

// The three-chord example on two lines of height 2.
inline chord_diagram example_c1() {
  return {{2, 2}, {{{0, 0}, {1, 1}, 1}, {{0, 1}, {1, 2}, 1}, {{1, 0}, {0, 2}, 1}}};
}

inline chord_diagram diagram_from_layout(const line_layout& lay) {
  chord_diagram c;
  for (const auto& l : lay.lines) c.lines.push_back(static_cast<int>(l.ends.size()) - 1);
  for (const auto& seg : lay.segments)
    if (!seg.contracted)
      c.chords.push_back({{seg.src_line, seg.src_level}, {seg.dst_line, seg.dst_level}, 1});
  std::sort(c.chords.begin(), c.chords.end(),
            [](const chord& a, const chord& b) { return a.src < b.src; });
  return c;
}

inline chord_diagram diagram_of(const hairy_spec& s) {
  auto c = diagram_from_layout(make_layout(make_skeleton(s)));
  require_valid(c);
  return c;
}

inline chord_diagram diagram_theta(int p, int q, int r) {
  return diagram_of(hairy_spec::theta(p, q, r));
}

inline chord_diagram diagram_y(const std::array<int, 6>& p) { return diagram_of(hairy_spec::y(p)); }

}  // namespace graphpair
