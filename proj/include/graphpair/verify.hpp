#pragma once

#include "pairing.hpp"

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace graphpair {

struct check {
  std::string id;
  bool passed;
  std::string detail;
};

struct structure_entry {
  int iso_class;
  int sign;  // s(class representative, realized structure)
  std::int64_t aut;
};

struct verification_report {
  hairy_spec subject;
  int condition = 0;  // 3-loop hair condition, 0 for theta
  bool good_only = false;
  chord_diagram diagram;
  std::size_t structures = 0;       // |G(C)|
  std::size_t good_structures = 0;  // |G'(C)|
  std::size_t resolutions = 0;
  std::size_t iso_classes = 0;
  std::size_t degenerate_classes = 0;  // classes killed by an orientation-reversing automorphism
  rational value = 0;
  rational weight_sum = 0;
  int epsilon = 0;  // common s(D_i, D_i-bar); 0 if not uniform
  bool sign_uniform = false;
  bool weights_consistent = false;
  std::vector<int> resolution_signs;
  std::vector<structure_entry> per_structure;
  std::vector<check> checks;
  double wall_ms = 0;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

inline std::vector<level_edge> parents_to_edges(const std::vector<int>& par) {
  std::vector<level_edge> es;
  for (std::size_t m = 1; m < par.size(); ++m) es.push_back({par[m], static_cast<int>(m)});
  std::sort(es.begin(), es.end());
  return es;
}

// Isomorphism classes among resolutions. transport_sign[i] compares the label
// of resolution i with the one carried over from its class representative.
struct class_data {
  std::vector<canonical_form> forms;
  std::vector<int> reps;
  std::vector<int> member_class;
  std::vector<int> transport_sign;
  std::vector<bool> degenerate;  // representative has an orientation-reversing automorphism
};

inline class_data resolution_classes(const std::vector<resolution>& res, const parity_table& pt) {
  class_data d;
  std::map<std::vector<int>, int> class_of;
  for (std::size_t i = 0; i < res.size(); ++i) {
    d.forms.push_back(canonicalize(res[i].graph));
    auto [it, fresh] = class_of.emplace(d.forms[i].code, static_cast<int>(d.reps.size()));
    if (fresh) {
      d.reps.push_back(static_cast<int>(i));
      d.degenerate.push_back(has_orientation_reversing_automorphism(res[i].graph, pt));
    }
    d.member_class.push_back(it->second);
    const auto& r0 = res[d.reps[it->second]].graph;
    auto m = iso(r0, res[i].graph, d.forms[d.reps[it->second]], d.forms[i]);
    d.transport_sign.push_back(
        label_sign(res[i].graph, transport(r0, m->vertex_map, m->edge_map, res[i].graph), pt));
  }
  return d;
}

// Weights that form a class function: one value per class, carried to each
// member with its transport sign; degenerate classes get 0.
inline std::vector<rational> class_weights(const class_data& d, const std::vector<rational>& per_class) {
  std::vector<rational> w;
  for (std::size_t i = 0; i < d.member_class.size(); ++i) {
    int cl = d.member_class[i];
    w.push_back(d.degenerate[cl] ? rational(0) : d.transport_sign[i] * per_class.at(cl));
  }
  return w;
}

// Builds H from the resolutions of `spec` with the given weights and checks
// the counting formula against the diagram of `spec`.
inline verification_report verify(const hairy_spec& spec, const std::vector<rational>& weights,
                                  const parity_table& pt, bool good_only) {
  auto t0 = std::chrono::steady_clock::now();
  validate(spec);
  verification_report rep;
  rep.subject = spec;
  rep.good_only = good_only;
  if (spec.family == hairy_family::y) rep.condition = y_condition(spec.hairs);
  rep.diagram = diagram_of(spec);
  const auto& c = rep.diagram;
  int k = c.k();

  auto res = stu_resolutions(spec, good_only);
  rep.resolutions = res.size();
  if (weights.size() != res.size())
    throw std::invalid_argument("expected " + std::to_string(res.size()) + " weights, got " +
                                std::to_string(weights.size()));
  auto structs = enumerate_structures(c, good_only);
  rep.structures = good_only ? enumerate_structures(c, false).size() : structs.size();
  rep.good_structures = good_only ? structs.size() : enumerate_structures(c, true).size();

  if (spec.family == hairy_family::theta) {
    rep.checks.push_back({"resolution_count", res.size() == 4,
                          std::to_string(res.size()) + " resolutions, expected 4"});
  } else if (!good_only && (rep.condition == 1 || rep.condition == 2)) {
    std::size_t want = rep.condition == 1 ? 16 : 24;
    rep.checks.push_back({"resolution_count", res.size() == want,
                          std::to_string(res.size()) + " resolutions, expected " +
                              std::to_string(want)});
  }

  // realized structures, keyed by their level edges
  std::map<std::vector<std::vector<level_edge>>, std::size_t> struct_index;
  std::vector<plain_graph> realized;
  std::vector<canonical_form> realized_form;
  bool clean = true, supported = true;
  for (std::size_t i = 0; i < structs.size(); ++i) {
    struct_index[structs[i].line_edges] = i;
    realized.push_back(realize(structs[i]));
    realized_form.push_back(canonicalize(realized.back()));
    const auto& g = realized.back();
    if (g.count(vertex_kind::white) || g.count(vertex_kind::int_black)) clean = false;
    if (!support_check(g, k)) supported = false;
  }
  rep.checks.push_back({"no_internal_vertices", clean,
                        "counted structures carry no white or internal black vertices"});
  rep.checks.push_back({"support", supported,
                        "every counted structure has exactly k dashed edges and 2k external vertices"});

  // natural correspondence resolution i -> structure with the same solid edges
  auto pos = vertex_positions(c);
  std::vector<int> offset(c.s() + 1, 0);
  for (int l = 0; l < c.s(); ++l) offset[l + 1] = offset[l] + c.lines[l] + 1;
  bool natural_ok = res.size() == structs.size();
  for (const auto& r : res) {
    std::vector<std::vector<level_edge>> le;
    for (const auto& par : r.parents) le.push_back(parents_to_edges(par));
    auto it = struct_index.find(le);
    if (it == struct_index.end()) {
      natural_ok = false;
      rep.resolution_signs.push_back(0);
      continue;
    }
    const auto& target = realized[it->second];
    std::vector<int> vmap(r.graph.vertices.size());
    for (int l = 0; l < c.s(); ++l)
      for (int m = 0; m <= c.lines[l]; ++m) vmap[offset[l] + m] = pos.at({l, m});
    auto emap = match_edges(r.graph, target, vmap);
    if (!emap) {
      natural_ok = false;
      rep.resolution_signs.push_back(0);
      continue;
    }
    rep.resolution_signs.push_back(label_sign(target, transport(r.graph, vmap, *emap, target), pt));
  }
  rep.checks.push_back({"natural_map_iso", natural_ok,
                        "each resolution maps isomorphically onto the structure with the same solid edges"});
  rep.sign_uniform = natural_ok && !rep.resolution_signs.empty() &&
                     std::all_of(rep.resolution_signs.begin(), rep.resolution_signs.end(),
                                 [&](int s) { return s == rep.resolution_signs.front(); });
  rep.epsilon = rep.sign_uniform ? rep.resolution_signs.front() : 0;
  rep.checks.push_back({"sign_uniform", rep.sign_uniform,
                        "s(D_i, D_i-bar) is the same for every resolution"});

  auto cls = resolution_classes(res, pt);
  rep.iso_classes = cls.reps.size();
  const auto& res_form = cls.forms;
  std::map<std::vector<int>, int> class_of;
  for (std::size_t cl = 0; cl < cls.reps.size(); ++cl) class_of[res_form[cls.reps[cl]].code] = static_cast<int>(cl);
  const auto& class_rep = cls.reps;
  const auto& member_class = cls.member_class;
  const auto& transport_sign = cls.transport_sign;

  bool complete = true;
  for (const auto& f : realized_form)
    if (!class_of.count(f.code)) complete = false;
  for (const auto& f : res_form)
    if (std::none_of(realized_form.begin(), realized_form.end(),
                     [&](const canonical_form& g) { return g.code == f.code; }))
      complete = false;
  rep.checks.push_back({"completeness", complete,
                        "every structure is isomorphic to a resolution and conversely"});

  // project the weights onto the classes
  std::vector<rational> class_sum(class_rep.size(), 0);
  std::vector<int> class_size(class_rep.size(), 0);
  for (std::size_t i = 0; i < res.size(); ++i) {
    class_sum[member_class[i]] += transport_sign[i] * weights[i];
    ++class_size[member_class[i]];
  }
  formal_sum h(pt);
  std::vector<bool> degenerate(class_rep.size(), false);
  std::vector<rational> class_weight(class_rep.size(), 0);
  for (std::size_t cl = 0; cl < class_rep.size(); ++cl) {
    const auto& g = res[class_rep[cl]].graph;
    if (cls.degenerate[cl]) {
      degenerate[cl] = true;
      ++rep.degenerate_classes;
      continue;
    }
    class_weight[cl] = class_sum[cl] / class_size[cl];
    h.add(g, class_weight[cl]);
  }
  rep.weights_consistent = true;
  for (std::size_t i = 0; i < res.size(); ++i) {
    int cl = member_class[i];
    rational projected = degenerate[cl] ? rational(0) : transport_sign[i] * class_weight[cl];
    if (projected != weights[i]) rep.weights_consistent = false;
    rep.weight_sum += weights[i];
  }

  rep.checks.push_back({"weights_consistent", rep.weights_consistent,
                        "weights agree across isomorphic resolutions up to the transport sign"});

  rep.value = counting_formula(h, c, good_only);
  int r_sign = negative_count(c) % 2 ? -1 : 1;
  bool value_ok = rep.sign_uniform && rep.value == rational(r_sign * rep.epsilon) * rep.weight_sum;
  rep.checks.push_back({"value_equals_eps_sum", value_ok,
                        "value " + to_string(rep.value) + " vs sum of weights " +
                            to_string(rep.weight_sum)});

  for (std::size_t i = 0; i < structs.size(); ++i) {
    auto it = class_of.find(realized_form[i].code);
    structure_entry e{-1, 0, automorphism_count(realized[i])};
    if (it != class_of.end()) {
      e.iso_class = it->second;
      const auto& r0 = res[class_rep[it->second]].graph;
      auto m = iso(r0, realized[i], res_form[class_rep[it->second]], realized_form[i]);
      e.sign = label_sign(realized[i], transport(r0, m->vertex_map, m->edge_map, realized[i]), pt);
    }
    rep.per_structure.push_back(e);
  }

  // the same value through the pairing: sum over classes of w/|Aut| <G, C>
  rational via_pairing = 0;
  for (const auto& t : h.terms())
    via_pairing += t.weight / rational(t.aut) * pairing_value(t.graph, c, pt);
  via_pairing *= r_sign;
  rep.checks.push_back({"pairing_cross_check", via_pairing == rep.value,
                        "sum of w/|Aut| <G, C> = " + to_string(via_pairing)});

  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline verification_report verify_theta(int p, int q, int r, const std::vector<rational>& weights,
                                        const parity_table& pt) {
  return verify(hairy_spec::theta(p, q, r), weights, pt, false);
}

inline verification_report verify_y(const std::array<int, 6>& p, const std::vector<rational>& weights,
                                    const parity_table& pt, bool good_only) {
  return verify(hairy_spec::y(p), weights, pt, good_only);
}

// ---- cardinality oracle ----

struct line_count_row {
  int t;
  std::size_t full;  // all structures
  std::size_t good;  // path structures
  std::size_t factorial;
  std::size_t power;  // 2^{t-1}, 1 for t = 0
};

inline std::size_t factorial(int t) {
  std::size_t f = 1;
  for (int i = 2; i <= t; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

inline std::size_t power_form(int t) { return t == 0 ? 1 : std::size_t{1} << (t - 1); }

// Which closed form a diagram's structure counts follow. The printed reading
// sums 2^{t_i-1} over lines for G(C) and t_i! for G'(C); the per-line count
// multiplies, with t_i! for G(C) and 2^{t_i-1} for G'(C).
struct cardinality_report {
  std::size_t full = 0;
  std::size_t good = 0;
  std::size_t printed_full = 0;   // sum of 2^{t_i-1}
  std::size_t printed_good = 0;   // sum of t_i!
  std::size_t product_full = 0;   // prod of t_i!
  std::size_t product_good = 0;   // prod of 2^{t_i-1}
  std::string full_matches;
  std::string good_matches;
};

inline std::string which_forms(std::size_t n, const std::vector<std::pair<std::string, std::size_t>>& forms) {
  std::string out;
  for (const auto& [name, v] : forms)
    if (v == n) out += (out.empty() ? "" : ",") + name;
  return out.empty() ? "none" : out;
}

inline cardinality_report cardinalities(const chord_diagram& c) {
  cardinality_report r;
  r.full = enumerate_structures(c, false).size();
  r.good = enumerate_structures(c, true).size();
  r.product_full = r.product_good = 1;
  for (int t : c.lines) {
    r.printed_full += power_form(t);
    r.printed_good += factorial(t);
    r.product_full *= factorial(t);
    r.product_good *= power_form(t);
  }
  std::vector<std::pair<std::string, std::size_t>> forms = {
      {"sum_pow", r.printed_full}, {"sum_fact", r.printed_good},
      {"prod_fact", r.product_full}, {"prod_pow", r.product_good}};
  r.full_matches = which_forms(r.full, forms);
  r.good_matches = which_forms(r.good, forms);
  return r;
}

}  // namespace graphpair
