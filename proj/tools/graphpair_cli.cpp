#include <graphpair/graphpair.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace graphpair;

namespace {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct options {
  int n = 5;
  int j = 3;
  std::string parity_path;
  std::string format = "json";
  std::string out;
  std::uint64_t seed = 1;
  bool timing = false;
  bool good_only = false;
  std::string weights;
  bool random_weights = false;
  std::vector<int> theta;
  std::vector<int> y;
  std::string input;
  std::string graph_path;
  std::string sum_path;
  std::string epsilon;
  bool primed_flag = false;
  std::string what = "diagram";
  std::vector<int> params;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw usage_error("'" + path + "' is not valid JSON: " + e.what());
  }
}

parity_table parity_of(const options& o) {
  grading_params gp{o.n, o.j};
  validate(gp);
  if (o.parity_path.empty()) return default_parity(gp);
  return parity_table_from_json(read_json_file(o.parity_path));
}

std::optional<hairy_spec> spec_of(const options& o) {
  if (!o.theta.empty() && !o.y.empty()) throw usage_error("give only one of --theta and --y");
  if (!o.theta.empty()) return hairy_spec::theta(o.theta[0], o.theta[1], o.theta[2]);
  if (!o.y.empty()) return hairy_spec{hairy_family::y, o.y};
  return std::nullopt;
}

chord_diagram diagram_source(const options& o) {
  if (!o.input.empty()) {
    auto j = read_json_file(o.input);
    return chord_diagram_from_json(j.contains("diagram") ? j.at("diagram") : j);
  }
  auto s = spec_of(o);
  if (!s) throw usage_error("need a diagram: --theta P Q R, --y P1..P6 or --input FILE");
  return diagram_of(*s);
}

std::array<int, 6> six(const std::vector<int>& v) {
  if (v.size() != 6) throw usage_error("y needs six hair counts");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

std::vector<int> parse_eps(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "1" || item == "+1") out.push_back(1);
    else if (item == "-1") out.push_back(-1);
    else throw usage_error("epsilon entries must be 1 or -1, got '" + item + "'");
  }
  return out;
}

void emit(const options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw usage_error("cannot write '" + o.out + "'");
  f << text;
}

void emit(const options& o, json j) {
  if (j.is_object() && !j.contains("schema")) {
    json tagged = {{"schema", schema_tag}};
    tagged.update(j);
    j = std::move(tagged);
  }
  emit(o, j.dump(2) + "\n");
}

void require_format(const options& o, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (o.format == a) return;
  throw usage_error("format '" + o.format + "' is not available here");
}

int cmd_build(const options& o, const hairy_spec& s) {
  auto hg = build_hairy(s);
  require_format(o, {"json", "dot"});
  if (o.format == "dot") {
    emit(o, to_dot(hg.graph));
    return 0;
  }
  json types = json::array();
  for (const auto& v : hg.skeleton.vertices)
    types.push_back({{"type", v.type == vertex_type::type_I ? "I" : "II"}, {"designated_edge", v.designated}});
  emit(o, json{{"subject", to_json(s)},
               {"order", order(hg.graph)},
               {"betti", betti_number(hg.graph)},
               {"admissible", is_admissible(hg.graph)},
               {"good", is_good(hg.graph)},
               {"automorphisms", automorphism_count(hg.graph)},
               {"skeleton_vertices", types},
               {"graph", to_json(hg.graph)}});
  return 0;
}

int cmd_diagram(const options& o) {
  auto c = diagram_source(o);
  require_format(o, {"json", "dot", "tikz"});
  if (o.format == "dot") {
    emit(o, to_dot(c));
    return 0;
  }
  if (o.format == "tikz") {
    emit(o, to_tikz(c));
    return 0;
  }
  json planets = json::array();
  for (const auto& p : planetary_summary(c)) planets.push_back({{"star", p.star}, {"orbits", p.orbits}});
  emit(o, json{{"diagram", to_json(c)},
               {"k", c.k()},
               {"s", c.s()},
               {"negative", negative_count(c)},
               {"planetary", planets}});
  return 0;
}

int cmd_enum(const options& o) {
  auto c = diagram_source(o);
  auto structs = enumerate_structures(c, o.good_only);
  json list = json::array();
  for (const auto& s : structs) list.push_back(to_json(s));
  emit(o, json{{"diagram", to_json(c)},
               {"good_only", o.good_only},
               {"count", structs.size()},
               {"structures", list},
               {"cardinality", to_json(cardinalities(c))}});
  return 0;
}

int cmd_pair(const options& o) {
  if (o.graph_path.empty()) throw usage_error("pair needs --graph FILE");
  auto c = diagram_source(o);
  auto jg = read_json_file(o.graph_path);
  auto g = plain_graph_from_json(jg.contains("graph") ? jg.at("graph") : jg);
  auto ms = matchings(g, c, parity_of(o));
  json list = json::array();
  int value = 0;
  for (const auto& m : ms) {
    json sigma = json::array();
    for (auto v : m.sigma) sigma.push_back({v.line, v.level});
    list.push_back({{"sigma", sigma}, {"sign", m.sign}});
    value += m.sign;
  }
  emit(o, json{{"value", value}, {"automorphisms", automorphism_count(g)}, {"matchings", list}});
  return 0;
}

int cmd_counting(const options& o) {
  if (o.sum_path.empty()) throw usage_error("counting needs --sum FILE");
  auto c = diagram_source(o);
  auto pt = parity_of(o);
  auto h = formal_sum_from_json(read_json_file(o.sum_path), pt);
  auto v = counting_formula(h, c, o.good_only);
  emit(o, json{{"diagram", to_json(c)}, {"good_only", o.good_only}, {"terms", h.terms().size()},
               {"value", to_json(v)}});
  return 0;
}

int cmd_verify(const options& o, const hairy_spec& s) {
  validate(s);
  auto pt = parity_of(o);
  auto res = stu_resolutions(s, o.good_only);
  std::vector<rational> w;
  if (o.random_weights) {
    if (!o.weights.empty()) throw usage_error("give only one of --weights and --random-weights");
    auto cls = resolution_classes(res, pt);
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    std::vector<rational> per;
    for (std::size_t i = 0; i < cls.reps.size(); ++i) per.push_back(rational(num(rng), den(rng)));
    w = class_weights(cls, per);
  } else if (!o.weights.empty()) {
    w = parse_rational_list(o.weights);
  } else {
    w.assign(res.size(), rational(1));
  }
  if (w.size() != res.size())
    throw usage_error("expected " + std::to_string(res.size()) + " weights, got " + std::to_string(w.size()));
  auto rep = verify(s, w, pt, o.good_only);
  json j = to_json(rep, o.timing);
  json wj = json::array();
  for (const auto& x : w) wj.push_back(to_json(x));
  j["weights"] = wj;
  emit(o, j);
  return rep.all_passed() ? 0 : 1;
}

ribbon_presentation ribbon_source(const options& o) {
  auto p = from_signed_diagram(diagram_source(o));
  return o.primed_flag ? primed(p) : p;
}

int cmd_ribbon(const options& o) {
  auto p = ribbon_source(o);
  if (!o.epsilon.empty()) p = epsilon_variant(p, parse_eps(o.epsilon));
  require_format(o, {"json", "dot"});
  if (o.format == "dot") {
    emit(o, to_dot(p));
    return 0;
  }
  auto r = resolution_closure(p);
  json j = {{"presentation", to_json(p)},
            {"violations", violations(p)},
            {"nodes", p.nodes().size()},
            {"reduced", to_json(r.reduced)},
            {"resolved", r.resolved},
            {"trivial", r.reduced.crossings.empty()}};
  if (p.marked_q) j["degenerate"] = is_degenerate(p);
  else j["node_leaf_resolved"] = resolves_node_leaf(p);
  emit(o, j);
  return 0;
}

int cmd_sweep(const options& o) {
  auto p = ribbon_source(o);
  auto rows = sweep_epsilon(p);
  json list = json::array();
  bool ok = true;
  for (const auto& r : rows) {
    bool neg = std::count(r.eps.begin(), r.eps.end(), -1) > 0;
    if (!o.primed_flag && neg != r.degenerate) ok = false;
    list.push_back({{"eps", r.eps}, {"degenerate", r.degenerate}, {"trivial", r.trivial}});
  }
  emit(o, json{{"marked", p.marked_q.has_value()},
               {"rows", list},
               {"degenerate_iff_negative", ok}});
  return o.primed_flag || ok ? 0 : 1;
}

int cmd_export(const options& o) {
  if (o.what == "diagram") return cmd_diagram(o);
  if (o.what == "ribbon") {
    auto p = ribbon_source(o);
    require_format(o, {"json", "dot"});
    if (o.format == "dot") emit(o, to_dot(p));
    else emit(o, json{{"presentation", to_json(p)}});
    return 0;
  }
  if (o.what == "graph") {
    auto s = spec_of(o);
    if (!s) throw usage_error("export --what graph needs --theta or --y");
    auto g = build_hairy(*s).graph;
    require_format(o, {"json", "dot"});
    if (o.format == "dot") emit(o, to_dot(g));
    else emit(o, json{{"graph", to_json(g)}});
    return 0;
  }
  throw usage_error("--what must be graph, diagram or ribbon");
}

void add_source(CLI::App* sub, options& o) {
  sub->add_option("--theta", o.theta, "theta hair counts P Q R")->expected(3);
  sub->add_option("--y", o.y, "3-loop hair counts P1..P6")->expected(6);
  sub->add_option("--input", o.input, "chord diagram JSON file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-chord pairing toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  options o;
  app.add_option("--n", o.n, "ambient dimension")->capture_default_str();
  app.add_option("--j", o.j, "source dimension")->capture_default_str();
  app.add_option("--parity-table", o.parity_path, "parity table JSON file");
  app.add_option("--seed", o.seed, "seed for random weights")->capture_default_str();
  app.add_option("--format", o.format, "json, dot or tikz")
      ->check(CLI::IsMember({"json", "dot", "tikz"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "write output here instead of stdout");
  app.add_flag("--timing", o.timing, "include wall time in reports");

  auto* bt = app.add_subcommand("build-theta", "build the hairy graph theta(p,q,r)");
  bt->add_option("params", o.params, "P Q R")->expected(3)->required();
  auto* by = app.add_subcommand("build-y", "build the 3-loop hairy graph");
  by->add_option("params", o.params, "P1..P6")->expected(6)->required();
  auto* dg = app.add_subcommand("diagram", "chord diagram of a hairy graph or file");
  add_source(dg, o);
  auto* en = app.add_subcommand("enum-structures", "enumerate solid structures on a diagram");
  add_source(en, o);
  en->add_flag("--good-only", o.good_only, "paths only");
  auto* pa = app.add_subcommand("pair", "graph-chord pairing");
  add_source(pa, o);
  pa->add_option("--graph", o.graph_path, "plain graph JSON file");
  auto* co = app.add_subcommand("counting", "counting formula of a formal sum on a diagram");
  add_source(co, o);
  co->add_option("--sum", o.sum_path, "formal sum JSON file");
  co->add_flag("--good-only", o.good_only, "restrict to path structures");
  auto* vt = app.add_subcommand("verify-theta", "check the theta counting identity");
  vt->add_option("params", o.params, "P Q R")->expected(3)->required();
  vt->add_option("--weights", o.weights, "comma separated rationals, one per resolution");
  vt->add_flag("--random-weights", o.random_weights, "random class-consistent weights from --seed");
  auto* vy = app.add_subcommand("verify-y", "check the 3-loop counting identity");
  vy->add_option("params", o.params, "P1..P6")->expected(6)->required();
  vy->add_option("--weights", o.weights, "comma separated rationals, one per resolution");
  vy->add_flag("--random-weights", o.random_weights, "random class-consistent weights from --seed");
  vy->add_flag("--good-only", o.good_only, "path structures only");
  auto* rb = app.add_subcommand("ribbon", "ribbon presentation and its resolution closure");
  add_source(rb, o);
  rb->add_option("--epsilon", o.epsilon, "comma separated +1/-1 per starred crossing");
  rb->add_flag("--primed", o.primed_flag, "apply the two cross-changes from the node first");
  auto* sw = app.add_subcommand("sweep-epsilon", "all epsilon variants of a presentation");
  add_source(sw, o);
  sw->add_flag("--primed", o.primed_flag, "apply the two cross-changes from the node first");
  auto* ex = app.add_subcommand("export", "export graph, diagram or ribbon");
  add_source(ex, o);
  ex->add_option("--what", o.what, "graph, diagram or ribbon")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*bt) return cmd_build(o, hairy_spec::theta(o.params[0], o.params[1], o.params[2]));
    if (*by) return cmd_build(o, hairy_spec::y(six(o.params)));
    if (*dg) return cmd_diagram(o);
    if (*en) return cmd_enum(o);
    if (*pa) return cmd_pair(o);
    if (*co) return cmd_counting(o);
    if (*vt) return cmd_verify(o, hairy_spec::theta(o.params[0], o.params[1], o.params[2]));
    if (*vy) return cmd_verify(o, hairy_spec::y(six(o.params)));
    if (*rb) return cmd_ribbon(o);
    if (*sw) return cmd_sweep(o);
    if (*ex) return cmd_export(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
