#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "akstab/acceptance.hpp"
#include "akstab/algebra.hpp"
#include "akstab/hn.hpp"
#include "akstab/json_io.hpp"
#include "akstab/sample.hpp"
#include "akstab/svg.hpp"
#include "akstab/twist.hpp"

using namespace akstab;

namespace {

// Malformed input: reported as a usage error naming the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  bool pedantic = false;
  int verbosity = 0;
  int k = 0;
  int N = 2;
  std::string a, b, condition, object, target, loop, word, svg_path, strategy = "leftmost";
  int strands = 0;
  int criterion = 0;
  int leaves = 2;
  int generator = 0;
  int sides = 8;
  int half_turns = 2;
  std::uint64_t seed = 0;
};

std::string slurp(const std::string& value) {
  std::error_code ec;
  if (value.size() < 4096 && std::filesystem::is_regular_file(value, ec)) {
    std::ifstream in(value);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return value;
}

json load_json(const std::string& flag, const std::string& value) {
  if (value.empty()) throw UsageError(flag + " is required");
  try {
    return json::parse(slurp(value));
  } catch (const json::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

template <class F>
auto parse_input(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

StabilityCondition load_condition(const Options& o) {
  json j = load_json("--condition", o.condition);
  // output of cross and loop can be fed back directly
  if (j.is_object() && !j.contains("k") && j.contains("condition")) j = json(j.at("condition"));
  if (j.is_object() && !j.contains("k") && j.contains("monodromy")) j = json(j.at("monodromy").at("final"));
  return parse_input("--condition", [&] {
    if (j.is_object()) {
      if (!j.contains("k") && o.k > 0) j["k"] = o.k;
      if (!j.contains("N")) j["N"] = o.N;
    }
    auto S = condition_from_json(j);
    if (o.k > 0 && S.k != o.k) throw UsageError("--condition has k = " + std::to_string(S.k) + " but --k is " + std::to_string(o.k));
    return S;
  });
}

ObjExpr load_object(const std::string& flag, const std::string& value) {
  if (value.empty()) throw UsageError(flag + " is required");
  std::string text = slurp(value);
  return parse_input(flag, [&] {
    try {
      return expr_from_json(json::parse(text));
    } catch (const json::parse_error&) {
      return parse_expr(text);
    }
  });
}

std::vector<GaussianRational> load_charges(const std::string& flag, const std::string& value) {
  json j = load_json(flag, value);
  return parse_input(flag, [&] { return charges_from_json(j.is_object() ? j.at("Z") : j); });
}

// "[i,j]" or "[i,j,m]" is an interval object; anything else is an expression.
std::optional<IntervalObject> as_interval(const std::string& text) {
  try {
    json j = json::parse(text);
    if (j.is_array() && (j.size() == 2 || j.size() == 3))
      return IntervalObject{j[0].get<int>(), j[1].get<int>(), j.size() == 3 ? j[2].get<int>() : 0};
  } catch (const json::exception&) {
  }
  return std::nullopt;
}

ObjExpr as_object(const std::string& flag, const std::string& text) {
  if (auto p = as_interval(text)) return ObjExpr::stable(*p);
  return load_object(flag, text);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("--svg: cannot write " + path);
  out << content;
}

void emit(const Options& o, const json& j, const std::string& text = "", const std::string& svg = "") {
  if (o.format == "text" && !text.empty()) {
    std::cout << text;
    if (text.back() != '\n') std::cout << '\n';
  } else if (o.format == "svg" && !svg.empty()) {
    std::cout << svg;
  } else if (o.format == "svg") {
    throw UsageError("--format svg is not available for this command");
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

void cmd_algebra(const Options& o) {
  auto alg = build_algebra(o.k, o.N);
  json basis = json::array();
  for (const auto& b : alg.basis()) basis.push_back(to_string(b));
  json homs = json::object();
  for (int a = 1; a <= o.k; ++a)
    for (int b = 1; b <= o.k; ++b) homs[std::to_string(a) + "," + std::to_string(b)] = to_json(alg.node_homs(a, b));
  auto pairing = check_duality_pairing(alg);
  json j = {{"k", o.k}, {"N", o.N}, {"dim", alg.dim()}, {"basis", basis}, {"node_homs", homs},
            {"pairing", {{"perfect", pairing.perfect}, {"pairs_checked", pairing.pairs_checked}, {"failures", pairing.failures}}}};
  std::string text = "dim " + std::to_string(alg.dim()) + "\n";
  for (const auto& b : alg.basis()) text += "  " + to_string(b) + "\n";
  emit(o, j, text);
}

void cmd_homs(const Options& o) {
  auto ia = as_interval(o.a), ib = as_interval(o.b);
  GradedDims d;
  if (ia && ib) {
    d = hom_dims(*ia, *ib, o.N);
  } else {
    if (o.k < 1) throw UsageError("--k is required when --a or --b is an expression");
    Category cat(o.k, o.N);
    auto a = as_object("--a", o.a), b = as_object("--b", o.b);
    validate(a, o.k);
    validate(b, o.k);
    d = cat.hom(a, b);
  }
  emit(o, to_json(d), to_string(d));
}

void cmd_ext(const Options& o) {
  if (o.k < 1) throw UsageError("--k is required");
  Category cat(o.k, o.N);
  auto a = as_object("--a", o.a), b = as_object("--b", o.b);
  validate(a, o.k);
  validate(b, o.k);
  auto r = ext(cat, a, b);
  json j = {{"a", to_json(a)}, {"b", to_json(b)}, {"ext", to_json(r)}, {"ext1_dims", to_json(cat.hom(b, a))}};
  emit(o, j, to_string(r));
}

void cmd_hn(const Options& o) {
  auto S = load_condition(o);
  auto e = load_object("--object", o.object);
  RewriteStrategy st = RewriteStrategy::Leftmost;
  if (o.strategy == "rightmost") st = RewriteStrategy::Rightmost;
  if (o.strategy == "random") st = RewriteStrategy::Random;
  auto f = hn(S, e, st, o.seed);
  std::string why;
  json j = to_json(f);
  j["object"] = to_json(e);
  j["valid"] = valid_filtration(S, e, f, &why);
  if (!why.empty()) j["why"] = why;
  emit(o, j, to_string(f));
}

void cmd_axioms(const Options& o) {
  auto S = load_condition(o);
  std::vector<ObjExpr> sample;
  if (!o.object.empty())
    sample.push_back(load_object("--object", o.object));
  else if (o.leaves > 0)
    sample = small_expressions(S, stable_leaves(S, 0, 0), o.leaves);
  auto rep = check_axioms(S, sample);
  json j = to_json(rep);
  j["sample_size"] = sample.size();
  std::string text;
  for (const auto& c : rep.checks) text += "axiom " + c.axiom + ": " + (c.pass ? "pass" : "FAIL") + "\n";
  emit(o, j, text, svg_condition(S));
}

json simple_json(const StabilityCondition& S, const Options& o) { return to_json(is_simple(S, o.pedantic)); }

void cmd_walls(const Options& o) {
  auto S = load_condition(o);
  auto target = load_charges("--target", o.target);
  auto ev = walls_on_segment(S, target);
  json walls = json::array();
  std::string text;
  for (const auto& e : ev) {
    walls.push_back(to_json(e));
    text += describe(e) + "\n";
  }
  if (ev.empty()) text = "no walls\n";
  emit(o, {{"walls", walls}}, text, svg_condition(S));
}

void cmd_cross(const Options& o) {
  auto S = load_condition(o);
  auto target = load_charges("--target", o.target);
  std::vector<WallEvent> ev;
  auto T = move_along(S, target, &ev);
  json walls = json::array();
  std::string text;
  for (const auto& e : ev) {
    walls.push_back(to_json(e));
    text += describe(e) + "\n";
  }
  json j = {{"walls", walls}, {"condition", to_json(T)}, {"simple", simple_json(T, o)}};
  for (const auto& st : T.stables) text += "P" + std::to_string(st.i) + std::to_string(st.j) + ": " + to_string(st.object) + "\n";
  emit(o, j, text, svg_condition(T));
}

std::vector<std::vector<GaussianRational>> load_vertices(const json& j) {
  const json& v = j.is_object() ? j.at("vertices") : j;
  if (!v.is_array()) throw UsageError("--loop: vertices must be an array");
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& x : v) out.push_back(charges_from_json(x));
  return out;
}

void cmd_loop(const Options& o) {
  auto S = load_condition(o);
  std::vector<std::vector<GaussianRational>> vertices;
  json j;
  if (o.generator > 0) {
    if (!o.loop.empty()) throw UsageError("--generator and --loop are exclusive");
    auto rep = generator_loop(S, o.generator, o.sides, o.half_turns);
    vertices = rep.vertices;
    j["generator"] = to_json(rep);
  } else {
    json l = load_json("--loop", o.loop);
    vertices = parse_input("--loop", [&] { return load_vertices(l); });
  }
  auto rep = monodromy_compare(S, vertices);
  j["monodromy"] = to_json(rep);
  auto svg = svg_loop(S.Z, vertices, rep.events);
  if (!o.svg_path.empty()) write_file(o.svg_path, svg);
  std::string text = "word " + to_string(rep.word) + (rep.word_trivial ? " (trivial)" : "") + "\n" +
                     std::to_string(rep.events.size()) + " walls crossed\n" +
                     "identity transformation: " + (rep.identity_transformation ? "yes" : "no") + "\n" +
                     "consistent: " + (rep.consistent ? "yes" : "no") + "\n";
  emit(o, j, text, svg);
}

void cmd_braid(const Options& o) {
  json l = load_json("--loop", o.loop);
  auto loop = parse_input("--loop", [&] {
    const json& v = l.is_object() ? l.at("configurations") : l;
    std::vector<Configuration> out;
    for (const auto& c : v) out.push_back(configuration_from_json(c));
    if (out.empty()) throw UsageError("--loop: empty loop");
    return out;
  });
  auto w = braid_of_loop(loop);
  const int strands = static_cast<int>(loop.front().points.size());
  json j = {{"word", w}, {"text", to_string(w)}, {"strands", strands}, {"trivial", is_trivial(w, strands)}};
  emit(o, j, to_string(w));
}

void cmd_word(const Options& o) {
  BraidWord w = parse_input("--word", [&] { return parse_word(o.word); });
  int strands = o.strands;
  for (int g : w) strands = std::max(strands, std::abs(g) + 1);
  if (strands < 2) strands = 2;
  auto c = coords_action(w, base_coords(strands));
  json coords = json::array();
  for (const auto& x : c) coords.push_back(x.get_str());
  bool trivial = is_trivial(w, strands);
  json j = {{"word", w}, {"reduced", free_reduce(w)}, {"strands", strands}, {"trivial", trivial}, {"coordinates", coords}};
  emit(o, j, trivial ? "trivial" : "nontrivial");
}

int cmd_selftest(const Options& o) {
  std::uint64_t seed = o.seed ? o.seed : acceptance_seed();
  std::printf("acceptance seed %llu\n", static_cast<unsigned long long>(seed));
  bool ok = true;
  auto show = [&](const CriterionResult& r) {
    std::printf("%s\n", to_string(r).c_str());
    std::fflush(stdout);
    ok = ok && r.pass();
  };
  if (o.criterion)
    show(run_criterion(o.criterion, seed));
  else
    run_acceptance(seed, show);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"akstab: stability conditions on the A_k quiver category"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_flag("-v,--verbose", o.verbosity, "Verbosity");
  app.add_flag("--pedantic", o.pedantic, "Report literal simplicity discrepancies");

  auto kN = [&](CLI::App* c, bool k_required) {
    auto* k = c->add_option("--k", o.k, "Number of quiver nodes")->check(CLI::Range(1, 64));
    if (k_required) k->required();
    c->add_option("--N", o.N, "Calabi-Yau dimension")->check(CLI::Range(2, 64));
  };
  auto* algebra = app.add_subcommand("algebra", "Basis and Hom dimensions of the algebra");
  kN(algebra, true);
  auto* homs = app.add_subcommand("homs", "Graded Hom dimensions");
  kN(homs, false);
  homs->add_option("--a", o.a, "Source: [i,j], [i,j,m] or an expression")->required();
  homs->add_option("--b", o.b, "Target")->required();
  auto* ext_cmd = app.add_subcommand("ext", "Normalized extension A # B");
  kN(ext_cmd, true);
  ext_cmd->add_option("--a", o.a, "Subobject")->required();
  ext_cmd->add_option("--b", o.b, "Quotient")->required();

  auto cond = [&](CLI::App* c) {
    kN(c, false);
    c->add_option("--condition", o.condition, "Condition JSON (file or inline)")->required();
  };
  auto* hn_cmd = app.add_subcommand("hn", "Harder-Narasimhan filtration");
  cond(hn_cmd);
  hn_cmd->add_option("--object", o.object, "Object expression (file, JSON or text)")->required();
  hn_cmd->add_option("--strategy", o.strategy)->check(CLI::IsMember({"leftmost", "rightmost", "random"}));
  hn_cmd->add_option("--seed", o.seed);
  auto* axioms = app.add_subcommand("axioms", "Check the stability axioms");
  cond(axioms);
  axioms->add_option("--object", o.object, "Single object for the HN axiom");
  axioms->add_option("--leaves", o.leaves, "Sample expressions up to this many leaves")->check(CLI::Range(0, 3));
  auto* walls = app.add_subcommand("walls", "Walls on a straight segment");
  cond(walls);
  walls->add_option("--target", o.target, "Target charges JSON")->required();
  auto* cross_cmd = app.add_subcommand("cross", "Move along a segment, crossing every wall");
  cond(cross_cmd);
  cross_cmd->add_option("--target", o.target, "Target charges JSON")->required();
  auto* loop = app.add_subcommand("loop", "Track a closed loop of charges");
  cond(loop);
  loop->add_option("--loop", o.loop, "Loop JSON: list of charge vectors or {\"vertices\": [...]}");
  loop->add_option("--generator", o.generator, "Rotate Z(P_i) instead of reading a loop");
  loop->add_option("--sides", o.sides, "Polygon sides per full turn")->check(CLI::Range(4, 1024));
  loop->add_option("--half-turns", o.half_turns, "Signed number of half turns");
  loop->add_option("--svg", o.svg_path, "Write the loop diagram here");
  auto* braid = app.add_subcommand("braid", "Braid word of a loop of point configurations");
  braid->add_option("--loop", o.loop, "List of configurations")->required();
  auto* word = app.add_subcommand("word", "Word problem in the braid group");
  word->add_option("--word", o.word, "Letters such as \"1 -2 1\"")->required();
  word->add_option("--strands", o.strands, "Number of strands");
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_option("--criterion", o.criterion, "Run a single criterion")->check(CLI::Range(1, 9));
  selftest->add_option("--seed", o.seed, "Seed (default AKSTAB_SEED or fixed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*algebra) cmd_algebra(o);
    if (*homs) cmd_homs(o);
    if (*ext_cmd) cmd_ext(o);
    if (*hn_cmd) cmd_hn(o);
    if (*axioms) cmd_axioms(o);
    if (*walls) cmd_walls(o);
    if (*cross_cmd) cmd_cross(o);
    if (*loop) cmd_loop(o);
    if (*braid) cmd_braid(o);
    if (*word) cmd_word(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "usage error: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
