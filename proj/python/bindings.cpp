#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "akstab/acceptance.hpp"
#include "akstab/algebra.hpp"
#include "akstab/hn.hpp"
#include "akstab/json_io.hpp"
#include "akstab/sample.hpp"
#include "akstab/svg.hpp"
#include "akstab/twist.hpp"

namespace py = pybind11;
using namespace akstab;

// JSON crosses the boundary as text; the Python package decodes it.
namespace {

json parse(const std::string& s) { return json::parse(s); }

StabilityCondition condition(const std::string& s) { return condition_from_json(parse(s)); }

std::vector<std::vector<GaussianRational>> vertices(const std::string& s) {
  std::vector<std::vector<GaussianRational>> out;
  for (const auto& v : parse(s)) out.push_back(charges_from_json(v));
  return out;
}

std::string algebra(int k, int N) {
  auto alg = build_algebra(k, N);
  json basis = json::array();
  for (const auto& b : alg.basis()) basis.push_back(to_string(b));
  json homs = json::object();
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b) homs[std::to_string(a) + "," + std::to_string(b)] = to_json(alg.node_homs(a, b));
  return json{{"k", k}, {"N", N}, {"dim", alg.dim()}, {"basis", basis}, {"node_homs", homs},
              {"pairing_perfect", check_duality_pairing(alg).perfect}}
      .dump();
}

std::string homs(const std::vector<int>& a, const std::vector<int>& b, int N) {
  auto iv = [](const std::vector<int>& v) {
    if (v.size() != 2 && v.size() != 3) throw Error(ErrorCode::InvalidArgument, "interval is [i, j] or [i, j, m]");
    return IntervalObject{v[0], v[1], v.size() == 3 ? v[2] : 0};
  };
  return to_json(hom_dims(iv(a), iv(b), N)).dump();
}

std::string expr_homs(int k, int N, const std::string& a, const std::string& b) {
  Category cat(k, N);
  return to_json(cat.hom(parse_expr(a), parse_expr(b))).dump();
}

std::string ext_text(int k, int N, const std::string& a, const std::string& b) {
  Category cat(k, N);
  return to_string(ext(cat, parse_expr(a), parse_expr(b)));
}

std::string twist_word_text(int k, int N, const std::vector<int>& word, const std::string& e) {
  Category cat(k, N);
  return to_string(twist_word(cat, word, parse_expr(e)));
}

std::string hn_json(const std::string& cond, const std::string& e, const std::string& strategy, std::uint64_t seed) {
  auto S = condition(cond);
  auto x = parse_expr(e);
  RewriteStrategy st = strategy == "rightmost" ? RewriteStrategy::Rightmost
                       : strategy == "random"  ? RewriteStrategy::Random
                                               : RewriteStrategy::Leftmost;
  auto f = hn(S, x, st, seed);
  json j = to_json(f);
  j["valid"] = valid_filtration(S, x, f);
  j["confluent"] = hn_all_orders(S, x).size() == 1;
  return j.dump();
}

std::string axioms(const std::string& cond, int leaves) {
  auto S = condition(cond);
  auto sample = leaves > 0 ? small_expressions(S, stable_leaves(S, 0, 0), leaves) : std::vector<ObjExpr>{};
  return to_json(check_axioms(S, sample)).dump();
}

std::string walls(const std::string& cond, const std::string& target) {
  json out = json::array();
  for (const auto& e : walls_on_segment(condition(cond), charges_from_json(parse(target)))) out.push_back(to_json(e));
  return out.dump();
}

std::string cross_all(const std::string& cond, const std::string& target, bool pedantic) {
  std::vector<WallEvent> ev;
  auto T = move_along(condition(cond), charges_from_json(parse(target)), &ev);
  json w = json::array();
  for (const auto& e : ev) w.push_back(to_json(e));
  return json{{"walls", w}, {"condition", to_json(T)}, {"simple", to_json(is_simple(T, pedantic))}}.dump();
}

std::string generator(const std::string& cond, int i, int sides, int half_turns) {
  return to_json(generator_loop(condition(cond), i, sides, half_turns)).dump();
}

std::string monodromy(const std::string& cond, const std::string& verts) {
  return to_json(monodromy_compare(condition(cond), vertices(verts))).dump();
}

std::vector<int> braid_word(const std::string& configs) {
  std::vector<Configuration> loop;
  for (const auto& c : parse(configs)) loop.push_back(configuration_from_json(c));
  return braid_of_loop(loop);
}

std::string condition_svg(const std::string& cond) { return svg_condition(condition(cond)); }

std::string criterion(int id, std::uint64_t seed) {
  auto r = run_criterion(id, seed);
  return json{{"id", r.id}, {"name", r.name}, {"pass", r.pass()}, {"correct", r.correct}, {"seconds", r.seconds},
              {"limit", r.limit}, {"detail", r.detail}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_akstab, m) {
  static py::exception<Error> error(m, "AkstabError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object cls = error;
      PyErr_SetObject(cls.ptr(), py::make_tuple(e.name(), e.what()).ptr());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("algebra", &algebra);
  m.def("homs", &homs);
  m.def("expr_homs", &expr_homs);
  m.def("ext", &ext_text);
  m.def("twist_word", &twist_word_text);
  m.def("hn", &hn_json);
  m.def("axioms", &axioms);
  m.def("walls", &walls);
  m.def("cross", &cross_all);
  m.def("generator_loop", &generator);
  m.def("monodromy", &monodromy);
  m.def("braid_of_loop", &braid_word);
  m.def("is_trivial", &is_trivial);
  m.def("free_reduce", &free_reduce);
  m.def("svg_condition", &condition_svg);
  m.def("run_criterion", &criterion);
  m.def("acceptance_seed", &acceptance_seed);
}
