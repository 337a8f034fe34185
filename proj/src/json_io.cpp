#include "akstab/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace akstab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("rational must be a string \"p/q\" or an integer");
}

json to_json(const GaussianRational& z) { return {{"re", to_json(z.re)}, {"im", to_json(z.im)}}; }

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  if (j.is_string() || j.is_number()) return {rational_from_json(j), Rational(0)};
  return {rational_from_json(field(j, "re")), rational_from_json(field(j, "im"))};
}

json to_json(const std::vector<GaussianRational>& zs) {
  json a = json::array();
  for (const auto& z : zs) a.push_back(to_json(z));
  return a;
}

std::vector<GaussianRational> charges_from_json(const json& j) {
  if (!j.is_array()) bad("charges must be an array");
  std::vector<GaussianRational> out;
  for (const auto& z : j) out.push_back(gaussian_from_json(z));
  return out;
}

json to_json(const QuadNum& x) {
  return {{"a", to_json(x.a())}, {"b", to_json(x.b())}, {"d", to_json(x.d())}, {"decimal", x.to_double()}};
}

json to_json(const GradedDims& d) {
  json o = json::object();
  for (const auto& [deg, n] : d) o[std::to_string(deg)] = n;
  return o;
}

json to_json(const KVector& v) { return json(std::vector<long long>(v.begin(), v.end())); }

json to_json(const IntMatrix& m) { return json(m); }

namespace {

class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  ObjExpr parse() {
    ObjExpr e = expr();
    skip();
    if (p_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    bad("cannot parse object expression '" + s_ + "' at " + std::to_string(p_) + ": " + what);
  }
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(const std::string& t) {
    skip();
    if (s_.compare(p_, t.size(), t) == 0) {
      p_ += t.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& t) {
    if (!eat(t)) fail("expected '" + t + "'");
  }
  int integer() {
    skip();
    size_t start = p_;
    if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
    while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
    if (p_ == start || (p_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start])))) fail("expected an integer");
    return std::stoi(s_.substr(start, p_ - start));
  }
  ObjExpr with_shift(ObjExpr e) {
    while (eat("[")) {
      int m = integer();
      expect("]");
      e = shift(e, m);
    }
    return e;
  }
  ObjExpr expr() {
    skip();
    if (eat("Ext(")) {
      ObjExpr a = expr();
      expect(",");
      ObjExpr b = expr();
      expect(")");
      return with_shift(ObjExpr::make_ext(a, b));
    }
    if (eat("Sum(")) {
      std::vector<ObjExpr> parts{expr()};
      while (eat(",")) parts.push_back(expr());
      expect(")");
      return with_shift(ObjExpr::make_sum(parts));
    }
    if (eat("(")) {
      std::vector<ObjExpr> parts{expr()};
      while (eat("+")) parts.push_back(expr());
      expect(")");
      return with_shift(ObjExpr::make_sum(parts));
    }
    if (eat("0")) return ObjExpr();
    if (eat("P")) {
      eat("_");
      int i, j;
      if (eat("(")) {
        i = integer();
        expect(",");
        j = integer();
        expect(")");
      } else {
        if (p_ + 2 > s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_])) ||
            !std::isdigit(static_cast<unsigned char>(s_[p_ + 1])))
          fail("expected two digits after P");
        i = s_[p_] - '0';
        j = s_[p_ + 1] - '0';
        p_ += 2;
      }
      return with_shift(ObjExpr::stable(i, j, 0));
    }
    fail("unexpected input");
  }

  const std::string& s_;
  size_t p_ = 0;
};

}  // namespace

ObjExpr parse_expr(const std::string& text) { return ExprParser(text).parse(); }

ObjExpr expr_from_json(const json& j) {
  if (j.is_string()) return j.get<std::string>() == "zero" ? ObjExpr() : parse_expr(j.get<std::string>());
  if (!j.is_object()) bad("object expression must be a string or an object");
  if (j.contains("shift")) {
    json rest = j;
    rest.erase("shift");
    return shift(expr_from_json(rest), j.at("shift").get<int>());
  }
  if (j.contains("expr")) return expr_from_json(j.at("expr"));
  if (j.contains("zero")) return ObjExpr();
  if (j.contains("stable")) {
    const json& s = j.at("stable");
    if (!s.is_array() || s.size() < 2 || s.size() > 3) bad("stable must be [i, j] or [i, j, m]");
    return ObjExpr::stable(s[0].get<int>(), s[1].get<int>(), s.size() == 3 ? s[2].get<int>() : 0);
  }
  if (j.contains("sum")) {
    std::vector<ObjExpr> parts;
    for (const auto& c : j.at("sum")) parts.push_back(expr_from_json(c));
    return ObjExpr::make_sum(parts);
  }
  if (j.contains("ext")) {
    const json& e = j.at("ext");
    if (!e.is_array() || e.size() != 2) bad("ext must have two entries");
    return ObjExpr::make_ext(expr_from_json(e[0]), expr_from_json(e[1]));
  }
  bad("unknown object expression");
}

json expr_tree(const ObjExpr& e) {
  switch (e.kind()) {
    case ObjExpr::Kind::Zero: return {{"zero", true}};
    case ObjExpr::Kind::Stable: return {{"stable", {e.interval().i, e.interval().j, e.interval().m}}};
    case ObjExpr::Kind::Sum: {
      json a = json::array();
      for (const auto& c : e.children()) a.push_back(expr_tree(c));
      return {{"sum", a}};
    }
    case ObjExpr::Kind::Ext: return {{"ext", {expr_tree(e.sub()), expr_tree(e.quotient())}}};
  }
  return nullptr;
}

json to_json(const ObjExpr& e) { return {{"expr", e.key()}, {"tree", expr_tree(e)}}; }

json to_json(const PhaseLift& p) {
  return {{"winding", p.winding()}, {"dir", to_json(p.direction())}, {"decimal", p.value()}};
}

PhaseLift phase_from_json(const json& j) {
  return PhaseLift(field(j, "winding").get<long>(), gaussian_from_json(field(j, "dir")));
}

json to_json(const StabilityCondition& S) {
  json st = json::array();
  for (const auto& e : S.stables) {
    json hist = json::array();
    for (const auto& h : e.handle.history) hist.push_back({{"previous", to_json(h.previous)}, {"wall", h.wall}});
    st.push_back({{"i", e.i},
                  {"j", e.j},
                  {"object", to_json(e.object)},
                  {"phase", to_json(e.phase)},
                  {"base", {e.handle.base.i, e.handle.base.j, e.handle.base.m}},
                  {"history", hist}});
  }
  return {{"k", S.k}, {"N", S.N}, {"Z", to_json(S.Z)}, {"standard", S.standard}, {"stables", st}};
}

StabilityCondition condition_from_json(const json& j) {
  const int k = int_field(j, "k"), N = int_field(j, "N");
  if (k < 1 || N < 2) bad("need k >= 1 and N >= 2");
  auto Z = charges_from_json(field(j, "Z"));
  if (!j.contains("stables")) {
    std::vector<long> w;
    if (j.contains("windings"))
      for (const auto& x : j.at("windings")) w.push_back(x.get<long>());
    return standard_condition(k, N, Z, w);
  }
  if (static_cast<int>(Z.size()) != k) bad("need k central charges");
  StabilityCondition S;
  S.category = std::make_shared<Category>(k, N);
  S.k = k;
  S.N = N;
  S.Z = Z;
  S.standard = j.value("standard", false);
  for (const auto& e : j.at("stables")) {
    StableEntry st;
    st.i = int_field(e, "i");
    st.j = int_field(e, "j");
    st.object = expr_from_json(field(e, "object"));
    validate(st.object, k);
    st.phase = phase_from_json(field(e, "phase"));
    const json& b = e.contains("base") ? e.at("base") : json::array({st.i, st.j, 0});
    st.handle.base = {b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()};
    if (e.contains("history"))
      for (const auto& h : e.at("history")) st.handle.history.push_back({expr_from_json(h.at("previous")), h.value("wall", "")});
    S.stables.push_back(std::move(st));
  }
  std::sort(S.stables.begin(), S.stables.end(), [](const StableEntry& a, const StableEntry& b) {
    return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
  });
  if (static_cast<int>(S.stables.size()) != k * (k + 1) / 2) bad("a condition lists k(k+1)/2 stables");
  for (const auto& st : S.stables) stable_index(st.i, st.j, k);
  return S;
}

json to_json(const HNFiltration& f) {
  json factors = json::array();
  for (const auto& fac : f.factors) {
    json st = json::array();
    for (const auto& s : fac.stables) st.push_back(s.key());
    factors.push_back({{"stables", st}, {"phase", to_json(fac.phase)}});
  }
  json terms = json::array();
  for (const auto& [c, q] : f.mass_terms) terms.push_back({{"coeff", to_json(c)}, {"radicand", to_json(q)}});
  return {{"factors", factors}, {"mass", {{"terms", terms}, {"decimal", mass_value(f)}}}, {"steps", f.steps}};
}

HNFiltration hn_from_json(const json& j) {
  HNFiltration f;
  for (const auto& fac : field(j, "factors")) {
    HNFactor h;
    for (const auto& s : fac.at("stables")) h.stables.push_back(expr_from_json(s));
    h.phase = phase_from_json(fac.at("phase"));
    f.factors.push_back(std::move(h));
  }
  if (j.contains("mass"))
    for (const auto& t : j.at("mass").at("terms"))
      f.mass_terms.push_back({rational_from_json(t.at("coeff")), rational_from_json(t.at("radicand"))});
  f.steps = j.value("steps", 0);
  return f;
}

json to_json(const AxiomReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"axiom", c.axiom}, {"pass", c.pass}, {"witnesses", c.witnesses}});
  return {{"pass", r.pass}, {"checks", checks}};
}

json to_json(const WallEvent& e) {
  json time;
  if (e.time.is_rational())
    time = {{"rational", to_json(e.time.a())}};
  else
    time = {{"quadratic", {{"a", to_json(e.qa)}, {"b", to_json(e.qb)}, {"c", to_json(e.qc)}, {"root", e.root}}}};
  time["decimal"] = e.time.to_double();
  json cls = json::array();
  for (auto [i, j] : e.classes) cls.push_back({i, j});
  return {{"time", time},
          {"after", to_json(e.after)},
          {"classes", cls},
          {"kind", to_string(e.kind)},
          {"from", to_json(e.from)},
          {"to", to_json(e.to)}};
}

WallEvent wall_from_json(const json& j) {
  WallEvent e;
  const json& t = field(j, "time");
  if (t.contains("rational")) {
    e.time = QuadNum(rational_from_json(t.at("rational")));
    e.root = 0;
  } else {
    const json& q = t.at("quadratic");
    e.qa = rational_from_json(q.at("a"));
    e.qb = rational_from_json(q.at("b"));
    e.qc = rational_from_json(q.at("c"));
    e.root = q.at("root").get<int>();
    Rational inv = 1 / (2 * e.qa);
    Rational disc = e.qb * e.qb - 4 * e.qa * e.qc;
    QuadNum r1(-e.qb * inv, -inv, disc), r2(-e.qb * inv, inv, disc);
    if (r2 < r1) std::swap(r1, r2);
    e.time = e.root < 0 ? r1 : r2;
  }
  e.after = rational_from_json(field(j, "after"));
  for (const auto& c : field(j, "classes")) e.classes.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
  e.kind = field(j, "kind").get<std::string>() == "parallel" ? WallKind::Parallel : WallKind::Antiparallel;
  e.from = charges_from_json(field(j, "from"));
  e.to = charges_from_json(field(j, "to"));
  return e;
}

json to_json(const SimpleReport& r) {
  return {{"simple", r.simple}, {"failures", r.failures}, {"literal_discrepancies", r.literal_discrepancies}};
}

json to_json(const Configuration& c) { return {{"points", to_json(c.points)}, {"normalized", c.normalized}}; }

Configuration configuration_from_json(const json& j) {
  Configuration c;
  if (j.is_array()) {
    c.points = charges_from_json(j);
  } else {
    c.points = charges_from_json(field(j, "points"));
    c.normalized = j.value("normalized", false);
  }
  return c;
}

json to_json(const ClassMatch& m) {
  return {{"class", {m.i, m.j}},
          {"final", m.final_object.key()},
          {"predicted", m.predicted.key()},
          {"shift", m.shift},
          {"match", m.match}};
}

namespace {

json events_json(const std::vector<WallEvent>& evs) {
  json a = json::array();
  for (const auto& e : evs) {
    json w = to_json(e);
    w.erase("from");
    w.erase("to");
    a.push_back(w);
  }
  return a;
}

json matches_json(const std::vector<ClassMatch>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

}  // namespace

json to_json(const LoopReport& r) {
  json verts = json::array();
  for (const auto& v : r.vertices) verts.push_back(to_json(v));
  return {{"index", r.index},
          {"half_turns", r.half_turns},
          {"vertices", verts},
          {"events", events_json(r.events)},
          {"final", to_json(r.final_condition)},
          {"matches", matches_json(r.matches)},
          {"k_action", to_json(r.k_action)},
          {"k_predicted", to_json(r.k_predicted)},
          {"all_match", r.all_match}};
}

json to_json(const MonodromyReport& r) {
  return {{"word", r.word},
          {"word_trivial", r.word_trivial},
          {"events", events_json(r.events)},
          {"final", to_json(r.final_condition)},
          {"matches", matches_json(r.matches)},
          {"objects_match", r.objects_match},
          {"k_action", to_json(r.k_action)},
          {"k_predicted", to_json(r.k_predicted)},
          {"k_match", r.k_match},
          {"identity_transformation", r.identity_transformation},
          {"consistent", r.consistent}};
}

json to_json(const AssocCommuteReport& r) {
  return {{"commute", to_string(r.commute)}, {"assoc", to_string(r.assoc)}, {"trace", r.trace}};
}

json error_json(const Error& e) { return {{"error", e.name()}, {"message", e.what()}}; }

}  // namespace akstab
