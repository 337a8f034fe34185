#include "akstab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include "akstab/algebra.hpp"
#include "akstab/braid.hpp"
#include "akstab/hn.hpp"
#include "akstab/monodromy.hpp"
#include "akstab/sample.hpp"
#include "akstab/twist.hpp"
#include "akstab/walls.hpp"

namespace akstab {

namespace {

using Path = std::vector<std::vector<GaussianRational>>;

GaussianRational G(Rational re, Rational im) { return {std::move(re), std::move(im)}; }

// Failure collector: keeps the first few messages and a count.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (first.size() < 3) first.push_back(what);
  }
  void fail(const std::string& what) { expect(false, what); }
  std::string summary(const std::string& head) const {
    std::ostringstream os;
    os << head << "; " << checks << " checks";
    if (failures) {
      os << ", " << failures << " failed:";
      for (const auto& f : first) os << " [" << f << "]";
    }
    return os.str();
  }
};

// Criterion 1

std::string algebra_dimensions(Tally& t) {
  int algebras = 0;
  for (int k = 1; k <= 6; ++k)
    for (int N = 2; N <= 4; ++N) {
      auto alg = build_algebra(k, N);
      ++algebras;
      std::string tag = "k=" + std::to_string(k) + " N=" + std::to_string(N);
      t.expect(alg.dim() == 4 * k - 2, tag + " dim " + std::to_string(alg.dim()));
      const int n = alg.dim();
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          auto xy = alg.product(x, y);
          for (int z = 0; z < n; ++z) {
            auto yz = alg.product(y, z);
            std::optional<int> l = xy ? alg.product(*xy, z) : std::nullopt;
            std::optional<int> r = yz ? alg.product(x, *yz) : std::nullopt;
            if (l != r) t.fail(tag + " associativity at " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z));
          }
        }
      ++t.checks;
      for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
          t.expect(alg.node_homs(a, b) == hom_dims({b, b, 0}, {a, a, 0}, N),
                   tag + " Hom(E" + std::to_string(a) + ",E" + std::to_string(b) + ")");
      t.expect(check_duality_pairing(alg).perfect, tag + " pairing");
    }
  return std::to_string(algebras) + " algebras";
}

// Criterion 2

std::string hom_duality(Tally& t) {
  long pairs = 0;
  for (int k = 1; k <= 6; ++k)
    for (int N = 2; N <= 3; ++N) {
      auto ivs = all_intervals(k);
      for (const auto& a : ivs)
        for (const auto& b : ivs)
          for (int m = -2; m <= 2; ++m) {
            auto as = a.shifted(m);
            auto ab = hom_dims(as, b, N), ba = hom_dims(b, as, N);
            ++pairs;
            for (int d = -N - 4; d <= 2 * N + 4; ++d) {
              int x = ab.count(d) ? ab.at(d) : 0;
              int y = ba.count(N - d) ? ba.at(N - d) : 0;
              t.expect(x == y, to_string(as) + " " + to_string(b) + " N=" + std::to_string(N) + " d=" + std::to_string(d));
            }
          }
      auto serre = serre_check(k, N);
      t.expect(serre.pass, "table duality k=" + std::to_string(k));
    }
  return std::to_string(pairs) + " pairs";
}

// Criterion 3

// Long-exact-sequence bounds for a triangle A -> E -> B probed by every
// interval object in both variables.
bool les_sound(const Category& cat, const ObjExpr& a, const ObjExpr& e, const ObjExpr& b) {
  for (const auto& p : all_intervals(cat.k())) {
    auto x = ObjExpr::stable(p);
    for (int dir = 0; dir < 2; ++dir) {
      auto ha = dir ? cat.hom(a, x) : cat.hom(x, a);
      auto he = dir ? cat.hom(e, x) : cat.hom(x, e);
      auto hb = dir ? cat.hom(b, x) : cat.hom(x, b);
      for (const auto& [d, n] : he) {
        int bound = (ha.count(d) ? ha.at(d) : 0) + (hb.count(d) ? hb.at(d) : 0);
        if (n > bound) return false;
      }
      if (euler_characteristic(he) != euler_characteristic(ha) + euler_characteristic(hb)) return false;
    }
  }
  return true;
}

std::string extension_table(Tally& t) {
  long applicable = 0, identities = 0;
  for (int k = 1; k <= 5; ++k)
    for (int N = 2; N <= 3; ++N) {
      Category cat(k, N);
      for (const auto& x : all_intervals(k))
        for (const auto& y : all_intervals(k))
          for (int m = -1; m <= 2; ++m) {
            auto a = ObjExpr::stable(x.shifted(m)), b = ObjExpr::stable(y);
            auto h = cat.hom(b, a);
            auto rule = rewrite_pair(x.shifted(m), y);
            if (!h.count(1)) {
              t.expect(!rule, "rule without extension class " + a.key() + " # " + b.key());
              continue;
            }
            ++applicable;
            std::string tag = a.key() + " # " + b.key() + " N=" + std::to_string(N);
            if (h.at(1) != 1) {
              t.expect(!rule, tag + " rule on a non-unique class");
              continue;
            }
            ObjExpr r;
            try {
              r = ext(cat, a, b);
            } catch (const Error& err) {
              t.fail(tag + " " + err.what());
              continue;
            }
            t.expect(k_class_expr(r, k) == k_class_expr(a, k) + k_class_expr(b, k), tag + " K-class");
            t.expect(cat.iso(r, extension(cat, a, b)), tag + " realization");
            t.expect(les_sound(cat, a, r, b), tag + " exact-sequence bounds");
            if (x == y && m == -1) t.expect(r.is_zero(), tag + " should vanish");
          }
    }
  for (int k = 2; k <= 5; ++k) {
    Category cat(k, 2);
    for (const auto& pc : all_intervals(k))
      for (const auto& pa : all_intervals(k))
        for (const auto& pb : all_intervals(k))
          for (int ma = -1; ma <= 1; ++ma)
            for (int mb = -1; mb <= 1; ++mb) {
              auto a = ObjExpr::stable(pa.shifted(ma)), b = ObjExpr::stable(pb.shifted(mb)), c = ObjExpr::stable(pc);
              AssocCommuteReport rep;
              try {
                rep = assoc_commute_check(cat, a, b, c);
              } catch (const Error&) {
                continue;
              }
              if (rep.commute != IdentityStatus::NotApplicable) ++identities;
              if (rep.assoc != IdentityStatus::NotApplicable) ++identities;
              t.expect(rep.commute != IdentityStatus::Fails, rep.trace[0]);
              t.expect(rep.assoc != IdentityStatus::Fails, rep.trace[1]);
            }
  }
  t.expect(identities > 0, "no reducible triples");
  return std::to_string(applicable) + " extension pairs, " + std::to_string(identities) + " identities";
}

// Criterion 4

std::string stability_axioms(Tally& t, std::mt19937_64& rng) {
  long expressions = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + trial % 5, N = 2 + trial % 2;
    auto S = random_standard(k, N, rng);
    auto leaves = stable_leaves(S, 0, k <= 3 ? 1 : 0);
    auto sample = small_expressions(S, leaves, 3);
    expressions += static_cast<long>(sample.size());
    auto rep = check_axioms(S, sample);
    for (const auto& c : rep.checks)
      t.expect(c.pass, "axiom " + c.axiom + " k=" + std::to_string(k) + " N=" + std::to_string(N) +
                           (c.witnesses.empty() ? "" : ": " + c.witnesses[0]));
  }
  return "50 conditions, " + std::to_string(expressions) + " expressions";
}

// Criterion 5

void check_hn(Tally& t, const StabilityCondition& S, const ObjExpr& e) {
  try {
    auto f = hn(S, e);
    std::string why;
    t.expect(valid_filtration(S, e, f, &why), e.key() + ": " + why);
    auto all = hn_all_orders(S, e);
    t.expect(all.size() == 1, e.key() + ": " + std::to_string(all.size()) + " distinct results");
  } catch (const Error& err) {
    t.fail(e.key() + ": " + err.name());
  }
}

std::string hn_correctness(Tally& t, std::mt19937_64& rng) {
  auto S0 = standard_condition(3, 2, {G(1, 0), G(1, 1), G(0, 1)}, {0, 0, 0});
  auto worked = ObjExpr::make_ext(ObjExpr::stable(2, 3), ObjExpr::stable(1, 2, 1));
  auto f = hn(S0, worked);
  bool exact = f.factors.size() == 2 && f.factors[0].stables == std::vector<ObjExpr>{ObjExpr::stable(1, 1, 1)} &&
               f.factors[0].phase == PhaseLift(1, G(1, 0)) &&
               f.factors[1].stables == std::vector<ObjExpr>{ObjExpr::stable(3, 3)} &&
               f.factors[1].phase == PhaseLift(0, G(0, 1));
  t.expect(exact, "worked instance gave " + to_string(f));

  auto small = small_expressions(S0, stable_leaves(S0, -1, 1), 3);
  for (const auto& e : small) check_hn(t, S0, e);

  int towers = 0;
  for (int c = 0; c < 20; ++c) {
    auto S = random_standard(2 + c % 4, 2, rng);
    for (int n = 0; n < 10; ++n) {
      auto e = random_tower(S, 1 + (n % 5), -1, 1, rng);
      check_hn(t, S, e);
      ++towers;
    }
  }
  return std::to_string(small.size()) + " small expressions over S0, " + std::to_string(towers) + " random towers";
}

// Criterion 6

bool on_wall(const StabilityCondition& S) {
  for (size_t u = 0; u < S.stables.size(); ++u)
    for (size_t v = u + 1; v < S.stables.size(); ++v)
      if (sgn(cross(S.class_charge(S.stables[u].i, S.stables[u].j), S.class_charge(S.stables[v].i, S.stables[v].j))) == 0)
        return true;
  return false;
}

std::string wall_crossing(Tally& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-6, 6);
  int segments = 0, crossings = 0;
  for (int trial = 0; segments < 20 && trial < 2000; ++trial) {
    int k = 2 + trial % 3;
    auto S = random_standard(k, 2, rng);
    if (on_wall(S)) continue;
    std::vector<GaussianRational> target;
    for (int s = 0; s < k; ++s) target.push_back(G(c(rng), c(rng)));
    std::vector<WallEvent> ev;
    try {
      ev = walls_on_segment(S, target);
    } catch (const Error&) {
      continue;
    }
    if (ev.empty()) continue;
    ++segments;
    const size_t count = static_cast<size_t>(k * (k + 1) / 2);
    t.expect(is_simple(S).simple, "start not simple");
    auto cur = S;
    for (const auto& e : ev) {
      std::string tag = describe(e);
      try {
        auto next = cross(cur, e);
        t.expect(next.stables.size() == count, tag + ": stable count");
        t.expect(is_simple(cur).simple && is_simple(next).simple, tag + ": not simple");
        auto back = walls_on_segment(next, cur.Z);
        if (back.size() != 1) {
          t.fail(tag + ": return path sees " + std::to_string(back.size()) + " walls");
          break;
        }
        t.expect(same_condition(cross(next, back[0]), cur), tag + ": return differs");
        cur = next;
        ++crossings;
      } catch (const Error& err) {
        t.fail(tag + ": " + err.name() + " " + err.what());
        break;
      }
    }
  }
  t.expect(segments == 20, "only " + std::to_string(segments) + " segments with walls");
  return std::to_string(segments) + " segments, " + std::to_string(crossings) + " crossings";
}

// Criterion 7

struct GeneratorCase {
  int k;
  int i;
  int sides;
  std::vector<GaussianRational> Z;
};

std::string generator_loops(Tally& t) {
  std::vector<GeneratorCase> cases{
      {2, 1, 12, {G(Rational(1, 5), 0), G(Rational(-1, 10), 1)}},
      {2, 2, 8, {G(1, 0), G(0, Rational(1, 4))}},
      {3, 1, 12, {G(Rational(1, 5), 0), G(1, 1), G(Rational(-1, 10), 1)}},
      {3, 2, 8, {G(1, 0), G(Rational(1, 5), Rational(1, 5)), G(Rational(-1, 10), 1)}},
      {3, 3, 8, {G(1, 0), G(1, 2), G(Rational(-1, 50), Rational(1, 5))}},
  };
  int walls = 0;
  for (const auto& gc : cases) {
    std::string tag = "k=" + std::to_string(gc.k) + " i=" + std::to_string(gc.i);
    try {
      auto S = standard_condition(gc.k, 2, gc.Z, {});
      auto rep = generator_loop(S, gc.i, gc.sides, 2);
      walls += static_cast<int>(rep.events.size());
      auto word = braid_of_charge_loop(S.Z, rotation_path(S.Z, gc.i, gc.sides, 2));
      const int strands = gc.k + 1;
      t.expect(word == BraidWord{gc.i, gc.i}, tag + ": word " + to_string(word));
      t.expect(!is_trivial(word, strands), tag + ": word trivial");
      t.expect(is_trivial(concat(word, {-gc.i, -gc.i}), strands), tag + ": word is not sigma^2");
      auto T = twist_K(gc.i, gc.k, 2);
      t.expect(rep.k_action == T * T, tag + ": K-action");
      t.expect(rep.all_match, tag + ": stable objects differ from twist images");
    } catch (const Error& err) {
      t.fail(tag + ": " + err.name() + " " + err.what());
    }
  }
  return std::to_string(cases.size()) + " loops, " + std::to_string(walls) + " walls";
}

// Criterion 8

using FreeWord = std::vector<int>;

FreeWord reduce_free(const FreeWord& w) {
  FreeWord out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

FreeWord invert_free(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

// Artin representation in Aut(F_n), independent of the coordinate action.
bool artin_trivial(const BraidWord& w, int n) {
  std::vector<FreeWord> img;
  for (int s = 1; s <= n; ++s) img.push_back({s});
  for (int g : w) {
    int i = std::abs(g);
    std::vector<FreeWord> sub;
    for (int s = 1; s <= n; ++s) sub.push_back({s});
    if (g > 0) {
      sub[i - 1] = {i, i + 1, -i};
      sub[i] = {i};
    } else {
      sub[i - 1] = {i + 1};
      sub[i] = {-(i + 1), i, i + 1};
    }
    for (auto& word : img) {
      FreeWord out;
      for (int l : word) {
        FreeWord piece = l > 0 ? sub[l - 1] : invert_free(sub[-l - 1]);
        out.insert(out.end(), piece.begin(), piece.end());
      }
      word = reduce_free(out);
    }
  }
  for (int s = 1; s <= n; ++s)
    if (img[s - 1] != FreeWord{s}) return false;
  return true;
}

// Full turn of points p and q about their midpoint.
std::vector<Configuration> pair_turn(const std::vector<GaussianRational>& base, size_t p, size_t q, int dir) {
  std::vector<Configuration> out;
  GaussianRational mid = Rational(1, 2) * (base[p] + base[q]);
  for (int m = 1; m <= 8; ++m) {
    Configuration c{base};
    auto u = unit_point(dir * M_PI * (2 * m - 1) / 8);
    c.points[p] = mid + (base[p] - mid) * u;
    c.points[q] = mid + (base[q] - mid) * u;
    out.push_back(c);
  }
  return out;
}

std::vector<Configuration> random_point_loop(const std::vector<GaussianRational>& base, std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> pick(0, base.size() - 1);
  std::uniform_int_distribution<int> turns(1, 3), coin(0, 1);
  std::vector<Configuration> loop{Configuration{base}};
  for (int s = turns(rng); s > 0; --s) {
    size_t p = pick(rng), q = pick(rng);
    if (p == q) q = (p + 1) % base.size();
    auto seg = pair_turn(base, p, q, coin(rng) ? 1 : -1);
    loop.insert(loop.end(), seg.begin(), seg.end());
    loop.push_back(Configuration{base});
  }
  loop.pop_back();
  return loop;
}

std::string braid_machinery(Tally& t, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int k = 1; k <= 6; ++k) {
    const int n = k + 1;
    for (int trial = 0; trial < 100; ++trial) {
      LaminationCoords c;
      for (int s = 0; s < 2 * n; ++s) c.push_back(coord(rng));
      for (int i = 1; i < n; ++i) {
        t.expect(coords_action({i, -i}, c) == c && coords_action({-i, i}, c) == c, "inverse relation");
        for (int j = i + 1; j < n; ++j) {
          if (j == i + 1)
            t.expect(coords_action({i, j, i}, c) == coords_action({j, i, j}, c), "braid relation");
          else
            t.expect(coords_action({i, j}, c) == coords_action({j, i}, c), "far commutation");
        }
      }
    }
  }

  std::vector<BraidWord> words{{}};
  long short_words = 0;
  for (int len = 1; len <= 6; ++len) {
    std::vector<BraidWord> next;
    for (const auto& w : words)
      for (int g : {1, -1, 2, -2}) {
        if (!w.empty() && w.back() == -g) continue;
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    for (const auto& w : next) {
      ++short_words;
      t.expect(is_trivial(w, 3) == artin_trivial(w, 3), "faithfulness on " + to_string(w));
    }
    words = std::move(next);
  }

  int loops = 0;
  std::uniform_int_distribution<int> pts(3, 5), jitter(-9, 9);
  for (int trial = 0; loops < 20 && trial < 200; ++trial) {
    int n = pts(rng);
    std::vector<GaussianRational> base;
    for (int s = 0; s < n; ++s) base.push_back(G(Rational(3 * s * 8 + jitter(rng), 8), Rational(jitter(rng), 7)));
    auto l1 = random_point_loop(base, rng), l2 = random_point_loop(base, rng);
    std::vector<Configuration> l12 = l1;
    l12.insert(l12.end(), l2.begin(), l2.end());
    std::vector<Configuration> rev{l1.front()};
    rev.insert(rev.end(), l1.rbegin(), l1.rend() - 1);
    BraidWord w1, w2, w12, wr;
    try {
      w1 = braid_of_loop(l1);
      w2 = braid_of_loop(l2);
      w12 = braid_of_loop(l12);
      wr = braid_of_loop(rev);
    } catch (const Error&) {
      continue;
    }
    ++loops;
    t.expect(is_trivial(concat(w12, inverse(concat(w1, w2))), n), "homomorphism on " + to_string(w12));
    t.expect(is_trivial(concat(wr, w1), n), "reversed loop " + to_string(wr) + " vs " + to_string(w1));
  }
  t.expect(loops == 20, "only " + std::to_string(loops) + " generic loops");
  return std::to_string(short_words) + " B_3 words, " + std::to_string(loops) + " loop pairs";
}

// Criterion 9

std::vector<GaussianRational> random_charges(int k, int small, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> re(-6, 6), im(1, 8);
  for (;;) {
    std::vector<GaussianRational> Z;
    for (int s = 0; s < k; ++s) Z.push_back(G(re(rng), im(rng)));
    std::sort(Z.begin(), Z.end(), [](const auto& a, const auto& b) { return sgn(cross(a, b)) > 0; });
    bool distinct = true;
    for (int s = 0; s + 1 < k; ++s) distinct = distinct && sgn(cross(Z[s], Z[s + 1])) > 0;
    if (!distinct) continue;
    Z[small - 1] = Rational(1, 12) * Z[small - 1];
    return Z;
  }
}

Path perturbation_loop(const std::vector<GaussianRational>& Z, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-4, 4), len(2, 4);
  Path out;
  for (int s = len(rng); s > 0; --s) {
    auto v = Z;
    for (auto& z : v) z += G(Rational(d(rng), 8), Rational(d(rng), 8));
    out.push_back(v);
  }
  return out;
}

Path join(std::initializer_list<Path> parts) {
  Path out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string universal_cover(Tally& t, std::mt19937_64& rng) {
  // only loops that cross at least one wall count
  int contractible = 0, essential = 0, skipped = 0;
  std::uniform_int_distribution<int> kind(0, 3), coin(0, 1);
  for (int trial = 0; (contractible < 10 || essential < 10) && trial < 400; ++trial) {
    int k = 2 + trial % 3;
    std::uniform_int_distribution<int> pick(1, k);
    int i = pick(rng);
    auto Z = random_charges(k, i, rng);
    int h = coin(rng) ? 2 : -2;
    Path loop;
    switch (kind(rng)) {
      case 0:
        loop = perturbation_loop(Z, rng);
        break;
      case 1:
        loop = join({rotation_path(Z, i, 8, h), rotation_path(Z, i, 8, -h)});
        break;
      case 2:
        loop = rotation_path(Z, i, 8, h);
        break;
      default: {
        auto back = perturbation_loop(Z, rng);
        loop = join({back, {Z}, rotation_path(Z, i, 8, h)});
        break;
      }
    }
    MonodromyReport rep;
    try {
      auto S = standard_condition(k, 2, Z, {});
      rep = monodromy_compare(S, loop);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    if (rep.events.empty()) continue;
    std::string tag = "k=" + std::to_string(k) + " word " + to_string(rep.word);
    if (rep.word_trivial) {
      if (contractible >= 10) continue;
      ++contractible;
      t.expect(rep.identity_transformation, tag + ": contractible loop moved the stables");
    } else {
      if (essential >= 10) continue;
      ++essential;
      bool k_nontrivial = rep.k_action != identity_matrix(k);
      t.expect(k_nontrivial || !rep.identity_transformation, tag + ": no visible action");
    }
    t.expect(rep.objects_match, tag + ": objects differ from braid images");
    t.expect(rep.k_match, tag + ": K-action differs from the word");
  }
  t.expect(contractible == 10 && essential == 10,
           "sampled " + std::to_string(contractible) + " contractible, " + std::to_string(essential) + " essential");
  return std::to_string(contractible) + " contractible, " + std::to_string(essential) + " non-contractible, " +
         std::to_string(skipped) + " non-generic skipped";
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "algebra dimensions";
    case 2: return "hom-table duality";
    case 3: return "extension table soundness";
    case 4: return "stability axioms";
    case 5: return "HN correctness";
    case 6: return "wall crossing";
    case 7: return "generator loop";
    case 8: return "braid machinery";
    case 9: return "universal-cover consistency";
  }
  return "?";
}

double criterion_limit(int id) {
  static const double limits[] = {0, 1, 1, 5, 30, 60, 30, 60, 60, 120};
  return limits[id];
}

}  // namespace

std::string to_string(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "criterion " << r.id << " " << (r.pass() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.seconds << " s, limit "
     << r.limit << " s)  " << r.detail;
  return os.str();
}

std::uint64_t acceptance_seed() {
  const char* s = std::getenv("AKSTAB_SEED");
  if (s && *s) return std::strtoull(s, nullptr, 10);
  return 20240607;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  if (id < 1 || id > 9) throw Error(ErrorCode::InvalidArgument, "criteria are numbered 1 to 9");
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  r.limit = criterion_limit(id);
  std::mt19937_64 rng(seed * 31 + id);
  Tally t;
  auto start = std::chrono::steady_clock::now();
  std::string head;
  try {
    switch (id) {
      case 1: head = algebra_dimensions(t); break;
      case 2: head = hom_duality(t); break;
      case 3: head = extension_table(t); break;
      case 4: head = stability_axioms(t, rng); break;
      case 5: head = hn_correctness(t, rng); break;
      case 6: head = wall_crossing(t, rng); break;
      case 7: head = generator_loops(t); break;
      case 8: head = braid_machinery(t, rng); break;
      case 9: head = universal_cover(t, rng); break;
    }
  } catch (const std::exception& err) {
    t.fail(std::string("uncaught: ") + err.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.correct = t.failures == 0;
  r.detail = t.summary(head);
  return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) {
    out.push_back(run_criterion(id, seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

}  // namespace akstab
