#include "akstab/braid.hpp"

#include <algorithm>
#include <sstream>

namespace akstab {

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (int g : w) {
    if (g == 0) throw Error(ErrorCode::IndexOutOfRange, "braid generator 0");
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t t = 0; t < w.size(); ++t) s += (t ? " " : "") + std::to_string(w[t]);
  return s;
}

BraidWord parse_word(const std::string& text) {
  BraidWord w;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    try {
      size_t pos = 0;
      int g = std::stoi(tok, &pos);
      if (pos != tok.size() || g == 0) throw std::invalid_argument(tok);
      w.push_back(g);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad braid letter '" + tok + "'");
    }
  }
  return w;
}

LaminationCoords base_coords(int strands) {
  LaminationCoords c;
  for (int t = 0; t < strands; ++t) {
    c.push_back(0);
    c.push_back(1);
  }
  return c;
}

namespace {

Integer pos(const Integer& x) { return x > 0 ? x : Integer(0); }
Integer neg(const Integer& x) { return x < 0 ? x : Integer(0); }

void apply(int g, LaminationCoords& v) {
  const int n = static_cast<int>(v.size() / 2);
  const int i = std::abs(g);
  if (i < 1 || i >= n) throw Error(ErrorCode::IndexOutOfRange, "generator " + std::to_string(g) + " on " + std::to_string(n) + " strands");
  Integer& x = v[2 * i - 2];
  Integer& y = v[2 * i - 1];
  Integer& X = v[2 * i];
  Integer& Y = v[2 * i + 1];
  Integer nx, ny, nX, nY;
  if (g > 0) {
    Integer z = x - neg(y) - X + pos(Y);
    nx = x + pos(y) + pos(pos(Y) - z);
    ny = Y - pos(z);
    nX = X + neg(Y) + neg(neg(y) + z);
    nY = y + pos(z);
  } else {
    Integer z = x + neg(y) - X - pos(Y);
    nx = x - pos(y) - pos(pos(Y) + z);
    ny = Y + neg(z);
    nX = X - neg(Y) - neg(neg(y) - z);
    nY = y - neg(z);
  }
  x = nx;
  y = ny;
  X = nX;
  Y = nY;
}

}  // namespace

LaminationCoords coords_action(const BraidWord& w, const LaminationCoords& c) {
  LaminationCoords v = c;
  for (int g : w) apply(g, v);
  return v;
}

bool is_trivial(const BraidWord& w, int strands) {
  auto b = base_coords(strands);
  return coords_action(w, b) == b;
}

Configuration config_from_charge(const std::vector<GaussianRational>& Z, bool normalize) {
  Configuration c;
  c.normalized = normalize;
  GaussianRational s(0, 0);
  c.points.push_back(s);
  for (const auto& z : Z) {
    s += z;
    c.points.push_back(s);
  }
  for (size_t a = 0; a < c.points.size(); ++a)
    for (size_t b = a + 1; b < c.points.size(); ++b)
      if (c.points[a] == c.points[b])
        throw Error(ErrorCode::CoincidentPoints, "Z(P" + std::to_string(a + 1) + std::to_string(b) + ") = 0");
  if (normalize) {
    GaussianRational mean(0, 0);
    for (const auto& p : c.points) mean += p;
    mean = Rational(1, static_cast<long>(c.points.size())) * mean;
    for (auto& p : c.points) p -= mean;
  }
  return c;
}

Configuration rotated(const Configuration& c, const GaussianRational& unit) {
  Configuration out = c;
  for (auto& p : out.points) p = p * unit;
  return out;
}

namespace {

struct Crossing {
  Rational t;
  size_t a, b;
};

}  // namespace

BraidWord braid_of_loop(const std::vector<Configuration>& loop) {
  if (loop.empty()) return {};
  const size_t n = loop[0].points.size();
  for (const auto& c : loop)
    if (c.points.size() != n) throw Error(ErrorCode::InvalidArgument, "configurations differ in size");
  std::vector<size_t> order(n);
  for (size_t t = 0; t < n; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return loop[0].points[x].re < loop[0].points[y].re; });

  // A last configuration equal to the first as a point set closes the loop;
  // otherwise the last one is joined back to the first.
  auto as_set = [](std::vector<GaussianRational> p) {
    std::sort(p.begin(), p.end(), [](const auto& x, const auto& y) { return x.re < y.re || (x.re == y.re && x.im < y.im); });
    return p;
  };
  const bool closed = loop.size() > 1 && as_set(loop.back().points) == as_set(loop.front().points);
  const size_t segments = closed ? loop.size() - 1 : loop.size();

  BraidWord w;
  for (size_t seg = 0; seg < segments; ++seg) {
    const auto& P = loop[seg].points;
    const auto& Q = loop[(seg + 1) % loop.size()].points;
    for (size_t t = 0; t + 1 < n; ++t)
      if (P[order[t]].re == P[order[t + 1]].re)
        throw Error(ErrorCode::NonGenericLoop, "two points share a real part at a vertex");
    std::vector<Crossing> xs;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b) {
        GaussianRational d0 = P[b] - P[a], d1 = (Q[b] - P[b]) - (Q[a] - P[a]);
        if (d0.is_zero()) throw Error(ErrorCode::PointCollision, "coincident points at a vertex");
        if (sgn(cross(d0, d1)) == 0 && !d1.is_zero()) {
          Rational t = -dot(d0, d1) / d1.norm2();
          if (t >= 0 && t <= 1) throw Error(ErrorCode::PointCollision, "points collide during the loop");
        }
        if (sgn(d1.re) == 0) continue;
        Rational t = -d0.re / d1.re;
        if (t > 0 && t < 1) xs.push_back({t, a, b});
      }
    std::sort(xs.begin(), xs.end(), [](const Crossing& x, const Crossing& y) { return x.t < y.t; });
    for (size_t r = 0; r < xs.size(); ++r) {
      for (size_t q = r + 1; q < xs.size() && xs[q].t == xs[r].t; ++q)
        if (xs[q].a == xs[r].a || xs[q].a == xs[r].b || xs[q].b == xs[r].a || xs[q].b == xs[r].b)
          throw Error(ErrorCode::NonGenericLoop, "triple real-part coincidence");
      const auto& x = xs[r];
      auto ia = std::find(order.begin(), order.end(), x.a) - order.begin();
      auto ib = std::find(order.begin(), order.end(), x.b) - order.begin();
      if (std::abs(ia - ib) != 1) throw Error(ErrorCode::NonGenericLoop, "crossing strands are not adjacent");
      size_t left = order[std::min(ia, ib)], right = order[std::max(ia, ib)];
      auto at = [&](size_t p) { return P[p] + x.t * (Q[p] - P[p]); };
      Rational dl = at(left).im, dr = at(right).im;
      if (dl == dr) throw Error(ErrorCode::PointCollision, "points collide during the loop");
      int j = static_cast<int>(std::min(ia, ib)) + 1;
      w.push_back(dl < dr ? j : -j);
      std::swap(order[ia], order[ib]);
    }
  }
  return free_reduce(w);
}

}  // namespace akstab
