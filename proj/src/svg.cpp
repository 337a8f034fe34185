#include "akstab/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace akstab {

namespace {

struct Pt {
  double x, y;
};

std::vector<Pt> partial_sums(const std::vector<GaussianRational>& Z) {
  std::vector<Pt> out{{0, 0}};
  double x = 0, y = 0;
  for (const auto& z : Z) {
    x += z.re.get_d();
    y += z.im.get_d();
    out.push_back({x, y});
  }
  return out;
}

class Canvas {
 public:
  explicit Canvas(const std::vector<std::vector<Pt>>& frames) {
    for (const auto& f : frames)
      for (const auto& p : f) {
        lo_x_ = std::min(lo_x_, p.x);
        hi_x_ = std::max(hi_x_, p.x);
        lo_y_ = std::min(lo_y_, p.y);
        hi_y_ = std::max(hi_y_, p.y);
      }
    double span = std::max({hi_x_ - lo_x_, hi_y_ - lo_y_, 1e-9});
    scale_ = (size_ - 2 * margin_) / span;
  }

  std::string x(double v) const { return num(margin_ + (v - lo_x_) * scale_); }
  std::string y(double v) const { return num(size_ - margin_ - (v - lo_y_) * scale_); }

  std::string header() const {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(size_) + "\" height=\"" + num(size_) +
           "\" viewBox=\"0 0 " + num(size_) + " " + num(size_) + "\">\n";
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }

 private:
  double lo_x_ = 0, hi_x_ = 0, lo_y_ = 0, hi_y_ = 0;
  double size_ = 480, margin_ = 24, scale_ = 1;
};

void frame(std::string& out, const Canvas& c, const std::vector<Pt>& pts, int k, const std::string& cls) {
  out += "  <g class=\"" + cls + "\">\n";
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      const Pt& a = pts[i - 1];
      const Pt& b = pts[j];
      out += "    <line class=\"stable P" + std::to_string(i) + std::to_string(j) + "\" x1=\"" + c.x(a.x) + "\" y1=\"" +
             c.y(a.y) + "\" x2=\"" + c.x(b.x) + "\" y2=\"" + c.y(b.y) + "\" stroke=\"#4a6\" stroke-width=\"1\"/>\n";
    }
  for (size_t t = 0; t < pts.size(); ++t)
    out += "    <circle class=\"point\" cx=\"" + c.x(pts[t].x) + "\" cy=\"" + c.y(pts[t].y) + "\" r=\"3\" fill=\"#222\"/>\n";
  out += "  </g>\n";
}

}  // namespace

std::string svg_condition(const StabilityCondition& S) {
  auto pts = partial_sums(S.Z);
  Canvas c({pts});
  std::string out = c.header();
  frame(out, c, pts, S.k, "condition");
  return out + "</svg>\n";
}

std::string svg_loop(const std::vector<GaussianRational>& start, const std::vector<std::vector<GaussianRational>>& vertices,
                     const std::vector<WallEvent>& events) {
  std::vector<std::vector<Pt>> frames{partial_sums(start)};
  for (size_t m = 0; m < vertices.size(); ++m)
    if (m + 1 < vertices.size() || vertices[m] != start) frames.push_back(partial_sums(vertices[m]));
  Canvas c(frames);
  const int k = static_cast<int>(start.size());
  std::string out = c.header();
  for (size_t f = 0; f < frames.size(); ++f) frame(out, c, frames[f], k, "frame frame-" + std::to_string(f));
  out += "  <g class=\"walls\">\n";
  for (const auto& e : events) {
    double t = e.time.to_double();
    std::vector<Pt> pts{{0, 0}};
    double x = 0, y = 0;
    for (size_t m = 0; m < e.from.size(); ++m) {
      x += (1 - t) * e.from[m].re.get_d() + t * e.to[m].re.get_d();
      y += (1 - t) * e.from[m].im.get_d() + t * e.to[m].im.get_d();
      pts.push_back({x, y});
    }
    for (auto [i, j] : e.classes) {
      const Pt& a = pts[i - 1];
      const Pt& b = pts[j];
      out += "    <line class=\"wall-hit P" + std::to_string(i) + std::to_string(j) + "\" x1=\"" + c.x(a.x) + "\" y1=\"" +
             c.y(a.y) + "\" x2=\"" + c.x(b.x) + "\" y2=\"" + c.y(b.y) + "\" stroke=\"#c33\" stroke-dasharray=\"4 2\"/>\n";
    }
  }
  out += "  </g>\n";
  return out + "</svg>\n";
}

}  // namespace akstab
