#pragma once

// SVG 1.1 figures of a Drawing. The view box is the bounding box of the finite
// labeled points plus a 10% margin; points at infinity become arrows at the
// border. Coordinates are printed with "%.2f" so output is byte-stable.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "arguesia/instances.hpp"

namespace arguesia {

struct SvgOptions {
  double width = 800;
  double height = 800;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0 ? 0.0 : v);  // no "-0.00"
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

inline std::string xml_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    switch (c) {
      case '<': r += "&lt;"; break;
      case '>': r += "&gt;"; break;
      case '&': r += "&amp;"; break;
      case '"': r += "&quot;"; break;
      default: r += c;
    }
  }
  return r;
}

struct Viewport {
  double x0, y0, x1, y1;  // world box
  double scale, ox, oy;
  double W, H;

  double px(double x) const { return ox + (x - x0) * scale; }
  double py(double y) const { return oy + (y1 - y) * scale; }
};

inline Viewport make_viewport(const Drawing& d, const SvgOptions& o) {
  bool any = false;
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  for (const auto& [n, p] : d.points) {
    if (p.is_infinite()) continue;
    const double x = p.x().to_double() / p.z().to_double();
    const double y = p.y().to_double() / p.z().to_double();
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  if (!any) throw DegenerateError("unbounded configuration: every point is at infinity");
  double w = x1 - x0, h = y1 - y0;
  const double ext = std::max({w, h, 1e-9});
  if (w < ext * 1e-3) w = ext * 0.2, x0 -= w / 2, x1 += w / 2;
  if (h < ext * 1e-3) h = ext * 0.2, y0 -= h / 2, y1 += h / 2;
  x0 -= 0.1 * w;
  x1 += 0.1 * w;
  y0 -= 0.1 * h;
  y1 += 0.1 * h;
  Viewport v{x0, y0, x1, y1, 0, 0, 0, o.width, o.height};
  v.scale = std::min(o.width / (x1 - x0), o.height / (y1 - y0));
  v.ox = (o.width - (x1 - x0) * v.scale) / 2;
  v.oy = (o.height - (y1 - y0) * v.scale) / 2;
  return v;
}

/// Clip a x + b y + c = 0 to the world box; false when it misses.
inline bool clip_line(const Viewport& v, double a, double b, double c, double out[4]) {
  std::vector<std::pair<double, double>> hits;
  auto add = [&](double x, double y) {
    const double eps = 1e-12 * (1 + std::abs(x) + std::abs(y));
    if (x < v.x0 - eps || x > v.x1 + eps || y < v.y0 - eps || y > v.y1 + eps) return;
    for (const auto& [hx, hy] : hits)
      if (std::abs(hx - x) < eps && std::abs(hy - y) < eps) return;
    hits.emplace_back(x, y);
  };
  if (b != 0) {
    add(v.x0, -(a * v.x0 + c) / b);
    add(v.x1, -(a * v.x1 + c) / b);
  }
  if (a != 0) {
    add(-(b * v.y0 + c) / a, v.y0);
    add(-(b * v.y1 + c) / a, v.y1);
  }
  if (hits.size() < 2) return false;
  out[0] = hits[0].first;
  out[1] = hits[0].second;
  out[2] = hits[1].first;
  out[3] = hits[1].second;
  return true;
}

/// Conic through a known point s: the line through s with direction angle phi
/// meets it again at (d.M.d) s - 2 (s.M.d) d.
inline std::string conic_path(const Viewport& v, const Conic& c, const PPoint& seed) {
  double m[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = c.matrix()[i][j].to_double();
  const double s[3] = {seed.x().to_double(), seed.y().to_double(), seed.z().to_double()};
  struct Sample {
    bool ok;
    double x, y;
  };
  const double span = std::max(v.x1 - v.x0, v.y1 - v.y0);
  auto at = [&](double phi) -> Sample {
    const double d[3] = {std::cos(phi), std::sin(phi), 0};
    double dmd = 0, smd = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        dmd += d[i] * m[i][j] * d[j];
        smd += s[i] * m[i][j] * d[j];
      }
    double p[3];
    for (int i = 0; i < 3; ++i) p[i] = dmd * s[i] - 2 * smd * d[i];
    if (std::abs(p[2]) < 1e-12) return {false, 0, 0};
    const double x = p[0] / p[2], y = p[1] / p[2];
    // keep a generous frame around the view, break the path beyond it
    if (x < v.x0 - 2 * span || x > v.x1 + 2 * span || y < v.y0 - 2 * span || y > v.y1 + 2 * span)
      return {false, x, y};
    return {true, x, y};
  };
  const double pi = std::acos(-1.0);
  std::string path;
  bool pen = false;
  auto emit = [&](const Sample& q) {
    if (!q.ok) {
      pen = false;
      return;
    }
    path += (pen ? " L " : (path.empty() ? "M " : " M ")) + fmt(v.px(q.x)) + " " + fmt(v.py(q.y));
    pen = true;
  };
  // adaptive refinement: split while consecutive samples are over 3 px apart
  auto refine = [&](auto&& self, double a, const Sample& sa, double b, const Sample& sb, int depth) -> void {
    const double dist = sa.ok && sb.ok ? std::hypot(v.px(sa.x) - v.px(sb.x), v.py(sa.y) - v.py(sb.y)) : 1e9;
    if (depth < 10 && dist > 3) {
      const double mid = (a + b) / 2;
      const Sample sm = at(mid);
      self(self, a, sa, mid, sm, depth + 1);
      self(self, mid, sm, b, sb, depth + 1);
      return;
    }
    emit(sb);
  };
  const int n = 64;
  Sample prev = at(0);
  emit(prev);
  for (int i = 1; i <= n; ++i) {
    const double phi = pi * i / n;
    const Sample cur = at(phi);
    refine(refine, pi * (i - 1) / n, prev, phi, cur, 0);
    prev = cur;
  }
  return path;
}

}  // namespace detail

inline std::string render_svg(const Drawing& d, const SvgOptions& o = {}) {
  using detail::fmt;
  const detail::Viewport v = detail::make_viewport(d, o);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(o.width) + "\" height=\"" +
         fmt(o.height) + "\" viewBox=\"0 0 " + fmt(o.width) + " " + fmt(o.height) + "\">\n";
  out +=
      "<style>.construction{stroke:#888;stroke-width:1}.tronc{stroke:#000;stroke-width:1.5}"
      ".pascal-line{stroke:#c00;stroke-width:2}.conic{stroke:#06c;stroke-width:1.5;fill:none}"
      ".point circle{fill:#000}.point text{font:14px serif}</style>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const Conic& c : d.conics) {
    const PPoint* seed = nullptr;
    for (const auto& [n, p] : d.points)
      if (c.contains(p)) {
        seed = &p;
        break;
      }
    if (!seed) continue;
    const std::string path = detail::conic_path(v, c, *seed);
    if (!path.empty()) out += "<path class=\"conic\" d=\"" + path + "\"/>\n";
  }
  for (const auto& dl : d.lines) {
    if (dl.line.is_at_infinity()) continue;
    const Vec3& c = dl.line.coeffs();
    double seg[4];
    if (!detail::clip_line(v, c[0].to_double(), c[1].to_double(), c[2].to_double(), seg)) continue;
    out += "<line class=\"" + dl.cls + "\" x1=\"" + fmt(v.px(seg[0])) + "\" y1=\"" + fmt(v.py(seg[1])) +
           "\" x2=\"" + fmt(v.px(seg[2])) + "\" y2=\"" + fmt(v.py(seg[3])) + "\"/>\n";
  }
  const double cx = (v.x0 + v.x1) / 2, cy = (v.y0 + v.y1) / 2;
  for (const auto& [name, p] : d.points) {
    const std::string label = detail::xml_escape(name);
    if (p.is_infinite()) {
      // arrow from near the border toward the border, in the point's direction
      const double dx = p.x().to_double(), dy = p.y().to_double();
      const double len = std::hypot(dx, dy);
      const double ux = dx / len, uy = dy / len;
      const double r = 0.45 * std::min(v.x1 - v.x0, v.y1 - v.y0);
      const double tx = cx + r * ux, ty = cy + r * uy;
      const double sx = cx + 0.8 * r * ux, sy = cy + 0.8 * r * uy;
      out += "<g class=\"point\" data-infinite=\"true\"><line x1=\"" + fmt(v.px(sx)) + "\" y1=\"" + fmt(v.py(sy)) +
             "\" x2=\"" + fmt(v.px(tx)) + "\" y2=\"" + fmt(v.py(ty)) +
             "\" stroke=\"#000\" stroke-dasharray=\"4 2\"/><text x=\"" + fmt(v.px(tx) + 6) + "\" y=\"" +
             fmt(v.py(ty) - 6) + "\">" + label + "&#8734;</text></g>\n";
      continue;
    }
    const double x = v.px(p.x().to_double() / p.z().to_double());
    const double y = v.py(p.y().to_double() / p.z().to_double());
    out += "<g class=\"point\"><circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"3\"/><text x=\"" +
           fmt(x + 6) + "\" y=\"" + fmt(y - 6) + "\">" + label + "</text></g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace arguesia
