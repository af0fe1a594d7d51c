#pragma once

// Seeded random instances for every verifier, with rejection resampling.
//
// PRNG is SplitMix64:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
// Integers in [lo, hi] are lo + next() % (hi - lo + 1). A random rational has
// numerator in [-M, M] then denominator in [1, M], M = bounds.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arguesia/theorems.hpp"

namespace arguesia {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

inline const std::vector<std::string>& instance_kinds() {
  static const std::vector<std::string> kinds{
      "menelaus", "ramee",    "ramee-shortcut",    "quadrangle", "pencil", "pascal", "beaugrand",
      "harmonic", "midpoint", "bisector",          "p13",        "parallel-bornales", "retablissement"};
  return kinds;
}

/// Lower case, underscores read as hyphens; throws DomainError when unknown.
inline std::string canonical_kind(std::string kind) {
  std::replace(kind.begin(), kind.end(), '_', '-');
  const auto& k = instance_kinds();
  if (std::find(k.begin(), k.end(), kind) == k.end()) throw DomainError("unknown kind '" + kind + "'");
  return kind;
}

struct InstanceConfig {
  std::string kind;
  std::uint64_t seed = 0;
  std::int64_t bounds = 16;
  int images = 1;  // pascal: random collineation images checked per instance
};

struct DrawLine {
  PLine line;
  std::string cls;  // construction, pascal-line, tronc
};

struct Drawing {
  std::vector<std::pair<std::string, PPoint>> points;
  std::vector<DrawLine> lines;
  std::vector<Conic> conics;

  void point(const std::string& n, const PPoint& p) { points.emplace_back(n, p); }
  void line(const PLine& l, const std::string& cls = "construction") { lines.push_back({l, cls}); }
  void segment(const PPoint& a, const PPoint& b, const std::string& cls = "construction") {
    if (!(a == b)) line(join(a, b), cls);
  }
};

struct Instance {
  InstanceConfig config;
  int attempts = 0;
  TheoremReport report;
  Drawing drawing;
};

constexpr int kMaxAttempts = 64;
constexpr std::int64_t kMinBounds = 8;

namespace detail {

struct Sampler {
  SplitMix64& rng;
  std::int64_t m;

  Rat rat() {
    const std::int64_t n = rng.uniform(-m, m);
    const std::int64_t d = rng.uniform(1, m);
    return Rat(n, d);
  }
  Rat nonzero() {
    Rat r = rat();
    if (r.is_zero()) throw DegenerateError("zero where a nonzero rational is needed");
    return r;
  }
  PPoint point() {
    const Rat x = rat();
    return PPoint::affine(x, rat());
  }
  PLine line() {
    const PPoint a = point();
    const PPoint b = point();
    if (a == b) throw DegenerateError("line through two equal random points");
    return join(a, b);
  }
  AffineChart chart() {
    const PPoint a = point();
    return AffineChart::through(a, point());
  }
  /// Distinct rationals.
  std::vector<Rat> distinct(std::size_t n) {
    std::vector<Rat> v;
    for (std::size_t i = 0; i < n; ++i) {
      Rat r = rat();
      if (std::find(v.begin(), v.end(), r) != v.end()) throw DegenerateError("repeated random parameter");
      v.push_back(r);
    }
    return v;
  }
  Mat3 collineation() {
    Mat3 h;
    for (auto& row : h)
      for (auto& x : row) x = rat();
    if (det3(h).is_zero()) throw DegenerateError("singular random collineation");
    return h;
  }
};

inline PPoint circle_point(const Rat& t) {
  const Rat d = Rat(1) + t * t;
  return PPoint::affine((Rat(1) - t * t) / d, Rat(2) * t / d);
}

inline void absorb(TheoremReport& into, const TheoremReport& from, const std::string& prefix) {
  for (Claim c : from.claims) {
    c.label = prefix + c.label;
    into.claims.push_back(c);
  }
  for (const auto& n : from.notes) into.note(prefix + n);
}

inline void draw_quadrangle(Drawing& d, const QuadrangleConfig& q) {
  for (const auto& [n, p] : q.named_points()) d.point(n, p);
  d.segment(q.B, q.C);
  d.segment(q.E, q.D);
  d.segment(q.B, q.E);
  d.segment(q.C, q.D);
  d.segment(q.B, q.D);
  d.segment(q.C, q.E);
  d.line(q.transversal.line(), "tronc");
}

inline void require_trace(const TheoremReport& rep) {
  if (!rep.trace) throw DegenerateError(rep.notes.empty() ? "no proof replay" : rep.notes.back());
}

inline Instance make_menelaus(Sampler& s) {
  Instance in;
  const PPoint a = s.point(), b = s.point(), c = s.point();
  if (collinear(a, b, c)) throw DegenerateError("triangle vertices are collinear");
  const SectorFigure sf = SectorFigure::from_triangle(a, b, c, s.line());
  in.report = verify_menelaus(sf);
  Drawing& d = in.drawing;
  for (int i = 0; i < 3; ++i) d.point(std::string(1, char('a' + i)), sf.vertex(i));
  for (int i = 0; i < 3; ++i) d.point("N" + std::to_string(i + 1), sf.node(i));
  for (const auto& r : sf.rays()) d.line(r);
  d.line(sf.tronc(), "tronc");
  return in;
}

inline Instance make_ramee(Sampler& s, bool shortcut) {
  Instance in;
  const AffineChart tronc = s.chart();
  const auto t = s.distinct(5);
  const Involution inv = involution_from_pairs({Param(t[0]), Param(t[1])}, {Param(t[2]), Param(t[3])}, tronc);
  const Param f = inv.partner(Param(t[4]));
  if (f.is_infinite()) throw DegenerateError("partner of D at infinity");
  const NodeCouples nc =
      NodeCouples::from_params(tronc, {Couple{Param(t[0]), Param(t[1])}, Couple{Param(t[2]), Param(t[3])},
                                       Couple{Param(t[4]), f}});
  const PPoint K = s.point();
  const PPoint D = tronc.point_at(Param(t[4]));
  const AffineChart delta = shortcut ? AffineChart::through(D, s.point()) : s.chart();
  in.report = verify_ramee(nc, K, delta);
  require_trace(in.report);
  if ((in.report.trace->name == "ramee-shortcut") != shortcut)
    throw DegenerateError(shortcut ? "image line misses D" : "image line passes through D");

  Drawing& d = in.drawing;
  static const char* big[] = {"B", "H", "C", "G", "D", "F"};
  static const char* small[] = {"b", "h", "c", "g", "d", "f"};
  const LineMap proj = perspective_map(K, tronc, delta);
  d.point("K", K);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) {
      const Param& x = j ? nc.pairs[i].second : nc.pairs[i].first;
      const PPoint X = tronc.point_at(x);
      d.point(big[2 * i + j], X);
      const Param y = proj(x);
      if (!y.is_infinite()) d.point(small[2 * i + j], delta.point_at(y));
      d.segment(K, X);
    }
  d.line(tronc.line(), "tronc");
  d.line(delta.line(), "tronc");
  return in;
}

inline Instance make_quadrangle(Sampler& s) {
  Instance in;
  const PPoint B = s.point(), C = s.point(), D = s.point(), E = s.point();
  const QuadrangleConfig q = QuadrangleConfig::make(B, C, D, E, default_chart(s.line()));
  in.report = verify_quadrangle(q);
  require_trace(in.report);
  draw_quadrangle(in.drawing, q);
  return in;
}

inline Instance make_pencil(Sampler& s) {
  Instance in;
  const auto t = s.distinct(5);
  // the circle frame, then a random affine collineation
  Mat3 h{{{s.rat(), s.rat(), s.rat()}, {s.rat(), s.rat(), s.rat()}, {Rat(0), Rat(0), Rat(1)}}};
  if (det3(h).is_zero()) throw DegenerateError("singular affine map");
  auto move = [&](const PPoint& p) { return PPoint(mat_vec(h, p.coords())); };
  std::array<PPoint, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = move(circle_point(t[i]));
  const PPoint T = circle_point(t[4]);
  const PLine tangent = Conic::unit_circle().polar(T);
  const PPoint T2 = tangent.point_at_infinity();
  const Conic conic = Conic::unit_circle().transformed(h);
  const PLine delta = join(move(T), move(T2));
  const QuadrangleConfig q = QuadrangleConfig::make(b[0], b[1], b[2], b[3], default_chart(delta));
  const Pencil pencil(q.B, q.C, q.D, q.E);

  TheoremReport& rep = in.report;
  rep.name = "pencil";
  echo_quadrangle(rep, q);
  rep.input("tangent point", move(T));
  std::vector<std::pair<std::string, Conic>> members{
      {"BC.ED", pencil.gen1()}, {"BE.CD", pencil.gen2()}, {"tangent member", conic}};
  for (int i = 0; i < 2; ++i) {
    const PPoint X = q.transversal.point_at(Param(s.rat()));
    members.emplace_back("member " + std::to_string(i + 4), pencil_member(pencil, X));
  }
  for (const auto& [name, m] : members) detail::absorb(rep, pencil_involution_check(q, m), name + ": ");
  detail::absorb(rep, sigma_checkpoints(q, conic), "sigma: ");
  detail::absorb(rep, tangency_dichotomy(q), "tangency: ");

  draw_quadrangle(in.drawing, q);
  in.drawing.conics.push_back(conic);
  return in;
}

inline Instance make_pascal(Sampler& s, int images) {
  Instance in;
  const auto t = s.distinct(6);
  std::array<PPoint, 6> hex;
  for (int i = 0; i < 6; ++i) hex[i] = circle_point(t[i]);
  const Conic circle = Conic::unit_circle();
  PascalResult r = pascal_collinear(circle, hex);
  require_trace(r.report);
  in.report = r.report;
  for (int i = 0; i < images; ++i) {
    const PascalResult img = pascal_under_collineation(circle, hex, s.collineation());
    detail::absorb(in.report, img.report, "image " + std::to_string(i + 1) + ": ");
  }
  Drawing& d = in.drawing;
  static const char* names[] = {"P", "K", "V", "O", "N", "Q"};
  for (int i = 0; i < 6; ++i) d.point(names[i], hex[i]);
  d.point("M", r.M);
  d.point("S", r.S);
  d.point("X", r.X);
  for (int i = 0; i < 6; ++i) d.segment(hex[i], hex[(i + 1) % 6]);
  d.line(r.pascal_line, "pascal-line");
  d.conics.push_back(circle);
  return in;
}

inline Instance make_beaugrand(Sampler& s) {
  Instance in;
  const auto t = s.distinct(6);
  const PPoint K = circle_point(t[0]), N = circle_point(t[1]), O = circle_point(t[2]), V = circle_point(t[3]);
  const PLine tr = join(circle_point(t[4]), circle_point(t[5]));
  const Conic circle = Conic::unit_circle();
  in.report = verify_beaugrand(circle, K, N, O, V, tr);
  Drawing& d = in.drawing;
  for (const auto& p : in.report.trace->points) d.point(p.first, p.second);
  d.segment(K, O);
  d.segment(N, V);
  d.segment(K, N);
  d.segment(V, O);
  d.line(tr, "tronc");
  d.conics.push_back(circle);
  return in;
}

inline Instance make_harmonic(Sampler& s) {
  Instance in;
  const AffineChart line = s.chart();
  const auto t = s.distinct(3);
  const PPoint B = line.point_at(Param(t[0])), C = line.point_at(Param(t[1])), D = line.point_at(Param(t[2]));
  const PPoint F = harmonic_conjugate(B, C, D);
  if (F.is_infinite()) throw DegenerateError("D is the midpoint of BC");
  TheoremReport& rep = in.report;
  rep.name = "harmonic";
  detail::echo(rep, {{"B", B}, {"C", C}, {"D", D}});
  rep.input("F", F);
  const HarmonicConstruction hc = harmonic_construction(B, C, D);
  rep.claim("ruler construction = closed form", hc.F, harmonic_closed_form(B, C, D));
  rep.claim("cross ratio (B,C;D,F) = -1", cross_ratio(B, C, D, F), Param(-1));
  rep.claim("conjugation is involutive", harmonic_conjugate(B, C, F), D);
  Drawing& d = in.drawing;
  d.point("B", B);
  d.point("C", C);
  d.point("D", D);
  d.point("F", F);
  d.line(line.line(), "tronc");
  d.segment(hc.b, B);
  d.segment(hc.c, C);
  d.line(parallel_through(hc.K, join(hc.b, hc.c)));
  return in;
}

inline Instance make_midpoint(Sampler& s) {
  Instance in;
  const AffineChart line = s.chart();
  const auto t = s.distinct(3);
  const PPoint B = line.point_at(Param(t[0])), C = line.point_at(Param(t[1])), D = line.point_at(Param(t[2]));
  const PPoint F = harmonic_closed_form(B, C, D);
  if (F.is_infinite()) throw DegenerateError("F at infinity");
  const PPoint K = s.point();
  in.report = verify_midpoint_case(B, C, D, F, K);
  Drawing& d = in.drawing;
  for (const auto& [n, p] : {std::pair<std::string, PPoint>{"B", B}, {"C", C}, {"D", D}, {"F", F}, {"K", K}}) {
    d.point(n, p);
    if (n != "K") d.segment(K, p);
  }
  d.line(line.line(), "tronc");
  d.line(parallel_through(C, join(D, K)));
  return in;
}

inline Instance make_bisector(Sampler& s) {
  Instance in;
  const PPoint K = s.point(), B = s.point();
  if (K == B) throw DegenerateError("K equals B");
  const Rat dx = s.rat();
  const PPoint dir = PPoint::direction(dx, s.rat());
  const PLine tronc = join(B, dir);
  const Pt2<Rat> kb = B.to_affine() - K.to_affine();
  const PPoint C = meet(tronc, join(K, PPoint::direction(-kb.y, kb.x)));
  if (C.is_infinite()) throw DegenerateError("tronc parallel to the perpendicular at K");
  const AffineChart chart = AffineChart::through(B, C);
  const PPoint D = chart.point_at(Param(s.rat()));
  const PPoint F = harmonic_closed_form(B, C, D);
  if (F.is_infinite()) throw DegenerateError("F at infinity");
  in.report = verify_bisector_case(B, C, D, F, K);
  Drawing& d = in.drawing;
  for (const auto& [n, p] : {std::pair<std::string, PPoint>{"B", B}, {"C", C}, {"D", D}, {"F", F}, {"K", K}}) {
    d.point(n, p);
    if (n != "K") d.segment(K, p);
  }
  d.line(tronc, "tronc");
  return in;
}

inline Instance make_p13(Sampler& s) {
  Instance in;
  const PPoint B = s.point(), K = s.point(), G = s.point();
  if (B == K) throw DegenerateError("B equals K");
  const PPoint h = PPoint::affine(B.to_affine() + s.rat() * (K.to_affine() - B.to_affine()));
  in.report = construct_involution_p13(B, K, G, h);
  Drawing& d = in.drawing;
  for (const auto& [n, p] : {std::pair<std::string, PPoint>{"B", B}, {"K", K}, {"G", G}, {"h", h}}) d.point(n, p);
  const PPoint f = PPoint::affine(Rat(1, 2) * (G.to_affine() + h.to_affine()));
  const PLine bg = join(B, G);
  const PPoint F = meet(join(K, f), bg);
  const PPoint D = meet(parallel_through(K, join(G, h)), bg);
  d.point("F", F);
  d.point("D", D);
  d.segment(K, F);
  d.line(parallel_through(K, join(G, h)));
  d.segment(B, G, "tronc");
  d.segment(B, K);
  d.segment(G, h);
  return in;
}

inline Instance make_parallel_bornales(Sampler& s) {
  Instance in;
  const PPoint B = s.point(), C = s.point(), E = s.point();
  const Rat lambda = s.nonzero();
  const PPoint D = PPoint::affine(E.to_affine() + lambda * (C.to_affine() - B.to_affine()));
  const QuadrangleConfig q = QuadrangleConfig::make(B, C, D, E, default_chart(s.line()));
  in.report = parallel_bornales_identities(q);
  draw_quadrangle(in.drawing, q);
  return in;
}

inline Instance make_retablissement(Sampler& s) {
  Instance in;
  const Rat z = s.nonzero();
  const Rat ax = s.rat();
  const Rat ay = s.rat();
  const P3Point apex = P3Point::affine(ax, ay, z);
  const P3Plane base(Vec4{Rat(0), Rat(0), Rat(1), Rat(0)});
  // named draws: a throw inside a braced list leaks the built elements on GCC 11
  const Rat u = s.rat(), v = s.rat(), w = s.nonzero(), k = s.rat();
  const P3Plane cut(Vec4{u, v, w, k});
  const auto t = s.distinct(4);
  RetablissementInput ri{apex, base, cut, {}, PLine()};
  for (int i = 0; i < 4; ++i) ri.bornes[i] = lift_to_cut(apex, base, cut, circle_point(t[i]));
  const PLine on_base = s.line();
  const Vec3& c = on_base.coeffs();
  // two points of the base line, lifted
  const PPoint p1 = meet(on_base, PLine(c[1], -c[0], Rat(0)));
  const PPoint p2 = on_base.point_at_infinity();
  ri.transversal = join(lift_to_cut(apex, base, cut, p1), lift_to_cut(apex, base, cut, p2));
  in.report = retablissement_demo(ri);
  const Mat3 h = projection_matrix(apex, cut, base);
  const Conic section(mat_mul(mat_mul(transpose(h), Conic::unit_circle().matrix()), h));
  const QuadrangleConfig q =
      QuadrangleConfig::make(ri.bornes[0], ri.bornes[1], ri.bornes[2], ri.bornes[3], default_chart(ri.transversal));
  draw_quadrangle(in.drawing, q);
  in.drawing.conics.push_back(section);
  return in;
}

inline Instance make_once(const InstanceConfig& cfg, SplitMix64& rng) {
  Sampler s{rng, cfg.bounds};
  const std::string& k = cfg.kind;
  if (k == "menelaus") return make_menelaus(s);
  if (k == "ramee") return make_ramee(s, false);
  if (k == "ramee-shortcut") return make_ramee(s, true);
  if (k == "quadrangle") return make_quadrangle(s);
  if (k == "pencil") return make_pencil(s);
  if (k == "pascal") return make_pascal(s, cfg.images);
  if (k == "beaugrand") return make_beaugrand(s);
  if (k == "harmonic") return make_harmonic(s);
  if (k == "midpoint") return make_midpoint(s);
  if (k == "bisector") return make_bisector(s);
  if (k == "p13") return make_p13(s);
  if (k == "parallel-bornales") return make_parallel_bornales(s);
  if (k == "retablissement") return make_retablissement(s);
  throw DomainError("unknown kind '" + k + "'");
}

}  // namespace detail

/// Deterministic in (kind, seed, bounds, images). Degenerate draws are
/// rejected and redrawn from the same stream, at most kMaxAttempts times.
inline Instance generate_instance(InstanceConfig cfg) {
  cfg.kind = canonical_kind(cfg.kind);
  if (cfg.bounds < kMinBounds)
    throw DomainError("bounds must be at least " + std::to_string(kMinBounds) + " (got " +
                      std::to_string(cfg.bounds) + ")");
  if (cfg.images < 0) throw DomainError("images must be nonnegative");
  SplitMix64 rng(cfg.seed);
  std::string last;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    try {
      Instance in = detail::make_once(cfg, rng);
      in.config = cfg;
      in.attempts = attempt;
      in.report.seed = cfg.seed;
      return in;
    } catch (const DegenerateError& e) {
      last = e.what();
    }
  }
  throw Error("retry budget exhausted after " + std::to_string(kMaxAttempts) + " attempts for " + cfg.kind +
              " seed " + std::to_string(cfg.seed) + "; last failure: " + last);
}

}  // namespace arguesia
