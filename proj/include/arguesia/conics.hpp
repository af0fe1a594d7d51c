#pragma once

// Conics as symmetric 3x3 matrices over Rat.
//
// A point p lies on the conic iff p^T M p = 0. Restricted to a charted line
// (point e0 + t e1) a conic becomes A t^2 + 2B t + C with A = e1.M.e1,
// B = e0.M.e1, C = e0.M.e0; its roots are the chord endpoints, exact in
// QuadExt.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arguesia/involution.hpp"

namespace arguesia {

template <class S>
S quad_form(const Mat3& m, const VecN<S, 3>& p, const VecN<S, 3>& q) {
  S s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += S(m[i][j]) * p[i] * q[j];
  return s;
}

class Conic {
 public:
  /// m must be symmetric and nonzero; it is scaled to primitive integers.
  explicit Conic(const Mat3& m) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (m[i][j] != m[j][i]) throw DomainError("conic matrix must be symmetric");
    const auto v = canonical_scale<6>({m[0][0], m[0][1], m[0][2], m[1][1], m[1][2], m[2][2]});
    if (is_zero_vec(v)) throw DegenerateError("zero conic");
    m_ = {{{v[0], v[1], v[2]}, {v[1], v[3], v[4]}, {v[2], v[4], v[5]}}};
  }
  /// a x^2 + b xy + c y^2 + d xz + e yz + f z^2
  static Conic from_coefficients(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e,
                                 const Rat& f) {
    const Rat h(Rat(1, 2));
    return Conic({{{a, h * b, h * d}, {h * b, c, h * e}, {h * d, h * e, f}}});
  }
  static Conic unit_circle() { return from_coefficients(1, 0, 1, 0, 0, -1); }
  /// The degenerate conic l * m (a pair of lines).
  static Conic line_pair(const PLine& l, const PLine& m) {
    Mat3 r{};
    const Vec3& a = l.coeffs();
    const Vec3& b = m.coeffs();
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = (a[i] * b[j] + a[j] * b[i]) * Rat(1, 2);
    return Conic(r);
  }

  const Mat3& matrix() const { return m_; }
  /// Upper triangle, row-major: m00 m01 m02 m11 m12 m22.
  std::array<Rat, 6> upper() const { return {m_[0][0], m_[0][1], m_[0][2], m_[1][1], m_[1][2], m_[2][2]}; }

  Rat value(const PPoint& p) const { return quad_form(m_, p.coords(), p.coords()); }
  template <class S>
  S value(const VecN<S, 3>& p) const { return quad_form(m_, p, p); }
  bool contains(const PPoint& p) const { return value(p).is_zero(); }
  Rat det() const { return det3(m_); }
  bool is_degenerate() const { return det().is_zero(); }
  /// m00 = m11 and m01 = 0 with a real nondegenerate locus.
  bool is_circle() const { return m_[0][0] == m_[1][1] && m_[0][1].is_zero() && !m_[0][0].is_zero() && !is_degenerate(); }

  /// Image under the collineation p -> h p.
  Conic transformed(const Mat3& h) const {
    const Mat3 hi = inverse(h);
    return Conic(mat_mul(mat_mul(transpose(hi), m_), hi));
  }
  PLine polar(const PPoint& p) const { return PLine(mat_vec(m_, p.coords())); }

  friend bool operator==(const Conic& a, const Conic& b) { return a.m_ == b.m_; }

 private:
  Mat3 m_{};
};

inline Conic conic_through_five(const std::array<PPoint, 5>& pts) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& p : pts) {
    const Rat &x = p.x(), &y = p.y(), &z = p.z();
    rows.push_back({x * x, x * y, y * y, x * z, y * z, z * z});
  }
  const auto ns = null_space(rows, 6);
  if (ns.size() != 1) throw DegenerateError("five points do not determine a unique conic");
  const auto& v = ns[0];
  return Conic::from_coefficients(v[0], v[1], v[2], v[3], v[4], v[5]);
}

/// A t^2 + 2B t + C: a conic restricted to a chart.
struct ChordQuadratic {
  Rat A, B, C;
  Rat discriminant() const { return B * B - A * C; }
  bool vanishes() const { return A.is_zero() && B.is_zero() && C.is_zero(); }
  /// Roots as chart parameters (infinity when A = 0). Empty if the
  /// discriminant is negative; one root when it is zero.
  std::vector<QParam> roots() const {
    if (vanishes()) throw DegenerateError("line is contained in the conic");
    const Rat disc = discriminant();
    if (disc.sign() < 0) return {};
    if (A.is_zero()) {
      if (B.is_zero()) return {QParam::infinity()};  // C t^0: double root at infinity
      return {QParam::infinity(), QParam(QuadExt(-C / (Rat(2) * B)))};
    }
    if (disc.is_zero()) return {QParam(QuadExt(-B / A))};
    const QuadExt r = quad_sqrt(disc);
    return {(QuadExt(-B) - r) / QuadExt(A), (QuadExt(-B) + r) / QuadExt(A)};
  }
  PairForm pair_form() const { return PairForm::roots_of(A, B, C); }
};

inline ChordQuadratic restrict_to(const Conic& c, const AffineChart& chart) {
  const Mat3& m = c.matrix();
  return {quad_form(m, chart.e1(), chart.e1()), quad_form(m, chart.e0(), chart.e1()),
          quad_form(m, chart.e0(), chart.e0())};
}

/// A chart on any line other than the line at infinity.
inline AffineChart default_chart(const PLine& l) {
  if (l.is_at_infinity()) throw DegenerateError("the line at infinity has no affine chart");
  const Vec3& c = l.coeffs();
  const PPoint o = c[1].is_zero() ? PPoint::affine(-c[2] / c[0], 0) : PPoint::affine(0, -c[2] / c[1]);
  const Pt2<Rat> a = o.to_affine();
  return AffineChart(l, o, PPoint::affine(a.x - c[1], a.y + c[0]));
}

using QVec3 = VecN<QuadExt, 3>;

struct ChordIntersection {
  Rat discriminant;
  std::vector<QVec3> points;  // finite points are scaled to z = 1
  bool tangent() const { return discriminant.is_zero(); }
};

inline QVec3 normalize(const QVec3& v) {
  if (v[2].is_zero()) return v;
  return {v[0] / v[2], v[1] / v[2], QuadExt(1)};
}

inline ChordIntersection conic_line_intersection(const Conic& c, const PLine& l, const AffineChart* chart = nullptr) {
  if (c.is_degenerate()) throw DegenerateError("degenerate conic: split it into lines first");
  const AffineChart ch = chart ? *chart : default_chart(l);
  const ChordQuadratic q = restrict_to(c, ch);
  ChordIntersection r{q.discriminant(), {}};
  for (const auto& t : q.roots()) r.points.push_back(normalize(ch.vec_at(t)));
  return r;
}

/// Second intersection of the conic with the line through seed (on the
/// conic) in direction v: (v.M.v) seed - 2 (seed.M.v) v.
inline Vec3 second_point(const Conic& c, const Vec3& seed, const Vec3& v) {
  const Mat3& m = c.matrix();
  const Vec3 r = sub(scale(quad_form(m, v, v), seed), scale(Rat(2) * quad_form(m, seed, v), v));
  if (is_zero_vec(r)) throw DegenerateError("line through the seed lies on the conic");
  return r;
}

/// Points of a conic parametrized by the slope t of the line joining them to
/// a finite seed point; t = infinity is the vertical line.
class RationalParametrization {
 public:
  RationalParametrization(const Conic& c, const PPoint& seed) : c_(c), seed_(seed) {
    if (!c.contains(seed)) throw DegenerateError("seed point " + seed.str() + " is not on the conic");
    if (seed.is_infinite()) throw DegenerateError("seed point must be finite");
    if (c.is_degenerate()) throw DegenerateError("parametrization needs a nondegenerate conic");
  }
  PPoint at(const Param& t) const {
    const Vec3 v = t.is_infinite() ? Vec3{Rat(0), Rat(1), Rat(0)} : Vec3{Rat(1), t.value(), Rat(0)};
    return PPoint(second_point(c_, seed_.coords(), v));
  }
  PPoint operator()(const Param& t) const { return at(t); }
  /// Slope of the line seed -> p (tangent slope at the seed itself).
  Param param_of(const PPoint& p) const {
    if (!c_.contains(p)) throw DegenerateError("point " + p.str() + " is not on the conic");
    Rat dx, dy;
    if (p == seed_) {
      const PLine tangent = c_.polar(seed_);
      dx = -tangent.coeffs()[1];
      dy = tangent.coeffs()[0];
    } else if (p.is_infinite()) {
      dx = p.x();
      dy = p.y();
    } else {
      const Pt2<Rat> d = p.to_affine() - seed_.to_affine();
      dx = d.x;
      dy = d.y;
    }
    return Param::from_homogeneous(dy, dx);
  }
  const Conic& conic() const { return c_; }
  const PPoint& seed() const { return seed_; }

 private:
  Conic c_;
  PPoint seed_;
};

inline RationalParametrization rational_parametrization(const Conic& c, const PPoint& seed) {
  return RationalParametrization(c, seed);
}

/// Pencil through four points in general position, generated by the line
/// pairs BC.ED and BE.CD.
class Pencil {
 public:
  Pencil(const PPoint& B, const PPoint& C, const PPoint& D, const PPoint& E)
      : base_{B, C, D, E},
        gen1_(Conic::line_pair(join(B, C), join(E, D))),
        gen2_(Conic::line_pair(join(B, E), join(C, D))) {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          if (collinear(base_[i], base_[j], base_[k]))
            throw DegenerateError("pencil base has three collinear points");
  }

  const std::array<PPoint, 4>& base() const { return base_; }
  const Conic& gen1() const { return gen1_; }
  const Conic& gen2() const { return gen2_; }

  Conic member(const Rat& lambda, const Rat& mu) const {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = lambda * gen1_.matrix()[i][j] + mu * gen2_.matrix()[i][j];
    return Conic(r);
  }

  /// (lambda : mu) roots of det(lambda gen1 + mu gen2) = 0.
  std::vector<std::pair<Rat, Rat>> degenerate_parameters() const {
    auto f = [&](const Rat& l, const Rat& m) {
      Mat3 r{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = l * gen1_.matrix()[i][j] + m * gen2_.matrix()[i][j];
      return det3(r);
    };
    // cubic c3 l^3 + c2 l^2 m + c1 l m^2 + c0 m^3; c3 = c0 = 0 since both
    // generators are degenerate
    const Rat c3 = f(1, 0), c0 = f(0, 1);
    const Rat s = f(1, 1) - c3 - c0;   // c2 + c1
    const Rat d = f(1, -1) - c3 + c0;  // c1 - c2
    const Rat c1 = (s + d) / Rat(2);
    const Rat c2 = (s - d) / Rat(2);
    if (!c3.is_zero() || !c0.is_zero() || (c1.is_zero() && c2.is_zero()))
      throw DegenerateError("pencil generators are not line pairs in general position");
    return {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {c1, -c2}};
  }
  std::vector<Conic> degenerate_members() const {
    std::vector<Conic> r;
    for (const auto& [l, m] : degenerate_parameters()) r.push_back(member(l, m));
    return r;
  }

 private:
  std::array<PPoint, 4> base_;
  Conic gen1_;
  Conic gen2_;
};

inline Conic pencil_member(const Pencil& pencil, const PPoint& through) {
  const Rat g1 = pencil.gen1().value(through);
  const Rat g2 = pencil.gen2().value(through);
  if (g1.is_zero() && g2.is_zero()) throw DegenerateError("every member of the pencil passes through " + through.str());
  return pencil.member(g2, -g1);
}

struct PowerCheck {
  Rat lhs;  // signed product along chord 1
  Rat rhs;  // signed product along chord 2
  std::array<PPoint, 2> chord1;
  std::array<PPoint, 2> chord2;
  bool holds() const { return lhs == rhs; }
};

/// Signed products pA.pB along two chords through p agree for a circle.
inline PowerCheck power_identity_check(const Conic& circle, const PPoint& p, const PLine& chord1, const PLine& chord2) {
  if (!circle.is_circle()) throw DegenerateError("power of a point needs a circle");
  if (circle.contains(p)) throw DegenerateError("point " + p.str() + " lies on the circle");
  if (!chord1.contains(p) || !chord2.contains(p)) throw DegenerateError("chords must pass through " + p.str());
  auto endpoints = [&](const PLine& l) {
    const ChordIntersection ci = conic_line_intersection(circle, l);
    if (ci.points.size() != 2) throw DomainError("chord " + l.str() + " does not cut the circle twice");
    std::array<PPoint, 2> r;
    for (int i = 0; i < 2; ++i) {
      for (const auto& x : ci.points[i])
        if (!x.is_rational())
          throw DomainError("irrational chord " + l.str() + " (discriminant " + ci.discriminant.str() + ")");
      r[i] = PPoint(ci.points[i][0].to_rat(), ci.points[i][1].to_rat(), ci.points[i][2].to_rat());
    }
    return r;
  };
  const auto e1 = endpoints(chord1);
  const auto e2 = endpoints(chord2);
  const Pt2<Rat> o = p.to_affine();
  auto product = [&](const std::array<PPoint, 2>& e) {
    return dot2(e[0].to_affine() - o, e[1].to_affine() - o);
  };
  return {product(e1), product(e2), e1, e2};
}

}  // namespace arguesia
