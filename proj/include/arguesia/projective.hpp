#pragma once

// The projective plane over Rat and maps between its lines.
//
// Points and lines are stored in canonical form (primitive integers, first
// nonzero coordinate positive), so projective equality is tuple equality.
// Points with z = 0 are points at infinity and need no special handling in
// join/meet.
//
// A line is coordinatized by an AffineChart: the point with parameter t is
// origin + t*(unit - origin), and the line's point at infinity has the
// parameter infinity. Line-to-line homographies act on these parameters
// through a 2x2 matrix on (t : 1).

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "arguesia/linalg.hpp"

namespace arguesia {

/// Affine point with coordinates in S (Rat or QuadExt).
template <class S>
struct Pt2 {
  S x;
  S y;
  friend bool operator==(const Pt2&, const Pt2&) = default;
};

template <class S>
Pt2<S> operator-(const Pt2<S>& a, const Pt2<S>& b) { return {a.x - b.x, a.y - b.y}; }
template <class S>
Pt2<S> operator+(const Pt2<S>& a, const Pt2<S>& b) { return {a.x + b.x, a.y + b.y}; }
template <class S>
Pt2<S> operator*(const S& k, const Pt2<S>& a) { return {k * a.x, k * a.y}; }
template <class S>
S dot2(const Pt2<S>& a, const Pt2<S>& b) { return a.x * b.x + a.y * b.y; }
template <class S>
S cross2(const Pt2<S>& a, const Pt2<S>& b) { return a.x * b.y - a.y * b.x; }

inline Pt2<QuadExt> lift(const Pt2<Rat>& p) { return {QuadExt(p.x), QuadExt(p.y)}; }

class PPoint {
 public:
  PPoint() : c_{Rat(0), Rat(0), Rat(1)} {}
  explicit PPoint(const Vec3& v) : c_(canonical_scale(v)) {
    if (is_zero_vec(v)) throw DegenerateError("point with all coordinates zero");
  }
  PPoint(const Rat& x, const Rat& y, const Rat& z) : PPoint(Vec3{x, y, z}) {}
  static PPoint affine(const Rat& x, const Rat& y) { return PPoint(x, y, Rat(1)); }
  static PPoint affine(const Pt2<Rat>& p) { return affine(p.x, p.y); }
  /// Point at infinity in direction (dx, dy).
  static PPoint direction(const Rat& dx, const Rat& dy) { return PPoint(dx, dy, Rat(0)); }

  const Vec3& coords() const { return c_; }
  const Rat& x() const { return c_[0]; }
  const Rat& y() const { return c_[1]; }
  const Rat& z() const { return c_[2]; }
  bool is_infinite() const { return c_[2].is_zero(); }

  Pt2<Rat> to_affine() const {
    if (is_infinite()) throw DegenerateError("point " + str() + " is at infinity");
    return {c_[0] / c_[2], c_[1] / c_[2]};
  }
  /// (x, y) when finite, "x:y:0" style text otherwise.
  std::string str() const {
    return "(" + c_[0].num().get_str() + ":" + c_[1].num().get_str() + ":" +
           c_[2].num().get_str() + ")";
  }

  friend bool operator==(const PPoint& a, const PPoint& b) { return a.c_ == b.c_; }
  friend auto operator<=>(const PPoint& a, const PPoint& b) { return a.c_ <=> b.c_; }

 private:
  Vec3 c_;
};

class PLine {
 public:
  PLine() : c_{Rat(0), Rat(0), Rat(1)} {}
  explicit PLine(const Vec3& v) : c_(canonical_scale(v)) {
    if (is_zero_vec(v)) throw DegenerateError("line with all coefficients zero");
  }
  PLine(const Rat& u, const Rat& v, const Rat& w) : PLine(Vec3{u, v, w}) {}
  static PLine at_infinity() { return PLine(Rat(0), Rat(0), Rat(1)); }

  const Vec3& coeffs() const { return c_; }
  bool contains(const PPoint& p) const { return dot(c_, p.coords()).is_zero(); }
  bool is_at_infinity() const { return c_[0].is_zero() && c_[1].is_zero(); }
  /// The line's point at infinity.
  PPoint point_at_infinity() const {
    if (is_at_infinity()) throw DegenerateError("the line at infinity has no single infinite point");
    return PPoint::direction(-c_[1], c_[0]);
  }
  std::string str() const {
    return "[" + c_[0].num().get_str() + ":" + c_[1].num().get_str() + ":" +
           c_[2].num().get_str() + "]";
  }

  friend bool operator==(const PLine& a, const PLine& b) { return a.c_ == b.c_; }
  friend auto operator<=>(const PLine& a, const PLine& b) { return a.c_ <=> b.c_; }

 private:
  Vec3 c_;
};

inline PLine join(const PPoint& p, const PPoint& q) {
  if (p == q) throw DegenerateError("join of equal points " + p.str());
  return PLine(cross(p.coords(), q.coords()));
}

inline PPoint meet(const PLine& l, const PLine& m) {
  if (l == m) throw DegenerateError("meet of equal lines " + l.str());
  return PPoint(cross(l.coeffs(), m.coeffs()));
}

inline bool collinear(const PPoint& a, const PPoint& b, const PPoint& c) {
  return det3<Rat>({a.coords(), b.coords(), c.coords()}).is_zero();
}

inline bool concurrent(const PLine& a, const PLine& b, const PLine& c) {
  return det3<Rat>({a.coeffs(), b.coeffs(), c.coeffs()}).is_zero();
}

/// Line through p parallel to l (sharing l's point at infinity).
inline PLine parallel_through(const PPoint& p, const PLine& l) {
  return join(p, l.point_at_infinity());
}

inline bool parallel(const PLine& a, const PLine& b) {
  return a.point_at_infinity() == b.point_at_infinity();
}

/// Chart parameter: a finite value or the point at infinity of the line.
template <class S>
class BasicParam {
 public:
  BasicParam(const S& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BasicParam(const Rat& v) requires(!std::is_same_v<S, Rat>) : v_(S(v)) {}  // NOLINT
  template <std::integral I>
  BasicParam(I v) : v_(S(v)) {}  // NOLINT
  static BasicParam infinity() { return BasicParam(); }

  bool is_infinite() const { return !v_.has_value(); }
  const S& value() const {
    if (!v_) throw DomainError("parameter at infinity has no finite value");
    return *v_;
  }
  /// Homogeneous (t : 1), or (1 : 0) at infinity.
  std::pair<S, S> homogeneous() const { return v_ ? std::pair<S, S>{*v_, S(1)} : std::pair<S, S>{S(1), S(0)}; }
  static BasicParam from_homogeneous(const S& a, const S& b) {
    if (b.is_zero()) {
      if (a.is_zero()) throw DomainError("zero homogeneous parameter");
      return infinity();
    }
    return BasicParam(a / b);
  }
  std::string str() const { return v_ ? v_->str() : std::string("inf"); }

  friend bool operator==(const BasicParam& a, const BasicParam& b) { return a.v_ == b.v_; }

 private:
  BasicParam() = default;
  std::optional<S> v_;
};

using Param = BasicParam<Rat>;
using QParam = BasicParam<QuadExt>;

inline QParam lift(const Param& p) {
  return p.is_infinite() ? QParam::infinity() : QParam(QuadExt(p.value()));
}

/// Coefficients (s0, s1) with v = s0*f0 + s1*f1; throws if v is off the span.
template <class S>
std::pair<S, S> coords_in_basis(const VecN<S, 3>& f0, const VecN<S, 3>& f1, const VecN<S, 3>& v) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const S minor = f0[i] * f1[j] - f0[j] * f1[i];
      if (minor.is_zero()) continue;
      const S s0 = (v[i] * f1[j] - v[j] * f1[i]) / minor;
      const S s1 = (f0[i] * v[j] - f0[j] * v[i]) / minor;
      const int k = 3 - i - j;
      if (!(s0 * f0[k] + s1 * f1[k] - v[k]).is_zero())
        throw DegenerateError("point is not on the chart's line");
      return {s0, s1};
    }
  throw DegenerateError("degenerate chart basis");
}

template <class S>
VecN<S, 3> lift_vec(const Vec3& v) {
  return {S(v[0]), S(v[1]), S(v[2])};
}

/// Affine coordinate on a line: origin has parameter 0, unit has 1.
class AffineChart {
 public:
  AffineChart() = default;
  AffineChart(const PLine& line, const PPoint& origin, const PPoint& unit)
      : line_(line), origin_(origin), unit_(unit) {
    if (!line.contains(origin) || !line.contains(unit))
      throw DegenerateError("chart points " + origin.str() + ", " + unit.str() + " not on line " + line.str());
    if (origin == unit) throw DegenerateError("chart origin equals unit point " + origin.str());
    if (origin.is_infinite() || unit.is_infinite())
      throw DegenerateError("chart origin and unit must be finite");
    const Pt2<Rat> o = origin.to_affine();
    const Pt2<Rat> u = unit.to_affine();
    e0_ = {o.x, o.y, Rat(1)};
    e1_ = {u.x - o.x, u.y - o.y, Rat(0)};
  }
  /// Chart on join(origin, unit).
  static AffineChart through(const PPoint& origin, const PPoint& unit) {
    return AffineChart(join(origin, unit), origin, unit);
  }

  const PLine& line() const { return line_; }
  const PPoint& origin() const { return origin_; }
  const PPoint& unit() const { return unit_; }
  const Vec3& e0() const { return e0_; }
  const Vec3& e1() const { return e1_; }

  bool contains(const PPoint& p) const { return line_.contains(p); }

  template <class S = Rat>
  BasicParam<S> param_of(const VecN<S, 3>& p) const {
    const auto [s0, s1] = coords_in_basis(lift_vec<S>(e0_), lift_vec<S>(e1_), p);
    return BasicParam<S>::from_homogeneous(s1, s0);
  }
  Param param_of(const PPoint& p) const {
    if (!contains(p)) throw DegenerateError("point " + p.str() + " is not on line " + line_.str());
    return param_of<Rat>(p.coords());
  }
  template <class S>
  VecN<S, 3> vec_at(const BasicParam<S>& t) const {
    const auto [a, b] = t.homogeneous();  // a*e1 + b*e0
    return add(scale(b, lift_vec<S>(e0_)), scale(a, lift_vec<S>(e1_)));
  }
  PPoint point_at(const Param& t) const { return PPoint(vec_at(t)); }
  template <class S>
  Pt2<S> affine_at(const S& t) const {
    return {S(e0_[0]) + t * S(e1_[0]), S(e0_[1]) + t * S(e1_[1])};
  }

  friend bool operator==(const AffineChart& a, const AffineChart& b) {
    return a.line_ == b.line_ && a.origin_ == b.origin_ && a.unit_ == b.unit_;
  }

 private:
  PLine line_;
  PPoint origin_;
  PPoint unit_{Rat(1), Rat(0), Rat(1)};
  Vec3 e0_{Rat(0), Rat(0), Rat(1)};
  Vec3 e1_{Rat(1), Rat(0), Rat(0)};
};

using Mat2 = std::array<std::array<Rat, 2>, 2>;

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}
inline Rat det2(const Mat2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

/// Equality of 2x2 matrices up to a nonzero scalar.
inline bool proportional(const Mat2& a, const Mat2& b) {
  return proportional<Rat, 4>({a[0][0], a[0][1], a[1][0], a[1][1]},
                              {b[0][0], b[0][1], b[1][0], b[1][1]});
}

/// Representative scaled to primitive integers, first nonzero entry positive.
inline Mat2 canonical(const Mat2& m) {
  const auto v = canonical_scale<4>({m[0][0], m[0][1], m[1][0], m[1][1]});
  return {{{v[0], v[1]}, {v[2], v[3]}}};
}

/// Homography between two charted lines, t -> (m00 t + m01)/(m10 t + m11).
class LineMap {
 public:
  LineMap(const Mat2& m, const AffineChart& src, const AffineChart& dst)
      : m_(m), src_(src), dst_(dst) {
    if (det2(m).is_zero()) throw DegenerateError("singular line map");
  }
  static LineMap identity(const AffineChart& c) {
    return LineMap({{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}}, c, c);
  }

  const Mat2& matrix() const { return m_; }
  const AffineChart& src() const { return src_; }
  const AffineChart& dst() const { return dst_; }

  template <class S>
  BasicParam<S> apply(const BasicParam<S>& t) const {
    const auto [a, b] = t.homogeneous();
    return BasicParam<S>::from_homogeneous(S(m_[0][0]) * a + S(m_[0][1]) * b,
                                           S(m_[1][0]) * a + S(m_[1][1]) * b);
  }
  Param operator()(const Param& t) const { return apply(t); }
  PPoint operator()(const PPoint& p) const { return dst_.point_at(apply(src_.param_of(p))); }

  LineMap inverse() const {
    return LineMap({{{m_[1][1], -m_[0][1]}, {-m_[1][0], m_[0][0]}}}, dst_, src_);
  }
  bool is_identity() const {
    return src_ == dst_ && m_[0][1].is_zero() && m_[1][0].is_zero() && m_[0][0] == m_[1][1];
  }

  /// Projective equality of maps between the same charts.
  friend bool operator==(const LineMap& a, const LineMap& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && proportional(a.m_, b.m_);
  }

 private:
  Mat2 m_;
  AffineChart src_;
  AffineChart dst_;
};

/// outer o inner: apply inner first.
inline LineMap compose(const LineMap& outer, const LineMap& inner) {
  if (!(inner.dst() == outer.src())) throw DegenerateError("composing maps with mismatched charts");
  return LineMap(mat2_mul(outer.matrix(), inner.matrix()), inner.src(), outer.dst());
}

/// [a,b;c,d] = ((c-a)/(c-b)) / ((d-a)/(d-b)); infinity when d = a.
template <class S>
BasicParam<S> cross_ratio(const BasicParam<S>& a, const BasicParam<S>& b, const BasicParam<S>& c,
                          const BasicParam<S>& d) {
  if (a == b || b == c || a == c) throw DegenerateError("cross ratio needs a, b, c pairwise distinct");
  auto bracket = [](const BasicParam<S>& x, const BasicParam<S>& y) {
    const auto [x0, x1] = x.homogeneous();
    const auto [y0, y1] = y.homogeneous();
    return x0 * y1 - x1 * y0;
  };
  return BasicParam<S>::from_homogeneous(bracket(c, a) * bracket(d, b), bracket(c, b) * bracket(d, a));
}

inline Param cross_ratio(const PPoint& a, const PPoint& b, const PPoint& c, const PPoint& d) {
  if (a == b || b == c || a == c) throw DegenerateError("cross ratio needs a, b, c pairwise distinct");
  const PLine l = join(a, b);
  if (!l.contains(c) || !l.contains(d)) throw DegenerateError("cross ratio of non-collinear points");
  // any chart of l works; use two finite points of it
  const PPoint p = a.is_infinite() ? c : a;
  const PPoint q = [&] {
    for (const PPoint* cand : {&b, &c, &d})
      if (!cand->is_infinite() && !(*cand == p)) return *cand;
    throw DegenerateError("cross ratio: line has too few finite points");
  }();
  const AffineChart ch(l, p, q);
  return cross_ratio(ch.param_of(a), ch.param_of(b), ch.param_of(c), ch.param_of(d));
}

/// Central projection from `center` of src's line onto dst's line.
inline LineMap perspective_map(const PPoint& center, const AffineChart& src, const AffineChart& dst) {
  if (src.contains(center)) throw DegenerateError("center " + center.str() + " lies on source line");
  if (dst.contains(center)) throw DegenerateError("center " + center.str() + " lies on target line");
  // image of P is (K.l')P - (P.l')K, linear in P
  const Vec3& K = center.coords();
  const Vec3& l = dst.line().coeffs();
  const Rat kl = dot(K, l);
  auto image = [&](const Vec3& v) { return sub(scale(kl, v), scale(dot(v, l), K)); };
  const auto [a0, a1] = coords_in_basis(dst.e0(), dst.e1(), image(src.e1()));
  const auto [b0, b1] = coords_in_basis(dst.e0(), dst.e1(), image(src.e0()));
  return LineMap({{{a1, b1}, {a0, b0}}}, src, dst);
}

/// The unique homography sending (p1,p2,p3) on src to (q1,q2,q3) on dst.
inline LineMap homography_from_three(const AffineChart& src, const std::array<Param, 3>& p,
                                     const AffineChart& dst, const std::array<Param, 3>& q) {
  auto frame = [](const std::array<Param, 3>& t) {
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw DegenerateError("repeated point in homography data");
    const auto [x0, x1] = t[0].homogeneous();
    const auto [y0, y1] = t[1].homogeneous();
    const auto [z0, z1] = t[2].homogeneous();
    // l1 x + l2 y = z
    const Rat d = x0 * y1 - x1 * y0;
    const Rat l1 = (z0 * y1 - z1 * y0) / d;
    const Rat l2 = (x0 * z1 - x1 * z0) / d;
    return Mat2{{{l1 * x0, l2 * y0}, {l1 * x1, l2 * y1}}};
  };
  const Mat2 s = frame(p);
  const Mat2 t = frame(q);
  const Mat2 s_inv{{{s[1][1], -s[0][1]}, {-s[1][0], s[0][0]}}};
  return LineMap(canonical(mat2_mul(t, s_inv)), src, dst);
}

inline LineMap homography_from_three(const AffineChart& src, const std::array<PPoint, 3>& p,
                                     const AffineChart& dst, const std::array<PPoint, 3>& q) {
  return homography_from_three(src, {src.param_of(p[0]), src.param_of(p[1]), src.param_of(p[2])}, dst,
                               {dst.param_of(q[0]), dst.param_of(q[1]), dst.param_of(q[2])});
}

// ---- projective 3-space, just enough for central projection between planes

class P3Point {
 public:
  explicit P3Point(const Vec4& v) : c_(canonical_scale(v)) {
    if (is_zero_vec(v)) throw DegenerateError("3D point with all coordinates zero");
  }
  static P3Point affine(const Rat& x, const Rat& y, const Rat& z) { return P3Point(Vec4{x, y, z, Rat(1)}); }
  const Vec4& coords() const { return c_; }
  std::string str() const {
    return "(" + c_[0].num().get_str() + ":" + c_[1].num().get_str() + ":" + c_[2].num().get_str() +
           ":" + c_[3].num().get_str() + ")";
  }
  friend bool operator==(const P3Point& a, const P3Point& b) { return a.c_ == b.c_; }

 private:
  Vec4 c_;
};

class P3Plane {
 public:
  explicit P3Plane(const Vec4& v) : c_(canonical_scale(v)) {
    if (is_zero_vec(v)) throw DegenerateError("plane with all coefficients zero");
  }
  const Vec4& coeffs() const { return c_; }
  bool contains(const P3Point& p) const { return dot(c_, p.coords()).is_zero(); }
  friend bool operator==(const P3Plane& a, const P3Plane& b) { return a.c_ == b.c_; }

 private:
  Vec4 c_;
};

/// Homogeneous vector of the projection of p from apex onto target; linear in p.
inline Vec4 central_projection_vec(const P3Point& apex, const P3Plane& target, const Vec4& p) {
  const Vec4& a = apex.coords();
  const Vec4& c = target.coeffs();
  return sub(scale(dot(c, p), a), scale(dot(c, a), p));
}

inline P3Point central_projection_3d(const P3Point& apex, const P3Plane& target, const P3Point& p) {
  if (target.contains(apex)) throw DegenerateError("apex " + apex.str() + " lies on the target plane");
  if (p == apex) throw DegenerateError("cannot project the apex itself");
  return P3Point(central_projection_vec(apex, target, p.coords()));
}

/// Projective coordinates on a plane of P3: drop the coordinate at index k
/// (a nonzero coefficient of the plane, z preferred); the dropped one is
/// recovered from the plane equation.
class PlaneFrame {
 public:
  explicit PlaneFrame(const P3Plane& plane) : plane_(plane) {
    const Vec4& c = plane.coeffs();
    k_ = 2;
    if (c[2].is_zero()) {
      for (int i : {0, 1, 3})
        if (!c[i].is_zero()) {
          k_ = i;
          break;
        }
    }
  }
  const P3Plane& plane() const { return plane_; }

  Vec3 to_frame(const Vec4& v) const {
    if (!dot(plane_.coeffs(), v).is_zero()) throw DegenerateError("point is not on the frame's plane");
    Vec3 r;
    int j = 0;
    for (int i = 0; i < 4; ++i)
      if (i != k_) r[j++] = v[i];
    return r;
  }
  PPoint to_frame(const P3Point& p) const { return PPoint(to_frame(p.coords())); }

  Vec4 from_frame(const Vec3& s) const {
    const Vec4& c = plane_.coeffs();
    Vec4 r;
    Rat acc;
    int j = 0;
    for (int i = 0; i < 4; ++i)
      if (i != k_) {
        r[i] = s[j++];
        acc += c[i] * r[i];
      }
    r[k_] = -acc / c[k_];
    return r;
  }
  P3Point from_frame(const PPoint& p) const { return P3Point(from_frame(p.coords())); }

 private:
  P3Plane plane_;
  int k_ = 2;
};

}  // namespace arguesia
