#pragma once

// Involutions of a charted line: three couples of nodes, the
// rectangle-product identities, and the involutive homography behind them.

#include <array>
#include <string>
#include <vector>

#include "arguesia/projective.hpp"

namespace arguesia {

using Couple = std::pair<Param, Param>;

/// Three couples (B,H), (C,G), (D,F) on one charted line, as parameters.
struct NodeCouples {
  AffineChart chart;
  std::array<Couple, 3> pairs;

  static NodeCouples from_points(const AffineChart& chart, const std::array<std::pair<PPoint, PPoint>, 3>& pts) {
    auto couple = [&](int i) { return Couple{chart.param_of(pts[i].first), chart.param_of(pts[i].second)}; };
    return from_params(chart, {couple(0), couple(1), couple(2)});
  }
  static NodeCouples from_params(const AffineChart& chart, const std::array<Couple, 3>& pairs) {
    NodeCouples nc{chart, pairs};
    nc.validate();
    return nc;
  }

  void validate() const {
    auto same_pair = [](const Couple& a, const Couple& b) {
      return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
    };
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (same_pair(pairs[i], pairs[j])) throw DegenerateError("two couples are the same pair");
        for (const Param* x : {&pairs[i].first, &pairs[i].second})
          for (const Param* y : {&pairs[j].first, &pairs[j].second})
            if (*x == *y) throw DegenerateError("couples " + std::to_string(i + 1) + " and " +
                                                std::to_string(j + 1) + " share the point " + x->str());
      }
  }
};

struct IdentitySide {
  Rat lhs;
  Rat rhs;
  bool holds() const { return lhs == rhs; }
};

struct RectangleReport {
  std::array<IdentitySide, 3> identities;
  bool verdict = false;
};

/// The three rectangle-product identities with signed chart lengths:
///   GF.GD/(CF.CD) = GB.GH/(CB.CH)
///   FC.FG/(DC.DG) = FB.FH/(DB.DH)
///   HC.HG/(BC.BG) = HD.HF/(BD.BF)
inline RectangleReport rectangle_identity_check(const NodeCouples& nc) {
  for (const auto& [p, q] : nc.pairs)
    if (p.is_infinite() || q.is_infinite())
      throw DegenerateError("rectangle identities need six finite points");
  const Rat& B = nc.pairs[0].first.value();
  const Rat& H = nc.pairs[0].second.value();
  const Rat& C = nc.pairs[1].first.value();
  const Rat& G = nc.pairs[1].second.value();
  const Rat& D = nc.pairs[2].first.value();
  const Rat& F = nc.pairs[2].second.value();
  // XY = Y - X (signed length from X to Y)
  auto seg = [](const Rat& x, const Rat& y) { return y - x; };
  auto side = [&](const Rat& n1, const Rat& n2, const Rat& d1, const Rat& d2) {
    const Rat den = d1 * d2;
    if (den.is_zero()) throw DegenerateError("zero segment in a rectangle identity denominator");
    return n1 * n2 / den;
  };
  RectangleReport r;
  r.identities[0] = {side(seg(G, F), seg(G, D), seg(C, F), seg(C, D)),
                     side(seg(G, B), seg(G, H), seg(C, B), seg(C, H))};
  r.identities[1] = {side(seg(F, C), seg(F, G), seg(D, C), seg(D, G)),
                     side(seg(F, B), seg(F, H), seg(D, B), seg(D, H))};
  r.identities[2] = {side(seg(H, C), seg(H, G), seg(B, C), seg(B, G)),
                     side(seg(H, D), seg(H, F), seg(B, D), seg(B, F))};
  r.verdict = r.identities[0].holds() && r.identities[1].holds() && r.identities[2].holds();
  return r;
}

/// Linear condition on (a, b, c) for [[a,b],[c,-a]] to swap a pair; the pair
/// is given by the symmetric form (x1y1, x1y2 + x2y1, x2y2) of its
/// homogeneous parameters.
struct PairForm {
  Rat e11;
  Rat e12;
  Rat e22;

  static PairForm of(const Param& x, const Param& y) {
    const auto [x1, x2] = x.homogeneous();
    const auto [y1, y2] = y.homogeneous();
    return {x1 * y1, x1 * y2 + x2 * y1, x2 * y2};
  }
  /// The two roots of A t^2 + 2B t + C (possibly irrational, possibly with
  /// infinity when A = 0).
  static PairForm roots_of(const Rat& A, const Rat& B, const Rat& C) {
    if (A.is_zero() && B.is_zero()) throw DegenerateError("quadratic with a double root at infinity only");
    return {C, -Rat(2) * B, A};
  }
  std::array<Rat, 3> swap_row() const { return {-e12, -e22, e11}; }
};

class Involution {
 public:
  /// m must have trace zero and nonzero determinant.
  Involution(const Mat2& m, const AffineChart& chart) : map_(canonical(m), chart, chart) {
    if (!(m[0][0] + m[1][1]).is_zero()) throw DegenerateError("matrix is not involutive (nonzero trace)");
  }
  explicit Involution(const LineMap& m) : Involution(m.matrix(), m.src()) {
    if (!(m.src() == m.dst())) throw DegenerateError("involution needs one line");
  }

  const LineMap& map() const { return map_; }
  const Mat2& matrix() const { return map_.matrix(); }
  const AffineChart& chart() const { return map_.src(); }

  template <class S>
  BasicParam<S> partner(const BasicParam<S>& t) const { return map_.apply(t); }
  Param partner(const Param& t) const { return map_.apply(t); }
  PPoint partner(const PPoint& p) const { return map_(p); }

  bool swaps(const Param& x, const Param& y) const { return partner(x) == y; }
  bool swaps(const PairForm& f) const {
    const auto row = f.swap_row();
    const Mat2& m = matrix();
    return (row[0] * m[0][0] + row[1] * m[0][1] + row[2] * m[1][0]).is_zero();
  }

  friend bool operator==(const Involution& a, const Involution& b) { return a.map_ == b.map_; }

 private:
  LineMap map_;
};

/// Unique involution swapping each of two pairs given as forms.
inline Involution involution_from_forms(const PairForm& f1, const PairForm& f2, const AffineChart& chart) {
  const auto r1 = f1.swap_row();
  const auto r2 = f2.swap_row();
  const auto ns = null_space({{r1[0], r1[1], r1[2]}, {r2[0], r2[1], r2[2]}}, 3);
  if (ns.size() != 1) throw DegenerateError("pairs do not determine a unique involution");
  const Mat2 m{{{ns[0][0], ns[0][1]}, {ns[0][2], -ns[0][0]}}};
  if (det2(m).is_zero()) throw DegenerateError("pairs admit no involution");
  return Involution(m, chart);
}

inline Involution involution_from_pairs(const Couple& p1, const Couple& p2, const AffineChart& chart) {
  const bool same = (p1.first == p2.first && p1.second == p2.second) ||
                    (p1.first == p2.second && p1.second == p2.first);
  if (same) throw DegenerateError("coincident pairs");
  return involution_from_forms(PairForm::of(p1.first, p1.second), PairForm::of(p2.first, p2.second), chart);
}

enum class InvolutionKind { hyperbolic, elliptic };

inline std::string to_string(InvolutionKind k) {
  return k == InvolutionKind::hyperbolic ? "hyperbolic" : "elliptic";
}

struct Classification {
  InvolutionKind kind;
  Rat discriminant;              // a^2 + bc for [[a,b],[c,-a]]
  std::vector<QParam> fixed_points;  // two when hyperbolic
};

inline Classification classify(const Involution& inv) {
  const Mat2& m = inv.matrix();
  const Rat& a = m[0][0];
  const Rat& b = m[0][1];
  const Rat& c = m[1][0];
  const Rat disc = a * a + b * c;
  if (disc.is_zero()) throw DegenerateError("parabolic map: zero discriminant");
  if (disc.sign() < 0) return {InvolutionKind::elliptic, disc, {}};
  // fixed points solve c t^2 - 2a t - b = 0
  if (c.is_zero()) return {InvolutionKind::hyperbolic, disc, {QParam::infinity(), QParam(QuadExt(-b / (Rat(2) * a)))}};
  const QuadExt r = quad_sqrt(disc);
  return {InvolutionKind::hyperbolic, disc, {(QuadExt(a) - r) / QuadExt(c), (QuadExt(a) + r) / QuadExt(c)}};
}

enum class Arrangement { meles, demeles, mixed };

inline std::string to_string(Arrangement a) {
  switch (a) {
    case Arrangement::meles: return "meles";
    case Arrangement::demeles: return "demeles";
    default: return "mixed";
  }
}

namespace detail {

/// Order key with infinity beyond every finite value.
inline bool param_less(const Param& x, const Param& y) {
  if (x.is_infinite()) return false;
  if (y.is_infinite()) return true;
  return x.value() < y.value();
}

inline bool strictly_inside(const Param& x, const Couple& c) {
  Param lo = c.first;
  Param hi = c.second;
  if (param_less(hi, lo)) std::swap(lo, hi);
  return param_less(lo, x) && param_less(x, hi);
}

}  // namespace detail

/// Couples p and q interleave when exactly one endpoint of each lies strictly
/// inside the other. A doubled node never interleaves.
inline bool interleaved(const Couple& p, const Couple& q) {
  const int a = detail::strictly_inside(q.first, p) + detail::strictly_inside(q.second, p);
  const int b = detail::strictly_inside(p.first, q) + detail::strictly_inside(p.second, q);
  return a == 1 && b == 1;
}

inline Arrangement arrangement(const NodeCouples& nc) {
  int infinite = 0;
  for (const auto& [x, y] : nc.pairs) infinite += x.is_infinite() + y.is_infinite();
  if (infinite > 1) throw DegenerateError("arrangement allows at most one point at infinity");
  nc.validate();
  const int n = interleaved(nc.pairs[0], nc.pairs[1]) + interleaved(nc.pairs[0], nc.pairs[2]) +
                interleaved(nc.pairs[1], nc.pairs[2]);
  return n == 3 ? Arrangement::meles : (n == 0 ? Arrangement::demeles : Arrangement::mixed);
}

/// Homography test: the involution fixed by couples 1 and 2 sends D to F.
/// Cross-checked against the rectangle identities when those are defined.
inline bool equivalence_check(const NodeCouples& nc) {
  const Involution inv = involution_from_pairs(nc.pairs[0], nc.pairs[1], nc.chart);
  const bool by_map = inv.swaps(nc.pairs[2].first, nc.pairs[2].second);
  bool finite = true;
  for (const auto& [x, y] : nc.pairs) finite = finite && !x.is_infinite() && !y.is_infinite();
  if (finite) {
    try {
      const bool by_rect = rectangle_identity_check(nc).verdict;
      if (by_rect != by_map) throw Error("rectangle identities disagree with the homography test");
    } catch (const DegenerateError&) {
      // a rectangle denominator vanishes; only the homography test applies
    }
  }
  return by_map;
}

/// Conjugate of inv by a line map: m o inv o m^-1 on m's target line.
inline Involution conjugate(const Involution& inv, const LineMap& m) {
  return Involution(compose(compose(m, inv.map()), m.inverse()));
}

}  // namespace arguesia
