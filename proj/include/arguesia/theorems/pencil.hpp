#pragma once

// Conics through the four bornes cut the transversal in couples of the same
// involution; tangent members touch it at the fixed points.

#include <string>
#include <vector>

#include "arguesia/conics.hpp"
#include "arguesia/theorems/quadrangle.hpp"

namespace arguesia {

inline TheoremReport pencil_involution_check(const QuadrangleConfig& q, const Conic& member) {
  TheoremReport rep;
  rep.name = "pencil";
  echo_quadrangle(rep, q);
  const auto up = member.upper();
  std::string m;
  for (const auto& x : up) m += (m.empty() ? "" : " ") + x.str();
  rep.input("member", m);
  for (const auto& [name, p] : {std::pair<std::string, PPoint>{"B", q.B}, {"C", q.C}, {"D", q.D}, {"E", q.E}})
    rep.claim("member passes through " + name, member.value(p), Rat(0));

  const NodeCouples nc = q.couples();
  const Involution inv = involution_from_pairs(nc.pairs[0], nc.pairs[1], nc.chart);
  const ChordQuadratic cq = restrict_to(member, q.transversal);
  const Rat disc = cq.discriminant();
  rep.input("chord discriminant", disc.str());
  const auto roots = cq.roots();
  if (disc.sign() > 0) {
    rep.claim("partner(L) = M", inv.partner(roots[0]), roots[1]);
    rep.claim("partner(M) = L", inv.partner(roots[1]), roots[0]);
  } else if (disc.is_zero()) {
    rep.note("member is tangent to the transversal");
    rep.claim("tangency point is a fixed point", inv.partner(roots[0]), roots[0]);
  } else {
    rep.note("empty intersection: the transversal misses this member");
    rep.claim_true("conjugate chord pair swapped", inv.swaps(cq.pair_form()));
  }
  return rep;
}

/// Tangent members of the pencil: (lambda : mu) with a double chord root.
/// The binary form a l^2 + 2b l m + c m^2 vanishes there.
struct TangencyForm {
  Rat a, b, c;
  Rat discriminant() const { return b * b - a * c; }
};

inline TangencyForm tangency_form(const Pencil& pencil, const AffineChart& line) {
  const ChordQuadratic q1 = restrict_to(pencil.gen1(), line);
  const ChordQuadratic q2 = restrict_to(pencil.gen2(), line);
  return {q1.B * q1.B - q1.A * q1.C, q1.B * q2.B - (q1.A * q2.C + q2.A * q1.C) / Rat(2), q2.B * q2.B - q2.A * q2.C};
}

/// The two real tangent members exist iff the involution is hyperbolic, and
/// their points of contact are its fixed points.
inline TheoremReport tangency_dichotomy(const QuadrangleConfig& q) {
  TheoremReport rep;
  rep.name = "tangency-dichotomy";
  echo_quadrangle(rep, q);
  const Pencil pencil(q.B, q.C, q.D, q.E);
  const NodeCouples nc = q.couples();
  const Involution inv = involution_from_pairs(nc.pairs[0], nc.pairs[1], nc.chart);
  const Classification cls = classify(inv);
  const TangencyForm tf = tangency_form(pencil, q.transversal);
  const Rat disc = tf.discriminant();
  rep.input("tangency discriminant", disc.str());
  rep.claims.push_back({"two real tangent members iff hyperbolic", disc.sign() > 0 ? "two tangent members" : "none",
                        to_string(cls.kind),
                        (disc.sign() > 0) == (cls.kind == InvolutionKind::hyperbolic), false});
  if (disc.sign() <= 0) return rep;
  const ChordQuadratic q1 = restrict_to(pencil.gen1(), q.transversal);
  const ChordQuadratic q2 = restrict_to(pencil.gen2(), q.transversal);
  // (l : m) roots, then the double root -(l B1 + m B2)/(l A1 + m A2)
  std::vector<std::pair<QuadExt, QuadExt>> lm;
  const QuadExt r = quad_sqrt(disc);
  if (!tf.a.is_zero()) {
    lm = {{(QuadExt(-tf.b) - r) / QuadExt(tf.a), QuadExt(1)}, {(QuadExt(-tf.b) + r) / QuadExt(tf.a), QuadExt(1)}};
  } else {
    lm = {{QuadExt(1), QuadExt(0)}, {QuadExt(-tf.c), QuadExt(Rat(2) * tf.b)}};
  }
  int i = 0;
  for (const auto& [l, m] : lm) {
    const QuadExt A = l * QuadExt(q1.A) + m * QuadExt(q2.A);
    const QuadExt B = l * QuadExt(q1.B) + m * QuadExt(q2.B);
    const QParam contact = QParam::from_homogeneous(-B, A);
    rep.claim("contact point " + std::to_string(++i) + " is a fixed point", inv.partner(contact), contact);
  }
  return rep;
}

/// sigma: x on L -> second point X of the conic on line D x -> EX meet L.
/// Returns nullopt where the construction degenerates.
inline std::optional<PPoint> sigma_point(const Conic& conic, const QuadrangleConfig& q, const PPoint& x) {
  if (x == q.D) return std::nullopt;
  const PPoint X(second_point(conic, q.D.coords(), x.coords()));
  if (X == q.E) return std::nullopt;
  const PLine ex = join(q.E, X);
  if (ex == q.transversal.line()) return std::nullopt;
  return meet(ex, q.transversal.line());
}

/// With a = G, a' = H, c = P, c' = Q: sigma(a) = c, sigma(c') = a', sigma
/// fixes the chord points l, l'; eta swaps (a', c) and (l, l'); eta o sigma is
/// the quadrangle involution.
inline TheoremReport sigma_checkpoints(const QuadrangleConfig& q, const Conic& conic) {
  TheoremReport rep;
  rep.name = "sigma-checkpoints";
  echo_quadrangle(rep, q);
  if (conic.is_degenerate()) throw DegenerateError("sigma needs a nondegenerate conic");
  for (const PPoint* p : {&q.B, &q.C, &q.D, &q.E})
    if (!conic.contains(*p)) throw DegenerateError("conic misses the borne " + p->str());
  const AffineChart& L = q.transversal;
  std::vector<Param> src, dst;
  for (int t = 0; src.size() < 3 && t < 64; ++t) {
    const PPoint x = L.point_at(Param(t));
    if (x == q.G || x == q.Q || x == q.K) continue;
    const auto y = sigma_point(conic, q, x);
    if (!y) continue;
    src.push_back(Param(t));
    dst.push_back(L.param_of(*y));
  }
  if (src.size() < 3) throw DegenerateError("sigma: not enough sample points");
  const LineMap sigma = homography_from_three(L, {src[0], src[1], src[2]}, L, {dst[0], dst[1], dst[2]});

  auto pointwise = [&](const PPoint& x) {
    const auto y = sigma_point(conic, q, x);
    if (!y) throw DegenerateError("sigma undefined at " + x.str());
    return *y;
  };
  rep.claim("sigma(a) = c (construction)", pointwise(q.G), q.P);
  rep.claim("sigma(c') = a' (construction)", pointwise(q.Q), q.H);
  rep.claim("sigma(a) = c (homography)", sigma(q.G), q.P);
  rep.claim("sigma(c') = a' (homography)", sigma(q.Q), q.H);

  const ChordQuadratic cq = restrict_to(conic, L);
  const auto roots = cq.roots();
  if (roots.size() == 2) {
    rep.claim("sigma(l) = l", sigma.apply(roots[0]), roots[0]);
    rep.claim("sigma(l') = l'", sigma.apply(roots[1]), roots[1]);
  } else {
    rep.note("chord l, l' is not a pair of distinct real points; fixed-point checkpoints skipped");
  }
  const Involution eta = involution_from_forms(PairForm::of(L.param_of(q.H), L.param_of(q.P)), cq.pair_form(), L);
  const LineMap phi = compose(eta.map(), sigma);
  const NodeCouples nc = q.couples();
  const Involution quad = involution_from_pairs(nc.pairs[0], nc.pairs[1], nc.chart);
  rep.claim_true("eta o sigma equals the quadrangle involution", proportional(phi.matrix(), quad.matrix()));
  return rep;
}

}  // namespace arguesia
