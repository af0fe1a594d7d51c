#pragma once

// Involution cut on a transversal by the three couples of opposite bornales
// of a complete quadrangle.

#include <string>

#include "arguesia/report.hpp"

namespace arguesia {

struct QuadrangleResult {
  Involution involution;
  TheoremReport report;
};

inline void echo_quadrangle(TheoremReport& rep, const QuadrangleConfig& q) {
  for (const char* n : {"B", "C", "D", "E"})
    for (const auto& [name, p] : q.named_points())
      if (name == n) rep.input(name, p);
  rep.input("transversal", q.transversal.line().str());
}

/// Involution from (I,K) and (P,Q); claims that it swaps G and H, the three
/// rectangle identities, and attaches the pivot-F Menelaus replay.
inline QuadrangleResult quadrangle_involution(const QuadrangleConfig& q) {
  TheoremReport rep;
  rep.name = "quadrangle";
  echo_quadrangle(rep, q);
  const NodeCouples nc = q.couples();
  const Involution inv = involution_from_pairs(nc.pairs[0], nc.pairs[1], nc.chart);
  rep.claim("partner(G) = H", inv.partner(q.G), q.H);
  rep.claim_true("(I,K), (P,Q), (G,H) in involution", equivalence_check(nc));
  const RectangleReport rr = rectangle_identity_check(nc);
  const char* labels[] = {"QH.QG/(PH.PG) = QI.QK/(PI.PK)", "HP.HQ/(GP.GQ) = HI.HK/(GI.GK)",
                          "KP.KQ/(IP.IQ) = KG.KH/(IG.IH)"};
  for (int i = 0; i < 3; ++i) rep.claim(labels[i], rr.identities[i].lhs, rr.identities[i].rhs);
  try {
    rep.trace = replay_quadrangle_proof(q);
  } catch (const DegenerateError& e) {
    rep.note(std::string("no Menelaus replay: ") + e.what());
  }
  return {inv, rep};
}

/// Composition of three perspectives, with p = B, q = C, r = E, s = D and
/// L the transversal: from r onto qs, from a = G back onto pr, from q onto L.
inline LineMap compose_three_perspectives(const QuadrangleConfig& q) {
  const AffineChart& L = q.transversal;
  const AffineChart qs = AffineChart::through(q.C, q.D);
  const AffineChart pr = AffineChart::through(q.B, q.E);
  const LineMap first = perspective_map(q.E, L, qs);
  const LineMap second = perspective_map(q.G, qs, pr);
  const LineMap third = perspective_map(q.C, pr, L);
  return compose(third, compose(second, first));
}

inline Involution desargues_involution_by_perspectives(const QuadrangleConfig& q) {
  return Involution(compose_three_perspectives(q));
}

/// Full quadrangle verification: the involution, its replay, and agreement
/// with the three-perspective construction.
inline TheoremReport verify_quadrangle(const QuadrangleConfig& q) {
  QuadrangleResult res = quadrangle_involution(q);
  TheoremReport& rep = res.report;
  const LineMap m = compose_three_perspectives(q);
  const Mat2& mm = m.matrix();
  rep.claim("three perspectives: trace zero (involutive)", mm[0][0] + mm[1][1], Rat(0));
  // a = G, a' = H, b = K, b' = I, c = P, c' = Q
  rep.claim("three perspectives: a -> a'", m(q.G), q.H);
  rep.claim("three perspectives: b -> b'", m(q.K), q.I);
  rep.claim("three perspectives: c -> c'", m(q.P), q.Q);
  rep.claim("three perspectives: c' -> c", m(q.Q), q.P);
  rep.claim_true("three perspectives: same matrix as the quadrangle involution",
                 proportional(m.matrix(), res.involution.matrix()));
  return rep;
}

/// BC parallel to ED (N at infinity): the three Thales readings.
inline TheoremReport parallel_bornales_identities(const QuadrangleConfig& q) {
  if (!q.N.is_infinite()) throw DegenerateError("bornales BC and ED are not parallel");
  TheoremReport rep;
  rep.name = "parallel-bornales";
  echo_quadrangle(rep, q);
  for (const char* n : {"B", "C", "D", "E", "F", "I", "K", "P", "Q"})
    for (const auto& [name, p] : q.named_points())
      if (name == n && p.is_infinite()) throw DegenerateError("point " + name + " is at infinity");
  const auto B = q.B.to_affine(), C = q.C.to_affine(), D = q.D.to_affine(), E = q.E.to_affine();
  const auto F = q.F.to_affine(), I = q.I.to_affine(), K = q.K.to_affine(), P = q.P.to_affine(),
             Q = q.Q.to_affine();
  // XY/ZW as the signed ratio of parallel vectors X->Y and Z->W
  auto vr = [](const Pt2<Rat>& x, const Pt2<Rat>& y, const Pt2<Rat>& z, const Pt2<Rat>& w) {
    return vector_ratio(x, y, z, w);
  };
  rep.claim("IC/KD = IQ/KQ", vr(I, C, K, D), vr(I, Q, K, Q));
  rep.claim("IB/KE = IP/KP", vr(I, B, K, E), vr(I, P, K, P));
  rep.claim("IC.IB/(KD.KE) = IQ.IP/(KQ.KP)", vr(I, C, K, D) * vr(I, B, K, E), vr(I, Q, K, Q) * vr(I, P, K, P));
  rep.claim("CI.CB/(DK.DE) = CQ.CF/(DQ.DF)", vr(C, I, D, K) * vr(C, B, D, E), vr(C, Q, D, Q) * vr(C, F, D, F));
  rep.claim("BI.BC/(EK.ED) = BF.BP/(EF.EP)", vr(B, I, E, K) * vr(B, C, E, D), vr(B, F, E, F) * vr(B, P, E, P));
  return rep;
}

}  // namespace arguesia
