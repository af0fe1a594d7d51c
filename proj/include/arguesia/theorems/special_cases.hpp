#pragma once

// Four-point involutions (harmonic divisions) and the metric special cases
// of the ramee: midpoint, perpendicular rameaux, and a ruler construction.

#include <string>

#include "arguesia/report.hpp"

namespace arguesia {

namespace detail {

inline void require_harmonic_input(const PPoint& B, const PPoint& C, const PPoint& D) {
  if (B == C || B == D || C == D) throw DegenerateError("harmonic conjugate needs three distinct points");
  if (!collinear(B, C, D)) throw DegenerateError("harmonic conjugate needs collinear points");
}

inline Pt2<Rat> reflect(const Pt2<Rat>& axis, const Pt2<Rat>& v) {
  const Rat k = Rat(2) * dot2(axis, v) / dot2(axis, axis);
  return Pt2<Rat>{k * axis.x - v.x, k * axis.y - v.y};
}

inline void echo(TheoremReport& rep, std::initializer_list<std::pair<const char*, PPoint>> pts) {
  for (const auto& [n, p] : pts) rep.input(n, p);
}

}  // namespace detail

/// F with cross_ratio(B, C, D, F) = -1: writing D = l B + m C in homogeneous
/// coordinates, F = l B - m C.
inline PPoint harmonic_closed_form(const PPoint& B, const PPoint& C, const PPoint& D) {
  detail::require_harmonic_input(B, C, D);
  const auto [l, m] = coords_in_basis(B.coords(), C.coords(), D.coords());
  return PPoint(sub(scale(l, B.coords()), scale(m, C.coords())));
}

struct HarmonicConstruction {
  PPoint b, c, K, F;
};

/// Ruler construction: a secant through D with D the midpoint of bc, K where
/// bB meets cC, and F where the parallel to bc through K meets BC.
inline HarmonicConstruction harmonic_construction(const PPoint& B, const PPoint& C, const PPoint& D) {
  detail::require_harmonic_input(B, C, D);
  if (D.is_infinite()) throw DegenerateError("construction needs D at finite distance");
  const PLine bc_line = join(B, C);
  const Pt2<Rat> n{bc_line.coeffs()[0], bc_line.coeffs()[1]};  // normal to BC
  const Pt2<Rat> d = D.to_affine();
  HarmonicConstruction h;
  h.b = PPoint::affine(d + n);
  h.c = PPoint::affine(d - n);
  h.K = meet(join(h.b, B), join(h.c, C));
  h.F = meet(bc_line, join(h.K, PPoint::direction(n.x, n.y)));
  return h;
}

/// Both constructions; they must agree.
inline PPoint harmonic_conjugate(const PPoint& B, const PPoint& C, const PPoint& D) {
  const PPoint closed = harmonic_closed_form(B, C, D);
  if (!D.is_infinite()) {
    const PPoint built = harmonic_construction(B, C, D).F;
    if (!(built == closed)) throw Error("harmonic constructions disagree: " + closed.str() + " vs " + built.str());
  }
  return closed;
}

/// B = H, C = G doubled nodes, (D, F) the extreme couple on the tronc; the
/// image line passes through C parallel to DK, so d is at infinity and f is
/// the midpoint of cb.
inline TheoremReport verify_midpoint_case(const PPoint& B, const PPoint& C, const PPoint& D, const PPoint& F,
                                          const PPoint& K) {
  TheoremReport rep;
  rep.name = "midpoint";
  detail::echo(rep, {{"B", B}, {"C", C}, {"D", D}, {"F", F}, {"K", K}});
  const PLine tronc = join(B, C);
  if (tronc.contains(K)) throw DegenerateError("K lies on the tronc");
  for (const PPoint* p : {&B, &C, &D, &F})
    if (p->is_infinite()) throw DegenerateError("midpoint case needs finite nodes");

  const PLine image = parallel_through(C, join(D, K));
  const PPoint b = meet(join(K, B), image);
  const PPoint d = meet(join(K, D), image);
  const PPoint f = meet(join(K, F), image);
  const Pt2<Rat> cb = C.to_affine(), bb = b.to_affine(), fb = f.to_affine();
  rep.claim_true("d at infinity (image line parallel to DK)", d.is_infinite());
  rep.claim("f is the midpoint of cb", f, PPoint::affine(Rat(1, 2) * (cb + bb)), true);
  rep.claim("cb = 2 cf", signed_ratio(cb, bb, fb), Rat(2), true);
  const Pt2<Rat> Bp = B.to_affine(), Cp = C.to_affine(), Dp = D.to_affine(), Fp = F.to_affine();
  rep.claim("raison double (BC/BD)(FD/FC) = 2", signed_ratio(Bp, Cp, Dp) * signed_ratio(Fp, Dp, Cp), Rat(2), true);

  // converse: choose the line through C on which f is the midpoint of cb
  const Pt2<Rat> k = K.to_affine();
  const Pt2<Rat> u = Bp - k, u2 = Fp - k;
  const Rat a = cross2(k - Cp, u), a2 = cross2(k - Cp, u2);
  const Pt2<Rat> w = (Rat(2) * a2) * u - a * u2;
  if (w.x.is_zero() && w.y.is_zero()) throw DegenerateError("converse: no line through C with f the midpoint");
  const PLine conv = join(C, PPoint::direction(w.x, w.y));
  const PPoint b2 = meet(join(K, B), conv);
  const PPoint f2 = meet(join(K, F), conv);
  rep.claim("converse: chosen line makes f the midpoint of cb", f2,
            b2.is_infinite() ? b2 : PPoint::affine(Rat(1, 2) * (Cp + b2.to_affine())), true);
  rep.claim("converse: cb parallel to DK", cross2(w, Dp - k), Rat(0), true);
  rep.claim_true("converse: d at infinity", meet(join(K, D), conv).is_infinite());
  return rep;
}

/// B = H, C = G doubled, (D, F) harmonic with them, K with KB perpendicular
/// to KC: KC and KB bisect the angles between KD and KF.
inline TheoremReport verify_bisector_case(const PPoint& B, const PPoint& C, const PPoint& D, const PPoint& F,
                                          const PPoint& K) {
  TheoremReport rep;
  rep.name = "bisector";
  detail::echo(rep, {{"B", B}, {"C", C}, {"D", D}, {"F", F}, {"K", K}});
  const PLine tronc = join(B, C);
  if (tronc.contains(K)) throw DegenerateError("K lies on the tronc");
  for (const PPoint* p : {&B, &C, &D, &F, &K})
    if (p->is_infinite()) throw DegenerateError("bisector case works in the affine chart");
  const Pt2<Rat> k = K.to_affine();
  const Pt2<Rat> kb = B.to_affine() - k, kc = C.to_affine() - k, kd = D.to_affine() - k, kf = F.to_affine() - k;
  rep.claim("KB perpendicular to KC", dot2(kb, kc), Rat(0), true);
  rep.claim("reflection in KC maps KD onto KF", cross2(detail::reflect(kc, kd), kf), Rat(0), true);
  rep.claim("reflection in KB maps KD onto KF", cross2(detail::reflect(kb, kd), kf), Rat(0), true);

  // converse: make KC bisect DKF, rebuild B as the harmonic conjugate of C
  // with respect to D and the new F, and test the right angle
  const Pt2<Rat> r = detail::reflect(kc, kd);
  const PPoint F2 = meet(tronc, join(K, PPoint::direction(r.x, r.y)));
  const PPoint B2 = harmonic_closed_form(D, F2, C);
  if (B2.is_infinite()) throw DegenerateError("converse: rebuilt B is at infinity");
  rep.claim("converse: KC bisects DKF implies KB perpendicular to KC", dot2(B2.to_affine() - k, kc), Rat(0), true);
  return rep;
}

/// h on line BK, f = G + s (h - G) (the midpoint for s = 1/2), F = Kf meet BG,
/// D = (parallel to Gh through K) meet BG; then B, D, G, F are harmonic.
inline TheoremReport construct_involution_p13(const PPoint& B, const PPoint& K, const PPoint& G, const PPoint& h,
                                              const Rat& s = Rat(1, 2)) {
  TheoremReport rep;
  rep.name = "p13";
  detail::echo(rep, {{"B", B}, {"K", K}, {"G", G}, {"h", h}});
  rep.input("s", s.str());
  for (const PPoint* p : {&B, &K, &G, &h})
    if (p->is_infinite()) throw DegenerateError("construction works in the affine chart");
  if (B == K) throw DegenerateError("B equals K");
  const PLine bk = join(B, K);
  if (bk.contains(G)) throw DegenerateError("G lies on line BK");
  if (!bk.contains(h)) throw DegenerateError("h is not on line BK");
  if (h == K) throw DegenerateError("h equals K");
  const Pt2<Rat> g = G.to_affine();
  const PPoint f = PPoint::affine(g + s * (h.to_affine() - g));
  const PLine bg = join(B, G);
  const PPoint F = meet(join(K, f), bg);
  const PPoint D = meet(parallel_through(K, join(G, h)), bg);
  rep.input("F", F);
  rep.input("D", D);
  if (D == B || D == G) throw DegenerateError("D coincides with B or G");
  rep.claim("cross ratio (B,G;D,F) = -1", cross_ratio(B, G, D, F), Param(-1));
  return rep;
}

}  // namespace arguesia
