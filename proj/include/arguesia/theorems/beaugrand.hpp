#pragma once

// Beaugrand's proof of the involution theorem for four points K, N, O, V of
// a conic: two instances of Apollonius III.17 and two of Menelaus.

#include <string>

#include "arguesia/conics.hpp"
#include "arguesia/report.hpp"

namespace arguesia {

namespace detail {

inline Pt2<QuadExt> qpoint(const QVec3& v) {
  if (v[2].is_zero()) throw DegenerateError("intersection point at infinity");
  return {v[0] / v[2], v[1] / v[2]};
}

inline std::array<Pt2<QuadExt>, 2> chord(const Conic& c, const PLine& l, const std::string& what) {
  const ChordIntersection ci = conic_line_intersection(c, l);
  if (ci.points.size() != 2)
    throw DegenerateError(what + " does not cut the conic in two real points (discriminant " +
                          ci.discriminant.str() + ")");
  return {qpoint(ci.points[0]), qpoint(ci.points[1])};
}

}  // namespace detail

/// C = KO, A = NV, B = KN, E = VO on the transversal, which meets the conic
/// at F, G; P = KO meet NV; the parallel to NV through C meets the conic at
/// Q, R. Products XY.XZ are dot products from the shared point.
inline ProofTrace beaugrand_replay(const Conic& conic, const PPoint& K, const PPoint& N, const PPoint& O,
                                   const PPoint& V, const PLine& transversal) {
  detail::Figure fig;
  for (const auto& [n, p] : {std::pair<std::string, PPoint>{"K", K}, {"N", N}, {"O", O}, {"V", V}}) fig.add(n, p);
  fig.add("C", detail::meet_named(join(K, O), transversal, "C = KO on the transversal"));
  fig.add("A", detail::meet_named(join(N, V), transversal, "A = NV on the transversal"));
  fig.add("B", detail::meet_named(join(K, N), transversal, "B = KN on the transversal"));
  fig.add("E", detail::meet_named(join(V, O), transversal, "E = VO on the transversal"));
  fig.add("P", detail::meet_named(join(K, O), join(N, V), "P = KO meet NV"));
  const auto fg = detail::chord(conic, transversal, "transversal");
  const PLine mu = parallel_through(fig.at("C"), join(N, V));
  const auto qr = detail::chord(conic, mu, "parallel to NV through C");

  auto pt = [&](const std::string& n) { return lift(fig.at(n).to_affine()); };
  const Pt2<QuadExt> k = pt("K"), n = pt("N"), o = pt("O"), v = pt("V"), a = pt("A"), b = pt("B"), c = pt("C"),
                     e = pt("E"), p = pt("P");
  const Pt2<QuadExt>& f = fg[0];
  const Pt2<QuadExt>& g = fg[1];
  const Pt2<QuadExt>& Q = qr[0];
  const Pt2<QuadExt>& R = qr[1];

  ProofTrace tr;
  tr.name = "beaugrand";
  tr.steps.push_back({"Apollonius III.17 at P and C", "NP.PV/(QC.CR) = KP.PO/(KC.CO)", "p.5", "apollonius",
                      rect(p, n, v) / rect(c, Q, R), rect(p, k, o) / rect(c, k, o)});
  tr.steps.push_back({"composition", "AN.AV/(QC.CR) = [AN.AV/(NP.PV)] [KP.PO/(KC.CO)]", "p.5 l.26", "composition",
                      rect(a, n, v) / rect(c, Q, R), (rect(a, n, v) / rect(p, n, v)) * (rect(p, k, o) / rect(c, k, o))});
  tr.steps.push_back({"Apollonius III.17 at A and C", "AN.AV/(AF.AG) = CQ.CR/(CF.CG)", "p.5 l.28", "apollonius",
                      rect(a, n, v) / rect(a, f, g), rect(c, Q, R) / rect(c, f, g)});
  tr.steps.push_back({"Menelaus on KN", "BA/BC = (NA/NP)(KP/KC)", "p.5 l.31", "menelaus", signed_ratio(b, a, c),
                      signed_ratio(n, a, p) * signed_ratio(k, p, c)});
  tr.steps.push_back({"Menelaus on VO", "EA/EC = (VA/VP)(OP/OC)", "p.5 l.31", "menelaus", signed_ratio(e, a, c),
                      signed_ratio(v, a, p) * signed_ratio(o, p, c)});
  tr.steps.push_back({"final identity", "FA.AG/(FC.CG) = BA.AE/(BC.CE)", "p.5", "aggregation",
                      rect(a, f, g) / rect(c, f, g), rect(a, b, e) / rect(c, b, e)});
  tr.steps.push_back({"remaining analogy at B, E", "BF.BG/(EF.EG) = BA.BC/(EA.EC)", "p.5 l.40", "analogy",
                      rect(b, f, g) / rect(e, f, g), rect(b, a, c) / rect(e, a, c)});
  tr.steps.push_back({"remaining analogy at F, G", "FA.FC/(GA.GC) = FB.FE/(GB.GE)", "p.5 l.40", "analogy",
                      rect(f, a, c) / rect(g, a, c), rect(f, b, e) / rect(g, b, e)});
  tr.points = fig.order;
  return tr;
}

inline TheoremReport verify_beaugrand(const Conic& conic, const PPoint& K, const PPoint& N, const PPoint& O,
                                      const PPoint& V, const PLine& transversal) {
  TheoremReport rep;
  rep.name = "beaugrand";
  for (const auto& [n, p] : {std::pair<std::string, PPoint>{"K", K}, {"N", N}, {"O", O}, {"V", V}}) rep.input(n, p);
  rep.input("transversal", transversal.str());
  rep.trace = beaugrand_replay(conic, K, N, O, V, transversal);
  return rep;
}

}  // namespace arguesia
