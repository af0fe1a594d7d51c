#pragma once

// Menelaus on a sector figure, its converse, and the decomposition of each
// node ratio.

#include <string>

#include "arguesia/report.hpp"

namespace arguesia {

/// The point N3 on ab with Ratio(N3; a, b) = 1 / (r1 r2), where n1 on bc and
/// n2 on ca give r1 = Ratio(n1; b, c), r2 = Ratio(n2; c, a).
inline PPoint menelaus_converse_point(const PPoint& a, const PPoint& b, const PPoint& c, const PPoint& n1,
                                      const PPoint& n2) {
  for (const PPoint* p : {&a, &b, &c, &n1, &n2})
    if (p->is_infinite()) throw DegenerateError("converse works with finite points");
  if (!collinear(n1, b, c) || !collinear(n2, c, a)) throw DegenerateError("nodes are not on their sidelines");
  const Rat r = signed_ratio(n1.to_affine(), b.to_affine(), c.to_affine()) *
                signed_ratio(n2.to_affine(), c.to_affine(), a.to_affine());
  if (r.is_zero()) throw DegenerateError("a node coincides with a vertex");
  const Rat t = r.inverse();
  if (t == Rat(1)) throw DegenerateError("third point at infinity (ab parallel to the tronc)");
  // a - n3 = t (b - n3)
  return PPoint::affine((Rat(1) / (Rat(1) - t)) * (a.to_affine() - t * b.to_affine()));
}

inline TheoremReport verify_menelaus(const SectorFigure& sf) {
  TheoremReport rep;
  rep.name = "menelaus";
  static const char* vn[] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) rep.input(vn[i], sf.vertex(i));
  rep.input("tronc", sf.tronc().str());
  for (int i = 0; i < 3; ++i) rep.input("N" + std::to_string(i + 1), sf.node(i));
  const RatioChain chain = menelaus_chain(sf);
  rep.claim(chain.str() + " = 1", chain.value(), Rat(1));
  rep.claim("classical form = -1", menelaus_classical(sf), Rat(-1));
  for (int i = 0; i < 3; ++i)
    for (bool inv : {false, true}) {
      const Decomposition d = decompose_ratio(sf, i, inv);
      rep.claim(d.str(), d.lhs_value, d.rhs_value);
    }
  const PPoint n3 = menelaus_converse_point(sf.vertex(0), sf.vertex(1), sf.vertex(2), sf.node(0), sf.node(1));
  rep.claim("converse: rebuilt N3 = N3", n3, sf.node(2));
  rep.claim("converse: incidence residual", dot(sf.tronc().coeffs(), n3.coords()), Rat(0));
  return rep;
}

}  // namespace arguesia
