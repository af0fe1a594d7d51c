#pragma once

// Complete quadrangle B, C, D, E cut by a transversal.
//
// Opposite bornales: (BC, ED) meeting at N, (BE, DC) at F, (BD, EC) at R.
// On the transversal: I, K on BC, ED; P, Q on BE, CD; G, H on BD, CE.

#include <string>
#include <vector>

#include "arguesia/involution.hpp"

namespace arguesia {

struct QuadrangleConfig {
  PPoint B, C, D, E;
  AffineChart transversal;
  PPoint N, F, R;
  PPoint I, K, P, Q, G, H;

  /// Builds the derived points; N may be at infinity (BC parallel to ED).
  static QuadrangleConfig make(const PPoint& B, const PPoint& C, const PPoint& D, const PPoint& E,
                               const AffineChart& transversal) {
    QuadrangleConfig q{B, C, D, E, transversal, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    const std::vector<std::pair<std::string, PPoint>> bornes{{"B", B}, {"C", C}, {"D", D}, {"E", E}};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        for (std::size_t k = j + 1; k < 4; ++k)
          if (collinear(bornes[i].second, bornes[j].second, bornes[k].second))
            throw DegenerateError("bornes " + bornes[i].first + bornes[j].first + bornes[k].first + " are collinear");
    q.N = meet(join(B, C), join(E, D));
    q.F = meet(join(B, E), join(D, C));
    q.R = meet(join(B, D), join(E, C));
    const PLine& l = transversal.line();
    const std::vector<std::pair<std::string, PPoint>> avoid{
        {"B", B}, {"C", C}, {"D", D}, {"E", E}, {"N", q.N}, {"F", q.F}, {"R", q.R}};
    for (const auto& [name, p] : avoid)
      if (l.contains(p)) throw DegenerateError("transversal passes through " + name);
    auto cut = [&](const PPoint& x, const PPoint& y, const std::string& name) {
      const PPoint p = meet(join(x, y), l);
      if (p.is_infinite()) throw DegenerateError("transversal is parallel to the bornale through " + name);
      return p;
    };
    q.I = cut(B, C, "I");
    q.K = cut(E, D, "K");
    q.P = cut(B, E, "P");
    q.Q = cut(C, D, "Q");
    q.G = cut(B, D, "G");
    q.H = cut(C, E, "H");
    return q;
  }

  /// Couples (I,K), (P,Q), (G,H) as chart parameters.
  NodeCouples couples() const {
    return NodeCouples::from_points(transversal, {std::pair{I, K}, std::pair{P, Q}, std::pair{G, H}});
  }

  std::vector<std::pair<std::string, PPoint>> named_points() const {
    return {{"B", B}, {"C", C}, {"D", D}, {"E", E}, {"N", N}, {"F", F}, {"R", R},
            {"I", I}, {"K", K}, {"P", P}, {"Q", Q}, {"G", G}, {"H", H}};
  }
};

}  // namespace arguesia
