#pragma once

// The ramee: six points in involution on a tronc, projected from K onto
// another line, stay in involution.

#include <string>

#include "arguesia/report.hpp"

namespace arguesia {

inline const char* couple_name(int i) {
  static const char* names[] = {"(B,H)", "(C,G)", "(D,F)"};
  return names[i];
}

/// Projects the couples from K onto delta and checks the images are in
/// involution, that the conjugated involution has the same class, and that
/// fixed points go to fixed points. With K at infinity the Menelaus replay
/// does not apply and only the direct checks run.
inline TheoremReport verify_ramee(const NodeCouples& nc, const PPoint& K, const AffineChart& delta) {
  TheoremReport rep;
  rep.name = "ramee";
  rep.input("K", K);
  rep.input("tronc", nc.chart.line().str());
  rep.input("delta", delta.line().str());
  for (int i = 0; i < 3; ++i)
    rep.input(couple_name(i), nc.pairs[i].first.str() + ", " + nc.pairs[i].second.str());

  const LineMap proj = perspective_map(K, nc.chart, delta);
  std::array<Couple, 3> images{Couple{proj(nc.pairs[0].first), proj(nc.pairs[0].second)},
                               Couple{proj(nc.pairs[1].first), proj(nc.pairs[1].second)},
                               Couple{proj(nc.pairs[2].first), proj(nc.pairs[2].second)}};
  const NodeCouples image = NodeCouples::from_params(delta, images);

  const Involution phi_big = involution_from_pairs(nc.pairs[0], nc.pairs[1], nc.chart);
  rep.claim_true("source couples in involution", phi_big.swaps(nc.pairs[2].first, nc.pairs[2].second));
  rep.claim_true("image couples in involution (homography)", equivalence_check(image));

  bool finite = true;
  for (const auto& [x, y] : images) finite = finite && !x.is_infinite() && !y.is_infinite();
  if (finite) {
    try {
      const RectangleReport rr = rectangle_identity_check(image);
      const char* labels[] = {"gf.gd/(cf.cd) = gb.gh/(cb.ch)", "fc.fg/(dc.dg) = fb.fh/(db.dh)",
                              "hc.hg/(bc.bg) = hd.hf/(bd.bf)"};
      for (int i = 0; i < 3; ++i) rep.claim(labels[i], rr.identities[i].lhs, rr.identities[i].rhs);
    } catch (const DegenerateError& e) {
      rep.note(std::string("rectangle form skipped: ") + e.what());
    }
  }

  const Involution phi = conjugate(phi_big, proj);
  for (int i = 0; i < 3; ++i) {
    if (images[i].first.is_infinite() || images[i].second.is_infinite()) {
      const Param& fin = images[i].first.is_infinite() ? images[i].second : images[i].first;
      rep.note(std::string("image of ") + couple_name(i) + " has a point at infinity; its partner is the souche");
      rep.claim(std::string("souche = partner of infinity for ") + couple_name(i), phi.partner(Param::infinity()), fin);
    }
    rep.claim(std::string("conjugated involution swaps image ") + couple_name(i), phi.partner(images[i].first),
              images[i].second);
  }

  const Classification before = classify(phi_big);
  const Classification after = classify(phi);
  rep.claims.push_back({"classification transported", to_string(before.kind), to_string(after.kind),
                        before.kind == after.kind, false});
  for (std::size_t i = 0; i < before.fixed_points.size(); ++i) {
    const QParam moved = proj.apply(before.fixed_points[i]);
    rep.claim("fixed point " + std::to_string(i + 1) + " maps to a fixed point", phi.partner(moved), moved);
  }

  if (K.is_infinite()) {
    rep.note("K at infinity: parallel rameaux, Thales case, no Menelaus replay");
  } else {
    try {
      rep.trace = replay_ramee_proof(nc, K, delta);
    } catch (const DegenerateError& e) {
      rep.note(std::string("Menelaus replay not applicable: ") + e.what());
    }
  }
  return rep;
}

}  // namespace arguesia
