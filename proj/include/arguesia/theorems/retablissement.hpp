#pragma once

// A conic section of a circular cone carried back, through the apex, onto the
// plane of the base circle; the quadrangle involution transported both ways.

#include <array>
#include <string>

#include "arguesia/conics.hpp"
#include "arguesia/theorems/quadrangle.hpp"

namespace arguesia {

/// Frame-to-frame matrix of the central projection from apex of the cut plane
/// onto the base plane (columns are images of the cut-frame basis).
inline Mat3 projection_matrix(const P3Point& apex, const P3Plane& cut, const P3Plane& base) {
  if (cut.contains(apex)) throw DegenerateError("apex lies on the cut plane");
  if (base.contains(apex)) throw DegenerateError("apex lies on the base plane");
  const PlaneFrame from(cut);
  const PlaneFrame to(base);
  Mat3 h{};
  for (int j = 0; j < 3; ++j) {
    Vec3 e{};
    e[j] = Rat(1);
    const Vec3 col = to.to_frame(central_projection_vec(apex, base, from.from_frame(e)));
    for (int i = 0; i < 3; ++i) h[i][j] = col[i];
  }
  if (det3(h).is_zero()) throw DegenerateError("projection between the planes is singular");
  return h;
}

/// Cut-plane frame coordinates of the point of the base plane (given in base
/// frame coordinates) seen from the apex.
inline PPoint lift_to_cut(const P3Point& apex, const P3Plane& base, const P3Plane& cut, const PPoint& on_base) {
  return PPoint(mat_vec(inverse(projection_matrix(apex, cut, base)), on_base.coords()));
}

struct RetablissementInput {
  P3Point apex;
  P3Plane base;  // carries the circle x^2 + y^2 = 1 in its frame
  P3Plane cut;
  std::array<PPoint, 4> bornes;  // cut-plane frame coordinates
  PLine transversal;             // cut-plane frame coordinates
};

inline TheoremReport retablissement_demo(const RetablissementInput& in) {
  TheoremReport rep;
  rep.name = "retablissement";
  rep.input("apex", in.apex.str());
  const Mat3 h = projection_matrix(in.apex, in.cut, in.base);
  const Conic circle = Conic::unit_circle();
  const Conic section(mat_mul(mat_mul(transpose(h), circle.matrix()), h));
  rep.input("cut conic", section.matrix()[0][0].str() + "," + section.matrix()[0][1].str() + "," +
                             section.matrix()[0][2].str() + "," + section.matrix()[1][1].str() + "," +
                             section.matrix()[1][2].str() + "," + section.matrix()[2][2].str());
  auto down = [&](const PPoint& p) { return PPoint(mat_vec(h, p.coords())); };

  static const char* names[] = {"B", "C", "D", "E"};
  std::array<PPoint, 4> base_bornes = in.bornes;
  for (int i = 0; i < 4; ++i) {
    rep.input(names[i], in.bornes[i]);
    if (!section.contains(in.bornes[i]))
      throw DegenerateError(std::string("borne ") + names[i] + " is not on the cut conic");
    base_bornes[i] = down(in.bornes[i]);
    rep.claim_true(std::string(names[i]) + " projects onto the base circle", circle.contains(base_bornes[i]));
  }
  rep.input("transversal", in.transversal.str());

  const AffineChart cut_chart = default_chart(in.transversal);
  const PPoint o = down(cut_chart.origin());
  const PPoint u = down(cut_chart.unit());
  if (o.is_infinite() || u.is_infinite()) throw DegenerateError("transversal chart projects to infinity");
  const AffineChart base_chart = AffineChart::through(o, u);

  const QuadrangleConfig qc = QuadrangleConfig::make(in.bornes[0], in.bornes[1], in.bornes[2], in.bornes[3], cut_chart);
  const QuadrangleConfig qb =
      QuadrangleConfig::make(base_bornes[0], base_bornes[1], base_bornes[2], base_bornes[3], base_chart);
  const auto pc = qc.named_points();
  const auto pb = qb.named_points();
  for (std::size_t i = 4; i < pc.size(); ++i)
    rep.claim("projection of " + pc[i].first + " = " + pb[i].first + " on the base", down(pc[i].second),
              pb[i].second);

  // cut-line parameter -> base-line parameter
  const LineMap m = homography_from_three(cut_chart, {Param(0), Param(1), Param::infinity()}, base_chart,
                                          {Param(0), Param(1), base_chart.param_of(down(cut_chart.point_at(Param::infinity())))});
  const Involution on_base = quadrangle_involution(qb).involution;
  const Involution on_cut = quadrangle_involution(qc).involution;
  const Involution pulled = conjugate(on_base, m.inverse());
  rep.claim_true("base involution pulled back = cut-plane involution", pulled == on_cut);
  for (const auto& [x, y] : qc.couples().pairs)
    rep.claim("pulled-back partner of " + x.str(), pulled.partner(x), y);

  bool identity = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) identity = identity && (i == j ? h[i][j] == h[0][0] : h[i][j].is_zero());
  if (identity) rep.note("cut plane is the base plane: transport is the identity");
  rep.note("the ramee through the apex carries the cut-plane couples onto the base couples");
  return rep;
}

/// The example figure: bornes (1,0), (0,1), (-1,0), (0,-1) of the base circle
/// lifted to the cut plane, with the lift of y = x/3 + 1/5 as transversal.
inline RetablissementInput retablissement_example(const P3Point& apex, const P3Plane& base, const P3Plane& cut) {
  RetablissementInput in{apex, base, cut, {PPoint::affine(1, 0), PPoint::affine(0, 1), PPoint::affine(-1, 0),
                                           PPoint::affine(0, -1)}, PLine(Rat(1), Rat(0), Rat(0))};
  for (auto& p : in.bornes) p = lift_to_cut(apex, base, cut, p);
  const PPoint t1 = lift_to_cut(apex, base, cut, PPoint::affine(0, Rat(1, 5)));
  const PPoint t2 = lift_to_cut(apex, base, cut, PPoint::affine(3, Rat(6, 5)));
  in.transversal = join(t1, t2);
  return in;
}

}  // namespace arguesia
