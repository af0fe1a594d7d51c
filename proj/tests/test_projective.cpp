#include <gtest/gtest.h>

#include "support.hpp"

using namespace arguesia;
using testing_support::redraw;
using testing_support::x_axis;

namespace {

PPoint P(int x, int y, int z) { return PPoint(Rat(x), Rat(y), Rat(z)); }
PLine L(int u, int v, int w) { return PLine(Rat(u), Rat(v), Rat(w)); }
const Param kInf = Param::infinity();

LineMap random_map(detail::Sampler& s, const AffineChart& src, const AffineChart& dst) {
  return redraw([&] {
    Mat2 m;
    for (auto& row : m)
      for (auto& x : row) x = s.rat();
    return LineMap(m, src, dst);
  });
}

}  // namespace

TEST(Projective, CanonicalEquality) {
  EXPECT_EQ(P(2, 4, 6), P(1, 2, 3));
  EXPECT_EQ(P(-2, -4, -6), P(1, 2, 3));
  EXPECT_EQ(PPoint(Rat(1, 2), Rat(1, 3), Rat(1)), P(3, 2, 6));
  EXPECT_EQ(P(1, 2, 3).str(), "(1:2:3)");
  EXPECT_THROW(P(0, 0, 0), DegenerateError);
  EXPECT_TRUE(P(1, 2, 0).is_infinite());
  EXPECT_EQ(L(0, 0, 5), PLine::at_infinity());
}

TEST(Projective, JoinExamples) {
  EXPECT_EQ(join(P(1, 0, 1), P(0, 1, 1)), L(1, 1, -1));
  EXPECT_EQ(join(P(1, 0, 0), P(0, 1, 0)), PLine::at_infinity());
  EXPECT_EQ(join(P(0, 0, 1), P(1, 0, 1)), L(0, 1, 0));
  EXPECT_THROW(join(P(1, 1, 1), P(2, 2, 2)), DegenerateError);
}

TEST(Projective, MeetExamples) {
  EXPECT_EQ(meet(L(1, 0, 0), L(0, 1, 0)), P(0, 0, 1));
  EXPECT_EQ(meet(L(0, 1, -1), L(0, 1, -2)), P(1, 0, 0));
  EXPECT_EQ(meet(L(1, 1, -1), L(1, -1, 0)), P(1, 1, 2));
  EXPECT_THROW(meet(L(1, 2, 3), L(2, 4, 6)), DegenerateError);
}

TEST(Projective, JoinMeetDuality) {
  SplitMix64 rng(11);
  detail::Sampler s{rng, 20};
  for (int i = 0; i < 500; ++i) {
    const auto [p, q, r] = redraw([&] {
      const PPoint p = s.point(), q = s.point(), r = s.point();
      if (collinear(p, q, r) || p == q || p == r) throw DegenerateError("collinear");
      return std::tuple{p, q, r};
    });
    EXPECT_EQ(meet(join(p, q), join(p, r)), p);
    EXPECT_TRUE(join(p, q).contains(p));
    EXPECT_TRUE(join(p, q).contains(q));
  }
}

TEST(Projective, ChartParameters) {
  const AffineChart c = AffineChart::through(PPoint::affine(1, 1), PPoint::affine(3, 2));
  EXPECT_EQ(c.param_of(PPoint::affine(1, 1)), Param(0));
  EXPECT_EQ(c.param_of(PPoint::affine(3, 2)), Param(1));
  EXPECT_EQ(c.param_of(PPoint::affine(-1, 0)), Param(-1));
  EXPECT_TRUE(c.param_of(P(2, 1, 0)).is_infinite());
  EXPECT_EQ(c.point_at(Rat(1, 2)), PPoint::affine(2, Rat(3, 2)));
  EXPECT_THROW(c.param_of(PPoint::affine(0, 0)), DegenerateError);
  EXPECT_THROW(AffineChart::through(P(1, 0, 0), PPoint::affine(0, 0)), DegenerateError);
}

TEST(Projective, CrossRatioExamples) {
  EXPECT_EQ(cross_ratio(Param(0), Param(1), Param(2), Param(3)), Param(Rat(4, 3)));
  EXPECT_EQ(cross_ratio(Param(0), Param(1), Param(2), Param(2)), Param(1));
  EXPECT_EQ(cross_ratio(Param(0), Param(2), Param(3), Param(Rat(3, 2))), Param(-1));
  EXPECT_EQ(cross_ratio(Param(0), Param(1), Param(2), Param(1)), Param(0));
  EXPECT_TRUE(cross_ratio(Param(0), Param(1), Param(2), Param(0)).is_infinite());
  // the point at infinity takes part like any other
  EXPECT_EQ(cross_ratio(Param(0), Param(2), kInf, Param(1)), Param(-1));
  EXPECT_THROW(cross_ratio(Param(0), Param(0), Param(2), Param(3)), DegenerateError);
}

TEST(Projective, CrossRatioOfPoints) {
  using testing_support::on_x;
  EXPECT_EQ(cross_ratio(on_x(0), on_x(1), on_x(2), on_x(3)), Param(Rat(4, 3)));
  EXPECT_EQ(cross_ratio(on_x(0), on_x(2), on_x(3), on_x(Rat(3, 2))), Param(-1));
  EXPECT_EQ(cross_ratio(on_x(0), on_x(2), P(1, 0, 0), on_x(1)), Param(-1));
  EXPECT_THROW(cross_ratio(on_x(0), on_x(1), on_x(2), PPoint::affine(0, 1)), DegenerateError);
}

TEST(Projective, PerspectiveExamples) {
  const AffineChart d = x_axis();
  const LineMap same = perspective_map(PPoint::affine(5, 7), d, d);
  EXPECT_TRUE(same.is_identity());

  const AffineChart top(L(0, 1, -1), PPoint::affine(0, 1), PPoint::affine(1, 1));
  const LineMap vertical = perspective_map(P(0, 1, 0), d, top);
  for (const Param& t : {Param(0), Param(1), kInf, Param(Rat(-7, 3))}) EXPECT_EQ(vertical(t), t);
  EXPECT_THROW(perspective_map(PPoint::affine(4, 0), d, top), DegenerateError);
  EXPECT_THROW(perspective_map(PPoint::affine(4, 1), d, top), DegenerateError);
}

TEST(Projective, PerspectiveAgreesWithJoinMeet) {
  SplitMix64 rng(3);
  detail::Sampler s{rng, 12};
  for (int i = 0; i < 200; ++i) {
    redraw([&] {
      const AffineChart a = s.chart(), b = s.chart();
      const PPoint k = s.point();
      const LineMap f = perspective_map(k, a, b);
      for (int j = 0; j < 3; ++j) {
        const PPoint p = a.point_at(s.rat());
        if (p == k || join(k, p) == b.line()) continue;
        EXPECT_EQ(f(p), meet(join(k, p), b.line()));
      }
      EXPECT_TRUE(compose(perspective_map(k, b, a), f).is_identity());
      return 0;
    });
  }
}

TEST(Projective, CrossRatioInvariance) {
  SplitMix64 rng(5);
  detail::Sampler s{rng, 16};
  for (int i = 0; i < 500; ++i) {
    redraw([&] {
      const AffineChart a = s.chart(), b = s.chart();
      const std::vector<Rat> t = s.distinct(4);
      const Param cr = cross_ratio(Param(t[0]), Param(t[1]), Param(t[2]), Param(t[3]));
      const LineMap h = random_map(s, a, b);
      EXPECT_EQ(cross_ratio(h(Param(t[0])), h(Param(t[1])), h(Param(t[2])), h(Param(t[3]))), cr);
      const LineMap f = perspective_map(s.point(), a, b);
      EXPECT_EQ(cross_ratio(f(a.point_at(t[0])), f(a.point_at(t[1])), f(a.point_at(t[2])), f(a.point_at(t[3]))),
                cr);
      return 0;
    });
  }
}

TEST(Projective, CompositionAssociativeAndPointwise) {
  SplitMix64 rng(9);
  detail::Sampler s{rng, 16};
  const AffineChart c = x_axis();
  for (int i = 0; i < 200; ++i) {
    const LineMap f = random_map(s, c, c), g = random_map(s, c, c), h = random_map(s, c, c);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
    for (int j = 0; j < 3; ++j) {
      const Param t = s.rat();
      EXPECT_EQ(compose(f, g)(t), f(g(t)));
    }
    EXPECT_TRUE(compose(f, f.inverse()).is_identity());
  }
}

TEST(Projective, HomographyFromThree) {
  const AffineChart c = x_axis();
  const LineMap id = homography_from_three(c, {Param(0), Param(1), kInf}, c, {Param(0), Param(1), kInf});
  EXPECT_TRUE(id.is_identity());
  const LineMap inv = homography_from_three(c, {Param(0), Param(1), kInf}, c, {kInf, Param(1), Param(0)});
  EXPECT_EQ(inv(Param(2)), Param(Rat(1, 2)));
  EXPECT_EQ(inv(Param(Rat(-3, 5))), Param(Rat(-5, 3)));
  EXPECT_TRUE(inv(Param(0)).is_infinite());
  EXPECT_TRUE(compose(inv, inv).is_identity());
  EXPECT_EQ(inv, homography_from_three(c, {Param(0), Param(1), kInf}, c, {kInf, Param(1), Param(0)}));
  EXPECT_THROW(homography_from_three(c, {Param(0), Param(0), kInf}, c, {kInf, Param(1), Param(0)}),
               DegenerateError);
}

TEST(Projective, HomographyHitsItsData) {
  SplitMix64 rng(13);
  detail::Sampler s{rng, 16};
  const AffineChart c = x_axis();
  for (int i = 0; i < 200; ++i) {
    redraw([&] {
      const std::vector<Rat> p = s.distinct(3), q = s.distinct(3);
      const LineMap h = homography_from_three(c, {Param(p[0]), Param(p[1]), Param(p[2])}, c,
                                              {Param(q[0]), Param(q[1]), Param(q[2])});
      for (int k = 0; k < 3; ++k) EXPECT_EQ(h(Param(p[k])), Param(q[k]));
      return 0;
    });
  }
}

TEST(Projective, CentralProjection3d) {
  const P3Point apex(Vec4{Rat(0), Rat(0), Rat(1), Rat(0)});
  const P3Plane ground(Vec4{Rat(0), Rat(0), Rat(1), Rat(0)});
  const P3Point p(Vec4{Rat(1), Rat(2), Rat(3), Rat(1)});
  EXPECT_EQ(central_projection_3d(apex, ground, p), P3Point(Vec4{Rat(1), Rat(2), Rat(0), Rat(1)}));
  const P3Point on = P3Point::affine(4, 5, 0);
  EXPECT_EQ(central_projection_3d(apex, ground, on), on);

  // there and back through one apex is the identity
  const P3Point eye = P3Point::affine(0, 0, 3);
  const P3Plane tilted(Vec4{Rat(1), Rat(1), Rat(2), Rat(-1)});
  const P3Point q = P3Point::affine(Rat(2, 3), Rat(-1), 0);
  EXPECT_EQ(central_projection_3d(eye, ground, central_projection_3d(eye, tilted, q)), q);

  EXPECT_THROW(central_projection_3d(P3Point::affine(0, 0, 0), ground, p), DegenerateError);
  EXPECT_THROW(central_projection_3d(eye, ground, eye), DegenerateError);
}

TEST(Projective, PlaneFrameRoundTrip) {
  const PlaneFrame f(P3Plane(Vec4{Rat(1), Rat(1), Rat(2), Rat(-1)}));
  const P3Point p = P3Point::affine(1, 2, -1);
  EXPECT_EQ(f.from_frame(f.to_frame(p)), p);
  EXPECT_THROW(f.to_frame(P3Point::affine(0, 0, 0)), DegenerateError);
}
