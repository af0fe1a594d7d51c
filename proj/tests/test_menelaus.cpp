#include <gtest/gtest.h>

#include "arguesia/theorems.hpp"
#include "support.hpp"

using namespace arguesia;
using testing_support::redraw;
using testing_support::x_axis;

namespace {

PPoint A(const Rat& x, const Rat& y) { return PPoint::affine(x, y); }

// a = (0,4), b = (0,0), c = (4,0) cut by y = x - 1
SectorFigure example_figure() {
  return SectorFigure::from_triangle(A(0, 4), A(0, 0), A(4, 0), PLine(Rat(1), Rat(-1), Rat(-1)));
}

SectorFigure random_figure(detail::Sampler& s) {
  return redraw([&] {
    const PPoint a = s.point(), b = s.point(), c = s.point();
    if (collinear(a, b, c)) throw DegenerateError("flat triangle");
    const SectorFigure sf = SectorFigure::from_triangle(a, b, c, s.line());
    for (int i = 0; i < 3; ++i)
      if (sf.node(i).is_infinite()) throw DegenerateError("node at infinity");
    return sf;
  });
}

struct RameeData {
  NodeCouples nc;
  PPoint K;
  AffineChart delta;
};

RameeData random_ramee(detail::Sampler& s) {
  return redraw([&] {
    const std::vector<Rat> t = s.distinct(5);
    const AffineChart tronc = s.chart();
    const Involution inv = involution_from_pairs({t[0], t[1]}, {t[2], t[3]}, tronc);
    const Param f = inv.partner(Param(t[4]));
    const NodeCouples nc =
        NodeCouples::from_params(tronc, {Couple{t[0], t[1]}, Couple{t[2], t[3]}, Couple{t[4], f}});
    return RameeData{nc, s.point(), s.chart()};
  });
}

}  // namespace

TEST(Menelaus, ExampleRatios) {
  const SectorFigure sf = example_figure();
  EXPECT_EQ(sf.node(0), A(1, 0));
  EXPECT_EQ(sf.node(1), A(Rat(5, 2), Rat(3, 2)));
  EXPECT_EQ(sf.node(2), A(0, -1));
  const RatioChain chain = menelaus_chain(sf);
  EXPECT_EQ(chain.factors[0].value(), Rat(-1, 3));
  EXPECT_EQ(chain.factors[1].value(), Rat(-3, 5));
  EXPECT_EQ(chain.factors[2].value(), Rat(5));
  EXPECT_EQ(menelaus_product(sf), Rat(1));
  EXPECT_EQ(menelaus_classical(sf), Rat(-1));
}

TEST(Menelaus, ExampleDecomposition) {
  const SectorFigure sf = example_figure();
  const Decomposition d = decompose_ratio(sf, 0);
  EXPECT_EQ(d.str(), "N1b/N1c = (N3b/N3a)(N2a/N2c)");
  EXPECT_EQ(d.rhs.factors[0].value(), Rat(1, 5));
  EXPECT_EQ(d.rhs.factors[1].value(), Rat(-5, 3));
  EXPECT_EQ(d.lhs_value, Rat(-1, 3));
  EXPECT_TRUE(d.holds());

  const Decomposition inv = decompose_ratio(sf, 0, true);
  EXPECT_EQ(inv.lhs.str(), "N1c/N1b");
  EXPECT_EQ(inv.lhs_value, Rat(-3));
  EXPECT_EQ(inv.rhs.factors[0].value(), Rat(-3, 5));
  EXPECT_EQ(inv.rhs.factors[1].value(), Rat(5));
  EXPECT_TRUE(inv.holds());
  EXPECT_THROW(decompose_ratio(sf, 3), DomainError);
}

TEST(Menelaus, ProductIsOneOnRandomFigures) {
  SplitMix64 rng(31);
  detail::Sampler s{rng, 20};
  for (int i = 0; i < 500; ++i) {
    const SectorFigure sf = random_figure(s);
    EXPECT_EQ(menelaus_product(sf), Rat(1));
    EXPECT_EQ(menelaus_classical(sf), Rat(-1));
    for (int n = 0; n < 3; ++n)
      for (bool inv : {false, true}) EXPECT_TRUE(decompose_ratio(sf, n, inv).holds());
  }
}

TEST(Menelaus, PerturbedNodeBreaksTheProduct) {
  SplitMix64 rng(32);
  detail::Sampler s{rng, 20};
  for (int i = 0; i < 200; ++i) {
    const SectorFigure sf = random_figure(s);
    // slide N3 along ab by a nonzero amount; it leaves the tronc
    const Pt2<Rat> a = sf.vertex(0).to_affine(), b = sf.vertex(1).to_affine(), n = sf.node(2).to_affine();
    const Rat step = redraw([&] { return s.nonzero(); });
    const PPoint moved = PPoint::affine(n + step * (b - a));
    Ratio r = sf.ratio(2, 0, 1);
    r.origin = moved;
    if (moved == sf.vertex(1)) continue;
    EXPECT_NE(sf.ratio(0, 1, 2).value() * sf.ratio(1, 2, 0).value() * r.value(), Rat(1));
  }
}

TEST(Menelaus, ConverseRebuildsTheThirdNode) {
  SplitMix64 rng(33);
  detail::Sampler s{rng, 20};
  for (int i = 0; i < 300; ++i) {
    const SectorFigure sf = random_figure(s);
    const PPoint n3 = menelaus_converse_point(sf.vertex(0), sf.vertex(1), sf.vertex(2), sf.node(0), sf.node(1));
    EXPECT_EQ(n3, sf.node(2));
    EXPECT_TRUE(sf.tronc().contains(n3));
  }
  // example: N3 = (0, -1)
  const SectorFigure ex = example_figure();
  EXPECT_EQ(menelaus_converse_point(A(0, 4), A(0, 0), A(4, 0), A(1, 0), A(Rat(5, 2), Rat(3, 2))), A(0, -1));
}

TEST(Menelaus, VerifyReport) {
  const TheoremReport r = verify_menelaus(example_figure());
  EXPECT_EQ(r.name, "menelaus");
  EXPECT_TRUE(r.verdict());
  EXPECT_EQ(r.claims.size(), 10u);
  EXPECT_EQ(r.claims[0].lhs, "1/1");
}

TEST(Menelaus, DegenerateFigures) {
  const PLine tronc(Rat(1), Rat(-1), Rat(-1));
  EXPECT_THROW(SectorFigure::from_triangle(A(0, 0), A(1, 1), A(2, 2), tronc), DegenerateError);
  // tronc through a vertex
  EXPECT_THROW(SectorFigure::from_triangle(A(1, 0), A(0, 0), A(0, 4), tronc), DegenerateError);
}

TEST(RameeReplay, RandomGenericInstances) {
  SplitMix64 rng(41);
  detail::Sampler s{rng, 16};
  int replayed = 0;
  for (int i = 0; i < 200; ++i) {
    const RameeData d = random_ramee(s);
    ProofTrace tr;
    try {
      tr = replay_ramee_proof(d.nc, d.K, d.delta);
    } catch (const DegenerateError&) {
      continue;  // K on a line, or an intersection at infinity
    }
    ++replayed;
    if (tr.name == "ramee-shortcut") continue;
    EXPECT_EQ(tr.name, "ramee");
    EXPECT_TRUE(tr.verdict());
    EXPECT_EQ(tr.steps.size(), 11u);
    EXPECT_EQ(tr.count("menelaus"), 8u);
    EXPECT_EQ(tr.count("aggregation"), 3u);
    ASSERT_EQ(tr.quantities.size(), 1u);
    EXPECT_EQ(tr.quantities[0].first, "alpha");

    // the image couples are in involution, checked without the proof
    std::map<std::string, PPoint> pts(tr.points.begin(), tr.points.end());
    const NodeCouples images = NodeCouples::from_points(
        d.delta, {std::pair{pts.at("b"), pts.at("h")}, std::pair{pts.at("c"), pts.at("g")},
                  std::pair{pts.at("d"), pts.at("f")}});
    EXPECT_TRUE(equivalence_check(images));
  }
  EXPECT_GT(replayed, 150);
}

TEST(RameeReplay, StepTexts) {
  SplitMix64 rng(42);
  detail::Sampler s{rng, 16};
  const ProofTrace tr = redraw([&] {
    const RameeData d = random_ramee(s);
    return replay_ramee_proof(d.nc, d.K, d.delta);
  });
  ASSERT_EQ(tr.steps.size(), 11u);
  EXPECT_EQ(tr.steps[0].label, "series 1.1");
  EXPECT_EQ(tr.steps[0].claim, "gd/gf = (Kd/KD)(4D/4f)");
  EXPECT_EQ(tr.steps[4].label, "series 2.1");
  EXPECT_EQ(tr.steps[4].claim, "4D/4f = (GD/GF)(KF/Kf)");
  EXPECT_EQ(tr.steps[10].label, "conclusion");
  for (const auto& st : tr.steps) EXPECT_FALSE(st.citation.empty());
}

TEST(RameeReplay, Preconditions) {
  const AffineChart tronc = x_axis();
  const NodeCouples nc = NodeCouples::from_params(tronc, {Couple{1, 4}, Couple{8, Rat(1, 2)}, Couple{-1, -4}});
  const AffineChart delta = AffineChart::through(A(0, 2), A(1, 3));
  EXPECT_THROW(replay_ramee_proof(nc, A(5, 0), delta), DegenerateError);
  EXPECT_THROW(replay_ramee_proof(nc, A(0, 2), delta), DegenerateError);
  EXPECT_THROW(replay_ramee_proof(nc, PPoint(Rat(0), Rat(1), Rat(0)), delta), DegenerateError);
}

TEST(RameeReplay, ShortcutWhenDeltaPassesThroughD) {
  const AffineChart tronc = x_axis();
  // D = -1, F = -4
  const NodeCouples nc = NodeCouples::from_params(tronc, {Couple{1, 4}, Couple{8, Rat(1, 2)}, Couple{-1, -4}});
  const AffineChart delta = AffineChart::through(A(-1, 0), A(0, 3));
  const ProofTrace tr = replay_ramee_proof(nc, A(2, 5), delta);
  EXPECT_EQ(tr.name, "ramee-shortcut");
  EXPECT_TRUE(tr.verdict());
  EXPECT_EQ(tr.count("menelaus"), 4u);
  EXPECT_EQ(tr.steps.size(), 7u);
  std::map<std::string, PPoint> pts(tr.points.begin(), tr.points.end());
  EXPECT_EQ(pts.at("d"), pts.at("D"));
  const NodeCouples images = NodeCouples::from_points(
      delta, {std::pair{pts.at("D"), pts.at("f")}, std::pair{pts.at("2"), pts.at("5")},
              std::pair{pts.at("3"), pts.at("4")}});
  EXPECT_TRUE(equivalence_check(images));
}

TEST(QuadrangleReplay, Example) {
  // bornes chosen so that F, the pivot, is finite
  const QuadrangleConfig q = QuadrangleConfig::make(A(0, 0), A(4, 0), A(3, 3), A(0, 2),
                                                    AffineChart::through(A(0, -1), A(1, Rat(-1, 2))));
  const ProofTrace tr = replay_quadrangle_proof(q);
  EXPECT_EQ(tr.name, "quadrangle");
  EXPECT_TRUE(tr.verdict());
  ASSERT_EQ(tr.steps.size(), 6u);
  EXPECT_EQ(tr.count("menelaus"), 4u);
  const char* at[] = {"Menelaus at I", "Menelaus at K", "Menelaus at G", "Menelaus at H"};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(tr.steps[i].label, at[i]);
  EXPECT_EQ(tr.steps[0].claim, "IQ/IP = (CQ/CF)(BF/BP)");
  EXPECT_EQ(tr.steps[1].claim, "KQ/KP = (DQ/DF)(EF/EP)");
  EXPECT_EQ(tr.steps[2].claim, "GQ/GP = (DQ/DF)(BF/BP)");
  EXPECT_EQ(tr.steps[3].claim, "HQ/HP = (CQ/CF)(EF/EP)");
  ASSERT_TRUE(tr.conclusion.has_value());
  EXPECT_EQ(tr.conclusion->claim, "QI.QK/(PI.PK) = QG.QH/(PG.PH)");
  EXPECT_TRUE(tr.conclusion->holds());
}

TEST(QuadrangleReplay, TransversalThroughABorne) {
  EXPECT_THROW(QuadrangleConfig::make(A(0, 0), A(4, 0), A(3, 3), A(0, 2), AffineChart::through(A(0, 0), A(1, 5))),
               DegenerateError);
}
