#include <gtest/gtest.h>

#include "arguesia/instances.hpp"

using namespace arguesia;

namespace {

Rat R(const char* s) { return rat_parse(s); }

Rat random_rat(SplitMix64& rng, std::int64_t m) {
  const std::int64_t n = rng.uniform(-m, m);
  return Rat(n, rng.uniform(1, m));
}

}  // namespace

TEST(RatParse, Examples) {
  EXPECT_EQ(R("3/6").str(), "1/2");
  EXPECT_EQ(R("-4/2").str(), "-2/1");
  EXPECT_EQ(R("0/7").str(), "0/1");
  EXPECT_EQ(R("12").str(), "12/1");
  EXPECT_EQ(R("-0").str(), "0/1");
}

TEST(RatParse, Malformed) {
  for (const char* bad : {"", "-", "1/0", "1/", "/2", "a", "1/-2", "--1", "1.5", " 1", "1/2/3", "+1"})
    EXPECT_THROW(R(bad), ParseError) << bad;
}

TEST(Rat, CanonicalFormAndHash) {
  EXPECT_EQ(Rat(2, 4), Rat(1, 2));
  EXPECT_EQ(Rat(-3, -6).str(), "1/2");
  EXPECT_EQ(Rat(3, -6).str(), "-1/2");
  EXPECT_EQ(Rat(5).str(), "5/1");
  EXPECT_EQ(std::hash<Rat>{}(Rat(2, 4)), std::hash<Rat>{}(Rat(1, 2)));
  EXPECT_THROW(Rat(1, 0), DomainError);
  EXPECT_THROW(Rat(0).inverse(), DomainError);
  EXPECT_LT(Rat(-1, 2), Rat(1, 3));
}

TEST(Rat, BigValuesStayExact) {
  Rat x(1);
  for (int i = 0; i < 200; ++i) x *= Rat(3, 2);
  for (int i = 0; i < 200; ++i) x /= Rat(3, 2);
  EXPECT_EQ(x, Rat(1));
}

TEST(Rat, FieldAxiomsOnRandomPairs) {
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Rat a = random_rat(rng, 1000), b = random_rat(rng, 1000), c = random_rat(rng, 1000);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rat(0));
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rat(1));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(QuadSqrt, Examples) {
  const QuadExt a = quad_sqrt(R("9/4"));
  EXPECT_TRUE(a.is_rational());
  EXPECT_EQ(a.to_rat(), R("3/2"));
  const QuadExt b = quad_sqrt(Rat(8));
  EXPECT_EQ(b.a(), Rat(0));
  EXPECT_EQ(b.b(), Rat(2));
  EXPECT_EQ(b.d(), 2);
  EXPECT_EQ(b.str(), "2/1*sqrt(2)");
  EXPECT_EQ(quad_sqrt(Rat(0)), QuadExt(0));
  try {
    quad_sqrt(Rat(-1));
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("elliptic"), std::string::npos);
  }
}

TEST(QuadSqrt, RationalRadicand) {
  // sqrt(1/2) = (1/2) sqrt(2)
  const QuadExt r = quad_sqrt(R("1/2"));
  EXPECT_EQ(r.b(), R("1/2"));
  EXPECT_EQ(r.d(), 2);
  EXPECT_EQ(r * r, QuadExt(R("1/2")));
}

TEST(QuadSqrt, SquaresBackOnRandomInputs) {
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Rat x = random_rat(rng, 100000).abs();
    const QuadExt r = quad_sqrt(x);
    EXPECT_EQ(r * r, QuadExt(x)) << x.str();
    EXPECT_GE(r.sign(), 0);
  }
}

TEST(QuadExt, Arithmetic) {
  const QuadExt s2 = quad_sqrt(Rat(2));
  const QuadExt x = QuadExt(1) + s2;
  EXPECT_EQ(x * x.conj(), QuadExt(-1));
  EXPECT_EQ(x.norm(), Rat(-1));
  EXPECT_EQ(x / x, QuadExt(1));
  EXPECT_EQ((x * x).str(), "3/1 + 2/1*sqrt(2)");
  EXPECT_EQ(x - s2, QuadExt(1));
  EXPECT_TRUE((x - s2).is_rational());
  EXPECT_THROW(x / (s2 - s2), DomainError);
}

TEST(QuadExt, SignAndOrder) {
  const QuadExt s2 = quad_sqrt(Rat(2));
  EXPECT_EQ((QuadExt(R("7/5")) - s2).sign(), -1);  // 1.4 < 1.414...
  EXPECT_EQ((QuadExt(R("3/2")) - s2).sign(), 1);
  EXPECT_LT(QuadExt(R("7/5")), s2);
  EXPECT_EQ((-s2).sign(), -1);
}

TEST(QuadExt, MixedRadicandsRejected) {
  EXPECT_THROW(quad_sqrt(Rat(2)) + quad_sqrt(Rat(3)), DomainError);
  EXPECT_THROW(quad_sqrt(Rat(2)) * quad_sqrt(Rat(3)), DomainError);
  EXPECT_FALSE(quad_sqrt(Rat(2)) == quad_sqrt(Rat(3)));
}

TEST(QuadExt, RationalEmbedsInEveryField) {
  EXPECT_EQ(QuadExt(Rat(3)), QuadExt(3));
  EXPECT_EQ(QuadExt(Rat(0), Rat(0), Rat(5)), QuadExt(0));
  EXPECT_EQ(quad_sqrt(Rat(3)) + QuadExt(2) - quad_sqrt(Rat(3)), QuadExt(2));
}

TEST(QuadExt, LargeRadicandsOfTheSameField) {
  // primes above the trial-division range: p^2 q is kept unreduced but still
  // equals p sqrt(q) and mixes with it
  const mpz_class p = 10007, q = 10009;
  const QuadExt big(Rat(0), Rat(1), Rat(mpz_class(p * p * q)));
  const QuadExt small(Rat(0), Rat(mpz_class(p)), Rat(mpz_class(q)));
  EXPECT_EQ(big, small);
  EXPECT_EQ(big + small, small * QuadExt(2));
  EXPECT_EQ(big * small, QuadExt(Rat(mpz_class(p * p * q))));
}
