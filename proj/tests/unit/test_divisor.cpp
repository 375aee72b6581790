#include <gtest/gtest.h>

#include <map>

#include "c34/divisor.hpp"
#include "c34/error.hpp"
#include "c34/jacobian.hpp"
#include "c34/reduction.hpp"
#include "support.hpp"

using namespace c34;
using c34::testing::el;
using c34::testing::pt;

namespace {

DivisorRep rep(const Curve& c, std::uint64_t a, std::uint64_t b, std::uint64_t cc, std::uint64_t d,
               std::uint64_t e, std::uint64_t f) {
  return make_divisor(c.scratch(), el(a), el(b), el(cc), el(d), el(e), el(f));
}

}  // namespace

TEST(Divisor, FromPointsFrozen) {
  const Curve c = c34::testing::curve31();
  const DivisorRep D = from_points(c, pt(27, 19), pt(18, 11), pt(5, 15));
  EXPECT_EQ(D, rep(c, 29, 5, 11, 7, 7, 2));
  FieldCtx k(31);
  EXPECT_EQ(k.mul(D.a, D.a_inv), el(1));
}

TEST(Divisor, FromPointsVanishes) {
  const Curve c = c34::testing::curve31();
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const SampledDivisor s = sample_typical(c, rng);
    for (const AffinePoint& p : s.points) {
      EXPECT_EQ(eval_poly(c, poly_F(s.rep), p), el(0));
      EXPECT_EQ(eval_poly(c, poly_G(s.rep), p), el(0));
    }
    EXPECT_TRUE(lies_on_curve(c, s.rep));
  }
}

TEST(Divisor, EqualXIsAtypical) {
  const Curve c = c34::testing::curve31();
  try {
    from_points(c, pt(0, 12), pt(0, 22), pt(0, 28));
    FAIL();
  } catch (const AtypicalError& e) {
    EXPECT_EQ(e.stage(), "from_points");
  }
}

TEST(Divisor, DuplicatePointsRejected) {
  const Curve c = c34::testing::curve31();
  try {
    from_points(c, pt(27, 19), pt(27, 19), pt(5, 15));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicatePointsUnsupported);
  }
}

TEST(Divisor, MakeDivisorRejectsZeroA) {
  const Curve c = c34::testing::curve31();
  EXPECT_THROW(rep(c, 0, 1, 2, 3, 4, 5), AtypicalError);
}

TEST(Divisor, RandomTypicalDeterministic) {
  const Curve c = c34::testing::curve31();
  Rng a(77), b(77);
  for (int t = 0; t < 20; ++t) EXPECT_EQ(random_typical(c, a), random_typical(c, b));
}

TEST(Divisor, RetryRateAtP1009) {
  Rng rng(13);
  const Curve c = random_curve(FieldCtx(1009), rng);
  int retries = 0;
  for (int t = 0; t < 10000; ++t) retries += sample_typical(c, rng).retries;
  EXPECT_LT(retries, 500);
}

TEST(Divisor, EqualityIsClassEquality) {
  const Curve c = c34::testing::curve31();
  const DivisorRep D = from_points(c, pt(27, 19), pt(18, 11), pt(5, 15));
  EXPECT_TRUE(div_eq(D, D));
  const DivisorRep E = from_points(c, pt(17, 8), pt(8, 15), pt(11, 8));
  EXPECT_FALSE(div_eq(D, E));
  // Same class from different point sets: D + D' computed from two splittings.
  // The second frozen addition instance; its sum splits as (2,5), (5,15), (21,3).
  FieldCtx k = c.scratch();
  const DivisorRep A = from_points(c, pt(27, 19), pt(25, 16), pt(12, 10));
  const DivisorRep B = from_points(c, pt(19, 29), pt(9, 28), pt(6, 16));
  const DivisorRep sum = add(k, c, A, B);
  EXPECT_TRUE(div_eq(sum, from_points(c, pt(2, 5), pt(5, 15), pt(21, 3))));
}

TEST(Divisor, FormatAndParse) {
  const Curve c = c34::testing::curve31();
  const DivisorRep D = rep(c, 29, 5, 11, 7, 7, 2);
  EXPECT_EQ(format_divisor(D), "29,5,11,7,7,2");
  EXPECT_EQ(parse_divisor(c.scratch(), "29,5,11,7,7,2"), D);
  for (const char* bad : {"29,5,11,7,7", "29,5,11,7,7,2,1", "29,5,x,7,7,2", "29,5,31,7,7,2", "",
                          "29,,11,7,7,2", "-1,5,11,7,7,2"}) {
    try {
      parse_divisor(c.scratch(), bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::InvalidInput) << bad;
    }
  }
  EXPECT_THROW(parse_divisor(c.scratch(), "0,5,11,7,7,2"), AtypicalError);
}
