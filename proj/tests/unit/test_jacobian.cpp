#include <gtest/gtest.h>

#include "c34/error.hpp"
#include "c34/jacobian.hpp"
#include "c34/oracle.hpp"
#include "support.hpp"

using namespace c34;
using c34::testing::el;
using c34::testing::pt;

namespace {

DivisorRep rep(const Curve& c, std::array<std::uint64_t, 6> v) {
  return make_divisor(c.scratch(), el(v[0]), el(v[1]), el(v[2]), el(v[3]), el(v[4]), el(v[5]));
}

// Split instances over F_31 frozen from the point-based reference script:
// D, D', addflip(D, D') and D + D'.
struct AddVector {
  std::array<AffinePoint, 3> d, dp;
  std::array<std::uint64_t, 6> flip, sum;
};

const AddVector kAdds[] = {
    {{pt(27, 19), pt(25, 16), pt(12, 10)},
     {pt(19, 29), pt(9, 28), pt(6, 16)},
     {23, 30, 7, 26, 10, 16},
     {23, 30, 7, 4, 27, 9}},
    {{pt(25, 15), pt(20, 29), pt(9, 21)},
     {pt(19, 29), pt(17, 8), pt(3, 27)},
     {3, 13, 11, 5, 23, 14},
     {3, 13, 11, 8, 10, 21}},
    {{pt(27, 19), pt(1, 17), pt(2, 5)},
     {pt(9, 28), pt(21, 3), pt(0, 12)},
     {30, 30, 21, 29, 18, 13},
     {30, 30, 21, 1, 7, 26}},
};

template <class Fn>
OpCount counted(FieldCtx& k, Fn&& fn) {
  const CountScope s(k);
  fn();
  return s.delta();
}

Curve curve1009(Rng& rng) { return random_curve(FieldCtx(1009), rng); }

}  // namespace

TEST(Jacobian, FrozenAdditions) {
  const Curve c = c34::testing::curve31();
  for (const AddVector& v : kAdds) {
    const DivisorRep D = from_points(c, v.d[0], v.d[1], v.d[2]);
    const DivisorRep Dp = from_points(c, v.dp[0], v.dp[1], v.dp[2]);
    FieldCtx k = c.scratch();
    EXPECT_EQ(addflip(k, c, D, Dp), rep(c, v.flip));
    EXPECT_EQ(add(k, c, D, Dp), rep(c, v.sum));
  }
}

TEST(Jacobian, FrozenAtypicalAddition) {
  // Split, but the kernel pivot D = A1 B2 - A2 B1 vanishes.
  const Curve c = c34::testing::curve31();
  const DivisorRep D = from_points(c, pt(17, 8), pt(8, 15), pt(11, 8));
  const DivisorRep Dp = from_points(c, pt(20, 29), pt(9, 13), pt(6, 21));
  EXPECT_EQ(D, rep(c, {5, 3, 23, 23, 23, 2}));
  EXPECT_EQ(Dp, rep(c, {8, 27, 6, 0, 3, 11}));
  FieldCtx k = c.scratch();
  try {
    addflip(k, c, D, Dp);
    FAIL();
  } catch (const AtypicalError& e) {
    EXPECT_EQ(e.stage(), "kernel_m");
    EXPECT_EQ(e.pivot(), "D");
  }
}

TEST(Jacobian, FrozenDoubling) {
  const Curve c = c34::testing::curve31();
  const DivisorRep D = from_points(c, pt(20, 29), pt(18, 11), pt(14, 18));
  EXPECT_EQ(D, rep(c, {29, 11, 27, 30, 4, 20}));
  FieldCtx k = c.scratch();
  EXPECT_EQ(addflip(k, c, D, D), rep(c, {25, 26, 13, 15, 17, 21}));
  EXPECT_EQ(double_class(k, c, D), rep(c, {25, 26, 13, 11, 12, 2}));
  const DivisorRep E = from_points(c, pt(6, 25), pt(17, 23), pt(27, 19));
  EXPECT_EQ(double_class(k, c, E), rep(c, {19, 1, 26, 18, 14, 28}));
}

TEST(Jacobian, CompositeCounts) {
  Rng rng(21);
  const Curve c = curve1009(rng);
  int checked = 0;
  while (checked < 50) {
    const DivisorRep D = random_typical(c, rng), Dp = random_typical(c, rng);
    FieldCtx k = c.scratch();
    try {
      EXPECT_EQ(counted(k, [&] { add(k, c, D, Dp); }), (OpCount{117, 2}));
      EXPECT_EQ(counted(k, [&] { double_class(k, c, D); }), (OpCount{129, 2}));
      EXPECT_EQ(counted(k, [&] { addflip(k, c, D, Dp); }), (OpCount{110, 2}));
      EXPECT_EQ(counted(k, [&] { addflip(k, c, D, D); }), (OpCount{122, 2}));
      EXPECT_EQ(counted(k, [&] { negate(k, c, D); }), (OpCount{7, 0}));
      EXPECT_EQ(counted(k, [&] { negate_with_h(k, c, D, true); }), (OpCount{10, 0}));
      ++checked;
    } catch (const AtypicalError&) {
    }
  }
}

TEST(Jacobian, StageCounts) {
  Rng rng(22);
  const Curve c = curve1009(rng);
  const DivisorRep D = random_typical(c, rng), Dp = random_typical(c, rng);
  FieldCtx k = c.scratch();
  Mat3x5 M;
  KernelBasis K;
  STPair st;
  Mat3x5 Mpp;
  EXPECT_EQ(counted(k, [&] { M = build_m_add(k, D, Dp); }), (OpCount{22, 0}));
  EXPECT_EQ(counted(k, [&] { K = kernel_m(k, M); }), (OpCount{39, 1}));
  EXPECT_EQ(counted(k, [&] { st = form_st(k, Dp, K); }), (OpCount{18, 0}));
  EXPECT_EQ(counted(k, [&] { Mpp = reduce_to_mpp(k, c, st); }), (OpCount{20, 0}));
  EXPECT_EQ(counted(k, [&] { solve_mpp(k, Mpp); }), (OpCount{11, 1}));
  EXPECT_EQ(counted(k, [&] { M = build_m_double(k, c, D); }), (OpCount{34, 0}));
}

TEST(Jacobian, SameDivisorRejected) {
  const Curve c = c34::testing::curve31();
  const DivisorRep D = rep(c, {29, 11, 27, 30, 4, 20});
  FieldCtx k = c.scratch();
  for (auto fn : {+[](FieldCtx& k, const Curve& c, const DivisorRep& D) { add(k, c, D, D); },
                  +[](FieldCtx& k, const Curve&, const DivisorRep& D) { build_m_add(k, D, D); }}) {
    try {
      fn(k, c, D);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::SameDivisor);
    }
  }
}

TEST(Jacobian, KernelOfFreeColumns) {
  FieldCtx k(31);
  Mat3x5 M;
  M.set_column(0, {el(1), el(0), el(0)});
  M.set_column(2, {el(0), el(0), el(1)});
  M.set_column(3, {el(0), el(1), el(0)});
  const KernelBasis K = kernel_m(k, M);
  EXPECT_EQ(K.v1, (std::array<Element, 5>{el(0), el(0), el(0), el(1), el(0)}));
  EXPECT_EQ(K.v2, (std::array<Element, 5>{el(0), el(0), el(0), el(0), el(1)}));
}

TEST(Jacobian, KernelPivotNames) {
  FieldCtx k(31);
  Mat3x5 M;  // all zero: A1 fails first
  try {
    kernel_m(k, M);
    FAIL();
  } catch (const AtypicalError& e) {
    EXPECT_EQ(e.pivot(), "A1");
  }
}

TEST(Jacobian, FormStWithZeroKernel) {
  const Curve c = c34::testing::curve31();
  const DivisorRep Dp = rep(c, {29, 11, 27, 30, 4, 20});
  FieldCtx k = c.scratch();
  KernelBasis K;
  const STPair st = form_st(k, Dp, K);
  EXPECT_EQ(st.s, (std::array<Element, 6>{el(0), Dp.a, Dp.b, el(0), Dp.c, el(0)}));
  // t = x G' = x^2y + d' xy + e' x^2 + f' x
  EXPECT_EQ(st.t, (std::array<Element, 6>{el(0), Dp.d, Dp.e, el(0), Dp.f, el(0)}));
  EXPECT_EQ(poly_s(st), poly_mul_monomial(c, poly_F(Dp), {1, 0}));
  EXPECT_EQ(poly_t(st), poly_mul_monomial(c, poly_G(Dp), {1, 0}));
}

TEST(Jacobian, KernelElementsVanishOnBothDivisors) {
  const Curve c = c34::testing::curve31();
  Rng rng(23);
  int checked = 0;
  while (checked < 30) {
    const SampledDivisor a = sample_typical(c, rng), b = sample_typical(c, rng);
    FieldCtx k = c.scratch();
    try {
      const Mat3x5 M = build_m_add(k, a.rep, b.rep);
      const KernelBasis K = kernel_m(k, M);
      const STPair st = form_st(k, b.rep, K);
      const DivisorRep R = solve_mpp(k, reduce_to_mpp(k, c, st));
      for (const auto* pts : {&a.points, &b.points})
        for (const AffinePoint& p : *pts) {
          EXPECT_EQ(eval_poly(c, poly_s(st), p), el(0));
          EXPECT_EQ(eval_poly(c, poly_t(st), p), el(0));
        }
      EXPECT_EQ(R.a, k.neg(reduce_to_mpp(k, c, st).at(2, 3)));
      ++checked;
    } catch (const AtypicalError&) {
    }
  }
}

TEST(Jacobian, DoublingKernelHasDoubleZeros) {
  Rng rng(24);
  const Curve c = random_curve(FieldCtx(101), rng);
  int checked = 0;
  while (checked < 30) {
    const SampledDivisor a = sample_typical(c, rng);
    FieldCtx k = c.scratch();
    try {
      const STPair st = form_st(k, a.rep, kernel_m(k, build_m_double(k, c, a.rep)));
      for (const CurvePoly& L : {poly_s(st), poly_t(st)}) {
        RawPoly Lx = derivative_x(c, L), Ly = derivative_y(c, L);
        for (const AffinePoint& p : a.points) {
          EXPECT_EQ(eval_poly(c, L, p), el(0));
          const auto [fx, fy] = partials(c, p.x, p.y);
          EXPECT_EQ(k.sub(k.mul(fy, eval_raw(c, Lx, p)), k.mul(fx, eval_raw(c, Ly, p))), el(0));
        }
      }
      ++checked;
    } catch (const AtypicalError&) {
    }
  }
}

TEST(Jacobian, NegationIdentityAndInvolution) {
  Rng rng(25);
  const Curve c = curve1009(rng);
  for (int t = 0; t < 100; ++t) {
    const DivisorRep D = random_typical(c, rng);
    FieldCtx k = c.scratch();
    const NegationResult nr = negate_with_h(k, c, D, true);
    const CurvePoly sum = poly_add(c, poly_mul(c, poly_G(D), poly_G(nr.neg)),
                                   poly_mul(c, poly_F(D), poly_H(k, *nr.h)));
    EXPECT_TRUE(sum.is_zero()) << render(sum);
    EXPECT_EQ(negate(k, c, nr.neg), D);
    EXPECT_EQ(nr.neg.a_inv, D.a_inv);
    EXPECT_EQ(nr.neg, oracle::generic_negate(c, D));
  }
}

TEST(Jacobian, AddInverseIsIdentity) {
  Rng rng(26);
  const Curve c = curve1009(rng);
  const DivisorRep D = random_typical(c, rng);
  FieldCtx k = c.scratch();
  const DivisorRep N = negate(k, c, D);
  k.reset_counter();
  try {
    addflip(k, c, D, N);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IdentityResult);
  }
  EXPECT_EQ(k.counter(), (OpCount{0, 0}));
}

TEST(Jacobian, Negabinary) {
  EXPECT_EQ(negabinary(3), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(negabinary(-1), (std::vector<int>{1, 1}));
  EXPECT_EQ(negabinary(6), (std::vector<int>{0, 1, 0, 1, 1}));
  EXPECT_TRUE(negabinary(0).empty());
  for (std::int64_t m : {INT64_MIN, INT64_MAX, std::int64_t{-12345}, std::int64_t{99}}) {
    __int128 sum = 0, pw = 1;
    for (int d : negabinary(m)) {
      sum += d * pw;
      pw *= -2;
    }
    EXPECT_TRUE(sum == m);
  }
}

TEST(Jacobian, ScalarMulSmall) {
  Rng rng(27);
  const Curve c = curve1009(rng);
  const DivisorRep D = random_typical(c, rng);
  FieldCtx k = c.scratch();
  EXPECT_EQ(scalar_mul(k, c, 1, D), D);
  EXPECT_EQ(scalar_mul(k, c, -1, D), negate(k, c, D));
  EXPECT_EQ(scalar_mul(k, c, 2, D), double_class(k, c, D));
  EXPECT_EQ(scalar_mul(k, c, 3, D), add(k, c, double_class(k, c, D), D));
  EXPECT_EQ(scalar_mul(k, c, 5, D), add(k, c, scalar_mul(k, c, 2, D), scalar_mul(k, c, 3, D)));
  EXPECT_THROW(scalar_mul(k, c, 0, D), Error);
}

TEST(Jacobian, ScalarMulAgainstRepeatedAddition) {
  Rng rng(28);
  const Curve c = curve1009(rng);
  int bases = 0;
  while (bases < 3) {
    const DivisorRep D = random_typical(c, rng);
    FieldCtx k = c.scratch();
    try {
      for (int m = -64; m <= 64; ++m) {
        if (m == 0) continue;
        const DivisorRep want = oracle::repeated_add(c, m, D);
        EXPECT_EQ(scalar_mul(k, c, m, D), want) << m;
        EXPECT_EQ(scalar_mul_double_add(k, c, m, D), want) << m;
      }
      ++bases;
    } catch (const Error&) {
    }
  }
}

TEST(Jacobian, Deterministic) {
  Rng rng(29);
  const Curve c = curve1009(rng);
  const DivisorRep D = random_typical(c, rng), Dp = random_typical(c, rng);
  FieldCtx k1 = c.scratch(), k2 = c.scratch();
  EXPECT_EQ(add(k1, c, D, Dp), add(k2, c, D, Dp));
  EXPECT_EQ(k1.counter(), k2.counter());
}
