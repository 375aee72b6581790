#include "c34/jacobian.hpp"

#include <string>

#include "c34/error.hpp"

namespace c34 {

namespace {

struct Mat2 {
  Element m00, m01, m10, m11;
};

// Strassen's 7-multiplication 2x2 product.
Mat2 strassen(FieldCtx& ctx, const Mat2& A, const Mat2& B) {
  const Element p1 = ctx.mul(ctx.add(A.m00, A.m11), ctx.add(B.m00, B.m11));
  const Element p2 = ctx.mul(ctx.add(A.m10, A.m11), B.m00);
  const Element p3 = ctx.mul(A.m00, ctx.sub(B.m01, B.m11));
  const Element p4 = ctx.mul(A.m11, ctx.sub(B.m10, B.m00));
  const Element p5 = ctx.mul(ctx.add(A.m00, A.m01), B.m11);
  const Element p6 = ctx.mul(ctx.sub(A.m10, A.m00), ctx.add(B.m00, B.m01));
  const Element p7 = ctx.mul(ctx.sub(A.m01, A.m11), ctx.add(B.m10, B.m11));
  return Mat2{ctx.add(ctx.sub(ctx.add(p1, p4), p5), p7), ctx.add(p3, p5), ctx.add(p2, p4),
              ctx.add(ctx.add(ctx.sub(p1, p2), p3), p6)};
}

// T_x applied to two vectors at once: 7M for the (c f; b e) block, 4M for
// the (a d) row; the first column of T_x is (0, 1, 0) and costs nothing.
std::pair<BVec, BVec> tx_pair(FieldCtx& ctx, const DivisorRep& D, const BVec& u, const BVec& w) {
  const Mat2 top = strassen(ctx, Mat2{D.c, D.f, D.b, D.e}, Mat2{u.x, w.x, u.y, w.y});
  const Element bottom_u = ctx.add(ctx.mul(D.a, u.x), ctx.mul(D.d, u.y));
  const Element bottom_w = ctx.add(ctx.mul(D.a, w.x), ctx.mul(D.d, w.y));
  const BVec xu{ctx.neg(top.m00), ctx.sub(u.one, top.m10), ctx.neg(bottom_u)};
  const BVec xw{ctx.neg(top.m01), ctx.sub(w.one, top.m11), ctx.neg(bottom_w)};
  return {xu, xw};
}

BVec neg(const FieldCtx& ctx, const BVec& v) {
  return {ctx.neg(v.one), ctx.neg(v.x), ctx.neg(v.y)};
}

bool same_f(const DivisorRep& l, const DivisorRep& r) {
  return l.a == r.a && l.b == r.b && l.c == r.c;
}

}  // namespace

CurvePoly poly_s(const STPair& st) {
  CurvePoly p;
  p.set({3, 0}, Element{1});
  p.set({0, 2}, st.s[0]);
  p.set({1, 1}, st.s[1]);
  p.set({2, 0}, st.s[2]);
  p.set({0, 1}, st.s[3]);
  p.set({1, 0}, st.s[4]);
  p.set({0, 0}, st.s[5]);
  return p;
}

CurvePoly poly_t(const STPair& st) {
  CurvePoly p;
  p.set({2, 1}, Element{1});
  p.set({0, 2}, st.t[0]);
  p.set({1, 1}, st.t[1]);
  p.set({2, 0}, st.t[2]);
  p.set({0, 1}, st.t[3]);
  p.set({1, 0}, st.t[4]);
  p.set({0, 0}, st.t[5]);
  return p;
}

CurvePoly poly_H(const FieldCtx& field, const HPoly& h) {
  CurvePoly p;
  p.set({0, 2}, field.neg(field.one()));
  p.set({2, 0}, h.a);
  p.set({0, 1}, h.hy);
  p.set({1, 0}, h.hx);
  p.set({0, 0}, h.h0);
  return p;
}

Mat3x5 build_m_add(FieldCtx& ctx, const DivisorRep& D, const DivisorRep& Dp) {
  if (D == Dp) throw Error(Errc::SameDivisor, "build_m_add needs distinct divisors");
  // F' = F' - F and G' = G' - G modulo <F, G>.
  const BVec bf{ctx.sub(Dp.c, D.c), ctx.sub(Dp.b, D.b), ctx.sub(Dp.a, D.a)};
  const BVec bg{ctx.sub(Dp.f, D.f), ctx.sub(Dp.e, D.e), ctx.sub(Dp.d, D.d)};
  const auto [bxf, bxg] = tx_pair(ctx, D, bf, bg);
  const BVec byf = y_reduce_direct(ctx, D, bf);
  Mat3x5 M;
  M.set_column(0, bf);
  M.set_column(1, bxf);
  M.set_column(2, byf);
  M.set_column(3, bg);
  M.set_column(4, bxg);
  return M;
}

NegationResult negate_with_h(FieldCtx& ctx, const Curve& curve, const DivisorRep& D,
                             bool want_h) {
  const Element m = ctx.add(D.e, ctx.mul(D.a, ctx.add(D.a, curve.p2())));
  const Element d_minus_b = ctx.sub(D.d, D.b);
  const Element ell = ctx.add(D.c, ctx.mul(d_minus_b, D.d));
  const Element ell_ainv = ctx.mul(ell, D.a_inv);
  const Element ab = ctx.mul(D.a, D.b);

  const Element ell_ainv_m = ctx.add(ell_ainv, m);
  DivisorRep out = D;
  out.d = ctx.neg(d_minus_b);
  out.e = ctx.neg(ell_ainv_m);
  Element f3 = ctx.mul(m, D.d);
  f3 = ctx.add(f3, ctx.mul(ctx.add(ell_ainv, D.e), d_minus_b));
  f3 = ctx.add(f3, ctx.mul(D.a, ctx.sub(ab, curve.p1())));
  out.f = ctx.sub(f3, D.f);

  NegationResult res{out, std::nullopt, ell_ainv, ab};
  if (want_h) {
    const Element b2 = ctx.mul(D.b, D.b);
    const Element tail = ctx.mul(D.a, ctx.sub(ctx.sub(b2, D.c), curve.q2()));
    const Element h0 = ctx.add(ctx.mul(ell_ainv_m, D.e), tail);
    res.h = HPoly{D.a, ell_ainv, ctx.neg(ab), h0};
  }
  return res;
}

DivisorRep negate(FieldCtx& ctx, const Curve& curve, const DivisorRep& D) {
  return negate_with_h(ctx, curve, D, false).neg;
}


Mat3x5 build_m_double(FieldCtx& ctx, const Curve& curve, const DivisorRep& D) {
  const NegationResult nr = negate_with_h(ctx, curve, D, true);
  const DivisorRep& G1 = nr.neg;
  const HPoly& H1 = *nr.h;

  // g, h, i of the y^2 relation; g reuses ell * a^{-1}.
  const Element d_minus_b = ctx.sub(D.d, D.b);
  const Element g = ctx.add(nr.ell_ainv, D.e);
  const Element h = ctx.mul(D.a_inv, ctx.sub(ctx.mul(D.e, D.d), D.f));
  const Element i = ctx.mul(D.a_inv, ctx.add(ctx.mul(D.e, D.c), ctx.mul(D.f, d_minus_b)));

  const BVec bg1{ctx.sub(G1.f, D.f), ctx.sub(G1.e, D.e), ctx.sub(G1.d, D.d)};
  // H1 + y^2 + g y + h x + i - a F
  const Element a2 = ctx.mul(D.a, D.a);
  const Element ac = ctx.mul(D.a, D.c);
  const BVec bh1{ctx.sub(ctx.add(H1.h0, i), ac), ctx.sub(ctx.add(H1.hx, h), nr.ab),
                 ctx.sub(ctx.add(H1.hy, g), a2)};
  const BVec bmh1 = neg(ctx, bh1);

  const auto [bxg1, bmxh1] = tx_pair(ctx, D, bg1, bmh1);
  const BVec byg1 = ty_apply(ctx, D, GHI{g, h, i}, bg1);

  Mat3x5 M;
  M.set_column(0, bg1);
  M.set_column(1, bxg1);
  M.set_column(2, byg1);
  M.set_column(3, bmh1);
  M.set_column(4, bmxh1);
  return M;
}

Mat3x5 permute_m(const FieldCtx& field, const Mat3x5& M) {
  Mat3x5 P;
  const BVec k3 = M.column(2);
  const BVec k5 = M.column(4);
  P.set_column(0, M.column(0));
  P.set_column(1, M.column(3));
  P.set_column(2, BVec{field.sub(k3.one, k5.one), field.sub(k3.x, k5.x), field.sub(k3.y, k5.y)});
  P.set_column(3, M.column(1));
  P.set_column(4, k5);
  return P;
}

KernelBasis kernel_m(FieldCtx& ctx, const Mat3x5& M) {
  const Mat3x5 P = permute_m(ctx, M);
  const Element A1 = P.at(0, 0), A2 = P.at(1, 0), A3 = P.at(2, 0);
  const Element B1 = P.at(0, 1), B2 = P.at(1, 1), B3 = P.at(2, 1);
  const Element C1 = P.at(0, 2), C2 = P.at(1, 2), C3 = P.at(2, 2);
  const Element D1 = P.at(0, 3), D2 = P.at(1, 3), D3 = P.at(2, 3);
  const Element E1 = P.at(0, 4), E2 = P.at(1, 4), E3 = P.at(2, 4);

  auto cross = [&](Element p, Element q, Element r, Element s) {
    return ctx.sub(ctx.mul(p, q), ctx.mul(r, s));
  };
  const Element d12 = cross(A1, B2, A2, B1);
  const Element d13 = cross(A1, B3, A3, B1);
  const Element d23 = cross(A2, B3, A3, B2);
  const Element sigma1 = cross(A1, C2, A2, C1);
  const Element sigma2 = cross(A1, D2, A2, D1);
  const Element sigma3 = cross(A1, E2, A2, E1);
  auto minor3 = [&](Element x1, Element x2, Element x3) {
    return ctx.add(ctx.sub(ctx.mul(d12, x3), ctx.mul(d13, x2)), ctx.mul(d23, x1));
  };
  const Element U = minor3(C1, C2, C3);
#ifdef C34_INJECT_SIGMA4_FAULT
  const Element sigma4 = ctx.add(minor3(D1, D2, D3), ctx.one());
#else
  const Element sigma4 = minor3(D1, D2, D3);
#endif
  const Element sigma5 = minor3(E1, E2, E3);

  if (A1.v == 0) throw AtypicalError("kernel_m", "A1");
  if (d12.v == 0) throw AtypicalError("kernel_m", "D");
  if (U.v == 0) throw AtypicalError("kernel_m", "U");

  // One inversion for A1^{-1}, D^{-1}, U^{-1}.
  const Element q1 = ctx.mul(A1, d12);
  const Element q2 = ctx.mul(q1, U);
  const Element q3 = ctx.inv(q2);
  const Element u_inv = ctx.mul(q1, q3);
  const Element q4 = ctx.mul(U, q3);
  const Element d_inv = ctx.mul(A1, q4);
  const Element a1_inv = ctx.mul(d12, q4);

  KernelBasis K;
  const Element gamma = ctx.neg(ctx.mul(sigma4, u_inv));
  const Element beta = ctx.neg(ctx.mul(ctx.add(ctx.mul(sigma1, gamma), sigma2), d_inv));
  const Element alpha = ctx.neg(
      ctx.mul(ctx.add(ctx.add(ctx.mul(B1, beta), ctx.mul(C1, gamma)), D1), a1_inv));
  const Element zeta = ctx.neg(ctx.mul(sigma5, u_inv));
  const Element epsilon = ctx.neg(ctx.mul(ctx.add(ctx.mul(sigma1, zeta), sigma3), d_inv));
  const Element delta = ctx.neg(
      ctx.mul(ctx.add(ctx.add(ctx.mul(B1, epsilon), ctx.mul(C1, zeta)), E1), a1_inv));
  K.v1 = {alpha, beta, gamma, ctx.one(), ctx.zero()};
  K.v2 = {delta, epsilon, zeta, ctx.zero(), ctx.one()};
  return K;
}

STPair form_st(FieldCtx& ctx, const DivisorRep& Dp, const KernelBasis& K) {
  const Element ap = Dp.a, bp = Dp.b, cp = Dp.c, dp = Dp.d, ep = Dp.e, fp = Dp.f;
  const Element bd = ctx.sub(bp, dp);

  // (u + w y) F' + (v - w x) G' + x H' for H' = F' (s) or H' = G' (t).
  auto half = [&](Element u, Element v, Element w, bool is_s) {
    const Element w_bd = ctx.mul(w, bd);
    const Element u_b = ctx.mul(u, bp);
    const Element v_d = ctx.mul(v, dp);
    const Element pa1 = ctx.mul(u, cp);
    const Element pa2 = ctx.mul(w, ap);
    const Element pa3 = ctx.mul(ctx.add(u, w), ctx.add(ap, cp));
    const Element qb1 = ctx.mul(v, fp);
    const Element qb2 = ctx.mul(w, ep);
    const Element qb3 = ctx.mul(ctx.sub(v, w), ctx.add(ep, fp));
    const Element ua_wc = ctx.sub(ctx.sub(pa3, pa1), pa2);
    const Element ve_wf = ctx.add(ctx.sub(qb3, qb1), qb2);
    std::array<Element, 6> r{};
    r[0] = pa2;
    r[3] = ctx.add(v_d, ua_wc);
    r[5] = ctx.add(pa1, qb1);
    if (is_s) {
      r[1] = ctx.add(ctx.add(v, ap), w_bd);
      r[2] = ctx.sub(ctx.add(u, bp), qb2);
      r[4] = ctx.add(ctx.add(cp, u_b), ve_wf);
    } else {
      r[1] = ctx.add(ctx.add(v, dp), w_bd);
      r[2] = ctx.sub(ctx.add(u, ep), qb2);
      r[4] = ctx.add(ctx.add(fp, u_b), ve_wf);
    }
    return r;
  };
  STPair st;
  st.s = half(K.v1[0], K.v1[1], K.v1[2], true);
  st.t = half(K.v2[0], K.v2[1], K.v2[2], false);
  return st;
}

Mat3x5 reduce_to_mpp(FieldCtx& ctx, const Curve& curve, const STPair& st) {
  const Element s1 = st.s[0], s2 = st.s[1], s3 = st.s[2], s4 = st.s[3], s5 = st.s[4];
  const Element t1 = st.t[0], t2 = st.t[1], t3 = st.t[2], t4 = st.t[3], t5 = st.t[4];
  const Element p2 = curve.p2(), p1 = curve.p1(), q2 = curve.q2();

  const Element s2p2 = ctx.add(s2, p2);
  const Element s4p1 = ctx.add(s4, p1);
  const Element s3_p2 = ctx.mul(s3, p2);
  const Element s1_s2p2 = ctx.mul(s1, s2p2);
  const Element s1_sq = ctx.mul(s1, s1);
  const Element s1_s3 = ctx.mul(s1, s3);
  const Element s1_s5q2 = ctx.mul(s1, ctx.add(s5, q2));
  const Element s1_s4p1 = ctx.mul(s1, s4p1);
  const Element t3_s1s3 = ctx.add(t3, s1_s3);
  const Element fused = ctx.mul(t3_s1s3, p2);

  // Rows of the reduced y s on (x^2y, xy^2): (s3 - s1(s2+p2), s2 - s1^2).
  const Element d8_0 = ctx.sub(s3, s1_s2p2);
  const Element d8_1 = ctx.sub(s2, s1_sq);

  const Element alpha2 = ctx.sub(t2, d8_0);
  const Element beta2 = ctx.sub(t1, d8_1);
  const Element alpha3 = ctx.sub(t3, ctx.mul(t1, s2p2));
  const Element beta3 = ctx.sub(t2, ctx.mul(t1, s1));

  const Element z2 = ctx.add(ctx.sub(t4, s5), s1_s4p1);
  const Element m1 = ctx.add(z2, fused);
  const Element m2 = ctx.neg(s4);
  const Element m3 = t3_s1s3;
  const Element m4 = alpha2;
  // Equal to beta2 as an element; kept as its own entry.
  const Element m5 = beta2;

  const Element z6 = beta2;
  const Element l1 =
      ctx.sub(ctx.add(t5, s1_s5q2), ctx.mul(z6, ctx.add(s4p1, s3_p2)));
  const Element l2 = z2;
  const Element l3 = ctx.sub(m2, ctx.mul(z6, s3));
  const Element l4 = ctx.sub(t3_s1s3, ctx.mul(z6, s2p2));
  const Element l5 = ctx.sub(alpha2, ctx.mul(z6, s1));

  const Mat2 P = strassen(ctx, Mat2{s2p2, d8_0, s1, d8_1}, Mat2{m3, l3, m4, l4});

  Mat3x5 M;
  M.set_column(0, BVec{ctx.one(), ctx.zero(), ctx.zero()});
  M.set_column(1, BVec{alpha2, beta2, ctx.zero()});
  M.set_column(2, BVec{alpha3, beta3, ctx.one()});
  M.set_column(3, BVec{ctx.sub(m1, P.m00), ctx.sub(m2, P.m10), m5});
  M.set_column(4, BVec{ctx.sub(l1, P.m01), ctx.sub(l2, P.m11), l5});
  return M;
}

DivisorRep solve_mpp(FieldCtx& ctx, const Mat3x5& Mpp) {
  const Element alpha2 = Mpp.at(0, 1), beta2 = Mpp.at(1, 1);
  const Element alpha3 = Mpp.at(0, 2), beta3 = Mpp.at(1, 2);
  const Element alpha4 = Mpp.at(0, 3), beta4 = Mpp.at(1, 3), gamma4 = Mpp.at(2, 3);
  const Element alpha5 = Mpp.at(0, 4), beta5 = Mpp.at(1, 4), gamma5 = Mpp.at(2, 4);
  if (beta2.v == 0) throw AtypicalError("solve_mpp", "beta2");
  if (gamma4.v == 0) throw AtypicalError("solve_mpp", "gamma4");

  const Element q = ctx.mul(beta2, gamma4);
  const Element qi = ctx.inv(q);
  const Element beta2_inv = ctx.mul(qi, gamma4);
  const Element gamma4_inv = ctx.mul(qi, beta2);

  DivisorRep out;
  out.a = ctx.neg(gamma4);
  out.b = ctx.neg(ctx.mul(beta2_inv, ctx.add(ctx.mul(beta3, out.a), beta4)));
  out.c = ctx.neg(ctx.add(ctx.add(ctx.mul(alpha2, out.b), ctx.mul(alpha3, out.a)), alpha4));
  out.d = ctx.neg(gamma5);
  out.e = ctx.neg(ctx.mul(beta2_inv, ctx.add(ctx.mul(beta3, out.d), beta5)));
  out.f = ctx.neg(ctx.add(ctx.add(ctx.mul(alpha2, out.e), ctx.mul(alpha3, out.d)), alpha5));
  out.a_inv = ctx.neg(gamma4_inv);
  return out;
}

DivisorRep addflip(FieldCtx& ctx, const Curve& curve, const DivisorRep& D,
                   const DivisorRep& Dp) {
  Mat3x5 M;
  if (D == Dp) {
    M = build_m_double(ctx, curve, D);
  } else {
    if (same_f(D, Dp)) {
      FieldCtx scratch = ctx.scratch();
      if (negate(scratch, curve, D) == Dp) {
        throw Error(Errc::IdentityResult, "D' = -D; the sum is the zero class");
      }
      throw AtypicalError("addflip", "F' - F");
    }
    M = build_m_add(ctx, D, Dp);
  }
  const KernelBasis K = kernel_m(ctx, M);
  const STPair st = form_st(ctx, Dp, K);
  const Mat3x5 Mpp = reduce_to_mpp(ctx, curve, st);
  return solve_mpp(ctx, Mpp);
}

DivisorRep add(FieldCtx& ctx, const Curve& curve, const DivisorRep& D, const DivisorRep& Dp) {
  if (D == Dp) throw Error(Errc::SameDivisor, "add needs distinct divisors; use double");
  return negate(ctx, curve, addflip(ctx, curve, D, Dp));
}

DivisorRep double_class(FieldCtx& ctx, const Curve& curve, const DivisorRep& D) {
  return negate(ctx, curve, addflip(ctx, curve, D, D));
}

std::vector<int> negabinary(std::int64_t m) {
  std::vector<int> digits;
  // Work in __int128 so that INT64_MIN and its quotients stay exact.
  __int128 n = m;
  while (n != 0) {
    const int d = static_cast<int>(((n % 2) + 2) % 2);
    digits.push_back(d);
    n = (n - d) / -2;
  }
  return digits;
}

DivisorRep scalar_mul(FieldCtx& ctx, const Curve& curve, std::int64_t m, const DivisorRep& D) {
  if (m == 0) throw Error(Errc::InvalidInput, "scalar must be nonzero");
  const std::vector<int> digits = negabinary(m);
  const DivisorRep nu = negate(ctx, curve, D);
  // acc <- -2 acc + d D, from the top digit down.
  DivisorRep acc = D;
  for (std::size_t k = digits.size() - 1; k-- > 0;) {
    if (digits[k] == 0) {
      acc = addflip(ctx, curve, acc, acc);
    } else if (acc == D) {
      // -2D + D = -D
      acc = nu;
    } else {
      // -(acc + (-D)) is acc' with addflip(acc, acc') = -2acc + D.
      acc = addflip(ctx, curve, acc, negate(ctx, curve, addflip(ctx, curve, acc, nu)));
    }
  }
  return acc;
}

DivisorRep scalar_mul_double_add(FieldCtx& ctx, const Curve& curve, std::int64_t m,
                                 const DivisorRep& D) {
  if (m == 0) throw Error(Errc::InvalidInput, "scalar must be nonzero");
  const unsigned __int128 n = m < 0 ? -static_cast<__int128>(m) : m;
  int top = 127;
  while (((n >> top) & 1) == 0) --top;
  DivisorRep acc = D;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = double_class(ctx, curve, acc);
    if ((n >> bit) & 1) acc = add(ctx, curve, acc, D);
  }
  return m < 0 ? negate(ctx, curve, acc) : acc;
}

}  // namespace c34
