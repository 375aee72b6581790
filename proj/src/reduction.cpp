#include "c34/reduction.hpp"

namespace c34 {

GHI compute_ghi(FieldCtx& ctx, const DivisorRep& D) {
  const Element d_minus_b = ctx.sub(D.d, D.b);
  const Element g = ctx.add(ctx.mul(D.a_inv, ctx.add(D.c, ctx.mul(D.d, d_minus_b))), D.e);
  const Element h = ctx.mul(D.a_inv, ctx.sub(ctx.mul(D.e, D.d), D.f));
  const Element i = ctx.mul(D.a_inv, ctx.add(ctx.mul(D.e, D.c), ctx.mul(D.f, d_minus_b)));
  return {g, h, i};
}

BVec tx_apply(FieldCtx& ctx, const DivisorRep& D, const BVec& b) {
  //      | 0  -c  -f |
  // T_x = | 1  -b  -e |
  //      | 0  -a  -d |
  const Element r0 = ctx.neg(ctx.add(ctx.mul(D.c, b.x), ctx.mul(D.f, b.y)));
  const Element r1 = ctx.sub(b.one, ctx.add(ctx.mul(D.b, b.x), ctx.mul(D.e, b.y)));
  const Element r2 = ctx.neg(ctx.add(ctx.mul(D.a, b.x), ctx.mul(D.d, b.y)));
  return {r0, r1, r2};
}

BVec ty_apply(FieldCtx& ctx, const DivisorRep& D, const GHI& ghi, const BVec& b) {
  //      | 0  -f  -i |
  // T_y = | 0  -e  -h |
  //      | 1  -d  -g |
  const Element r0 = ctx.neg(ctx.add(ctx.mul(D.f, b.x), ctx.mul(ghi.i, b.y)));
  const Element r1 = ctx.neg(ctx.add(ctx.mul(D.e, b.x), ctx.mul(ghi.h, b.y)));
  const Element r2 = ctx.sub(b.one, ctx.add(ctx.mul(D.d, b.x), ctx.mul(ghi.g, b.y)));
  return {r0, r1, r2};
}

BVec y_reduce_direct(FieldCtx& ctx, const DivisorRep& D, const BVec& b) {
  // y u = alpha y + beta xy + gamma y^2; subtract gamma a^{-1} (yF - xG):
  //   w = delta x + epsilon y + zeta x^2 + eta xy
  const Element k = ctx.mul(b.y, D.a_inv);
  const Element delta = ctx.mul(k, D.f);
  const Element epsilon = ctx.sub(b.one, ctx.mul(k, D.c));
  const Element zeta = ctx.mul(k, D.e);
  const Element eta = ctx.sub(b.x, ctx.mul(k, ctx.sub(D.b, D.d)));
  // w - zeta F - eta G
  const Element r0 = ctx.neg(ctx.add(ctx.mul(zeta, D.c), ctx.mul(eta, D.f)));
  const Element r1 = ctx.sub(delta, ctx.add(ctx.mul(zeta, D.b), ctx.mul(eta, D.e)));
  const Element r2 = ctx.sub(epsilon, ctx.add(ctx.mul(zeta, D.a), ctx.mul(eta, D.d)));
  return {r0, r1, r2};
}

Mat3 tx_matrix(const FieldCtx& field, const DivisorRep& D) {
  const FieldCtx& k = field;
  return Mat3{{{k.zero(), k.neg(D.c), k.neg(D.f)},
               {k.one(), k.neg(D.b), k.neg(D.e)},
               {k.zero(), k.neg(D.a), k.neg(D.d)}}};
}

Mat3 ty_matrix(const FieldCtx& field, const GHI& ghi, const DivisorRep& D) {
  const FieldCtx& k = field;
  return Mat3{{{k.zero(), k.neg(D.f), k.neg(ghi.i)},
               {k.zero(), k.neg(D.e), k.neg(ghi.h)},
               {k.one(), k.neg(D.d), k.neg(ghi.g)}}};
}

Mat3 mat3_mul(const FieldCtx& field, const Mat3& l, const Mat3& r) {
  FieldCtx k = field.scratch();
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int t = 0; t < 3; ++t) out[i][j] = k.add(out[i][j], k.mul(l[i][t], r[t][j]));
  return out;
}

bool lies_on_curve(const Curve& curve, const DivisorRep& D) {
  FieldCtx k = curve.scratch();
  const GHI ghi = compute_ghi(k, D);
  const Mat3 tx = tx_matrix(k, D);
  const Mat3 ty = ty_matrix(k, ghi, D);
  if (mat3_mul(k, tx, ty) != mat3_mul(k, ty, tx)) return false;

  auto axpy = [&](BVec acc, Element c, const BVec& v) {
    return BVec{k.add(acc.one, k.mul(c, v.one)), k.add(acc.x, k.mul(c, v.x)),
                k.add(acc.y, k.mul(c, v.y))};
  };
  // B of x^i y^j for the monomials of f, by repeated multiplication.
  const BVec one{k.one(), k.zero(), k.zero()};
  const BVec x = tx_apply(k, D, one);
  const BVec y = ty_apply(k, D, ghi, one);
  const BVec x2 = tx_apply(k, D, x);
  const BVec x3 = tx_apply(k, D, x2);
  const BVec x4 = tx_apply(k, D, x3);
  const BVec xy = tx_apply(k, D, y);
  const BVec x2y = tx_apply(k, D, xy);
  const BVec y2 = ty_apply(k, D, ghi, y);
  const BVec y3 = ty_apply(k, D, ghi, y2);

  BVec acc = y3;
  acc = axpy(acc, k.neg(k.one()), x4);
  acc = axpy(acc, curve.p2(), x2y);
  acc = axpy(acc, curve.p1(), xy);
  acc = axpy(acc, curve.p0(), y);
  acc = axpy(acc, curve.q2(), x2);
  acc = axpy(acc, curve.q1(), x);
  acc = axpy(acc, curve.q0(), one);
  return acc == BVec{};
}

}  // namespace c34
