#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "c34/curve.hpp"
#include "c34/divisor.hpp"
#include "c34/field.hpp"
#include "c34/reduction.hpp"

namespace c34 {

/// 3x5 linear system; row-major.
struct Mat3x5 {
  std::array<std::array<Element, 5>, 3> rows{};

  Element& at(int r, int c) { return rows[r][c]; }
  Element at(int r, int c) const { return rows[r][c]; }
  BVec column(int c) const { return {rows[0][c], rows[1][c], rows[2][c]}; }
  void set_column(int c, const BVec& v) {
    rows[0][c] = v.one;
    rows[1][c] = v.x;
    rows[2][c] = v.y;
  }

  friend bool operator==(const Mat3x5&, const Mat3x5&) = default;
};

/// Kernel of the permuted system: v1 = (alpha, beta, gamma, 1, 0) gives s,
/// v2 = (delta, epsilon, zeta, 0, 1) gives t.
struct KernelBasis {
  std::array<Element, 5> v1{};
  std::array<Element, 5> v2{};
};

/// s = x^3 + s1 y^2 + s2 xy + s3 x^2 + s4 y + s5 x + s6
/// t = x^2 y + t1 y^2 + t2 xy + t3 x^2 + t4 y + t5 x + t6
/// s[0] holds s1, and so on.
struct STPair {
  std::array<Element, 6> s{};
  std::array<Element, 6> t{};

  friend bool operator==(const STPair&, const STPair&) = default;
};

CurvePoly poly_s(const STPair& st);
CurvePoly poly_t(const STPair& st);

/// H = -y^2 + a x^2 + hy y + hx x + h0, with G''G''' + F''H = 0.
struct HPoly {
  Element a, hy, hx, h0;
};

struct NegationResult {
  DivisorRep neg;
  std::optional<HPoly> h;
  // Shared with the doubling matrix: ell * a^{-1} and a * b.
  Element ell_ainv;
  Element ab;
};

CurvePoly poly_H(const FieldCtx& field, const HPoly& h);

// --- pipeline stages; each has a fixed, input-independent cost ---

/// Columns (B_F', B_xF', B_yF', B_G', B_xG') reduced modulo <F, G>. 22M.
/// Throws Error{SameDivisor} when D == D'.
Mat3x5 build_m_add(FieldCtx& ctx, const DivisorRep& D, const DivisorRep& Dp);

/// Columns (B_G1, B_xG1, B_yG1, B_-H1, B_-xH1) for W^10_{2D}. 34M.
Mat3x5 build_m_double(FieldCtx& ctx, const Curve& curve, const DivisorRep& D);

/// Permutes M to M' = (K1, K4, K3 - K5, K2, K5) and solves for the two
/// kernel vectors. 39M, 1I. Throws AtypicalError for pivots A1, D, U.
KernelBasis kernel_m(FieldCtx& ctx, const Mat3x5& M);

/// Column permutation used by kernel_m; free.
Mat3x5 permute_m(const FieldCtx& field, const Mat3x5& M);

/// s and t from the kernel vectors and the second operand. 18M.
STPair form_st(FieldCtx& ctx, const DivisorRep& Dp, const KernelBasis& K);

/// Images of t, xt, yt, x^2t, xyt in W^17 / (sW^8 + W^9), on the
/// coordinates (x^2y, xy^2, x^2y^2). 20M.
Mat3x5 reduce_to_mpp(FieldCtx& ctx, const Curve& curve, const STPair& st);

/// Kernel of M'' as (F'', G'') with the inverse of a'' = -gamma4. 11M, 1I.
/// Throws AtypicalError for pivots beta2, gamma4.
DivisorRep solve_mpp(FieldCtx& ctx, const Mat3x5& Mpp);

/// G''' (7M) or G''' and H (10M). F''' = F'' and a'''^{-1} = a''^{-1}.
NegationResult negate_with_h(FieldCtx& ctx, const Curve& curve, const DivisorRep& D,
                             bool want_h);
DivisorRep negate(FieldCtx& ctx, const Curve& curve, const DivisorRep& D);

/// -(D + D'). Routes to the doubling matrix when the representations are
/// equal: 110M, 2I for distinct inputs, 122M, 2I for equal ones.
/// Throws Error{IdentityResult} when D' = -D, AtypicalError otherwise.
DivisorRep addflip(FieldCtx& ctx, const Curve& curve, const DivisorRep& D,
                   const DivisorRep& Dp);

/// D + D' for distinct representations. 117M, 2I.
DivisorRep add(FieldCtx& ctx, const Curve& curve, const DivisorRep& D, const DivisorRep& Dp);

/// 2D. 129M, 2I.
DivisorRep double_class(FieldCtx& ctx, const Curve& curve, const DivisorRep& D);

/// Base -2 digits of m, lowest first: m = sum d_i (-2)^i. Empty for m = 0.
std::vector<int> negabinary(std::int64_t m);

/// m * D by Horner evaluation over the negabinary digits using addflip.
/// Throws Error{InvalidInput} for m = 0, Error{IdentityResult} if an
/// intermediate multiple vanishes, AtypicalError if one is atypical.
DivisorRep scalar_mul(FieldCtx& ctx, const Curve& curve, std::int64_t m, const DivisorRep& D);

/// Plain left-to-right double-and-add on |m| with a final negation for m < 0.
DivisorRep scalar_mul_double_add(FieldCtx& ctx, const Curve& curve, std::int64_t m,
                                 const DivisorRep& D);

}  // namespace c34
