#pragma once

#include <array>

#include "c34/curve.hpp"
#include "c34/divisor.hpp"
#include "c34/field.hpp"

namespace c34 {

/// Coordinates of an element of A = R/<F, G> on the basis (1, x, y).
struct BVec {
  Element one;
  Element x;
  Element y;

  friend constexpr bool operator==(const BVec&, const BVec&) = default;
};

/// Coefficients of the relation y^2 = -g y - h x - i in A:
///   g = a^{-1}(c + d(d - b)) + e
///   h = a^{-1}(e d - f)
///   i = a^{-1}(e c + f(d - b))
struct GHI {
  Element g;
  Element h;
  Element i;

  friend constexpr bool operator==(const GHI&, const GHI&) = default;
};

/// 7M.
GHI compute_ghi(FieldCtx& ctx, const DivisorRep& D);

/// B_{xu} from B_u; always 6M.
BVec tx_apply(FieldCtx& ctx, const DivisorRep& D, const BVec& b);

/// B_{yu} from B_u given the y^2 relation; 6M.
BVec ty_apply(FieldCtx& ctx, const DivisorRep& D, const GHI& ghi, const BVec& b);

/// B_{yu} without T_y: reduce w = y u - gamma a^{-1}(yF - xG), then strip
/// zeta F + eta G. 11M.
BVec y_reduce_direct(FieldCtx& ctx, const DivisorRep& D, const BVec& b);

using Mat3 = std::array<std::array<Element, 3>, 3>;

// Uncounted matrix forms, for identities and validation.
Mat3 tx_matrix(const FieldCtx& field, const DivisorRep& D);
Mat3 ty_matrix(const FieldCtx& field, const GHI& ghi, const DivisorRep& D);
Mat3 mat3_mul(const FieldCtx& field, const Mat3& l, const Mat3& r);

/// True iff <F, G> cuts out a degree-3 subscheme of the curve: T_x and T_y
/// commute and f(T_x, T_y) = 0. Uncounted.
bool lies_on_curve(const Curve& curve, const DivisorRep& D);

}  // namespace c34
