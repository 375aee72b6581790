#pragma once

#include <array>
#include <optional>
#include <vector>

#include "c34/curve.hpp"
#include "c34/divisor.hpp"
#include "c34/field.hpp"
#include "c34/jacobian.hpp"
#include "c34/poly.hpp"

// Slow reference computations. Everything here runs on scratch contexts and
// uses plain Gaussian elimination over the monomial bases of W^N; nothing is
// shared with the counted formulas in jacobian.cpp.
namespace c34::oracle {

using Row = std::vector<Element>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(const FieldCtx& field, Matrix& A);
int rank(const FieldCtx& field, Matrix A);
/// Basis of {v : A v = 0}, one vector per free column.
std::vector<Row> nullspace(const FieldCtx& field, const Matrix& A, int cols);
/// Some solution of A z = b, or nullopt if inconsistent.
std::optional<Row> solve(const FieldCtx& field, const Matrix& A, const Row& b);
/// True iff the two matrices (same column count) have the same kernel.
bool same_kernel(const FieldCtx& field, const Matrix& A, const Matrix& B);

Matrix to_matrix(const Mat3x5& M);

struct PointDivisor {
  std::array<AffinePoint, 3> pts;
};

/// (c0, c1, c2) with u = c0 + c1 x + c2 y modulo <F, G>, found by solving
/// for u in span{1, x, y} + W^n cap <F, G>.
BVec reduce_mod_ideal(const Curve& curve, const DivisorRep& D, const CurvePoly& u);

struct AddflipTrace {
  Matrix m;         // 3x5, columns as in build_m_add / build_m_double
  STPair st;
  DivisorRep result;
};

/// -(D + D') through W^10_{D+D'} (or W^10_{2D}) and the 8x11 block of N.
/// Throws AtypicalError("oracle", ...) when a rank condition fails.
AddflipTrace generic_addflip(const Curve& curve, const DivisorRep& D, const DivisorRep& Dp);

/// -D: the G''' with G G''' in <F>, from a linear solve in W^14.
DivisorRep generic_negate(const Curve& curve, const DivisorRep& D);

/// D + D' (or 2D) as generic_negate(generic_addflip(...)).
DivisorRep generic_add(const Curve& curve, const DivisorRep& D, const DivisorRep& Dp);

/// m D by repeated generic addition. Throws Error{IdentityResult} if a
/// partial sum is the zero class.
DivisorRep repeated_add(const Curve& curve, std::int64_t m, const DivisorRep& D);

/// dim W^N_D by rank-nullity on the evaluation matrix.
int dim_wnd(const Curve& curve, const PointDivisor& D, int n);

/// The three rational zeros of s off D and D', when they are distinct and
/// rational. Throws Error{FieldTooLarge} above the enumeration cap.
std::optional<PointDivisor> residual_points(const Curve& curve, const STPair& st,
                                            const PointDivisor& D, const PointDivisor& Dp);

}  // namespace c34::oracle
