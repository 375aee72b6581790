#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "c34/curve.hpp"
#include "c34/field.hpp"

namespace c34 {

/// x^i y^j.
struct Monomial {
  int i = 0;
  int j = 0;

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Pole order at infinity: 3i + 4j.
constexpr int pole_order(Monomial m) { return 3 * m.i + 4 * m.j; }

/// The unique monomial with x-degree <= 3 and pole order w, or {-1,-1} for
/// the gaps w = 1, 2, 5.
constexpr Monomial monomial_of_order(int w) {
  const int i = (3 * w) % 4;
  const int rest = w - 3 * i;
  if (rest < 0) return {-1, -1};
  return {i, rest / 4};
}

/// Basis of W^N = L(N P_inf): monomials x^i y^j with i <= 3 and
/// 3i + 4j <= N, ordered by pole order. For N = 17 this is
/// 1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3, x^3y, x^2y^2, xy^3, y^4, x^3y^2.
std::vector<Monomial> monomial_basis(int n);

/// dim W^N.
std::size_t basis_dim(int n);

/// Unreduced bivariate polynomial, keyed by (i, j).
using RawPoly = std::map<std::pair<int, int>, Element>;

/// A regular function on the affine curve, stored in the reduced form
/// with no x^i, i >= 4. Since each pole order has at most one such monomial,
/// coefficients are indexed by pole order.
class CurvePoly {
 public:
  CurvePoly() = default;

  static CurvePoly constant(Element c);
  static CurvePoly monomial(Monomial m, Element c);

  /// Coefficient of x^i y^j; requires i <= 3.
  Element coeff(int i, int j) const;
  Element coeff(Monomial m) const { return coeff(m.i, m.j); }
  void set(Monomial m, Element c);

  /// Highest pole order with a nonzero coefficient, -1 for zero.
  int pole_order() const;
  bool is_zero() const { return pole_order() < 0; }

  /// Coefficients on monomial_basis(n); throws if the pole order exceeds n.
  std::vector<Element> coords(int n) const;
  static CurvePoly from_coords(int n, const std::vector<Element>& coords);

  /// (monomial, coefficient) for every nonzero term, by increasing pole order.
  std::vector<std::pair<Monomial, Element>> terms() const;

  friend bool operator==(const CurvePoly& l, const CurvePoly& r);

 private:
  Element at(int w) const { return w < static_cast<int>(c_.size()) ? c_[w] : Element{}; }

  std::vector<Element> c_;  // indexed by pole order
};

/// Rewrites every x^i y^j with i >= 4 via
/// x^4 = y^3 + p2 x^2 y + p1 x y + p0 y + q2 x^2 + q1 x + q0.
CurvePoly reduce_mod_curve(const Curve& curve, const RawPoly& raw);

CurvePoly poly_add(const Curve& curve, const CurvePoly& a, const CurvePoly& b);
CurvePoly poly_sub(const Curve& curve, const CurvePoly& a, const CurvePoly& b);
CurvePoly poly_scale(const Curve& curve, const CurvePoly& a, Element c);
CurvePoly poly_mul(const Curve& curve, const CurvePoly& a, const CurvePoly& b);
CurvePoly poly_mul_monomial(const Curve& curve, const CurvePoly& a, Monomial m);

/// Formal partial derivatives of the stored representative.
RawPoly derivative_x(const Curve& curve, const CurvePoly& a);
RawPoly derivative_y(const Curve& curve, const CurvePoly& a);

/// The curve equation f itself as an unreduced polynomial.
RawPoly curve_equation(const Curve& curve);

Element eval_poly(const Curve& curve, const CurvePoly& a, const AffinePoint& pt);
Element eval_raw(const Curve& curve, const RawPoly& a, const AffinePoint& pt);

/// "c*x^i*y^j + ..." by decreasing pole order; exponents 0 and 1 are elided
/// ("x", "y^2", "7"). The zero polynomial renders as "0".
std::string render(const CurvePoly& a);

}  // namespace c34
