#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "c34/field.hpp"
#include "c34/random.hpp"

namespace c34 {

struct AffinePoint {
  Element x;
  Element y;

  friend constexpr bool operator==(const AffinePoint&, const AffinePoint&) = default;
  friend constexpr auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

/// Largest modulus for which O(p^2) point scans are allowed.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 14;

/// Coefficients of
///   f(x, y) = y^3 - x^4 + p2 x^2 y + p1 x y + p0 y + q2 x^2 + q1 x + q0.
struct CurveCoeffs {
  Element p2, p1, p0, q2, q1, q0;

  friend constexpr bool operator==(const CurveCoeffs&, const CurveCoeffs&) = default;
};

/// A C_{3,4} curve in normal form over a prime field. Immutable.
class Curve {
 public:
  /// Runs the F_p smoothness screen when p <= kEnumerationCap and throws
  /// Error{SingularScreenFailed} if f, f_x, f_y share an affine zero.
  Curve(const FieldCtx& field, const CurveCoeffs& coeffs);

  const CurveCoeffs& coeffs() const noexcept { return k_; }
  Element p2() const noexcept { return k_.p2; }
  Element p1() const noexcept { return k_.p1; }
  Element p0() const noexcept { return k_.p0; }
  Element q2() const noexcept { return k_.q2; }
  Element q1() const noexcept { return k_.q1; }
  Element q0() const noexcept { return k_.q0; }

  std::uint64_t modulus() const noexcept { return field_.modulus(); }
  /// Fresh uncounted context over the curve's field.
  FieldCtx scratch() const noexcept { return field_.scratch(); }

  /// False when the modulus exceeded the screening cap.
  bool screened() const noexcept { return screened_; }

 private:
  FieldCtx field_;
  CurveCoeffs k_;
  bool screened_ = false;
};

Curve mk_curve(const FieldCtx& field, Element p2, Element p1, Element p0, Element q2,
               Element q1, Element q0);

// Point-level helpers. All arithmetic runs on an internal scratch context.
Element eval_f(const Curve& curve, Element x, Element y);
inline Element eval_f(const Curve& curve, const AffinePoint& pt) {
  return eval_f(curve, pt.x, pt.y);
}

/// (f_x, f_y) at (x, y).
std::pair<Element, Element> partials(const Curve& curve, Element x, Element y);

/// All affine F_p-points in lexicographic order.
/// Throws Error{FieldTooLarge} above `cap`.
std::vector<AffinePoint> enumerate_points(const Curve& curve,
                                          std::uint64_t cap = kEnumerationCap);

/// Samples x uniformly until f(x, .) has a root, then one root uniformly.
/// Throws Error{Exhausted} after `max_tries` values of x.
AffinePoint random_point(const Curve& curve, Rng& rng, int max_tries = 1000);

/// Distinct roots in F_p of y^3 + a1 y + a0, sorted ascending.
std::vector<Element> depressed_cubic_roots(const FieldCtx& field, Element a1, Element a0,
                                           Rng& rng);

/// Random normal-form curve passing the screen. Throws Error{Exhausted}.
Curve random_curve(const FieldCtx& field, Rng& rng, int max_tries = 1000);

}  // namespace c34
