#pragma once

#include <cstdint>

#include "c34/curve.hpp"
#include "c34/field.hpp"

namespace c34::testing {

inline Element el(std::uint64_t v) { return Element{v}; }

inline AffinePoint pt(std::uint64_t x, std::uint64_t y) { return {Element{x}, Element{y}}; }

// y^3 - x^4 + 3x^2y + 5xy + 7y + 11x^2 + 13x + 17 over F_31; 34 affine points.
inline Curve curve31() {
  return Curve(FieldCtx(31), CurveCoeffs{el(3), el(5), el(7), el(11), el(13), el(17)});
}

}  // namespace c34::testing
