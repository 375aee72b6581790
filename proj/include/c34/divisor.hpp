#pragma once

#include <array>
#include <string>
#include <string_view>

#include "c34/curve.hpp"
#include "c34/field.hpp"
#include "c34/poly.hpp"
#include "c34/random.hpp"

namespace c34 {

/// A typical degree-3 divisor D, represented by the basis
///   F = x^2 + a y + b x + c,   G = x y + d y + e x + f
/// of W^7_D, together with the cached inverse of a (a != 0).
///
/// Equality compares the six coefficients only; for typical classes this is
/// class equality.
struct DivisorRep {
  Element a, b, c, d, e, f;
  Element a_inv;

  friend bool operator==(const DivisorRep& l, const DivisorRep& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c && l.d == r.d && l.e == r.e && l.f == r.f;
  }
};

inline bool div_eq(const DivisorRep& l, const DivisorRep& r) { return l == r; }

/// Builds a representation from its six coefficients, computing a^{-1} on a
/// scratch context. Throws AtypicalError{"make_divisor", "a"} when a = 0.
DivisorRep make_divisor(const FieldCtx& field, Element a, Element b, Element c, Element d,
                        Element e, Element f);

/// F and G as curve polynomials.
CurvePoly poly_F(const DivisorRep& D);
CurvePoly poly_G(const DivisorRep& D);

/// The representation of the divisor P1 + P2 + P3 (pairwise distinct).
/// Throws Error{DuplicatePointsUnsupported} on repeated points and
/// AtypicalError when 1, x, y are dependent on the points (collinear
/// points, equal x-coordinates) or the resulting a vanishes.
DivisorRep from_points(const Curve& curve, const AffinePoint& p1, const AffinePoint& p2,
                       const AffinePoint& p3);

struct SampledDivisor {
  DivisorRep rep;
  std::array<AffinePoint, 3> points;
  int retries = 0;  // atypical or degenerate triples rejected on the way
};

/// Random typical divisor from three distinct random points, resampling on
/// Atypical. Throws Error{Exhausted} after `max_retries` failed attempts.
SampledDivisor sample_typical(const Curve& curve, Rng& rng, int max_retries = 64);
inline DivisorRep random_typical(const Curve& curve, Rng& rng, int max_retries = 64) {
  return sample_typical(curve, rng, max_retries).rep;
}

/// "a,b,c,d,e,f" as decimal residues.
std::string format_divisor(const DivisorRep& D);

/// Parses "a,b,c,d,e,f"; a^{-1} is recomputed (uncounted). Values must be
/// canonical residues. Throws Error{InvalidInput} or AtypicalError.
DivisorRep parse_divisor(const FieldCtx& field, std::string_view text);

}  // namespace c34
