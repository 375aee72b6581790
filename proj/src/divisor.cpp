#include "c34/divisor.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "c34/error.hpp"

namespace c34 {

DivisorRep make_divisor(const FieldCtx& field, Element a, Element b, Element c, Element d,
                        Element e, Element f) {
  if (a.v == 0) throw AtypicalError("make_divisor", "a");
  FieldCtx k = field.scratch();
  return DivisorRep{a, b, c, d, e, f, k.inv(a)};
}

CurvePoly poly_F(const DivisorRep& D) {
  CurvePoly p;
  p.set({2, 0}, Element{1});
  p.set({0, 1}, D.a);
  p.set({1, 0}, D.b);
  p.set({0, 0}, D.c);
  return p;
}

CurvePoly poly_G(const DivisorRep& D) {
  CurvePoly p;
  p.set({1, 1}, Element{1});
  p.set({0, 1}, D.d);
  p.set({1, 0}, D.e);
  p.set({0, 0}, D.f);
  return p;
}

DivisorRep from_points(const Curve& curve, const AffinePoint& p1, const AffinePoint& p2,
                       const AffinePoint& p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3) {
    throw Error(Errc::DuplicatePointsUnsupported, "from_points needs three distinct points");
  }
  FieldCtx k = curve.scratch();
  const std::array<AffinePoint, 3> pts{p1, p2, p3};
  // Solve [1 x y] (c0, c1, c2)^T = rhs at the three points, by Cramer's rule.
  // det of rows (1, x_i, y_i)
  auto det3 = [&](const std::array<std::array<Element, 3>, 3>& m) {
    Element t = k.mul(m[0][0], k.sub(k.mul(m[1][1], m[2][2]), k.mul(m[1][2], m[2][1])));
    t = k.sub(t, k.mul(m[0][1], k.sub(k.mul(m[1][0], m[2][2]), k.mul(m[1][2], m[2][0]))));
    return k.add(t, k.mul(m[0][2], k.sub(k.mul(m[1][0], m[2][1]), k.mul(m[1][1], m[2][0]))));
  };
  std::array<std::array<Element, 3>, 3> base{};
  for (int r = 0; r < 3; ++r) base[r] = {k.one(), pts[r].x, pts[r].y};
  const Element det = det3(base);
  if (det.v == 0) throw AtypicalError("from_points", "det[1,x,y]");
  const Element det_inv = k.inv(det);

  auto solve = [&](const std::array<Element, 3>& rhs) {
    std::array<Element, 3> sol{};
    for (int col = 0; col < 3; ++col) {
      auto m = base;
      for (int r = 0; r < 3; ++r) m[r][col] = rhs[r];
      sol[col] = k.mul(det3(m), det_inv);
    }
    return sol;
  };
  std::array<Element, 3> rhs_f{}, rhs_g{};
  for (int r = 0; r < 3; ++r) {
    rhs_f[r] = k.neg(k.mul(pts[r].x, pts[r].x));
    rhs_g[r] = k.neg(k.mul(pts[r].x, pts[r].y));
  }
  const auto sf = solve(rhs_f);  // (c, b, a)
  const auto sg = solve(rhs_g);  // (f, e, d)
  if (sf[2].v == 0) throw AtypicalError("from_points", "a");
  return make_divisor(k, sf[2], sf[1], sf[0], sg[2], sg[1], sg[0]);
}

SampledDivisor sample_typical(const Curve& curve, Rng& rng, int max_retries) {
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const AffinePoint p1 = random_point(curve, rng);
    const AffinePoint p2 = random_point(curve, rng);
    const AffinePoint p3 = random_point(curve, rng);
    if (p1 == p2 || p1 == p3 || p2 == p3) {
      continue;
    }
    try {
      return SampledDivisor{from_points(curve, p1, p2, p3), {p1, p2, p3}, attempt};
    } catch (const AtypicalError&) {
    }
  }
  throw Error(Errc::Exhausted, "no typical divisor found");
}

std::string format_divisor(const DivisorRep& D) {
  std::ostringstream os;
  os << D.a << ',' << D.b << ',' << D.c << ',' << D.d << ',' << D.e << ',' << D.f;
  return os.str();
}

DivisorRep parse_divisor(const FieldCtx& field, std::string_view text) {
  std::vector<Element> vals;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::InvalidInput, "bad divisor field '" + std::string(tok) + "'");
    }
    if (v >= field.modulus()) {
      throw Error(Errc::InvalidInput, "divisor coefficient " + std::string(tok) +
                                          " is not a residue mod p");
    }
    vals.push_back(Element{v});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (vals.size() != 6) {
    throw Error(Errc::InvalidInput, "divisor needs exactly six values a,b,c,d,e,f");
  }
  return make_divisor(field, vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]);
}

}  // namespace c34
