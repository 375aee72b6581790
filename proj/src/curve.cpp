#include "c34/curve.hpp"

#include <algorithm>
#include <string>

#include "c34/error.hpp"

namespace c34 {

namespace {

// Dense univariate polynomials over F_p, lowest degree first, no trailing zeros.
using UPoly = std::vector<Element>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().v == 0) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly sub(const FieldCtx& k, UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = k.sub(a[i], b[i]);
  trim(a);
  return a;
}

UPoly mul(FieldCtx& k, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
std::pair<UPoly, UPoly> divmod(FieldCtx& k, UPoly a, const UPoly& b) {
  const Element lead_inv = k.inv(b.back());
  UPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Element{});
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Element c = k.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
    trim(a);
  }
  trim(q);
  return {q, a};
}

UPoly mulmod(FieldCtx& k, const UPoly& a, const UPoly& b, const UPoly& m) {
  return divmod(k, mul(k, a, b), m).second;
}

UPoly powmod(FieldCtx& k, UPoly base, std::uint64_t e, const UPoly& m) {
  UPoly r{k.one()};
  base = divmod(k, base, m).second;
  while (e) {
    if (e & 1) r = mulmod(k, r, base, m);
    base = mulmod(k, base, base, m);
    e >>= 1;
  }
  return r;
}

UPoly gcd(FieldCtx& k, UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Element li = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, li);
  }
  return a;
}

// Appends the roots of a squarefree, fully split, monic g.
void split_roots(FieldCtx& k, const UPoly& g, Rng& rng, std::vector<Element>& out) {
  if (degree(g) <= 0) return;
  if (degree(g) == 1) {
    out.push_back(k.neg(g[0]));
    return;
  }
  const std::uint64_t half = (k.modulus() - 1) / 2;
  for (;;) {
    const UPoly shifted{random_element(k, rng), k.one()};
    UPoly w = powmod(k, shifted, half, g);
    w = sub(k, w, UPoly{k.one()});
    UPoly d = gcd(k, g, w);
    if (degree(d) > 0 && degree(d) < degree(g)) {
      split_roots(k, d, rng, out);
      split_roots(k, divmod(k, g, d).first, rng, out);
      return;
    }
  }
}

// Coefficients of f(x, .) = y^3 + lin(x) y + con(x).
std::pair<Element, Element> fiber_cubic(FieldCtx& k, const CurveCoeffs& c, Element x) {
  const Element x2 = k.mul(x, x);
  const Element lin = k.add(k.add(k.mul(c.p2, x2), k.mul(c.p1, x)), c.p0);
  const Element con = k.add(k.add(k.sub(k.mul(c.q2, x2), k.mul(x2, x2)), k.mul(c.q1, x)), c.q0);
  return {lin, con};
}

std::vector<AffinePoint> scan_points(const FieldCtx& field, const CurveCoeffs& c) {
  FieldCtx k = field.scratch();
  Rng rng(0x5eed);
  std::vector<AffinePoint> pts;
  for (std::uint64_t xv = 0; xv < k.modulus(); ++xv) {
    const Element x{xv};
    const auto [lin, con] = fiber_cubic(k, c, x);
    for (Element y : depressed_cubic_roots(k, lin, con, rng)) pts.push_back({x, y});
  }
  return pts;  // already lexicographic
}

std::pair<Element, Element> partials_impl(FieldCtx& k, const CurveCoeffs& c, Element x,
                                          Element y) {
  // f_x = -4x^3 + 2 p2 x y + p1 y + 2 q2 x + q1
  const Element x2 = k.mul(x, x);
  const Element x3 = k.mul(x2, x);
  const Element four_x3 = k.add(k.add(x3, x3), k.add(x3, x3));
  const Element p2xy = k.mul(k.mul(c.p2, x), y);
  const Element q2x = k.mul(c.q2, x);
  Element fx = k.neg(four_x3);
  fx = k.add(fx, k.add(p2xy, p2xy));
  fx = k.add(fx, k.mul(c.p1, y));
  fx = k.add(fx, k.add(q2x, q2x));
  fx = k.add(fx, c.q1);
  // f_y = 3y^2 + p2 x^2 + p1 x + p0
  const Element y2 = k.mul(y, y);
  Element fy = k.add(k.add(y2, y2), y2);
  fy = k.add(fy, k.mul(c.p2, x2));
  fy = k.add(fy, k.mul(c.p1, x));
  fy = k.add(fy, c.p0);
  return {fx, fy};
}

}  // namespace

std::vector<Element> depressed_cubic_roots(const FieldCtx& field, Element a1, Element a0,
                                           Rng& rng) {
  FieldCtx k = field.scratch();
  const UPoly h{a0, a1, Element{}, k.one()};
  const UPoly y{Element{}, k.one()};
  const UPoly frob = powmod(k, y, k.modulus(), h);
  UPoly g = gcd(k, h, sub(k, frob, y));
  std::vector<Element> roots;
  split_roots(k, g, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Curve::Curve(const FieldCtx& field, const CurveCoeffs& coeffs)
    : field_(field.scratch()), k_(coeffs) {
  if (field_.modulus() > kEnumerationCap) return;
  screened_ = true;
  FieldCtx k = field_.scratch();
  for (const auto& pt : scan_points(field_, k_)) {
    const auto [fx, fy] = partials_impl(k, k_, pt.x, pt.y);
    if (fx.v == 0 && fy.v == 0) {
      throw Error(Errc::SingularScreenFailed,
                  "curve is singular at (" + std::to_string(pt.x.v) + ", " +
                      std::to_string(pt.y.v) + ")");
    }
  }
}

Curve mk_curve(const FieldCtx& field, Element p2, Element p1, Element p0, Element q2,
               Element q1, Element q0) {
  return Curve(field, CurveCoeffs{p2, p1, p0, q2, q1, q0});
}

Element eval_f(const Curve& curve, Element x, Element y) {
  FieldCtx k = curve.scratch();
  const auto [lin, con] = fiber_cubic(k, curve.coeffs(), x);
  const Element y3 = k.mul(k.mul(y, y), y);
  return k.add(k.add(y3, k.mul(lin, y)), con);
}

std::pair<Element, Element> partials(const Curve& curve, Element x, Element y) {
  FieldCtx k = curve.scratch();
  return partials_impl(k, curve.coeffs(), x, y);
}

std::vector<AffinePoint> enumerate_points(const Curve& curve, std::uint64_t cap) {
  if (curve.modulus() > cap) {
    throw Error(Errc::FieldTooLarge, "point enumeration is capped at p <= " +
                                         std::to_string(cap));
  }
  return scan_points(curve.scratch(), curve.coeffs());
}

AffinePoint random_point(const Curve& curve, Rng& rng, int max_tries) {
  FieldCtx k = curve.scratch();
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    const Element x = random_element(k, rng);
    const auto [lin, con] = fiber_cubic(k, curve.coeffs(), x);
    const auto roots = depressed_cubic_roots(k, lin, con, rng);
    if (roots.empty()) continue;
    return {x, roots[uniform_below(rng, roots.size())]};
  }
  throw Error(Errc::Exhausted, "no curve point found");
}

Curve random_curve(const FieldCtx& field, Rng& rng, int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    CurveCoeffs c{random_element(field, rng), random_element(field, rng),
                  random_element(field, rng), random_element(field, rng),
                  random_element(field, rng), random_element(field, rng)};
    try {
      return Curve(field, c);
    } catch (const Error& e) {
      if (e.code() != Errc::SingularScreenFailed) throw;
    }
  }
  throw Error(Errc::Exhausted, "no smooth curve found");
}

}  // namespace c34
