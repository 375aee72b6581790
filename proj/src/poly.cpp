#include "c34/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace c34 {

std::vector<Monomial> monomial_basis(int n) {
  std::vector<Monomial> out;
  for (int w = 0; w <= n; ++w) {
    const Monomial m = monomial_of_order(w);
    if (m.i >= 0) out.push_back(m);
  }
  return out;
}

std::size_t basis_dim(int n) { return monomial_basis(n).size(); }

CurvePoly CurvePoly::constant(Element c) { return monomial({0, 0}, c); }

CurvePoly CurvePoly::monomial(Monomial m, Element c) {
  CurvePoly p;
  p.set(m, c);
  return p;
}

Element CurvePoly::coeff(int i, int j) const {
  if (i < 0 || i > 3 || j < 0) throw std::invalid_argument("monomial outside reduced basis");
  return at(3 * i + 4 * j);
}

void CurvePoly::set(Monomial m, Element c) {
  if (m.i < 0 || m.i > 3 || m.j < 0) throw std::invalid_argument("monomial outside reduced basis");
  const auto w = static_cast<std::size_t>(c34::pole_order(m));
  if (w >= c_.size()) {
    if (c.v == 0) return;
    c_.resize(w + 1);
  }
  c_[w] = c;
}

int CurvePoly::pole_order() const {
  for (int w = static_cast<int>(c_.size()) - 1; w >= 0; --w)
    if (c_[w].v != 0) return w;
  return -1;
}

std::vector<Element> CurvePoly::coords(int n) const {
  if (pole_order() > n) throw std::invalid_argument("polynomial exceeds W^N");
  std::vector<Element> out;
  for (const Monomial m : monomial_basis(n)) out.push_back(coeff(m));
  return out;
}

CurvePoly CurvePoly::from_coords(int n, const std::vector<Element>& coords) {
  const auto basis = monomial_basis(n);
  if (coords.size() != basis.size()) throw std::invalid_argument("coordinate count mismatch");
  CurvePoly p;
  for (std::size_t k = 0; k < basis.size(); ++k) p.set(basis[k], coords[k]);
  return p;
}

std::vector<std::pair<Monomial, Element>> CurvePoly::terms() const {
  std::vector<std::pair<Monomial, Element>> out;
  for (int w = 0; w < static_cast<int>(c_.size()); ++w)
    if (c_[w].v != 0) out.emplace_back(monomial_of_order(w), c_[w]);
  return out;
}

bool operator==(const CurvePoly& l, const CurvePoly& r) {
  const std::size_t n = std::max(l.c_.size(), r.c_.size());
  for (std::size_t w = 0; w < n; ++w)
    if (l.at(static_cast<int>(w)) != r.at(static_cast<int>(w))) return false;
  return true;
}

CurvePoly reduce_mod_curve(const Curve& curve, const RawPoly& raw) {
  FieldCtx k = curve.scratch();
  RawPoly work;
  for (const auto& [key, c] : raw)
    if (c.v != 0) work[key] = c;
  // x^4 = y^3 + p2 x^2 y + p1 x y + p0 y + q2 x^2 + q1 x + q0
  const std::pair<std::pair<int, int>, Element> x4[] = {
      {{0, 3}, k.one()},   {{2, 1}, curve.p2()}, {{1, 1}, curve.p1()}, {{0, 1}, curve.p0()},
      {{2, 0}, curve.q2()}, {{1, 0}, curve.q1()}, {{0, 0}, curve.q0()}};
  for (;;) {
    auto hi = std::max_element(work.begin(), work.end(), [](const auto& a, const auto& b) {
      return a.first.first < b.first.first;
    });
    if (hi == work.end() || hi->first.first < 4) break;
    const auto [i, j] = hi->first;
    const Element c = hi->second;
    work.erase(hi);
    for (const auto& [mono, coef] : x4) {
      if (coef.v == 0) continue;
      const std::pair<int, int> key{i - 4 + mono.first, j + mono.second};
      const Element v = k.add(work[key], k.mul(c, coef));
      if (v.v == 0)
        work.erase(key);
      else
        work[key] = v;
    }
  }
  CurvePoly out;
  for (const auto& [key, c] : work) {
    const Element prev = out.coeff(key.first, key.second);
    out.set({key.first, key.second}, k.add(prev, c));
  }
  return out;
}

CurvePoly poly_add(const Curve& curve, const CurvePoly& a, const CurvePoly& b) {
  FieldCtx k = curve.scratch();
  CurvePoly out = a;
  for (const auto& [m, c] : b.terms()) out.set(m, k.add(out.coeff(m), c));
  return out;
}

CurvePoly poly_sub(const Curve& curve, const CurvePoly& a, const CurvePoly& b) {
  FieldCtx k = curve.scratch();
  CurvePoly out = a;
  for (const auto& [m, c] : b.terms()) out.set(m, k.sub(out.coeff(m), c));
  return out;
}

CurvePoly poly_scale(const Curve& curve, const CurvePoly& a, Element c) {
  FieldCtx k = curve.scratch();
  CurvePoly out;
  for (const auto& [m, v] : a.terms()) out.set(m, k.mul(v, c));
  return out;
}

CurvePoly poly_mul(const Curve& curve, const CurvePoly& a, const CurvePoly& b) {
  FieldCtx k = curve.scratch();
  RawPoly raw;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto& slot = raw[{ma.i + mb.i, ma.j + mb.j}];
      slot = k.add(slot, k.mul(ca, cb));
    }
  }
  return reduce_mod_curve(curve, raw);
}

CurvePoly poly_mul_monomial(const Curve& curve, const CurvePoly& a, Monomial m) {
  return poly_mul(curve, a, CurvePoly::monomial(m, Element{1}));
}

RawPoly derivative_x(const Curve& curve, const CurvePoly& a) {
  FieldCtx k = curve.scratch();
  RawPoly out;
  for (const auto& [m, c] : a.terms())
    if (m.i > 0) out[{m.i - 1, m.j}] = k.mul(c, k.from_int(m.i));
  return out;
}

RawPoly derivative_y(const Curve& curve, const CurvePoly& a) {
  FieldCtx k = curve.scratch();
  RawPoly out;
  for (const auto& [m, c] : a.terms())
    if (m.j > 0) out[{m.i, m.j - 1}] = k.mul(c, k.from_int(m.j));
  return out;
}

RawPoly curve_equation(const Curve& curve) {
  FieldCtx k = curve.scratch();
  return RawPoly{{{0, 3}, k.one()},    {{4, 0}, k.neg(k.one())}, {{2, 1}, curve.p2()},
                 {{1, 1}, curve.p1()}, {{0, 1}, curve.p0()},     {{2, 0}, curve.q2()},
                 {{1, 0}, curve.q1()}, {{0, 0}, curve.q0()}};
}

namespace {

Element power(FieldCtx& k, Element base, int e) {
  Element r = k.one();
  for (int n = 0; n < e; ++n) r = k.mul(r, base);
  return r;
}

}  // namespace

Element eval_poly(const Curve& curve, const CurvePoly& a, const AffinePoint& pt) {
  FieldCtx k = curve.scratch();
  Element sum{};
  for (const auto& [m, c] : a.terms())
    sum = k.add(sum, k.mul(c, k.mul(power(k, pt.x, m.i), power(k, pt.y, m.j))));
  return sum;
}

Element eval_raw(const Curve& curve, const RawPoly& a, const AffinePoint& pt) {
  FieldCtx k = curve.scratch();
  Element sum{};
  for (const auto& [key, c] : a)
    sum = k.add(sum, k.mul(c, k.mul(power(k, pt.x, key.first), power(k, pt.y, key.second))));
  return sum;
}

std::string render(const CurvePoly& a) {
  auto terms = a.terms();
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << c.v;
    if (m.i > 0) os << "*x" << (m.i > 1 ? "^" + std::to_string(m.i) : "");
    if (m.j > 0) os << "*y" << (m.j > 1 ? "^" + std::to_string(m.j) : "");
  }
  return os.str();
}

}  // namespace c34
