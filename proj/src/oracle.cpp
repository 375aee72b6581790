#include "c34/oracle.hpp"

#include <algorithm>
#include <set>

#include "c34/error.hpp"

namespace c34::oracle {

std::vector<int> rref(const FieldCtx& field, Matrix& A) {
  FieldCtx k = field.scratch();
  std::vector<int> pivots;
  if (A.empty()) return pivots;
  const int rows = static_cast<int>(A.size());
  const int cols = static_cast<int>(A[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c].v != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(A[r], A[piv]);
    const Element s = k.inv(A[r][c]);
    for (auto& v : A[r]) v = k.mul(v, s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c].v == 0) continue;
      const Element f = A[i][c];
      for (int j = 0; j < cols; ++j) A[i][j] = k.sub(A[i][j], k.mul(f, A[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const FieldCtx& field, Matrix A) {
  return static_cast<int>(rref(field, A).size());
}

std::vector<Row> nullspace(const FieldCtx& field, const Matrix& A, int cols) {
  Matrix R = A;
  const std::vector<int> pivots = rref(field, R);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols);
    v[free] = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(R[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Row> solve(const FieldCtx& field, const Matrix& A, const Row& b) {
  const int cols = A.empty() ? 0 : static_cast<int>(A[0].size());
  Matrix aug = A;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const std::vector<int> pivots = rref(field, aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Row z(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = aug[r][cols];
  return z;
}

bool same_kernel(const FieldCtx& field, const Matrix& A, const Matrix& B) {
  Matrix both = A;
  both.insert(both.end(), B.begin(), B.end());
  const int ra = rank(field, A);
  return ra == rank(field, B) && ra == rank(field, both);
}

Matrix to_matrix(const Mat3x5& M) {
  Matrix out(3, Row(5));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 5; ++c) out[r][c] = M.at(r, c);
  return out;
}

namespace {

CurvePoly mono(int i, int j) { return CurvePoly::monomial({i, j}, Element{1}); }

// Columns of a matrix whose k-th column is polys[k] on the basis of W^n.
Matrix coord_matrix(const std::vector<CurvePoly>& polys, int n) {
  const std::size_t dim = basis_dim(n);
  Matrix A(dim, Row(polys.size()));
  for (std::size_t c = 0; c < polys.size(); ++c) {
    const auto v = polys[c].coords(n);
    for (std::size_t r = 0; r < dim; ++r) A[r][c] = v[r];
  }
  return A;
}

RawPoly raw_mul(const FieldCtx& field, const RawPoly& a, const RawPoly& b) {
  FieldCtx k = field.scratch();
  RawPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      auto& slot = out[{ka.first + kb.first, ka.second + kb.second}];
      slot = k.add(slot, k.mul(ca, cb));
    }
  return out;
}

RawPoly raw_sub(const FieldCtx& field, RawPoly a, const RawPoly& b) {
  for (const auto& [key, c] : b) a[key] = field.sub(a[key], c);
  return a;
}

RawPoly fx_raw(const Curve& curve) {
  FieldCtx k = curve.scratch();
  const Element two = k.from_int(2);
  return RawPoly{{{3, 0}, k.from_int(-4)},
                 {{1, 1}, k.mul(two, curve.p2())},
                 {{0, 1}, curve.p1()},
                 {{1, 0}, k.mul(two, curve.q2())},
                 {{0, 0}, curve.q1()}};
}

RawPoly fy_raw(const Curve& curve) {
  FieldCtx k = curve.scratch();
  return RawPoly{{{0, 2}, k.from_int(3)},
                 {{2, 0}, curve.p2()},
                 {{1, 0}, curve.p1()},
                 {{0, 0}, curve.p0()}};
}

// L_x f_y - L_y f_x: the coefficient of dL against the regular differential
// dx / f_y.
CurvePoly differential(const Curve& curve, const CurvePoly& L) {
  FieldCtx k = curve.scratch();
  const RawPoly a = raw_mul(k, derivative_x(curve, L), fy_raw(curve));
  const RawPoly b = raw_mul(k, derivative_y(curve, L), fx_raw(curve));
  return reduce_mod_curve(curve, raw_sub(k, a, b));
}

Element coeff_of(const Row& v, int n, Monomial m) {
  const auto basis = monomial_basis(n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (basis[k] == m) return v[k];
  return Element{};
}

// Picks the two elements of a 2-dimensional space (rows of `space`, given as
// coordinates on W^n) whose coefficients at (m1, m2) are (1, 0) and (0, 1).
std::pair<Row, Row> normalize_pair(const FieldCtx& field, const std::vector<Row>& space, int n,
                                   Monomial m1, Monomial m2, const char* what) {
  if (space.size() != 2) throw AtypicalError("oracle", what);
  FieldCtx k = field.scratch();
  const Element p = coeff_of(space[0], n, m1), q = coeff_of(space[0], n, m2);
  const Element r = coeff_of(space[1], n, m1), s = coeff_of(space[1], n, m2);
  const Element det = k.sub(k.mul(p, s), k.mul(q, r));
  if (det.v == 0) throw AtypicalError("oracle", what);
  const Element di = k.inv(det);
  // (u1, u2) and (w1, w2) are the columns of the inverse of [p r; q s].
  const Element u1 = k.mul(s, di), u2 = k.neg(k.mul(q, di));
  const Element w1 = k.neg(k.mul(r, di)), w2 = k.mul(p, di);
  Row first(space[0].size()), second(space[0].size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    first[i] = k.add(k.mul(u1, space[0][i]), k.mul(u2, space[1][i]));
    second[i] = k.add(k.mul(w1, space[0][i]), k.mul(w2, space[1][i]));
  }
  return {first, second};
}

// Combination of polys with the given coefficients.
CurvePoly combine(const Curve& curve, const std::vector<CurvePoly>& polys, const Row& coef) {
  CurvePoly out;
  for (std::size_t k = 0; k < polys.size(); ++k)
    out = poly_add(curve, out, poly_scale(curve, polys[k], coef[k]));
  return out;
}

DivisorRep rep_from_w7(const Curve& curve, const Row& Fv, const Row& Gv) {
  FieldCtx k = curve.scratch();
  // W^7 coordinates (1, x, y, x^2, xy).
  return make_divisor(k, Fv[2], Fv[1], Fv[0], Gv[2], Gv[1], Gv[0]);
}

}  // namespace

BVec reduce_mod_ideal(const Curve& curve, const DivisorRep& D, const CurvePoly& u) {
  FieldCtx k = curve.scratch();
  const int n = std::max(u.pole_order(), 10);
  std::vector<CurvePoly> cols{mono(0, 0), mono(1, 0), mono(0, 1)};
  const CurvePoly F = poly_F(D), G = poly_G(D);
  for (const Monomial m : monomial_basis(n - 6)) cols.push_back(poly_mul_monomial(curve, F, m));
  for (const Monomial m : monomial_basis(n - 7)) cols.push_back(poly_mul_monomial(curve, G, m));
  const Matrix A = coord_matrix(cols, n);
  Matrix gens = A;
  for (auto& row : gens) row.erase(row.begin(), row.begin() + 3);
  if (rank(k, gens) != static_cast<int>(basis_dim(n)) - 3 || rank(k, A) != static_cast<int>(basis_dim(n))) {
    throw AtypicalError("oracle", "ideal rank");
  }
  const auto z = solve(k, A, u.coords(n));
  if (!z) throw AtypicalError("oracle", "ideal rank");
  return BVec{(*z)[0], (*z)[1], (*z)[2]};
}

AddflipTrace generic_addflip(const Curve& curve, const DivisorRep& D, const DivisorRep& Dp) {
  FieldCtx k = curve.scratch();
  const CurvePoly Fp = poly_F(Dp), Gp = poly_G(Dp);
  // W^10_{D'} = span{F', xF', yF', G', xG'}
  const std::vector<CurvePoly> cand{Fp, poly_mul(curve, Fp, mono(1, 0)),
                                    poly_mul(curve, Fp, mono(0, 1)), Gp,
                                    poly_mul(curve, Gp, mono(1, 0))};
  const bool doubling = D == Dp;
  AddflipTrace tr;
  tr.m = Matrix(3, Row(5));
  for (int c = 0; c < 5; ++c) {
    const CurvePoly target = doubling ? differential(curve, cand[c]) : cand[c];
    const BVec b = reduce_mod_ideal(curve, D, target);
    tr.m[0][c] = b.one;
    tr.m[1][c] = b.x;
    tr.m[2][c] = b.y;
  }
  const auto kern = nullspace(k, tr.m, 5);
  std::vector<Row> space;
  for (const Row& v : kern) space.push_back(combine(curve, cand, v).coords(10));
  const auto [sv, tv] = normalize_pair(k, space, 10, {3, 0}, {2, 1}, "W^10 basis");
  const CurvePoly s = CurvePoly::from_coords(10, sv), t = CurvePoly::from_coords(10, tv);
  const Monomial order[6] = {{0, 2}, {1, 1}, {2, 0}, {0, 1}, {1, 0}, {0, 0}};
  for (int i = 0; i < 6; ++i) {
    tr.st.s[i] = s.coeff(order[i]);
    tr.st.t[i] = t.coeff(order[i]);
  }

  // l in W^7 with t l in s W^8 + W^9: columns t{1,x,y,x^2,xy}, s{1,x,y,x^2,xy,y^2},
  // restricted to the rows of pole order 10..17.
  std::vector<CurvePoly> ncols;
  for (const Monomial m : monomial_basis(7)) ncols.push_back(poly_mul_monomial(curve, t, m));
  for (const Monomial m : monomial_basis(8)) ncols.push_back(poly_mul_monomial(curve, s, m));
  Matrix N = coord_matrix(ncols, 17);
  Matrix Np(N.begin() + static_cast<long>(basis_dim(9)), N.end());
  std::vector<Row> proj;
  for (const Row& v : nullspace(k, Np, static_cast<int>(ncols.size())))
    proj.push_back(Row(v.begin(), v.begin() + 5));
  // The projection contains the W^7_{D''} plane (plus zero from s itself).
  Matrix P = proj;
  const auto piv = rref(k, P);
  P.resize(piv.size());
  const auto [Fv, Gv] = normalize_pair(k, P, 7, {2, 0}, {1, 1}, "W^7 basis");
  tr.result = rep_from_w7(curve, Fv, Gv);
  return tr;
}

DivisorRep generic_negate(const Curve& curve, const DivisorRep& D) {
  FieldCtx k = curve.scratch();
  const CurvePoly F = poly_F(D), G = poly_G(D);
  // Unknowns (f, e, d) for 1, x, y in G''' and H on W^8; G (xy + d y + e x + f) + F H = 0.
  std::vector<CurvePoly> cols{G, poly_mul(curve, G, mono(1, 0)), poly_mul(curve, G, mono(0, 1))};
  for (const Monomial m : monomial_basis(8)) cols.push_back(poly_mul_monomial(curve, F, m));
  const Matrix A = coord_matrix(cols, 14);
  Row rhs = poly_mul(curve, G, mono(1, 1)).coords(14);
  for (auto& v : rhs) v = k.neg(v);
  if (rank(k, A) != static_cast<int>(cols.size())) throw AtypicalError("oracle", "negation rank");
  const auto z = solve(k, A, rhs);
  if (!z) throw AtypicalError("oracle", "negation");
  return make_divisor(k, D.a, D.b, D.c, (*z)[2], (*z)[1], (*z)[0]);
}

DivisorRep generic_add(const Curve& curve, const DivisorRep& D, const DivisorRep& Dp) {
  return generic_negate(curve, generic_addflip(curve, D, Dp).result);
}

DivisorRep repeated_add(const Curve& curve, std::int64_t m, const DivisorRep& D) {
  if (m == 0) throw Error(Errc::InvalidInput, "scalar must be nonzero");
  const DivisorRep base = m < 0 ? generic_negate(curve, D) : D;
  const std::uint64_t n = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : m;
  const DivisorRep neg_base = generic_negate(curve, base);
  DivisorRep acc = base;
  for (std::uint64_t i = 1; i < n; ++i) {
    if (acc == neg_base) throw Error(Errc::IdentityResult, "partial sum is the zero class");
    acc = generic_add(curve, acc, base);
  }
  return acc;
}

int dim_wnd(const Curve& curve, const PointDivisor& D, int n) {
  FieldCtx k = curve.scratch();
  const auto basis = monomial_basis(n);
  Matrix E(3, Row(basis.size()));
  for (int r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < basis.size(); ++c)
      E[r][c] = eval_poly(curve, CurvePoly::monomial(basis[c], k.one()), D.pts[r]);
  return static_cast<int>(basis.size()) - rank(k, E);
}

std::optional<PointDivisor> residual_points(const Curve& curve, const STPair& st,
                                            const PointDivisor& D, const PointDivisor& Dp) {
  const CurvePoly s = poly_s(st);
  std::set<AffinePoint> known(D.pts.begin(), D.pts.end());
  known.insert(Dp.pts.begin(), Dp.pts.end());
  std::vector<AffinePoint> rest;
  for (const AffinePoint& p : enumerate_points(curve))
    if (eval_poly(curve, s, p).v == 0 && !known.count(p)) rest.push_back(p);
  if (rest.size() != 3) return std::nullopt;
  return PointDivisor{{rest[0], rest[1], rest[2]}};
}

}  // namespace c34::oracle
