#include "c34/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "c34/divisor.hpp"
#include "c34/error.hpp"
#include "c34/jacobian.hpp"
#include "c34/oracle.hpp"
#include "c34/reduction.hpp"

namespace c34::checks {

namespace {

// Runs `body` until `trials` instances were checked. The body returns false
// to ask for a fresh draw; AtypicalError and the zero-class errors also
// count as a redraw.
template <class Body>
Outcome drive(int trials, Body&& body) {
  Outcome out;
  const int limit = 20 * trials + 100;
  int done = 0;
  for (int draws = 0; done < trials; ++draws) {
    if (draws >= limit) {
      out.fail("gave up after " + std::to_string(draws) + " draws (" +
               std::to_string(done) + " checked)");
      break;
    }
    const int failed_before = out.failed;
    try {
      if (!body(out)) {
        ++out.skipped;
        continue;
      }
    } catch (const AtypicalError&) {
      ++out.skipped;
      continue;
    } catch (const Error& e) {
      if (e.code() == Errc::SameDivisor || e.code() == Errc::IdentityResult) {
        ++out.skipped;
        continue;
      }
      out.fail(e.what());
    }
    ++done;
    if (out.failed == failed_before) ++out.passed;
  }
  return out;
}

std::string show(const OpCount& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

void expect_count(Outcome& out, const char* what, const OpCount& got, OpCount want) {
  if (got != want) out.fail(std::string(what) + ": " + show(got) + ", expected " + show(want));
}

template <class Fn>
OpCount counted(FieldCtx& k, Fn&& fn) {
  const CountScope scope(k);
  fn();
  return scope.delta();
}

bool kernel_zero(const FieldCtx& field, const Mat3x5& M, const std::array<Element, 5>& v) {
  FieldCtx k = field.scratch();
  for (int r = 0; r < 3; ++r) {
    Element acc{};
    for (int c = 0; c < 5; ++c) acc = k.add(acc, k.mul(M.at(r, c), v[c]));
    if (acc.v != 0) return false;
  }
  return true;
}

Mat3 lin(const FieldCtx& field, Element a, const Mat3& A, Element b, const Mat3& B, Element c) {
  FieldCtx k = field.scratch();
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      out[i][j] = k.add(k.mul(a, A[i][j]), k.mul(b, B[i][j]));
      if (i == j) out[i][j] = k.add(out[i][j], c);
    }
  return out;
}

oracle::PointDivisor points_of(const SampledDivisor& s) { return {s.points}; }

}  // namespace

Outcome op_counts(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng), Dp = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    DivisorRep sum, dbl;
    const OpCount add_count = counted(k, [&] { sum = add(k, curve, D, Dp); });
    const OpCount dbl_count = counted(k, [&] { dbl = double_class(k, curve, D); });
    expect_count(out, "add", add_count, {117, 2});
    expect_count(out, "double", dbl_count, {129, 2});
    return true;
  });
}

Outcome stage_counts(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng), Dp = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const BVec b{random_element(k, rng), random_element(k, rng), random_element(k, rng)};
    GHI ghi;
    expect_count(out, "compute_ghi", counted(k, [&] { ghi = compute_ghi(k, D); }), {7, 0});
    expect_count(out, "tx_apply", counted(k, [&] { tx_apply(k, D, b); }), {6, 0});
    expect_count(out, "ty_apply", counted(k, [&] { ty_apply(k, D, ghi, b); }), {6, 0});
    expect_count(out, "y_reduce_direct", counted(k, [&] { y_reduce_direct(k, D, b); }), {11, 0});
    expect_count(out, "negate", counted(k, [&] { negate(k, curve, D); }), {7, 0});
    expect_count(out, "negate_with_h", counted(k, [&] { negate_with_h(k, curve, D, true); }),
                 {10, 0});

    for (const bool doubling : {false, true}) {
      const DivisorRep& E = doubling ? D : Dp;
      Mat3x5 M;
      KernelBasis K;
      STPair st;
      Mat3x5 Mpp;
      if (doubling) {
        expect_count(out, "build_m_double", counted(k, [&] { M = build_m_double(k, curve, D); }),
                     {34, 0});
      } else {
        expect_count(out, "build_m_add", counted(k, [&] { M = build_m_add(k, D, Dp); }), {22, 0});
      }
      expect_count(out, "kernel_m", counted(k, [&] { K = kernel_m(k, M); }), {39, 1});
      expect_count(out, "form_st", counted(k, [&] { st = form_st(k, E, K); }), {18, 0});
      expect_count(out, "reduce_to_mpp", counted(k, [&] { Mpp = reduce_to_mpp(k, curve, st); }),
                   {20, 0});
      expect_count(out, "solve_mpp", counted(k, [&] { solve_mpp(k, Mpp); }), {11, 1});
      expect_count(out, doubling ? "addflip(D, D)" : "addflip(D, D')",
                   counted(k, [&] { addflip(k, curve, D, E); }),
                   doubling ? OpCount{122, 2} : OpCount{110, 2});
    }
    return true;
  });
}

Outcome oracle_equivalence(const Curve& curve, Rng& rng, int trials, bool doubling) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng);
    const DivisorRep Dp = doubling ? D : random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const Mat3x5 M = doubling ? build_m_double(k, curve, D) : build_m_add(k, D, Dp);
    const KernelBasis K = kernel_m(k, M);
    const STPair st = form_st(k, Dp, K);
    const Mat3x5 Mpp = reduce_to_mpp(k, curve, st);
    const DivisorRep R = solve_mpp(k, Mpp);
    if (addflip(k, curve, D, Dp) != R) out.fail("addflip differs from its own stages");

    const Mat3x5 P = permute_m(k, M);
    if (!kernel_zero(k, P, K.v1) || !kernel_zero(k, P, K.v2)) out.fail("M' v != 0");
    const Element one = k.one(), zero = k.zero();
    if (!kernel_zero(k, Mpp, {R.c, R.b, R.a, one, zero}) ||
        !kernel_zero(k, Mpp, {R.f, R.e, R.d, zero, one})) {
      out.fail("M'' v'' != 0");
    }

    oracle::AddflipTrace tr;
    try {
      tr = oracle::generic_addflip(curve, D, Dp);
    } catch (const Error& e) {
      out.fail(std::string("oracle rejected a typical instance: ") + e.what());
      return true;
    }
    const oracle::Matrix fast_m = oracle::to_matrix(M);
    if (doubling ? !oracle::same_kernel(k, fast_m, tr.m) : fast_m != tr.m) {
      out.fail(doubling ? "doubling M kernel differs from oracle" : "M differs from oracle");
    }
    if (st != tr.st) out.fail("s, t differ from oracle");
    if (R != tr.result) {
      out.fail("addflip " + format_divisor(R) + " != oracle " + format_divisor(tr.result) +
               " for D=" + format_divisor(D) + " D'=" + format_divisor(Dp));
    }
    return true;
  });
}

Outcome split_instances(const Curve& curve, Rng& rng, int trials) {
  const std::vector<AffinePoint> all = enumerate_points(curve);
  return drive(trials, [&](Outcome& out) {
    const SampledDivisor sd = sample_typical(curve, rng);
    const SampledDivisor sp = sample_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const STPair st =
        form_st(k, sp.rep, kernel_m(k, build_m_add(k, sd.rep, sp.rep)));
    const DivisorRep R = solve_mpp(k, reduce_to_mpp(k, curve, st));
    const auto rest = oracle::residual_points(curve, st, points_of(sd), points_of(sp));
    if (!rest) return false;

    std::set<AffinePoint> want(rest->pts.begin(), rest->pts.end());
    std::set<AffinePoint> zeros;
    const CurvePoly F = poly_F(R), G = poly_G(R);
    for (const AffinePoint& p : all)
      if (eval_poly(curve, F, p).v == 0 && eval_poly(curve, G, p).v == 0) zeros.insert(p);
    if (zeros != want) out.fail("zeros of (F'', G'') differ from the residual zeros of s");
    try {
      if (from_points(curve, rest->pts[0], rest->pts[1], rest->pts[2]) != R) {
        out.fail("from_points(residual) != addflip output " + format_divisor(R));
      }
    } catch (const Error& e) {
      out.fail(std::string("from_points on the residual failed: ") + e.what());
    }
    return true;
  });
}

Outcome relation_identities(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const GHI ghi = compute_ghi(k, D);
    const Mat3 tx = tx_matrix(k, D), ty = ty_matrix(k, ghi, D);
    auto n = [&](Element v) { return k.neg(v); };
    if (mat3_mul(k, tx, ty) != mat3_mul(k, ty, tx)) out.fail("T_x T_y != T_y T_x");
    if (mat3_mul(k, tx, tx) != lin(k, n(D.a), ty, n(D.b), tx, n(D.c))) out.fail("(s1) fails");
    if (mat3_mul(k, tx, ty) != lin(k, n(D.d), ty, n(D.e), tx, n(D.f))) out.fail("(s2) fails");
    if (mat3_mul(k, ty, ty) != lin(k, n(ghi.g), ty, n(ghi.h), tx, n(ghi.i))) out.fail("(s3) fails");
    const BVec b{random_element(k, rng), random_element(k, rng), random_element(k, rng)};
    if (y_reduce_direct(k, D, b) != ty_apply(k, D, ghi, b)) out.fail("y_reduce_direct != T_y");
    return true;
  });
}

Outcome negation_identity(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const NegationResult nr = negate_with_h(k, curve, D, true);
    const CurvePoly lhs = poly_add(curve, poly_mul(curve, poly_G(D), poly_G(nr.neg)),
                                   poly_mul(curve, poly_F(D), poly_H(k, *nr.h)));
    if (!lhs.is_zero()) out.fail("G G''' + F H = " + render(lhs));
    if (negate(k, curve, D) != nr.neg) out.fail("negate and negate_with_h disagree");
    return true;
  });
}

Outcome commutativity(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng), Dp = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    if (addflip(k, curve, D, Dp) != addflip(k, curve, Dp, D)) out.fail("addflip not symmetric");
    if (add(k, curve, D, Dp) != add(k, curve, Dp, D)) out.fail("add not commutative");
    return true;
  });
}

Outcome associativity(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep A = random_typical(curve, rng), B = random_typical(curve, rng),
                     C = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const DivisorRep lhs = add(k, curve, add(k, curve, A, B), C);
    const DivisorRep rhs = add(k, curve, A, add(k, curve, B, C));
    if (lhs != rhs) out.fail("(A + B) + C != A + (B + C)");
    return true;
  });
}

Outcome involution(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    const DivisorRep N = negate(k, curve, D);
    if (negate(k, curve, N) != D) out.fail("negate(negate(D)) != D");
    try {
      add(k, curve, D, N);
      out.fail("add(D, -D) returned a divisor");
    } catch (const Error& e) {
      if (e.code() != Errc::IdentityResult) out.fail(std::string("add(D, -D): ") + e.what());
    }
    return true;
  });
}

Outcome scalar_vs_oracle(const Curve& curve, Rng& rng, int bases, int max_m) {
  return drive(bases, [&](Outcome& out) {
    const DivisorRep D = random_typical(curve, rng);
    FieldCtx k = curve.scratch();
    std::vector<std::pair<int, DivisorRep>> fast, slow;
    for (int m = -max_m; m <= max_m; ++m) {
      if (m == 0) continue;
      DivisorRep got;
      try {
        got = scalar_mul(k, curve, m, D);
      } catch (const AtypicalError&) {
        got = scalar_mul_double_add(k, curve, m, D);
      }
      fast.emplace_back(m, got);
      slow.emplace_back(m, oracle::repeated_add(curve, m, D));
    }
    for (std::size_t i = 0; i < fast.size(); ++i) {
      if (fast[i].second != slow[i].second) {
        out.fail("scalar_mul(" + std::to_string(fast[i].first) + ", " + format_divisor(D) +
                 ") differs from repeated addition");
        break;
      }
    }
    return true;
  });
}

Outcome dimension_table(const Curve& curve, Rng& rng, int trials) {
  return drive(trials, [&](Outcome& out) {
    const SampledDivisor sd = sample_typical(curve, rng);
    for (int n = 0; n <= 17; ++n) {
      const int want = std::max(0, n - 5);
      const int got = oracle::dim_wnd(curve, points_of(sd), n);
      if (got != want) {
        out.fail("dim W^" + std::to_string(n) + "_D = " + std::to_string(got) + ", expected " +
                 std::to_string(want));
        break;
      }
    }
    return true;
  });
}

}  // namespace c34::checks
