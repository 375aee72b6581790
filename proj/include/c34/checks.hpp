#pragma once

#include <string>

#include "c34/curve.hpp"
#include "c34/random.hpp"

// Randomised invariant suites shared by the selftest command and the
// acceptance binary. Each suite draws typical inputs until `trials` of them
// have been checked, resampling on Atypical, and gives up with a failure
// after 20 * trials + 100 draws.
namespace c34::checks {

struct Outcome {
  int passed = 0;
  int failed = 0;
  int skipped = 0;  // atypical draws that were resampled
  std::string first_failure;

  bool ok() const { return failed == 0; }
  void fail(std::string why) {
    if (failed++ == 0) first_failure = std::move(why);
  }
};

/// add records (117, 2) and double (129, 2); `trials` of each.
Outcome op_counts(const Curve& curve, Rng& rng, int trials);

/// Every stage and composite records its exact budget.
Outcome stage_counts(const Curve& curve, Rng& rng, int trials);

/// addflip equals the oracle (result, s and t, and M: entrywise for
/// addition, by kernel for doubling); kernel certificates M'v = M''v'' = 0.
Outcome oracle_equivalence(const Curve& curve, Rng& rng, int trials, bool doubling);

/// Fully split additions: residual zeros of s are the zeros of (F'', G'')
/// and rebuild the addflip output through from_points. Draws until `trials`
/// split instances are seen.
Outcome split_instances(const Curve& curve, Rng& rng, int trials);

/// T_x, T_y commute and satisfy the three quadratic relations.
Outcome relation_identities(const Curve& curve, Rng& rng, int trials);

/// G G''' + F H = 0 for the negation with H.
Outcome negation_identity(const Curve& curve, Rng& rng, int trials);

Outcome commutativity(const Curve& curve, Rng& rng, int trials);
Outcome associativity(const Curve& curve, Rng& rng, int trials);

/// negate is an involution and add(D, -D) raises IdentityResult.
Outcome involution(const Curve& curve, Rng& rng, int trials);

/// scalar_mul(m, D) equals oracle repeated addition for 0 < |m| <= max_m on
/// `bases` base divisors (a base is resampled if any multiple is atypical).
Outcome scalar_vs_oracle(const Curve& curve, Rng& rng, int bases, int max_m);

/// dim W^N_D = max(0, N - 5) for N in [0, 17].
Outcome dimension_table(const Curve& curve, Rng& rng, int trials);

}  // namespace c34::checks
