#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace c34 {

/// Residue modulo the context prime, always canonical: 0 <= v < p.
struct Element {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

inline std::ostream& operator<<(std::ostream& os, Element x) { return os << x.v; }

/// Tally of counted field operations. Only FieldCtx::mul and FieldCtx::inv
/// contribute; additions, subtractions and negations are free.
struct OpCount {
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;

  friend constexpr bool operator==(const OpCount&, const OpCount&) = default;
  friend constexpr OpCount operator-(const OpCount& l, const OpCount& r) {
    return {l.muls - r.muls, l.invs - r.invs};
  }
  friend constexpr OpCount operator+(const OpCount& l, const OpCount& r) {
    return {l.muls + r.muls, l.invs + r.invs};
  }
};

std::ostream& operator<<(std::ostream& os, const OpCount& c);

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n) noexcept;

/// Prime field F_p together with its operation counter.
///
/// A context is a unit of single-threaded use. Copying a context copies the
/// counter; `scratch()` yields an independent context with a zeroed counter
/// for work that must not show up in operation budgets (oracles, validation,
/// parsing).
class FieldCtx {
 public:
  /// Largest supported modulus (exclusive); sums of two residues must fit
  /// in 64 bits.
  static constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;

  /// Throws Error{NonPrime | BadCharacteristic | ModulusTooLarge}.
  explicit FieldCtx(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  Element from_int(std::int64_t x) const noexcept;
  Element from_uint(std::uint64_t x) const noexcept { return Element{x % p_}; }

  Element add(Element x, Element y) const noexcept {
    const std::uint64_t s = x.v + y.v;
    return Element{s >= p_ ? s - p_ : s};
  }
  Element sub(Element x, Element y) const noexcept {
    return Element{x.v >= y.v ? x.v - y.v : x.v + (p_ - y.v)};
  }
  Element neg(Element x) const noexcept { return Element{x.v == 0 ? 0 : p_ - x.v}; }

  /// Counted multiplication.
  Element mul(Element x, Element y) noexcept {
    ++count_.muls;
    return raw_mul(x, y);
  }
  /// Counted inversion. Throws Error{DivisionByZero} for x = 0.
  Element inv(Element x);

  bool is_zero(Element x) const noexcept { return x.v == 0; }

  OpCount counter() const noexcept { return count_; }
  void reset_counter() noexcept { count_ = {}; }

  FieldCtx scratch() const noexcept {
    FieldCtx copy = *this;
    copy.count_ = {};
    return copy;
  }

 private:
  Element raw_mul(Element x, Element y) const noexcept {
    const auto prod = static_cast<unsigned __int128>(x.v) * y.v;
    return Element{static_cast<std::uint64_t>(prod % p_)};
  }

  std::uint64_t p_;
  OpCount count_;
};

/// Validated construction; same as the FieldCtx constructor.
FieldCtx mk_field(std::uint64_t p);

/// Captures the counter on construction; `delta()` reports what was spent
/// since then.
class CountScope {
 public:
  explicit CountScope(const FieldCtx& ctx) : ctx_(ctx), start_(ctx.counter()) {}
  OpCount delta() const { return ctx_.counter() - start_; }

 private:
  const FieldCtx& ctx_;
  OpCount start_;
};

}  // namespace c34
