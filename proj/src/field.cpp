#include "c34/field.hpp"

#include <array>
#include <string>

#include "c34/error.hpp"

namespace c34 {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::ModulusTooLarge: return "ModulusTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::SingularScreenFailed: return "SingularScreenFailed";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::Exhausted: return "Exhausted";
    case Errc::Atypical: return "Atypical";
    case Errc::DuplicatePointsUnsupported: return "DuplicatePointsUnsupported";
    case Errc::SameDivisor: return "SameDivisor";
    case Errc::IdentityResult: return "IdentityResult";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const OpCount& c) {
  return os << "muls=" << c.muls << " invs=" << c.invs;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (auto a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldCtx::FieldCtx(std::uint64_t p) : p_(p) {
  if (p == 2 || p == 3) {
    throw Error(Errc::BadCharacteristic,
                "characteristic " + std::to_string(p) + " is not supported");
  }
  if (p >= kModulusLimit) {
    throw Error(Errc::ModulusTooLarge, "modulus must be below 2^62");
  }
  if (!is_prime(p)) {
    throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  }
}

FieldCtx mk_field(std::uint64_t p) { return FieldCtx(p); }

Element FieldCtx::from_int(std::int64_t x) const noexcept {
  const auto m = static_cast<__int128>(p_);
  __int128 r = static_cast<__int128>(x) % m;
  if (r < 0) r += m;
  return Element{static_cast<std::uint64_t>(r)};
}

Element FieldCtx::inv(Element x) {
  if (x.v == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  ++count_.invs;
  // Extended Euclid on (x, p).
  __int128 r0 = p_, r1 = x.v;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p_;
  return Element{static_cast<std::uint64_t>(t0)};
}

}  // namespace c34
