#pragma once

#include <cstdint>
#include <random>

#include "c34/field.hpp"

namespace c34 {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection; identical across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

inline Element random_element(const FieldCtx& field, Rng& rng) {
  return Element{uniform_below(rng, field.modulus())};
}

}  // namespace c34
