#pragma once

#include <stdexcept>
#include <string>

namespace c34 {

enum class Errc {
  NonPrime,
  BadCharacteristic,
  ModulusTooLarge,
  DivisionByZero,
  SingularScreenFailed,
  FieldTooLarge,
  Exhausted,
  Atypical,
  DuplicatePointsUnsupported,
  SameDivisor,
  IdentityResult,
  InvalidInput,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// A pivot the fast formulas divide by (or rely on being nonzero) vanished.
/// `stage` names the operation, `pivot` the quantity, e.g. ("kernel_m", "U").
class AtypicalError : public Error {
 public:
  AtypicalError(std::string stage, std::string pivot)
      : Error(Errc::Atypical, "atypical input: " + pivot + " = 0 in " + stage),
        stage_(std::move(stage)),
        pivot_(std::move(pivot)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& pivot() const noexcept { return pivot_; }

 private:
  std::string stage_;
  std::string pivot_;
};

}  // namespace c34
