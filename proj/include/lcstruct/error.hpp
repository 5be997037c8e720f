#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lcstruct {

enum class Errc {
  ZeroCoefficient,
  ConstantMonomial,
  EmptyGeneratorList,
  LengthMismatch,
  NotUsual,
  NotPrime,
  NonpositiveK,
  ValuationViolation,
  InvalidComplex,
  InconsistentImage,
  NonStabilizing,
  BlockInconsistency,
  BadInput,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> generator = std::nullopt)
      : std::runtime_error(what), code_(code), generator_(generator) {}

  Errc code() const noexcept { return code_; }
  // Index of the offending generator, for ideal validation errors.
  std::optional<std::size_t> generator() const noexcept { return generator_; }

 private:
  Errc code_;
  std::optional<std::size_t> generator_;
};

// Identities the structure theorem guarantees; a failure is an engine bug.
// Prints a diagnostic and aborts.
[[noreturn]] void consistency_violation(const std::string& what);

}  // namespace lcstruct
