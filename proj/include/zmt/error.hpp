#pragma once

#include <stdexcept>
#include <string>

namespace zmt {

enum class ErrorKind {
  kNoContent,       // nothing left after tokenization
  kTextTooShort,    // fewer than two tokens
  kDomain,          // argument outside the mathematical domain
  kDivergentZeta,   // Hurwitz zeta with alpha <= 1
  kShiftOutOfRange, // q-hat bisection bracket has no sign change
  kConfiguration,   // invalid user-supplied configuration
  kNumerical,       // quadrature or series failed to converge
  kDegenerateSpectrum,
  kIo,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the q-hat bisection when r(n) - R_n keeps its sign over the
/// whole search segment. Carries both endpoint residuals.
class ShiftOutOfRange : public Error {
 public:
  ShiftOutOfRange(double residual_low, double residual_high);

  double residual_low() const noexcept { return residual_low_; }
  double residual_high() const noexcept { return residual_high_; }

 private:
  double residual_low_;
  double residual_high_;
};

}  // namespace zmt
