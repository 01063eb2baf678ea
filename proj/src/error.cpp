#include "zmt/error.hpp"

#include <cstdio>

namespace zmt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kNoContent: return "no_content";
    case ErrorKind::kTextTooShort: return "text_too_short";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kDivergentZeta: return "divergent_zeta";
    case ErrorKind::kShiftOutOfRange: return "shift_out_of_range";
    case ErrorKind::kConfiguration: return "configuration";
    case ErrorKind::kNumerical: return "numerical";
    case ErrorKind::kDegenerateSpectrum: return "degenerate_spectrum";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

namespace {

std::string shift_message(double lo, double hi) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "no sign change of r(n) - R_n on the shift bracket (residuals %.6g, %.6g)", lo,
                hi);
  return buf;
}

}  // namespace

ShiftOutOfRange::ShiftOutOfRange(double residual_low, double residual_high)
    : Error(ErrorKind::kShiftOutOfRange, shift_message(residual_low, residual_high)),
      residual_low_(residual_low),
      residual_high_(residual_high) {}

}  // namespace zmt
