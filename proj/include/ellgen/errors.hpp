#pragma once

#include <stdexcept>
#include <string>

namespace ellgen {

// Error taxonomy shared by the series engine, the genus formulas and the CLI.
// Usage errors (bad names) map to CLI exit 1, domain errors to exit 2.
enum class errc {
  non_unit_constant_term,
  non_zero_constant_term,
  order_exceeded,
  insufficient_input_order,
  universal_series_unknown,
  divisibility_violation,
  non_integral_class,
  degenerate_moduli,
  unknown_series,
  unknown_check,
};

class SeriesError : public std::runtime_error {
 public:
  SeriesError(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

  bool usage_error() const noexcept {
    return code_ == errc::unknown_series || code_ == errc::unknown_check;
  }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw SeriesError(code, what);
}

}  // namespace ellgen
