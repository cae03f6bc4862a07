#pragma once

#include <complex>
#include <limits>
#include <optional>

namespace ptsech {

using cplx = std::complex<double>;

/// A complex value that may be infinite because a Gamma factor in its
/// numerator sits on a pole. Poles mark bound states and resonances, so
/// they are carried as data instead of being thrown.
struct Tagged {
  cplx value{};
  /// Non-positive integer argument of the diverging Gamma factor.
  std::optional<int> pole;

  static Tagged finite_value(cplx v) { return Tagged{v, std::nullopt}; }
  static Tagged infinite(int at) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return Tagged{cplx(inf, inf), at};
  }

  bool finite() const noexcept { return !pole.has_value(); }
};

}  // namespace ptsech
