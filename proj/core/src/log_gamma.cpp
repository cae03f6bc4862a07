#include <array>
#include <cmath>
#include <numbers>

#include "ptsech/specfun.hpp"

namespace ptsech::specfun {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

// Lanczos g = 607/128, 15 terms (Godfrey).
constexpr double lanczos_g = 607.0 / 128.0;
constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5};

cplx lanczos_log_gamma(cplx z) {
  const cplx w = z - 1.0;
  cplx acc = lanczos_c[0];
  for (std::size_t k = 1; k < lanczos_c.size(); ++k)
    acc += lanczos_c[k] / (w + static_cast<double>(k));
  const cplx t = w + lanczos_g + 0.5;
  return 0.5 * std::log(2.0 * pi) + (w + 0.5) * std::log(t) - t + std::log(acc);
}

cplx log1p_c(cplx z) {
  if (std::abs(z) < 1e-4) {
    const cplx z2 = z * z;
    return z - z2 / 2.0 + z2 * z / 3.0 - z2 * z2 / 4.0;
  }
  return std::log(1.0 + z);
}

// log sin(pi z), up to a multiple of 2 pi i.
cplx log_sin_pi(cplx z) {
  // sin(pi z) is 2-periodic; reducing keeps the argument small.
  z -= 2.0 * std::round(z.real() / 2.0);
  const double y = z.imag();
  if (y > 5.0)
    return -I * pi * z + std::log(I / 2.0) + log1p_c(-std::exp(2.0 * I * pi * z));
  if (y < -5.0)
    return I * pi * z + std::log(-I / 2.0) + log1p_c(-std::exp(-2.0 * I * pi * z));
  return std::log(std::sin(pi * z));
}

cplx wrap_imag(cplx v) {
  double im = std::remainder(v.imag(), 2.0 * pi);
  if (im <= -pi) im += 2.0 * pi;
  return {v.real(), im};
}

cplx log_gamma_unwrapped(cplx z) {
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  return std::log(pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

}  // namespace

bool is_nonpositive_integer(cplx z, double tol, int* which) {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  if (r > 0.0 || std::abs(z.real() - r) > tol) return false;
  if (which != nullptr) *which = static_cast<int>(r);
  return true;
}

cplx log_gamma(cplx z) {
  int n = 0;
  if (is_nonpositive_integer(z, 0.0, &n))
    throw PoleError(n, "Gamma pole at " + std::to_string(n));
  return wrap_imag(log_gamma_unwrapped(z));
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma_unwrapped(z));
}

Tagged gamma_ratio(std::span<const cplx> num, std::span<const cplx> den) {
  int num_poles = 0;
  int den_poles = 0;
  int first_pole = 0;
  cplx acc = 0.0;
  for (const cplx& z : num) {
    int n = 0;
    if (is_nonpositive_integer(z, 0.0, &n)) {
      if (num_poles++ == 0) first_pole = n;
    } else {
      acc += log_gamma_unwrapped(z);
    }
  }
  for (const cplx& z : den) {
    if (is_nonpositive_integer(z)) {
      ++den_poles;
    } else {
      acc -= log_gamma_unwrapped(z);
    }
  }
  if (num_poles > den_poles) return Tagged::infinite(first_pole);
  if (num_poles < den_poles) return Tagged::finite_value(0.0);
  if (num_poles > 0)
    throw PoleError(first_pole, "Gamma ratio with cancelling poles");
  return Tagged::finite_value(std::exp(acc));
}

Tagged gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  return gamma_ratio(std::span<const cplx>(num.begin(), num.size()),
                     std::span<const cplx>(den.begin(), den.size()));
}

cplx pochhammer(cplx a, unsigned n) {
  cplx r = 1.0;
  for (unsigned j = 0; j < n; ++j) r *= a + static_cast<double>(j);
  return r;
}

}  // namespace ptsech::specfun
