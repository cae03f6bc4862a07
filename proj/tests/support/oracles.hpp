#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace testsupport {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

/// log Gamma(z) from the Weierstrass product with N factors,
///   log Gamma(z) = -log z - g z + sum_{k<=N} [z/k - log(1 + z/k)] + tail,
/// summed in long double with compensation; the tail uses the zeta tails
/// sum_{k>N} k^{-m}. Not reduced to the principal branch.
inline lcplx log_gamma_product(cplx zd, long N = 100000) {
  const lcplx z(zd.real(), zd.imag());
  const long double euler = 0.577215664901532860606512090082402431L;
  lcplx sum = -std::log(z) - euler * z;
  lcplx comp = 0.0L;
  for (long k = 1; k <= N; ++k) {
    const lcplx w = z / static_cast<long double>(k);
    lcplx term;
    if (std::abs(w) < 1e-2L) {
      // w - log(1+w) = w^2/2 - w^3/3 + ...
      lcplx wp = w * w;
      term = 0.0L;
      for (int m = 2; m < 14; ++m) {
        term += (m % 2 == 0 ? 1.0L : -1.0L) * wp / static_cast<long double>(m);
        wp *= w;
      }
    } else {
      term = w - std::log(1.0L + w);
    }
    const lcplx y = term - comp;
    const lcplx t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const long double n = static_cast<long double>(N);
  const long double s2 = 1 / n - 1 / (2 * n * n) + 1 / (6 * n * n * n);
  const long double s3 = 1 / (2 * n * n) - 1 / (2 * n * n * n);
  const long double s4 = 1 / (3 * n * n * n);
  sum += z * z / 2.0L * s2 - z * z * z / 3.0L * s3 + z * z * z * z / 4.0L * s4;
  return sum;
}

/// Generalized binomial coefficient binom(alpha, m).
inline lcplx binom(lcplx alpha, unsigned m) {
  lcplx r = 1.0L;
  for (unsigned j = 0; j < m; ++j)
    r *= (alpha - static_cast<long double>(j)) / static_cast<long double>(j + 1);
  return r;
}

/// P_n^{(a,b)}(x) = sum_s binom(n+a, n-s) binom(n+b, s) ((x-1)/2)^s ((x+1)/2)^{n-s}.
inline cplx jacobi_explicit(unsigned n, cplx a, cplx b, cplx x) {
  const lcplx la(a.real(), a.imag()), lb(b.real(), b.imag()), lx(x.real(), x.imag());
  const long double nd = n;
  lcplx sum = 0.0L;
  for (unsigned s = 0; s <= n; ++s)
    sum += binom(nd + la, n - s) * binom(nd + lb, s) * std::pow((lx - 1.0L) / 2.0L, (int)s) *
           std::pow((lx + 1.0L) / 2.0L, (int)(n - s));
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// Jacobi values P_0..P_nmax from the three-term recurrence (real a, b).
inline std::vector<double> jacobi_recurrence(unsigned nmax, double a, double b, double x) {
  std::vector<double> P(nmax + 1);
  P[0] = 1.0;
  if (nmax == 0) return P;
  P[1] = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
  for (unsigned n = 2; n <= nmax; ++n) {
    const double c = 2.0 * n + a + b;
    const double lhs = 2.0 * n * (n + a + b) * (c - 2.0);
    P[n] = ((c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * P[n - 1] -
            2.0 * (n + a - 1.0) * (n + b - 1.0) * c * P[n - 2]) /
           lhs;
  }
  return P;
}

/// Fourth-order central second difference.
inline cplx second_difference(const std::function<cplx(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

/// Direct V = A sech(lambda x) + s i A tanh(lambda x) in long double.
inline cplx potential_direct(double x, double A, double lambda, int s) {
  const long double u = static_cast<long double>(lambda) * x;
  const long double v_re = A / std::cosh(u);
  const long double v_im = s * A * std::tanh(u);
  return {static_cast<double>(v_re), static_cast<double>(v_im)};
}

/// Deterministic generator shared by the property tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  cplx in_box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }
};

inline double rel(cplx x, cplx ref) {
  const double s = std::abs(ref);
  return s > 0.0 ? std::abs(x - ref) / s : std::abs(x);
}

}  // namespace testsupport
