#pragma once

#include <initializer_list>
#include <span>

#include "ptsech/error.hpp"
#include "ptsech/tagged.hpp"

namespace ptsech::specfun {

/// Tolerances shared by the special functions. Defaults are used when no
/// context is passed.
struct Precision {
  /// Series stop once a term is below this fraction of the partial sum.
  double series_tol = 1e-17;
  unsigned max_terms = 50000;
  /// |a - b - m| below this makes the 1/z connection degenerate.
  double degenerate_tol = 1e-8;
};

/// Principal branch of log Gamma(z), imaginary part in (-pi, pi].
/// Throws PoleError at non-positive integers.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
/// 1/Gamma(z); zero at the poles of Gamma.
cplx rgamma(cplx z);

/// prod Gamma(num_i) / prod Gamma(den_j) through log-Gamma differences.
/// Returns a tagged infinity when more numerator arguments than denominator
/// arguments sit on poles, zero when fewer do, and throws PoleError when the
/// counts are equal and non-zero (the finite limit is not computed).
Tagged gamma_ratio(std::span<const cplx> num, std::span<const cplx> den);
Tagged gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den);

/// Non-positive integer n if z is one, within `tol`.
bool is_nonpositive_integer(cplx z, double tol = 0.0, int* which = nullptr);

/// a (a+1) ... (a+n-1).
cplx pochhammer(cplx a, unsigned n);

struct HypergeometricArgs {
  cplx a;
  cplx b;
  cplx c;
  cplx z;
};

enum class Method {
  Automatic,
  /// Gauss series about 0; only meaningful for |z| < 1.
  Series,
  /// (1-z)^{-a} F(a, c-b; c; z/(z-1)).
  Pfaff,
  /// Connection formula about z = 1.
  OneMinusZ,
  /// Connection formula about z = infinity.
  Inversion,
  /// Taylor integration of the hypergeometric equation from |z| = 1/2.
  Continuation,
};

/// Gauss hypergeometric function 2F1(a, b; c; z), principal branch
/// (cut along [1, infinity)).
cplx gauss_2f1(const HypergeometricArgs& args, const Precision& prec = {});
/// Evaluation with a forced outer method; inner evaluations are automatic.
cplx gauss_2f1(const HypergeometricArgs& args, Method method,
               const Precision& prec = {});

/// Jacobi polynomial P_n^{(a,b)}(x) for complex parameters.
cplx jacobi_poly(unsigned n, cplx a, cplx b, cplx x, const Precision& prec = {});

}  // namespace ptsech::specfun
