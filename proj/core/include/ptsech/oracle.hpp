#pragma once

#include <functional>
#include <vector>

#include "ptsech/amplitudes.hpp"
#include "ptsech/model.hpp"

namespace ptsech::oracle {

/// Samples of one solution of psi'' = (V(x) - E) psi along the line
/// x = xs[j] + i * im_offset.
struct Trajectory {
  std::vector<double> xs;
  std::vector<cplx> psi;
  std::vector<cplx> dpsi;
  double tol_used = 0.0;
  double im_offset = 0.0;
};

/// Expansion V = limit + sum_{m>=1} coeffs[m] w^m with w = e^{-lambda |x|}
/// on one side. coeffs[0] is unused.
struct TailExpansion {
  cplx limit;
  std::vector<cplx> coeffs;
};

/// A potential with exponentially approached limits, analytic in a strip
/// around the real axis. The oracle only needs the pointwise values and the
/// tail expansions; it never uses hypergeometric closed forms.
struct Problem {
  std::function<cplx(cplx)> potential;
  TailExpansion left;
  TailExpansion right;
  double lambda = 1.0;
  /// Values of Im(lambda x) on which Wronskians may be evaluated.
  std::vector<double> matching_lines;
};

Problem make_problem(const PotentialSpec& spec);

namespace testing {
/// A sech(lambda x) alone (imaginary part switched off).
Problem hermitian_part_only(const PotentialSpec& spec);
/// -lambda^2 nu (nu + 1) sech^2(lambda x); bound levels -lambda^2 (nu - n)^2.
Problem sech_squared_well(double nu, double lambda);
}  // namespace testing

/// Adaptive Dormand-Prince 5(4) integration of (psi, psi') from x0 to x1.
/// Preconditions: tol in [1e-14, 1e-4] and |x1 - x0| <= 200/lambda
/// (DomainError). Throws StepUnderflow when the step falls below 1e-12 and
/// Overflow when |psi| exceeds 1e250.
Trajectory integrate(const PotentialSpec& spec, double E, double x0, double x1, cplx psi0,
                     cplx dpsi0, double tol);
Trajectory integrate(const Problem& problem, cplx E, double x0, double x1, cplx psi0, cplx dpsi0,
                     double tol, double im_offset = 0.0);

struct AmplitudeFit {
  cplx a;
  cplx b;
  double residual = 0.0;
};

/// psi = a e^{ikx} + b e^{-ikx} from (psi, psi') at the sample nearest
/// x_fit; the residual is the relative misfit at the neighbouring sample.
/// Throws IllConditioned when |2k| < 1e-12 and DomainError for an empty
/// trajectory.
AmplitudeFit fit_asymptotics(const Trajectory& traj, cplx wavenumber, double x_fit);

struct OracleOptions {
  /// Cutoff distance; 0 selects 25/lambda. lambda X >= 20 is required.
  double X = 0.0;
  double tol = 1e-13;
};

/// Amplitudes of the two solutions F1 ~ e^{ikx}, F2 ~ e^{-ikx} at -infinity
/// (a1m = b2m = 1, a2m = b1m = 0) continued to +infinity.
AsymptoticAmplitudes numeric_amplitudes(const PotentialSpec& spec, double E, Branch branch,
                                        const OracleOptions& opts = {});
AsymptoticAmplitudes numeric_amplitudes(const Problem& problem, double E, Branch branch,
                                        const OracleOptions& opts = {});

/// R and T as quotients of the eight amplitudes. MatchFailure when the
/// common denominator a2m b1p - a1m b2p vanishes, DomainError when an
/// amplitude is tagged infinite.
ScatteringData transfer_quotients(const AsymptoticAmplitudes& amps, Branch branch);

ScatteringData numeric_scattering(const PotentialSpec& spec, double E, Branch branch,
                                  const OracleOptions& opts = {});
ScatteringData numeric_scattering(const Problem& problem, double E, Branch branch,
                                  const OracleOptions& opts = {});

struct ShootingRoot {
  double energy;
  /// Imaginary part of the root after Newton refinement in complex E,
  /// started at energy + 1e-3 i max(1, |energy|).
  double imag_residual;
  /// |W| / (lambda (|psi_L| + |psi_L'|/lambda)(|psi_R| + |psi_R'|/lambda)) at x = 0.
  double wronskian_residual;
};

struct ShootingOptions {
  /// Cutoff distance; 0 selects 25/lambda.
  double X = 0.0;
  double ode_tol = 1e-11;
};

/// Energies in [E_lo, E_hi] where the solutions decaying at both ends are
/// linearly dependent. grid >= 10; roots are polished to |dE| < tol.
/// NoDecayingMode when no grid energy has decaying solutions on both sides.
std::vector<ShootingRoot> shoot_bound_states(const PotentialSpec& spec, double E_lo, double E_hi,
                                             int grid, double tol,
                                             const ShootingOptions& opts = {});
std::vector<ShootingRoot> shoot_bound_states(const Problem& problem, double E_lo, double E_hi,
                                             int grid, double tol,
                                             const ShootingOptions& opts = {});

}  // namespace ptsech::oracle
