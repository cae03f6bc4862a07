#pragma once

#include "ptsech/amplitudes.hpp"
#include "ptsech/model.hpp"
#include "ptsech/specfun.hpp"

namespace ptsech {

struct WavefunctionCoefficients {
  cplx c1{1.0, 0.0};
  cplx c2{0.0, 0.0};
};

struct WavefunctionValue {
  cplx psi;
  cplx dpsi;
};

/// psi = (-z)^p [c1 F(alpha, beta; gamma; z) + c2 (-z)^{1-gamma}
///       F(alpha-gamma+1, beta-gamma+1; 2-gamma; z)], z = s i e^{lambda x},
/// with (-z)^w = exp(w (lambda x - s i pi/2)).
/// Throws DomainError for lambda x > 700 and propagates 2F1 failures.
cplx wavefunction(double x, const WavefunctionCoefficients& coeffs,
                  const DerivedParams& params, const specfun::Precision& prec = {});

/// Value and x-derivative of the same solution.
WavefunctionValue wavefunction_with_derivative(double x, const WavefunctionCoefficients& coeffs,
                                               const DerivedParams& params,
                                               const specfun::Precision& prec = {});

/// a1m = (-i)^p, b2m = (-i)^{-p}, a2m = b1m = 0 and the four x -> +infinity
/// coefficients of the two basis solutions (c1 = 1 and c2 = 1).
AsymptoticAmplitudes asymptotic_amplitudes(const DerivedParams& params);

/// Closed forms for k' = conj(k), written in the exponents p and q.
ScatteringData conj_branch_formulas(cplx p, cplx q, int im_sign);
/// Closed forms for k' = -conj(k), written in q_tilde = sqrt(i s A - E)/lambda
/// taken with the k' = conj(k) sign, i.e. q_tilde = -q of this branch.
ScatteringData neg_conj_branch_formulas(cplx p, cplx q_tilde, int im_sign);

/// The closed-form coefficients for the branch the params were derived with.
ScatteringData scattering_coefficients(const DerivedParams& params);

/// 1/T_rl, finite (zero) at the poles of T_rl.
Tagged inverse_transmission_rl(const DerivedParams& params);

struct BranchReflectionReport {
  /// Largest relative deviation between each branch's second-form closed
  /// expressions with q -> -q and its first-form expressions.
  double max_deviation = 0.0;
  ScatteringData conj;
  ScatteringData neg_conj;
};

/// Checks that flipping the sign of q maps the k' = -conj(k) closed forms onto
/// the k' = conj(k) forms. `params_conj` and `params_neg` must come from the
/// same (E, spec) with opposite branches; DomainError otherwise.
BranchReflectionReport branch_reflection_check(const DerivedParams& params_conj,
                                               const DerivedParams& params_neg);

/// Relative deviation of two tagged values: 0 when both diverge at the same
/// pole, infinity when only one diverges.
double relative_deviation(const Tagged& x, const Tagged& reference);

}  // namespace ptsech
