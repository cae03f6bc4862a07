#include "ptsech/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace ptsech {

namespace {

using specfun::gamma_ratio;

constexpr cplx I{0.0, 1.0};

Tagged scaled(cplx factor, const Tagged& t) {
  if (!t.finite()) return t;
  return Tagged::finite_value(factor * t.value);
}

cplx log_minus_z(double x, const DerivedParams& params) {
  const double s = params.spec.im_sign();
  return {params.spec.lambda() * x, -s * std::numbers::pi / 2};
}

cplx z_of(double x, const DerivedParams& params) {
  return static_cast<double>(params.spec.im_sign()) * I * std::exp(params.spec.lambda() * x);
}

void check_range(double x, const DerivedParams& params) {
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  if (params.spec.lambda() * x > 700.0)
    throw DomainError("lambda x > 700 overflows the closed form");
}

}  // namespace

WavefunctionValue wavefunction_with_derivative(double x, const WavefunctionCoefficients& coeffs,
                                               const DerivedParams& params,
                                               const specfun::Precision& prec) {
  check_range(x, params);
  const cplx L = log_minus_z(x, params);
  const cplx z = z_of(x, params);
  const double lam = params.spec.lambda();
  const cplx p = params.p;
  const cplx al = params.alpha, be = params.beta, ga = params.gamma;
  WavefunctionValue out{0.0, 0.0};
  if (coeffs.c1 != 0.0) {
    const cplx pw = std::exp(p * L);
    const cplx f = specfun::gauss_2f1({al, be, ga, z}, prec);
    const cplx df = al * be / ga * specfun::gauss_2f1({al + 1.0, be + 1.0, ga + 1.0, z}, prec);
    out.psi += coeffs.c1 * pw * f;
    out.dpsi += coeffs.c1 * lam * pw * (p * f + z * df);
  }
  if (coeffs.c2 != 0.0) {
    const cplx a2 = al - ga + 1.0, b2 = be - ga + 1.0, g2 = 2.0 - ga;
    const cplx e2 = p + 1.0 - ga;
    const cplx pw = std::exp(e2 * L);
    const cplx f = specfun::gauss_2f1({a2, b2, g2, z}, prec);
    const cplx df = a2 * b2 / g2 * specfun::gauss_2f1({a2 + 1.0, b2 + 1.0, g2 + 1.0, z}, prec);
    out.psi += coeffs.c2 * pw * f;
    out.dpsi += coeffs.c2 * lam * pw * (e2 * f + z * df);
  }
  return out;
}

cplx wavefunction(double x, const WavefunctionCoefficients& coeffs, const DerivedParams& params,
                  const specfun::Precision& prec) {
  check_range(x, params);
  const cplx L = log_minus_z(x, params);
  const cplx z = z_of(x, params);
  const cplx al = params.alpha, be = params.beta, ga = params.gamma;
  cplx inner = 0.0;
  if (coeffs.c1 != 0.0) inner += coeffs.c1 * specfun::gauss_2f1({al, be, ga, z}, prec);
  if (coeffs.c2 != 0.0)
    inner += coeffs.c2 * std::exp((1.0 - ga) * L) *
             specfun::gauss_2f1({al - ga + 1.0, be - ga + 1.0, 2.0 - ga, z}, prec);
  return std::exp(params.p * L) * inner;
}

AsymptoticAmplitudes asymptotic_amplitudes(const DerivedParams& params) {
  const int s = params.spec.im_sign();
  const cplx p = params.p, q = params.q;
  AsymptoticAmplitudes out;
  out.a1m = Tagged::finite_value(minus_i_pow(p, s));
  out.b2m = Tagged::finite_value(minus_i_pow(-p, s));
  out.a2m = Tagged::finite_value(0.0);
  out.b1m = Tagged::finite_value(0.0);
  out.b1p = scaled(minus_i_pow(-q, s), gamma_ratio({1.0 + 2.0 * p, -2.0 * q}, {p - q, 1.0 + p - q}));
  out.b2p = scaled(minus_i_pow(-q, s), gamma_ratio({1.0 - 2.0 * p, -2.0 * q}, {-p - q, 1.0 - p - q}));
  out.a1p = scaled(minus_i_pow(q, s), gamma_ratio({1.0 + 2.0 * p, 2.0 * q}, {p + q, 1.0 + p + q}));
  out.a2p = scaled(minus_i_pow(q, s), gamma_ratio({1.0 - 2.0 * p, 2.0 * q}, {-p + q, 1.0 - p + q}));
  return out;
}

ScatteringData conj_branch_formulas(cplx p, cplx q, int s) {
  ScatteringData d;
  d.branch = Branch::ConjK;
  d.R_rl = scaled(minus_i_pow(2.0 * q, s),
                  gamma_ratio({-p - q, 1.0 - p - q, 2.0 * q}, {-2.0 * q, -p + q, 1.0 - p + q}));
  d.T_rl = scaled(minus_i_pow(q - p, s), gamma_ratio({-p - q, 1.0 - p - q}, {1.0 - 2.0 * p, -2.0 * q}));
  d.R_lr = scaled(-minus_i_pow(-2.0 * p, s),
                  gamma_ratio({1.0 + 2.0 * p, -p - q, 1.0 - p - q}, {p - q, 1.0 + p - q, 1.0 - 2.0 * p}));
  d.T_lr = scaled(p / q, d.T_rl);
  return d;
}

ScatteringData neg_conj_branch_formulas(cplx p, cplx qt, int s) {
  ScatteringData d;
  d.branch = Branch::NegConjK;
  d.R_rl = scaled(minus_i_pow(-2.0 * qt, s),
                  gamma_ratio({-p + qt, 1.0 - p + qt, -2.0 * qt}, {2.0 * qt, -p - qt, 1.0 - p - qt}));
  d.T_rl = scaled(minus_i_pow(-(p + qt), s),
                  gamma_ratio({-p + qt, 1.0 - p + qt}, {1.0 - 2.0 * p, 2.0 * qt}));
  d.R_lr = scaled(-minus_i_pow(-2.0 * p, s),
                  gamma_ratio({1.0 + 2.0 * p, -p + qt, 1.0 - p + qt}, {p + qt, 1.0 + p + qt, 1.0 - 2.0 * p}));
  d.T_lr = scaled(-p / qt, d.T_rl);
  return d;
}

ScatteringData scattering_coefficients(const DerivedParams& params) {
  const int s = params.spec.im_sign();
  if (params.branch == Branch::ConjK) return conj_branch_formulas(params.p, params.q, s);
  return neg_conj_branch_formulas(params.p, -params.q, s);
}

Tagged inverse_transmission_rl(const DerivedParams& params) {
  const cplx p = params.p, q = params.q;
  return scaled(minus_i_pow(p - q, params.spec.im_sign()),
                gamma_ratio({1.0 - 2.0 * p, -2.0 * q}, {-p - q, 1.0 - p - q}));
}

double relative_deviation(const Tagged& x, const Tagged& reference) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!x.finite() || !reference.finite())
    return (!x.finite() && !reference.finite() && *x.pole == *reference.pole) ? 0.0 : inf;
  const double scale = std::abs(reference.value);
  const double diff = std::abs(x.value - reference.value);
  return scale > 0.0 ? diff / scale : diff;
}

namespace {
double max_deviation(const ScatteringData& x, const ScatteringData& ref) {
  double m = 0.0;
  m = std::max(m, relative_deviation(x.R_rl, ref.R_rl));
  m = std::max(m, relative_deviation(x.T_rl, ref.T_rl));
  m = std::max(m, relative_deviation(x.R_lr, ref.R_lr));
  m = std::max(m, relative_deviation(x.T_lr, ref.T_lr));
  return m;
}
}  // namespace

BranchReflectionReport branch_reflection_check(const DerivedParams& params_conj,
                                               const DerivedParams& params_neg) {
  if (params_conj.branch != Branch::ConjK || params_neg.branch != Branch::NegConjK)
    throw DomainError("branch_reflection_check needs one ConjK and one NegConjK parameter set");
  if (params_conj.E != params_neg.E || params_conj.spec.A() != params_neg.spec.A() ||
      params_conj.spec.lambda() != params_neg.spec.lambda() ||
      params_conj.spec.im_sign() != params_neg.spec.im_sign())
    throw DomainError("branch_reflection_check needs parameters from the same energy and potential");
  const int s = params_conj.spec.im_sign();
  const cplx p = params_conj.p;
  BranchReflectionReport r;
  r.conj = scattering_coefficients(params_conj);
  r.neg_conj = scattering_coefficients(params_neg);
  for (const cplx q : {params_conj.q, params_neg.q}) {
    const ScatteringData flipped = neg_conj_branch_formulas(p, -q, s);
    const ScatteringData direct = conj_branch_formulas(p, q, s);
    r.max_deviation = std::max(r.max_deviation, max_deviation(flipped, direct));
  }
  return r;
}

}  // namespace ptsech
