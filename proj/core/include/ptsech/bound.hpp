#pragma once

#include <vector>

#include "ptsech/analytic.hpp"
#include "ptsech/model.hpp"

namespace ptsech {

/// Which of the two terminating-series eigenfunction forms a level uses.
enum class Convention {
  /// Re p > 0: psi = (-z)^{-p} F(-n, n - 2p; 1 - 2p; z), with q = n - p.
  ReflectedExponent,
  /// Re p < 0: psi = (-z)^{p} F(-n, 2p + n; 1 + 2p; z), with q = p + n.
  DirectExponent,
};

std::string_view to_string(Convention c) noexcept;

struct BoundState {
  int n = 1;
  double energy = 0.0;
  bool admissible = false;
  /// |psi| ~ exp(-decay * lambda |x|) at each end; negative means growth.
  double decay_minus = 0.0;
  double decay_plus = 0.0;
  Convention convention = Convention::ReflectedExponent;
  PotentialSpec spec;
  cplx p;
  cplx q;
};

/// E_n = A^2/(n^2 lambda^2) - n^2 lambda^2/4. InvalidLevel for n < 1.
double energy_level(int n, const PotentialSpec& spec);

/// Both conventions for each n in 1..n_max, sorted by n then convention.
/// A level is admissible when both decay rates exceed 1e-12.
std::vector<BoundState> spectrum(const PotentialSpec& spec, int n_max);

/// The state built for one level and convention.
BoundState make_bound_state(int n, const PotentialSpec& spec, Convention convention);

/// Unnormalized eigenfunction through the Jacobi polynomial
/// n!/(1 -+ 2p)_n P_n^{(-+2p, -1)}(1 - 2z).
cplx bound_wavefunction(const BoundState& state, double x,
                        const specfun::Precision& prec = {});
/// The same function through the terminating 2F1.
cplx bound_wavefunction_hypergeometric(const BoundState& state, double x,
                                       const specfun::Precision& prec = {});

/// Integral of |psi|^2 over [-X, X]; X defaults to 30/lambda.
double norm_integral(const BoundState& state, double X = 0.0);

struct PoleCandidate {
  double energy;
  double inverse_transmission;
};

/// Local minima of |1/T_rl| on a uniform real-E grid, polished by Brent
/// minimisation, reported when below `threshold`. On the k' = conj(k)
/// branch T_rl has no real-E poles for A != 0, so the default is the other
/// branch.
std::vector<PoleCandidate> pole_scan(const PotentialSpec& spec, double E_lo, double E_hi,
                                     int samples, Branch branch = Branch::NegConjK,
                                     double threshold = 1e-6);

}  // namespace ptsech
