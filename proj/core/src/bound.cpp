#include "ptsech/bound.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ptsech {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double decay_threshold = 1e-12;

cplx log_minus_z(double x, const PotentialSpec& spec) {
  return {spec.lambda() * x, -spec.im_sign() * std::numbers::pi / 2};
}

cplx z_of(double x, const PotentialSpec& spec) {
  return static_cast<double>(spec.im_sign()) * I * std::exp(spec.lambda() * x);
}

struct SeriesShape {
  cplx b;
  cplx c;
  cplx exponent;  // psi = (-z)^exponent F(-n, b; c; z)
};

SeriesShape shape(const BoundState& st) {
  const double n = st.n;
  if (st.convention == Convention::ReflectedExponent)
    return {n - 2.0 * st.p, 1.0 - 2.0 * st.p, -st.p};
  return {n + 2.0 * st.p, 1.0 + 2.0 * st.p, st.p};
}

// Degree of F(-n, b; c; z) as a polynomial in z.
int effective_degree(int n, cplx b) {
  int m = 0;
  if (specfun::is_nonpositive_integer(b, 1e-12, &m) && -m < n) return -m;
  return n;
}

void check_range(double x, const PotentialSpec& spec) {
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  if (std::abs(spec.lambda() * x) > 700.0)
    throw DomainError("|lambda x| > 700 overflows the eigenfunction");
}

}  // namespace

std::string_view to_string(Convention c) noexcept {
  return c == Convention::ReflectedExponent ? "reflected" : "direct";
}

double energy_level(int n, const PotentialSpec& spec) {
  if (n < 1) throw InvalidLevel("level index must be >= 1, got " + std::to_string(n));
  const double nl = n * spec.lambda();
  return spec.A() * spec.A() / (nl * nl) - nl * nl / 4.0;
}

BoundState make_bound_state(int n, const PotentialSpec& spec, Convention convention) {
  const double E = energy_level(n, spec);
  const double lam2 = spec.lambda() * spec.lambda();
  const double sA = spec.im_sign() * spec.A();
  const double nd = n;
  BoundState st{n, E, false, 0.0, 0.0, convention, spec, {}, {}};
  if (convention == Convention::ReflectedExponent) {
    st.p = cplx(nd / 2.0, -sA / (nd * lam2));
    st.q = nd - st.p;
  } else {
    st.p = cplx(-nd / 2.0, sA / (nd * lam2));
    st.q = st.p + nd;
  }
  const SeriesShape sh = shape(st);
  const int degree = effective_degree(n, sh.b);
  const double re = sh.exponent.real();
  // |(-z)^e| = exp(Re e * lambda x); the polynomial adds `degree` at +infinity.
  st.decay_minus = re;
  st.decay_plus = -(re + degree);
  st.admissible = st.decay_minus > decay_threshold && st.decay_plus > decay_threshold;
  return st;
}

std::vector<BoundState> spectrum(const PotentialSpec& spec, int n_max) {
  if (n_max < 1) throw InvalidLevel("n_max must be >= 1");
  std::vector<BoundState> out;
  out.reserve(2 * static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(make_bound_state(n, spec, Convention::ReflectedExponent));
    out.push_back(make_bound_state(n, spec, Convention::DirectExponent));
  }
  return out;
}

cplx bound_wavefunction(const BoundState& st, double x, const specfun::Precision& prec) {
  check_range(x, st.spec);
  const SeriesShape sh = shape(st);
  const cplx z = z_of(x, st.spec);
  const cplx a = sh.c - 1.0;  // -2p or +2p
  cplx norm = 1.0;
  for (int j = 2; j <= st.n; ++j) norm *= static_cast<double>(j);
  const cplx P = specfun::jacobi_poly(static_cast<unsigned>(st.n), a, -1.0, 1.0 - 2.0 * z, prec);
  norm /= specfun::pochhammer(sh.c, static_cast<unsigned>(st.n));
  return std::exp(sh.exponent * log_minus_z(x, st.spec)) * norm * P;
}

cplx bound_wavefunction_hypergeometric(const BoundState& st, double x,
                                       const specfun::Precision& prec) {
  check_range(x, st.spec);
  const SeriesShape sh = shape(st);
  const cplx z = z_of(x, st.spec);
  const cplx F = specfun::gauss_2f1({-static_cast<double>(st.n), sh.b, sh.c, z}, prec);
  return std::exp(sh.exponent * log_minus_z(x, st.spec)) * F;
}

double norm_integral(const BoundState& st, double X) {
  if (X <= 0.0) X = 30.0 / st.spec.lambda();
  auto f = [&](double x) { return std::norm(bound_wavefunction_hypergeometric(st, x)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -X, X, 15, 1e-10);
}

std::vector<PoleCandidate> pole_scan(const PotentialSpec& spec, double E_lo, double E_hi,
                                     int samples, Branch branch, double threshold) {
  if (!(E_lo < E_hi) || !std::isfinite(E_lo) || !std::isfinite(E_hi))
    throw DomainError("pole_scan needs a finite window with E_lo < E_hi");
  if (samples < 3) throw DomainError("pole_scan needs at least 3 samples");
  constexpr double inf = std::numeric_limits<double>::infinity();
  auto f = [&](double E) {
    try {
      const Tagged t = inverse_transmission_rl(derive_params(E, spec, branch));
      return t.finite() ? std::abs(t.value) : inf;
    } catch (const Error&) {
      return inf;
    }
  };
  const double h = (E_hi - E_lo) / (samples - 1);
  std::vector<double> Es(samples), fs(samples);
  for (int i = 0; i < samples; ++i) {
    Es[i] = i + 1 == samples ? E_hi : E_lo + i * h;
    fs[i] = f(Es[i]);
  }
  std::vector<PoleCandidate> out;
  for (int i = 1; i + 1 < samples; ++i) {
    if (!(fs[i] < fs[i - 1] && fs[i] < fs[i + 1])) continue;
    double best_E = Es[i];
    double best_f = fs[i];
    if (best_f > 0.0) {
      const auto r = boost::math::tools::brent_find_minima(
          f, Es[i - 1], Es[i + 1], std::numeric_limits<double>::digits / 2);
      if (r.second < best_f) {
        best_E = r.first;
        best_f = r.second;
      }
    }
    if (best_f < threshold) out.push_back({best_E, best_f});
  }
  return out;
}

}  // namespace ptsech
