#include <cmath>
#include <numbers>

#include "internal.hpp"

namespace ptsech::oracle {

namespace {

constexpr cplx I{0.0, 1.0};
constexpr double pi = std::numbers::pi;
constexpr std::size_t tail_terms = 120;

cplx sech(cplx u) {
  const double sigma = u.real() >= 0.0 ? 1.0 : -1.0;
  const cplx e = std::exp(-sigma * u);
  return 2.0 * e / (1.0 + e * e);
}

// sech u = 2 sum_j (-1)^j w^{2j+1} in w = e^{-|u|}.
std::vector<cplx> sech_tail(double A) {
  std::vector<cplx> c(tail_terms + 1, 0.0);
  for (std::size_t m = 1; m <= tail_terms; m += 2) c[m] = 2.0 * A * ((m / 2) % 2 == 0 ? 1.0 : -1.0);
  return c;
}

}  // namespace

Problem make_problem(const PotentialSpec& spec) {
  Problem pr;
  pr.potential = [spec](cplx x) { return potential(x, spec); };
  pr.lambda = spec.lambda();
  const double s = spec.im_sign();
  const cplx siA = s * I * spec.A();
  // tanh u = -1 + 2 sum_{j>=1} (-1)^{j+1} w^{2j} on the left, mirrored on the right.
  pr.left = {-siA, sech_tail(spec.A())};
  pr.right = {siA, sech_tail(spec.A())};
  for (std::size_t m = 2; m <= tail_terms; m += 2) {
    const double t = 2.0 * ((m / 2) % 2 == 1 ? 1.0 : -1.0);
    pr.left.coeffs[m] = siA * t;
    pr.right.coeffs[m] = -siA * t;
  }
  // The continued potential is analytic for Im(lambda x) strictly between
  // -pi/2 and 3pi/2 (mirrored for s = -1).
  for (double y : {-0.4, -0.2, 0.0, 0.25, 0.5, 0.75, 1.0, 1.2, 1.4})
    pr.matching_lines.push_back(s * y * pi);
  return pr;
}

namespace testing {

Problem hermitian_part_only(const PotentialSpec& spec) {
  Problem pr;
  const double A = spec.A();
  const double lam = spec.lambda();
  pr.potential = [A, lam](cplx x) { return A * sech(lam * x); };
  pr.lambda = lam;
  pr.left = {0.0, sech_tail(A)};
  pr.right = pr.left;
  pr.matching_lines = {-0.25 * pi, 0.0, 0.25 * pi};
  return pr;
}

Problem sech_squared_well(double nu, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("lambda must be positive");
  Problem pr;
  const double depth = lambda * lambda * nu * (nu + 1.0);
  pr.potential = [depth, lambda](cplx x) {
    const cplx s = sech(lambda * x);
    return -depth * s * s;
  };
  pr.lambda = lambda;
  // sech^2 u = 4 sum_{j>=1} (-1)^{j+1} j w^{2j}.
  std::vector<cplx> c(tail_terms + 1, 0.0);
  for (std::size_t m = 2; m <= tail_terms; m += 2) {
    const double j = static_cast<double>(m / 2);
    c[m] = -depth * 4.0 * j * ((m / 2) % 2 == 1 ? 1.0 : -1.0);
  }
  pr.left = {0.0, c};
  pr.right = {0.0, c};
  pr.matching_lines = {-0.25 * pi, 0.0, 0.25 * pi};
  return pr;
}

}  // namespace testing

namespace detail {

State jost_start(const TailExpansion& tail, double lambda, int side, cplx s, cplx E, cplx x) {
  (void)E;
  const double d = side < 0 ? 1.0 : -1.0;
  const cplx w = std::exp(d * lambda * x);
  const std::size_t M = tail.coeffs.size() - 1;
  std::vector<cplx> c(M + 1, 0.0);
  c[0] = 1.0;
  cplx val = 1.0;
  cplx der = s * lambda;
  cplx wj = 1.0;
  unsigned small = 0;
  for (std::size_t j = 1; j <= M; ++j) {
    const double jd = static_cast<double>(j);
    const cplx denom = lambda * lambda * d * jd * (2.0 * s + d * jd);
    if (std::abs(2.0 * s + d * jd) < 1e-10)
      throw IllConditioned("resonant exponent in the asymptotic series");
    cplx acc = 0.0;
    for (std::size_t m = 1; m <= j; ++m) acc += tail.coeffs[m] * c[j - m];
    c[j] = acc / denom;
    wj *= w;
    const cplx term = c[j] * wj;
    val += term;
    der += term * (s + d * jd) * lambda;
    if (std::abs(term) <= 1e-18 * std::abs(val)) {
      if (++small == 4) break;
    } else {
      small = 0;
    }
  }
  const cplx e = std::exp(s * lambda * x);
  return {val * e, der * e};
}

}  // namespace detail

AmplitudeFit fit_asymptotics(const Trajectory& traj, cplx k, double x_fit) {
  if (traj.xs.empty()) throw DomainError("empty trajectory");
  if (std::abs(2.0 * k) < 1e-12) throw IllConditioned("|2k| below 1e-12 in amplitude fit");
  std::size_t j = 0;
  for (std::size_t i = 1; i < traj.xs.size(); ++i)
    if (std::abs(traj.xs[i] - x_fit) < std::abs(traj.xs[j] - x_fit)) j = i;
  const cplx ik = I * k;
  auto at = [&](std::size_t i) { return cplx(traj.xs[i], traj.im_offset); };
  const cplx x = at(j);
  AmplitudeFit fit;
  fit.a = (traj.dpsi[j] + ik * traj.psi[j]) / (2.0 * ik) * std::exp(-ik * x);
  fit.b = (ik * traj.psi[j] - traj.dpsi[j]) / (2.0 * ik) * std::exp(ik * x);
  if (traj.xs.size() > 1) {
    const std::size_t n = j + 1 < traj.xs.size() ? j + 1 : j - 1;
    const cplx xn = at(n);
    const cplx pred = fit.a * std::exp(ik * xn) + fit.b * std::exp(-ik * xn);
    fit.residual = std::abs(pred - traj.psi[n]) / std::max(std::abs(traj.psi[n]), 1e-300);
  }
  return fit;
}

}  // namespace ptsech::oracle
