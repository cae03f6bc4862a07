#include <algorithm>
#include <cmath>
#include <string>

#include "internal.hpp"

namespace ptsech::oracle {

namespace detail {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double min_step = 1e-12;
constexpr double max_psi = 1e250;

struct Deriv {
  cplx dpsi;
  cplx ddpsi;
};

}  // namespace

cplx principal_sqrt(cplx v) {
  if (v.imag() == 0.0) v = cplx(v.real(), 0.0);
  return std::sqrt(v);
}

State propagate(const Problem& problem, cplx E, double t0, double t1, State y, double tol,
                double im_offset, Trajectory* record) {
  auto f = [&](double t, const State& s) -> Deriv {
    return {s.dpsi, (problem.potential(cplx(t, im_offset)) - E) * s.psi};
  };
  auto norm = [](const State& s) { return std::hypot(std::abs(s.psi), std::abs(s.dpsi)); };

  const double span = t1 - t0;
  const double dir = span >= 0.0 ? 1.0 : -1.0;
  double t = t0;
  double h = dir * std::min(std::abs(span), 0.01 / problem.lambda);
  if (record != nullptr) {
    record->xs.push_back(t);
    record->psi.push_back(y.psi);
    record->dpsi.push_back(y.dpsi);
  }
  if (span == 0.0) return y;

  Deriv k1 = f(t, y);
  State comp{0.0, 0.0};
  while (true) {
    const double remaining = t1 - t;
    if (std::abs(remaining) <= 1e-14 * std::max(1.0, std::abs(t1))) break;
    if (std::abs(h) >= std::abs(remaining)) h = remaining;
    if (std::abs(h) < min_step && std::abs(remaining) > min_step)
      throw StepUnderflow("step size collapsed below 1e-12 at x = " + std::to_string(t));

    auto stage = [&](double c, std::initializer_list<std::pair<double, const Deriv*>> terms) {
      State s = y;
      for (const auto& [a, k] : terms) {
        s.psi += h * a * k->dpsi;
        s.dpsi += h * a * k->ddpsi;
      }
      return std::pair{t + c * h, s};
    };
    auto [t2, y2] = stage(c2, {{a21, &k1}});
    const Deriv k2 = f(t2, y2);
    auto [t3, y3] = stage(c3, {{a31, &k1}, {a32, &k2}});
    const Deriv k3 = f(t3, y3);
    auto [t4, y4] = stage(c4, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    const Deriv k4 = f(t4, y4);
    auto [t5, y5] = stage(c5, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    const Deriv k5 = f(t5, y5);
    auto [t6, y6] = stage(1.0, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    const Deriv k6 = f(t6, y6);
    auto [t7, ynew] = stage(1.0, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const Deriv k7 = f(t7, ynew);

    const cplx err_psi =
        h * (e1 * k1.dpsi + e3 * k3.dpsi + e4 * k4.dpsi + e5 * k5.dpsi + e6 * k6.dpsi + e7 * k7.dpsi);
    const cplx err_dpsi = h * (e1 * k1.ddpsi + e3 * k3.ddpsi + e4 * k4.ddpsi + e5 * k5.ddpsi +
                               e6 * k6.ddpsi + e7 * k7.ddpsi);
    const double scale = tol * std::max({norm(y), norm(ynew), 1e-300});
    const double err = std::hypot(std::abs(err_psi), std::abs(err_dpsi)) / scale;

    if (!std::isfinite(err)) {
      h *= 0.2;
      continue;
    }
    if (err <= 1.0) {
      // Compensated update: the increment is added with Kahan summation so
      // roundoff does not accumulate over many small steps.
      const State inc{h * (b1 * k1.dpsi + b3 * k3.dpsi + b4 * k4.dpsi + b5 * k5.dpsi + b6 * k6.dpsi),
                      h * (b1 * k1.ddpsi + b3 * k3.ddpsi + b4 * k4.ddpsi + b5 * k5.ddpsi +
                           b6 * k6.ddpsi)};
      const cplx dpsi_in = inc.psi - comp.psi;
      const cplx ddpsi_in = inc.dpsi - comp.dpsi;
      const State sum{y.psi + dpsi_in, y.dpsi + ddpsi_in};
      comp = {(sum.psi - y.psi) - dpsi_in, (sum.dpsi - y.dpsi) - ddpsi_in};
      t = t7;
      y = sum;
      k1 = k7;
      if (!(std::abs(y.psi) <= max_psi))
        throw Overflow("|psi| exceeded 1e250 at x = " + std::to_string(t));
      if (record != nullptr) {
        record->xs.push_back(t);
        record->psi.push_back(y.psi);
        record->dpsi.push_back(y.dpsi);
      }
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= err <= 1.0 ? factor : std::min(factor, 1.0);
  }
  return y;
}

}  // namespace detail

namespace {
void check_preconditions(double lambda, double x0, double x1, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-4)) throw DomainError("tol must lie in [1e-14, 1e-4]");
  if (!std::isfinite(x0) || !std::isfinite(x1)) throw DomainError("endpoints must be finite");
  if (std::abs(x1 - x0) > 200.0 / lambda) throw DomainError("|x1 - x0| must not exceed 200/lambda");
}
}  // namespace

Trajectory integrate(const Problem& problem, cplx E, double x0, double x1, cplx psi0, cplx dpsi0,
                     double tol, double im_offset) {
  check_preconditions(problem.lambda, x0, x1, tol);
  Trajectory tr;
  tr.tol_used = tol;
  tr.im_offset = im_offset;
  detail::propagate(problem, E, x0, x1, {psi0, dpsi0}, tol, im_offset, &tr);
  return tr;
}

Trajectory integrate(const PotentialSpec& spec, double E, double x0, double x1, cplx psi0,
                     cplx dpsi0, double tol) {
  return integrate(make_problem(spec), E, x0, x1, psi0, dpsi0, tol, 0.0);
}

}  // namespace ptsech::oracle
