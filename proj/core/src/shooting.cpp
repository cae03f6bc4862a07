#include <cmath>
#include <optional>

#include "internal.hpp"

namespace ptsech::oracle {

namespace {

using detail::State;

constexpr double decay_threshold = 1e-12;
constexpr double accept_residual = 1e-8;
constexpr double newton_offset = 1e-3;

struct Matching {
  cplx W;
  double scale;
};

// Wronskian at x = 0 of the solutions decaying at -X and at +X; empty when
// either side has no decaying mode.
std::optional<Matching> matching(const Problem& pr, cplx E, double X, double tol) {
  const double lam = pr.lambda;
  const cplx sl = detail::principal_sqrt(pr.left.limit - E) / lam;
  const cplx sr = -detail::principal_sqrt(pr.right.limit - E) / lam;
  if (!(sl.real() > decay_threshold) || !(-sr.real() > decay_threshold)) return std::nullopt;
  const State l0 = detail::jost_start(pr.left, lam, -1, sl, E, cplx(-X, 0.0));
  const State r0 = detail::jost_start(pr.right, lam, 1, sr, E, cplx(X, 0.0));
  const State l = detail::propagate(pr, E, -X, 0.0, l0, tol, 0.0, nullptr);
  const State r = detail::propagate(pr, E, X, 0.0, r0, tol, 0.0, nullptr);
  // Product of solution sizes; stays meaningful where psi(0) or psi'(0) vanishes.
  const double scale =
      lam * (std::abs(l.psi) + std::abs(l.dpsi) / lam) * (std::abs(r.psi) + std::abs(r.dpsi) / lam);
  return Matching{detail::wronskian(l, r), scale};
}

struct Sample {
  bool valid = false;
  double g = 0.0;  // Re(W conj(dW/dE)), half the slope of |W|^2
  cplx W;
  double scale = 0.0;
};

Sample sample(const Problem& pr, double E, double X, double tol) {
  const double h = 1e-6 * std::max(1.0, std::abs(E));
  const auto m0 = matching(pr, E, X, tol);
  const auto mp = matching(pr, E + h, X, tol);
  const auto mm = matching(pr, E - h, X, tol);
  if (!m0 || !mp || !mm) return {};
  const cplx dW = (mp->W - mm->W) / (2.0 * h);
  return {true, (m0->W * std::conj(dW)).real(), m0->W, m0->scale};
}

// Newton iteration for W(E) = 0 in complex E. For a PT-symmetric potential
// W is real on the real axis, so the start is moved off it; a real root pulls
// the iteration back while a complex pair would not.
std::optional<cplx> complex_root(const Problem& pr, double E0, double X, double tol) {
  cplx E(E0, newton_offset * std::max(1.0, std::abs(E0)));
  for (int it = 0; it < 40; ++it) {
    const double h = 1e-6 * std::max(1.0, std::abs(E));
    const auto m0 = matching(pr, E, X, tol);
    const auto mp = matching(pr, E + h, X, tol);
    const auto mm = matching(pr, E - h, X, tol);
    if (!m0 || !mp || !mm) return std::nullopt;
    const cplx dW = (mp->W - mm->W) / (2.0 * h);
    if (dW == 0.0) return std::nullopt;
    const cplx step = m0->W / dW;
    E -= step;
    if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(E))) return E;
  }
  return E;
}

}  // namespace

std::vector<ShootingRoot> shoot_bound_states(const Problem& pr, double E_lo, double E_hi,
                                             int grid, double tol, const ShootingOptions& opts) {
  if (!(E_lo < E_hi)) throw DomainError("shooting window needs E_lo < E_hi");
  if (grid < 10) throw DomainError("shooting grid needs at least 10 points");
  if (!(tol > 0.0)) throw DomainError("shooting tolerance must be positive");
  const double X = opts.X == 0.0 ? 25.0 / pr.lambda : opts.X;
  const double ode_tol = opts.ode_tol;

  std::vector<double> Es(grid);
  std::vector<Sample> ss(grid);
  bool any = false;
  for (int i = 0; i < grid; ++i) {
    Es[i] = i + 1 == grid ? E_hi : E_lo + (E_hi - E_lo) * i / (grid - 1);
    ss[i] = sample(pr, Es[i], X, ode_tol);
    any = any || ss[i].valid;
  }
  if (!any) throw NoDecayingMode("no energy in the window has decaying solutions at both ends");

  std::vector<ShootingRoot> roots;
  for (int i = 0; i + 1 < grid; ++i) {
    if (!ss[i].valid || !ss[i + 1].valid) continue;
    if (!(ss[i].g < 0.0 && ss[i + 1].g >= 0.0)) continue;
    // Safeguarded secant (regula falsi with the Illinois modification) on g.
    double a = Es[i], b = Es[i + 1];
    double ga = ss[i].g, gb = ss[i + 1].g;
    Sample best = std::abs(ga) < std::abs(gb) ? ss[i] : ss[i + 1];
    double best_E = std::abs(ga) < std::abs(gb) ? a : b;
    int side = 0;
    for (int it = 0; it < 200 && std::abs(b - a) > tol; ++it) {
      double c = b - gb * (b - a) / (gb - ga);
      if (!(c > std::min(a, b) && c < std::max(a, b))) c = 0.5 * (a + b);
      const Sample sc = sample(pr, c, X, ode_tol);
      if (!sc.valid) break;
      best = sc;
      best_E = c;
      if (sc.g == 0.0) break;
      if ((sc.g < 0.0) == (ga < 0.0)) {
        a = c;
        ga = sc.g;
        if (side == -1) gb *= 0.5;
        side = -1;
      } else {
        b = c;
        gb = sc.g;
        if (side == 1) ga *= 0.5;
        side = 1;
      }
    }
    if (!best.valid || !(best.scale > 0.0)) continue;
    const double residual = std::abs(best.W) / best.scale;
    if (!(residual < accept_residual)) continue;
    const auto z = complex_root(pr, best_E, X, ode_tol);
    roots.push_back({best_E, z ? z->imag() : std::nan(""), residual});
  }
  return roots;
}

std::vector<ShootingRoot> shoot_bound_states(const PotentialSpec& spec, double E_lo, double E_hi,
                                             int grid, double tol, const ShootingOptions& opts) {
  return shoot_bound_states(make_problem(spec), E_lo, E_hi, grid, tol, opts);
}

}  // namespace ptsech::oracle
