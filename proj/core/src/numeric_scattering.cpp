#include <array>
#include <cmath>
#include <limits>

#include "internal.hpp"

namespace ptsech::oracle {

namespace {

using detail::State;

struct Exponents {
  cplx p;
  cplx q;
};

Exponents exponents_for(const Problem& pr, double E, Branch branch) {
  const cplx rad = pr.left.limit - E;
  if (std::abs(pr.right.limit - std::conj(pr.left.limit)) > 1e-14 * (1.0 + std::abs(pr.left.limit)))
    throw DomainError("the two asymptotic limits must be complex conjugates");
  if (rad == 0.0) throw BranchPoint("k = 0: no asymptotic wavenumber");
  const cplx p = detail::principal_sqrt(rad) / pr.lambda;
  return {p, branch == Branch::ConjK ? -std::conj(p) : std::conj(p)};
}

double resolve_cutoff(double X, double lambda) {
  if (X == 0.0) X = 25.0 / lambda;
  if (!(lambda * X >= 20.0 - 1e-12)) throw DomainError("lambda X must be at least 20");
  return X;
}

// Four Jost solutions continued to Re x = 0 on each matching line.
enum Sol { Am = 0, Bm = 1, Ap = 2, Bp = 3 };

struct JostTable {
  std::vector<std::array<State, 4>> lines;
};

JostTable build_jost(const Problem& pr, double E, const Exponents& ex, double X, double tol) {
  const double lam = pr.lambda;
  const std::array<std::pair<int, cplx>, 4> sols = {
      std::pair{-1, ex.p}, std::pair{-1, -ex.p}, std::pair{1, ex.q}, std::pair{1, -ex.q}};
  JostTable tab;
  for (double y : pr.matching_lines) {
    const double off = y / lam;
    std::array<State, 4> row{};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto [side, s] = sols[i];
      const TailExpansion& tail = side < 0 ? pr.left : pr.right;
      // A solution growing towards its own infinity decays inward; starting it
      // closer keeps round-off from the other solution below ~1e5 eps.
      const bool grows_outward = side < 0 ? s.real() < 0.0 : s.real() > 0.0;
      double dist = X;
      if (grows_outward) {
        const double limited = std::log(1e5) / (2.0 * std::abs(s.real()) * lam);
        dist = std::min(X, std::max(1.5 / lam, limited));
      }
      const double t0 = side * dist;
      const State start = detail::jost_start(tail, lam, side, s, E, cplx(t0, off));
      row[i] = detail::propagate(pr, E, t0, 0.0, start, tol, off, nullptr);
    }
    tab.lines.push_back(row);
  }
  return tab;
}

// Wronskian on the line where it is least affected by cancellation.
cplx best_wronskian(const JostTable& tab, Sol u, Sol v) {
  cplx best = 0.0;
  double best_cond = std::numeric_limits<double>::infinity();
  for (const auto& row : tab.lines) {
    const State& a = row[u];
    const State& b = row[v];
    const cplx w = detail::wronskian(a, b);
    const double cond = (std::abs(a.psi * b.dpsi) + std::abs(a.dpsi * b.psi)) / std::abs(w);
    if (cond < best_cond || !std::isfinite(best_cond)) {
      if (std::isfinite(cond)) {
        best_cond = cond;
        best = w;
      }
    }
  }
  if (!std::isfinite(best_cond)) throw MatchFailure("all Wronskians vanish at the matching point");
  return best;
}

AsymptoticAmplitudes amplitudes_from(const Problem& pr, double E, const Exponents& ex, double X,
                                     double tol) {
  const cplx n = -2.0 * ex.q * pr.lambda;
  if (std::abs(n) < 1e-12) throw IllConditioned("|2k'| below 1e-12");
  const JostTable tab = build_jost(pr, E, ex, X, tol);
  AsymptoticAmplitudes a;
  a.a1m = Tagged::finite_value(1.0);
  a.b2m = Tagged::finite_value(1.0);
  a.a2m = Tagged::finite_value(0.0);
  a.b1m = Tagged::finite_value(0.0);
  a.a1p = Tagged::finite_value(best_wronskian(tab, Am, Bp) / n);
  a.b1p = Tagged::finite_value(best_wronskian(tab, Ap, Am) / n);
  a.a2p = Tagged::finite_value(best_wronskian(tab, Bm, Bp) / n);
  a.b2p = Tagged::finite_value(best_wronskian(tab, Ap, Bm) / n);
  return a;
}

}  // namespace

AsymptoticAmplitudes numeric_amplitudes(const Problem& problem, double E, Branch branch,
                                        const OracleOptions& opts) {
  const double X = resolve_cutoff(opts.X, problem.lambda);
  return amplitudes_from(problem, E, exponents_for(problem, E, branch), X, opts.tol);
}

AsymptoticAmplitudes numeric_amplitudes(const PotentialSpec& spec, double E, Branch branch,
                                        const OracleOptions& opts) {
  const double X = resolve_cutoff(opts.X, spec.lambda());
  const DerivedParams d = derive_params(E, spec, branch);
  return amplitudes_from(make_problem(spec), E, {d.p, d.q}, X, opts.tol);
}

ScatteringData transfer_quotients(const AsymptoticAmplitudes& amps, Branch branch) {
  for (const Tagged* t : {&amps.a1m, &amps.a2m, &amps.b1m, &amps.b2m, &amps.a1p, &amps.a2p,
                          &amps.b1p, &amps.b2p})
    if (!t->finite()) throw DomainError("transfer quotients need finite amplitudes");
  const cplx a1m = amps.a1m.value, a2m = amps.a2m.value, b1m = amps.b1m.value,
             b2m = amps.b2m.value;
  const cplx a1p = amps.a1p.value, a2p = amps.a2p.value, b1p = amps.b1p.value,
             b2p = amps.b2p.value;
  const cplx D = a2m * b1p - a1m * b2p;
  if (!(std::abs(D) > 0.0) || !std::isfinite(std::abs(D)))
    throw MatchFailure("singular amplitude matching system");
  ScatteringData out;
  out.branch = branch;
  out.T_lr = Tagged::finite_value((a2p * b1p - a1p * b2p) / D);
  out.R_lr = Tagged::finite_value((b1p * b2m - b1m * b2p) / D);
  out.T_rl = Tagged::finite_value((a2m * b1m - a1m * b2m) / D);
  out.R_rl = Tagged::finite_value((a1p * a2m - a1m * a2p) / D);
  return out;
}

ScatteringData numeric_scattering(const Problem& problem, double E, Branch branch,
                                  const OracleOptions& opts) {
  return transfer_quotients(numeric_amplitudes(problem, E, branch, opts), branch);
}

ScatteringData numeric_scattering(const PotentialSpec& spec, double E, Branch branch,
                                  const OracleOptions& opts) {
  return transfer_quotients(numeric_amplitudes(spec, E, branch, opts), branch);
}

}  // namespace ptsech::oracle
