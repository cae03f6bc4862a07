#pragma once

#include "ptsech/oracle.hpp"

namespace ptsech::oracle::detail {

struct State {
  cplx psi;
  cplx dpsi;
};

/// Integrates along x = t + i * im_offset from t0 to t1. Appends every
/// accepted step to `record` when given.
State propagate(const Problem& problem, cplx E, double t0, double t1, State y0, double tol,
                double im_offset, Trajectory* record);

/// Jost solution e^{s lambda x} sum_j c_j w^j, w = e^{-lambda |x|}, on the
/// side `side` (-1 left, +1 right), evaluated at complex x.
State jost_start(const TailExpansion& tail, double lambda, int side, cplx s, cplx E, cplx x);

inline cplx wronskian(const State& u, const State& v) { return u.psi * v.dpsi - u.dpsi * v.psi; }

/// Principal square root with -0.0 in the imaginary part treated as +0.0.
cplx principal_sqrt(cplx v);

}  // namespace ptsech::oracle::detail
