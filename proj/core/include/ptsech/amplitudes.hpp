#pragma once

#include "ptsech/model.hpp"
#include "ptsech/tagged.hpp"

namespace ptsech {

/// Coefficients of exp(+i k x) (a) and exp(-i k x) (b) of two independent
/// solutions F1, F2 at x -> -infinity (suffix m, wavenumber k) and
/// x -> +infinity (suffix p, wavenumber k').
struct AsymptoticAmplitudes {
  Tagged a1m, a2m, b1m, b2m;
  Tagged a1p, a2p, b1p, b2p;
};

/// Reflection and transmission amplitudes for incidence from the right (rl)
/// and from the left (lr).
struct ScatteringData {
  Tagged R_rl, T_rl, R_lr, T_lr;
  Branch branch = Branch::ConjK;
};

}  // namespace ptsech
