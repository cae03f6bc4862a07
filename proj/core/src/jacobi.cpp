#include <string>

#include "ptsech/specfun.hpp"

namespace ptsech::specfun {

cplx jacobi_poly(unsigned n, cplx a, cplx b, cplx x, const Precision& prec) {
  if (n == 0) return 1.0;
  int m = 0;
  if (is_nonpositive_integer(a + 1.0, 0.0, &m) && m >= 1 - static_cast<int>(n))
    throw PoleError(m, "Jacobi lower parameter a + 1 = " + std::to_string(m));
  const double nd = n;
  cplx norm = pochhammer(a + 1.0, n);
  for (unsigned j = 2; j <= n; ++j) norm /= static_cast<double>(j);
  return norm * gauss_2f1({-nd, nd + a + b + 1.0, a + 1.0, (1.0 - x) / 2.0}, prec);
}

}  // namespace ptsech::specfun
