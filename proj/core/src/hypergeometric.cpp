#include <algorithm>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <string>

#include "ptsech/specfun.hpp"

namespace ptsech::specfun {

namespace {

constexpr double poly_tol = 1e-12;

struct Polynomial {
  bool yes = false;
  unsigned degree = 0;
};

// 2F1 terminates when a or b is a non-positive integer; take the shorter.
Polynomial polynomial_degree(cplx a, cplx b) {
  Polynomial r;
  int n = 0;
  if (is_nonpositive_integer(a, poly_tol, &n)) {
    r.yes = true;
    r.degree = static_cast<unsigned>(-n);
  }
  if (is_nonpositive_integer(b, poly_tol, &n)) {
    const auto d = static_cast<unsigned>(-n);
    if (!r.yes || d < r.degree) r.degree = d;
    r.yes = true;
  }
  return r;
}

void check_lower_parameter(cplx a, cplx b, cplx c) {
  int m = 0;
  if (!is_nonpositive_integer(c, 0.0, &m)) return;
  const Polynomial poly = polynomial_degree(a, b);
  if (poly.yes && poly.degree <= static_cast<unsigned>(-m)) return;
  throw PoleError(m, "2F1 lower parameter c = " + std::to_string(m));
}

cplx finite_sum_quad(cplx a, cplx b, cplx c, cplx z, unsigned degree) {
  using boost::multiprecision::cpp_complex_quad;
  auto q = [](cplx v) { return cpp_complex_quad(v.real(), v.imag()); };
  const cpp_complex_quad qa = q(a), qb = q(b), qc = q(c), qz = q(z);
  cpp_complex_quad term = 1;
  cpp_complex_quad sum = 1;
  for (unsigned k = 0; k < degree; ++k) {
    term *= (qa + k) * (qb + k) / ((qc + k) * (k + 1)) * qz;
    sum += term;
  }
  return {sum.real().convert_to<double>(), sum.imag().convert_to<double>()};
}

// Terminating series; redone in quad precision when the terms cancel.
cplx finite_sum(cplx a, cplx b, cplx c, cplx z, unsigned degree) {
  cplx term = 1.0;
  cplx sum = 1.0;
  double magnitude = 1.0;
  for (unsigned k = 0; k < degree; ++k) {
    const double kd = k;
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    magnitude += std::abs(term);
  }
  if (magnitude > 1e3 * std::abs(sum)) return finite_sum_quad(a, b, c, z, degree);
  return sum;
}

cplx series(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
  cplx term = 1.0;
  cplx sum = 1.0;
  unsigned small = 0;
  for (unsigned k = 0; k < prec.max_terms; ++k) {
    const double kd = k;
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    // Two consecutive negligible terms guard against a single accidental zero.
    if (std::abs(term) <= prec.series_tol * std::abs(sum)) {
      if (++small == 2) return sum;
    } else {
      small = 0;
    }
  }
  if (std::abs(z) < 1.0) return sum;
  throw DomainError("2F1 series did not converge at |z| = " +
                    std::to_string(std::abs(z)));
}

bool degenerate(cplx d, double tol) {
  return std::abs(d.imag()) < tol && std::abs(d.real() - std::round(d.real())) < tol;
}

cplx pfaff(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
  const cplx w = z / (z - 1.0);
  return std::pow(1.0 - z, -a) * gauss_2f1({a, c - b, c, w}, prec);
}

cplx tagged_value(const Tagged& t) {
  if (!t.finite())
    throw PoleError(*t.pole, "2F1 connection coefficient diverges");
  return t.value;
}

// Connection formula about infinity:
// F(a,b;c;z) = G(c)G(b-a)/(G(b)G(c-a)) (-z)^{-a} F(a, a-c+1; a-b+1; 1/z)
//            + G(c)G(a-b)/(G(a)G(c-b)) (-z)^{-b} F(b, b-c+1; b-a+1; 1/z).
cplx inversion(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
  if (degenerate(a - b, prec.degenerate_tol))
    throw DegenerateConnection("a - b is an integer in the 1/z connection");
  const cplx w = 1.0 / z;
  const cplx mz = -z;
  const cplx c1 = tagged_value(gamma_ratio({c, b - a}, {b, c - a}));
  const cplx c2 = tagged_value(gamma_ratio({c, a - b}, {a, c - b}));
  cplx r = 0.0;
  if (c1 != 0.0) r += c1 * std::pow(mz, -a) * gauss_2f1({a, a - c + 1.0, a - b + 1.0, w}, prec);
  if (c2 != 0.0) r += c2 * std::pow(mz, -b) * gauss_2f1({b, b - c + 1.0, b - a + 1.0, w}, prec);
  return r;
}

cplx one_minus_z(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
  const cplx s = c - a - b;
  if (degenerate(s, prec.degenerate_tol))
    throw DegenerateConnection("c - a - b is an integer in the 1-z connection");
  const cplx w = 1.0 - z;
  const cplx c1 = tagged_value(gamma_ratio({c, s}, {c - a, c - b}));
  const cplx c2 = tagged_value(gamma_ratio({c, -s}, {a, b}));
  cplx r = 0.0;
  if (c1 != 0.0) r += c1 * gauss_2f1({a, b, 1.0 - s, w}, prec);
  if (c2 != 0.0) r += c2 * std::pow(w, s) * gauss_2f1({c - a, c - b, s + 1.0, w}, prec);
  return r;
}

// Taylor stepping of z(1-z)F'' + [c - (a+b+1)z]F' - ab F = 0 along the ray
// from |z| = 1/2 to z.
cplx continuation(cplx a, cplx b, cplx c, cplx z, const Precision& prec) {
  const double r = std::abs(z);
  if (r <= 0.5) return series(a, b, c, z, prec);
  cplx zc = 0.5 * z / r;
  cplx f = series(a, b, c, zc, prec);
  cplx df = a * b / c * series(a + 1.0, b + 1.0, c + 1.0, zc, prec);
  for (int step = 0; step < 100000; ++step) {
    const cplx remaining = z - zc;
    if (std::abs(remaining) == 0.0) return f;
    const double radius = std::min(std::abs(zc), std::abs(1.0 - zc));
    if (radius < 1e-10) throw DomainError("2F1 continuation hit a singular point");
    cplx h = remaining;
    if (std::abs(h) > 0.5 * radius) h *= 0.5 * radius / std::abs(h);
    const cplx g = zc * (1.0 - zc);
    cplx d0 = f;
    cplx d1 = df;
    cplx fn = d0 + d1 * h;
    cplx dfn = d1;
    cplx hp = h;  // h^{n+1} for the term of index n+1
    unsigned small = 0;
    for (unsigned n = 0; n < 2000; ++n) {
      const double nd = n;
      const cplx d2 = ((nd + a) * (nd + b) * d0 -
                       ((1.0 - 2.0 * zc) * nd + c - (a + b + 1.0) * zc) * (nd + 1.0) * d1) /
                      (g * (nd + 1.0) * (nd + 2.0));
      const cplx t_f = d2 * hp * h;
      const cplx t_df = (nd + 2.0) * d2 * hp;
      fn += t_f;
      dfn += t_df;
      if (std::abs(t_f) <= 1e-17 * std::abs(fn) && std::abs(t_df) <= 1e-17 * std::abs(dfn)) {
        if (++small == 3) break;
      } else {
        small = 0;
      }
      d0 = d1;
      d1 = d2;
      hp *= h;
    }
    f = fn;
    df = dfn;
    zc += h;
    if (std::abs(z - zc) <= 1e-15 * std::abs(z)) return f;
  }
  throw DomainError("2F1 continuation did not reach the target");
}

cplx gauss_summation(cplx a, cplx b, cplx c) {
  if ((c - a - b).real() <= 0.0)
    throw DomainError("2F1 diverges at z = 1 when Re(c - a - b) <= 0");
  return tagged_value(gamma_ratio({c, c - a - b}, {c - a, c - b}));
}

}  // namespace

cplx gauss_2f1(const HypergeometricArgs& args, Method method, const Precision& prec) {
  const auto [a, b, c, z] = args;
  if (z == 0.0) return 1.0;
  check_lower_parameter(a, b, c);
  const Polynomial poly = polynomial_degree(a, b);
  switch (method) {
    case Method::Automatic:
      break;
    case Method::Series:
      return poly.yes ? finite_sum(a, b, c, z, poly.degree) : series(a, b, c, z, prec);
    case Method::Pfaff:
      return pfaff(a, b, c, z, prec);
    case Method::OneMinusZ:
      return one_minus_z(a, b, c, z, prec);
    case Method::Inversion:
      return inversion(a, b, c, z, prec);
    case Method::Continuation:
      return continuation(a, b, c, z, prec);
  }

  if (poly.yes) return finite_sum(a, b, c, z, poly.degree);
  if (z == 1.0) return gauss_summation(a, b, c);
  const double r = std::abs(z);
  if (r <= 0.8) return series(a, b, c, z, prec);
  const double r1 = std::abs(1.0 - z);
  if (r1 > 0.8 && std::abs(z / (z - 1.0)) <= 0.8) return pfaff(a, b, c, z, prec);
  if (r >= 1.25) return inversion(a, b, c, z, prec);
  if (r1 <= 0.8 && !degenerate(c - a - b, prec.degenerate_tol))
    return one_minus_z(a, b, c, z, prec);
  return continuation(a, b, c, z, prec);
}

cplx gauss_2f1(const HypergeometricArgs& args, const Precision& prec) {
  return gauss_2f1(args, Method::Automatic, prec);
}

}  // namespace ptsech::specfun
