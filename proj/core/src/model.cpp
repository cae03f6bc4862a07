#include "ptsech/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ptsech {

namespace {
constexpr cplx I{0.0, 1.0};
}

PotentialSpec::PotentialSpec(double A, double lambda, int im_sign)
    : A_(A), lambda_(lambda), im_sign_(im_sign) {
  if (!std::isfinite(A)) throw DomainError("coupling A must be finite");
  if (!std::isfinite(lambda) || !(lambda > 0.0))
    throw DomainError("lambda must be finite and positive");
  if (im_sign != 1 && im_sign != -1)
    throw DomainError("im_sign must be +1 or -1");
}

std::string_view to_string(Branch b) noexcept {
  return b == Branch::ConjK ? "conj" : "negconj";
}

std::optional<Branch> parse_branch(std::string_view text) noexcept {
  if (text == "conj" || text == "ConjK") return Branch::ConjK;
  if (text == "negconj" || text == "NegConjK" || text == "neg-conj")
    return Branch::NegConjK;
  return std::nullopt;
}

cplx potential(double x, const PotentialSpec& spec) {
  const double u = spec.lambda() * x;
  const double e = std::exp(-std::abs(u));
  const double sech = 2.0 * e / (1.0 + e * e);
  const double th = std::tanh(u);
  return spec.A() * cplx(sech, spec.im_sign() * th);
}

cplx potential(cplx x, const PotentialSpec& spec) {
  // With w = e^u the potential is s i A (w - s i)/(w + s i); the form in
  // e^{-u} is used for Re u > 0 so nothing overflows.
  const cplx u = spec.lambda() * x;
  const double s = spec.im_sign();
  const cplx si = s * I;
  if (u.real() <= 0.0) {
    const cplx w = std::exp(u);
    return si * spec.A() * (w - si) / (w + si);
  }
  const cplx e = std::exp(-u);
  return si * spec.A() * (1.0 - si * e) / (1.0 + si * e);
}

cplx minus_i_pow(cplx w, int im_sign) {
  return std::exp(-static_cast<double>(im_sign) * I * (std::numbers::pi / 2) * w);
}

DerivedParams derive_params(double E, const PotentialSpec& spec, Branch branch) {
  if (!std::isfinite(E)) throw DomainError("energy must be finite");
  const double lam = spec.lambda();
  const double sA = spec.im_sign() * spec.A();
  // -0.0 in the imaginary part would select the lower side of the cut.
  const double im = -sA == 0.0 ? 0.0 : -sA;
  const cplx rad(-E, im);
  if (rad == cplx(0.0, 0.0))
    throw BranchPoint("k = 0 at E = " + std::to_string(E) +
                      ", A = " + std::to_string(spec.A()));
  const cplx p = std::sqrt(rad) / lam;
  const cplx q = branch == Branch::ConjK ? -std::conj(p) : std::conj(p);
  DerivedParams d{spec, branch, E, -I * p * lam, -I * q * lam, p, q, {}, {}, {}};
  d.alpha = p - q;
  d.beta = 2.0 * p - d.alpha;
  d.gamma = 2.0 * p + 1.0;
  return d;
}

}  // namespace ptsech
