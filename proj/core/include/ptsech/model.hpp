#pragma once

#include <optional>
#include <string_view>

#include "ptsech/error.hpp"
#include "ptsech/tagged.hpp"

namespace ptsech {

/// V(x) = A [sech(lambda x) + im_sign * i * tanh(lambda x)].
class PotentialSpec {
 public:
  /// Throws DomainError unless A is finite, lambda > 0 and im_sign is +1 or -1.
  PotentialSpec(double A, double lambda, int im_sign = +1);

  double A() const noexcept { return A_; }
  double lambda() const noexcept { return lambda_; }
  int im_sign() const noexcept { return im_sign_; }

 private:
  double A_;
  double lambda_;
  int im_sign_;
};

/// Relation between the wavenumbers at the two ends: k' = conj(k) or k' = -conj(k).
enum class Branch { ConjK, NegConjK };

std::string_view to_string(Branch b) noexcept;
/// Accepts "conj"/"ConjK" and "negconj"/"NegConjK".
std::optional<Branch> parse_branch(std::string_view text) noexcept;

/// Exponents and wavenumbers for one real energy.
///
/// p is the principal root of p^2 lambda^2 = -E - i s A (s = im_sign),
/// k = -i p lambda so that exp(i k x) = exp(p lambda x). The branch fixes
/// q = -conj(p) (ConjK) or q = conj(p) (NegConjK), and k' = -i q lambda.
struct DerivedParams {
  PotentialSpec spec;
  Branch branch;
  double E;
  cplx k;
  cplx kprime;
  cplx p;
  cplx q;
  cplx alpha;
  cplx beta;
  cplx gamma;
};

cplx potential(double x, const PotentialSpec& spec);
/// Analytic continuation to complex x, finite everywhere except at the
/// poles lambda x = -s i pi/2 + 2 pi i m.
cplx potential(cplx x, const PotentialSpec& spec);

/// Throws BranchPoint when E + i s A = 0 and DomainError for non-finite E.
DerivedParams derive_params(double E, const PotentialSpec& spec, Branch branch);

/// (-i)^w for the orientation z = s i e^{lambda x}: exp(-s i pi w / 2).
cplx minus_i_pow(cplx w, int im_sign);

}  // namespace ptsech
