#ifndef EXPMAT_PROJMAP_HPP
#define EXPMAT_PROJMAP_HPP

#include <string>
#include <variant>
#include <vector>

#include "expmat/matrix.hpp"
#include "expmat/mpoly.hpp"
#include "expmat/ppoly.hpp"

namespace expmat {

/// Projective rational map P^{n-1} --> P^{n-1}: n homogeneous components of
/// equal x-degree, coefficients in k[T] (degree 0 in T for plain maps).
class ProjMap {
 public:
  static ProjMap from_components(std::vector<TMPoly> comps);
  static ProjMap from_scalar_components(const std::vector<MPoly>& comps);
  static ProjMap identity(const FieldCtxPtr& ctx, std::size_t n);
  /// Linear map given by a scalar matrix, x |-> Mx in column convention.
  static ProjMap linear(const ScalarMatrix& m);

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::size_t n() const { return comps_.size(); }
  std::uint32_t degree() const { return degree_; }
  const std::vector<TMPoly>& components() const { return comps_; }

  bool operator==(const ProjMap& o) const { return comps_ == o.comps_; }

  std::string str() const;

 private:
  ProjMap(FieldCtxPtr ctx, std::vector<TMPoly> comps, std::uint32_t degree)
      : ctx_(std::move(ctx)), comps_(std::move(comps)), degree_(degree) {}
  FieldCtxPtr ctx_;
  std::vector<TMPoly> comps_;
  std::uint32_t degree_;
};

/// The T-parametrized action x |-> A(T) x (row convention: x tA(T)).
ProjMap action_of(const ExpMatrix& a);

/// Substitute the components of `inner` into every component of `outer` and
/// strip the common monomial content.
std::vector<TMPoly> compose_components(const ProjMap& outer, const ProjMap& inner);

/// Projective equality of component tuples: all 2x2 cross products vanish.
struct CrossCheck {
  bool equal = false;
  int i = -1;
  int j = -1;
  std::string residual;
};
CrossCheck projectively_equal(const std::vector<TMPoly>& f, const std::vector<TMPoly>& g);

struct EquivarianceReport {
  bool ok = false;
  int i = -1;
  int j = -1;
  std::string residual;
};

/// The commuting-square check mu_B o (id x sigma) = sigma o mu_A, decided
/// symbolically over k[T][x].
EquivarianceReport verify_equivariance(const ProjMap& sigma, const ExpMatrix& a,
                                       const ExpMatrix& b);

/// sigma o sigma_inv and sigma_inv o sigma are projectively the identity.
bool inverse_pair_ok(const ProjMap& sigma, const ProjMap& sigma_inv);

/// Diagonal map scaling one slot by a nonzero constant (Lemmas 4.1 and 5.8).
ProjMap sigma_scaling(const Scalar& lambda, std::size_t slot, std::size_t n);

struct SigmaPair {
  ProjMap sigma;
  ProjMap sigma_inv;
};

/// Chart map (x0/x2 - lambda(x1/x2) : x1/x2 : 1) homogenized, or the mirrored
/// chart for case iii; the inverse replaces -lambda by +lambda (Lemma 5.3).
SigmaPair sigma_reduce(const PPoly& lambda, ReduceCase which);

/// (x0 : x1 : x2)(1 (+) tQ) for Q in GL(2,k) (Lemma 5.9).
ProjMap sigma_gl2(const ScalarMatrix& q);

/// (x0 x2 - x1^2/2 : x1 x2 : x2^2) with inverse (x0 x2 + x1^2/2 : ...)
/// (Lemma 5.6); needs 1/2, so p >= 3.
SigmaPair sigma_lemma56(const FieldCtxPtr& ctx);

// ---------------------------------------------------------------------------
// Witness chains

struct ConjugationMove {
  ScalarMatrix p;
};

struct BirationalMove {
  ProjMap sigma;
  ProjMap sigma_inv;
};

/// One machine-checkable equivalence step between exponential matrices.  A
/// step carries everything needed to re-verify it with no trust in the
/// producer.
struct WitnessStep {
  std::variant<ConjugationMove, BirationalMove> move;
  ExpMatrix from;
  ExpMatrix to;

  bool is_conjugation() const { return std::holds_alternative<ConjugationMove>(move); }
};

using Witness = std::vector<WitnessStep>;

struct WitnessCheck {
  bool ok = false;
  int failed_step = -1;
  std::string reason;
};

WitnessCheck verify_step(const WitnessStep& step);
/// Verifies every step and the from/to chaining.
WitnessCheck verify_witness(const Witness& chain);

WitnessStep reversed_step(const WitnessStep& step);
Witness reversed_witness(const Witness& chain);

}  // namespace expmat

#endif
