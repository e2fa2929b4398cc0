#ifndef EXPMAT_LND_HPP
#define EXPMAT_LND_HPP

#include <vector>

#include "expmat/matrix.hpp"
#include "expmat/mpoly.hpp"
#include "expmat/projmap.hpp"

namespace expmat {

/// Triangular linear derivation of k[x0,...,x_{n-1}] in characteristic 0:
/// D(x0) = 0, D(x1) = x0, and each D(xi), i >= 2, is zero or a homogeneous
/// linear form in x0..x_{i-1}.  Local nilpotency is automatic for this shape.
class LinDerivation {
 public:
  LinDerivation(FieldCtxPtr ctx, std::vector<MPoly> images);
  /// Derivation with (D(x0),...,D(x_{n-1})) = (x0,...,x_{n-1}) tN for a
  /// nilpotent matrix N in the lower-shift Jordan shape.
  static LinDerivation from_jordan(const ScalarMatrix& n);

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::size_t nvars() const { return images_.size(); }
  const std::vector<MPoly>& images() const { return images_; }

  MPoly apply(const MPoly& f) const;
  LocElem apply(const LocElem& f) const;  // denominators pass through, D(x0) = 0

  /// phi_{D,T}(f) = sum_i D^i(f) T^i / i!, a finite sum by local nilpotency.
  TMPoly flow(const MPoly& f) const;
  /// phi_{D,t}(f) with t itself in the localized ring (used with t = -x1/x0).
  LocElem flow_at(const LocElem& f, const LocElem& t) const;

 private:
  FieldCtxPtr ctx_;
  std::vector<MPoly> images_;
};

struct BirationalPair {
  ProjMap sigma;
  ProjMap sigma_inv;
};

/// The birational map (1 : x1/x0 : phi_{D,-s}(x2/x0) : ...) with s = x1/x0,
/// homogenized by clearing the common x0 power, together with its inverse.
/// It intertwines the action of Exp of the derivation's matrix with the
/// standard action on the first two coordinates.
BirationalPair sigma_lemma31(const LinDerivation& d);

}  // namespace expmat

#endif
