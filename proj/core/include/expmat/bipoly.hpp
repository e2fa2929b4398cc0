#ifndef EXPMAT_BIPOLY_HPP
#define EXPMAT_BIPOLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "expmat/poly.hpp"

namespace expmat {

/// Dense element of k[T,T'], coefficient grid indexed by (deg T, deg T').
class BiPoly {
 public:
  explicit BiPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static BiPoly zero(const FieldCtxPtr& ctx) { return BiPoly(ctx); }
  static BiPoly constant(const Scalar& c);
  static BiPoly from_t(const Poly& f);        // embed f(T)
  static BiPoly from_tprime(const Poly& f);   // embed f(T')
  static BiPoly t_plus_tprime(const FieldCtxPtr& ctx);

  const FieldCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return grid_.empty(); }
  Scalar coeff(std::size_t i, std::size_t j) const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  Poly eval_tprime_zero() const;  // restriction T' = 0

  std::string str() const;

 private:
  void normalize();
  FieldCtxPtr ctx_;
  std::vector<std::vector<Scalar>> grid_;  // grid_[i][j] * T^i T'^j
};

/// Element of k[T] (x) k[T], kept as a sparse tensor-basis expansion.  This is
/// the coproduct-side representation used by the Hopf-identity check; it is a
/// separate code path from BiPoly on purpose.
class TensorPoly {
 public:
  explicit TensorPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static TensorPoly zero(const FieldCtxPtr& ctx) { return TensorPoly(ctx); }
  static TensorPoly basis(const Scalar& c, std::size_t i, std::size_t j);  // c * T^i (x) T^j
  static TensorPoly coproduct_t(const FieldCtxPtr& ctx);                   // T (x) 1 + 1 (x) T
  static TensorPoly tensor(const Poly& f, const Poly& g);                  // f (x) g

  bool is_zero() const { return terms_.empty(); }
  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator*(const TensorPoly& o) const;
  bool operator==(const TensorPoly& o) const;
  bool operator!=(const TensorPoly& o) const { return !(*this == o); }

  /// f evaluated at this tensor element (Horner in the tensor algebra).
  static TensorPoly eval_poly(const Poly& f, const TensorPoly& at);

 private:
  void insert(std::pair<std::size_t, std::size_t> key, const Scalar& c);
  FieldCtxPtr ctx_;
  std::map<std::pair<std::size_t, std::size_t>, Scalar> terms_;
};

}  // namespace expmat

#endif
