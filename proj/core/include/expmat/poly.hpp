#ifndef EXPMAT_POLY_HPP
#define EXPMAT_POLY_HPP

#include <string>
#include <vector>

#include "expmat/field.hpp"

namespace expmat {

class BiPoly;

/// Dense univariate polynomial over an exact field, coefficients low-to-high.
/// Canonical form strips trailing zeros; deg 0 = -infinity, encoded as -1.
class Poly {
 public:
  explicit Poly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static Poly zero(const FieldCtxPtr& ctx) { return Poly(ctx); }
  static Poly constant(const Scalar& c);
  static Poly variable(const FieldCtxPtr& ctx);  // T
  static Poly monomial(const Scalar& c, std::size_t degree);
  static Poly from_coeffs(const FieldCtxPtr& ctx, std::vector<Scalar> coeffs);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return coeffs_.size() <= 1; }
  Scalar coeff(std::size_t i) const;
  const Scalar& leading() const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Scalar eval(const Scalar& t) const;
  Poly compose(const Poly& inner) const;  // this(inner(T))
  Poly derivative() const;

  std::string str(const std::string& var = "T") const;

 private:
  void normalize();
  void check_same_field(const Poly& o) const;

  FieldCtxPtr ctx_;
  std::vector<Scalar> coeffs_;
};

/// f(T + T') as a canonical bivariate polynomial.
BiPoly bivariate_shift(const Poly& f);

}  // namespace expmat

#endif
