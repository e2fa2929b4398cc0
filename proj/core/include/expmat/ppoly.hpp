#ifndef EXPMAT_PPOLY_HPP
#define EXPMAT_PPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "expmat/poly.hpp"

namespace expmat {

/// Additive polynomial sum_i c_i T^{p^i} over a field of characteristic p > 0.
/// coeffs()[i] is the coefficient of T^{p^i}; trailing zeros are stripped, so
/// the representation is canonical.  Under composition these form the twisted
/// polynomial ring: T^{p^i} o alpha twists alpha's coefficients by Frobenius.
class PPoly {
 public:
  explicit PPoly(FieldCtxPtr ctx);
  static PPoly zero(const FieldCtxPtr& ctx) { return PPoly(ctx); }
  static PPoly identity(const FieldCtxPtr& ctx);  // T
  static PPoly monomial(const Scalar& c, std::size_t index);  // c T^{p^index}
  static PPoly from_coeffs(const FieldCtxPtr& ctx, std::vector<Scalar> coeffs);
  /// Validation gateway from k[T]; rejects exponents that are not powers of p.
  static PPoly from_poly(const Poly& f);

  const FieldCtxPtr& ctx() const { return ctx_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Index e of the leading term c_e T^{p^e}; -1 for zero.
  int degree_index() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Degree as a plain polynomial, p^e; 0 encodes deg 0 = -infinity.
  std::uint64_t plain_degree() const;
  Scalar coeff(std::size_t i) const;
  const Scalar& leading() const;

  Poly to_poly() const;

  PPoly operator-() const;
  PPoly operator+(const PPoly& o) const;
  PPoly operator-(const PPoly& o) const;
  PPoly scaled(const Scalar& c) const;
  /// Ore composition (this o alpha)(T) = this(alpha(T)).
  PPoly compose(const PPoly& alpha) const;
  bool operator==(const PPoly& o) const;
  bool operator!=(const PPoly& o) const { return !(*this == o); }

  PPoly monic() const;  // leading coefficient normalized to 1

  std::string str() const;

 private:
  void normalize();
  FieldCtxPtr ctx_;
  std::vector<Scalar> coeffs_;
};

enum class ReduceCase { I, II, III };

const char* reduce_case_name(ReduceCase c);

/// One elimination of Lemma-5.3 type applied to a pair of nonzero additive
/// polynomials.  Case I (deg a1 < deg a2) kills the top of a2 with
/// lambda = (d_f / c_e^{p^{f-e}}) T^{p^{f-e}}; case II (equal degrees) uses
/// lambda = (d_e/c_e) T on a2; case III mirrors case I on a1.
struct ReduceStep {
  PPoly beta1;
  PPoly beta2;
  PPoly lambda;
  ReduceCase which;
};

ReduceStep reduce_step(const PPoly& alpha1, const PPoly& alpha2);

enum class Slot { First, Second };

/// Record of one reduce_step inside a loop trace.
struct ReduceTraceEntry {
  PPoly before1;
  PPoly before2;
  ReduceStep step;
};

struct ReduceResult {
  PPoly gamma;
  Slot slot;
  std::vector<ReduceTraceEntry> steps;
};

/// Iterate reduce_step until one slot vanishes; returns the survivor and the
/// full step trace.
ReduceResult reduce_loop(const PPoly& alpha1, const PPoly& alpha2);

/// Reduced row-echelon basis of the coefficient row space: the canonical
/// representative of the GL(n,k)-orbit of a tuple.  dim_expected 0 disables
/// the dimension check.
std::vector<PPoly> span_canonical(const std::vector<PPoly>& tuple, std::size_t dim_expected = 0);

struct SpanRank {
  bool independent;
  std::size_t dimension;
};

SpanRank linear_independent(const std::vector<PPoly>& tuple);

}  // namespace expmat

#endif
