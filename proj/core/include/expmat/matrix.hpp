#ifndef EXPMAT_MATRIX_HPP
#define EXPMAT_MATRIX_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expmat/bipoly.hpp"
#include "expmat/poly.hpp"

namespace expmat {

/// Square matrix over the coefficient field.
class ScalarMatrix {
 public:
  ScalarMatrix(FieldCtxPtr ctx, std::size_t n, const Scalar& fill);
  static ScalarMatrix identity(const FieldCtxPtr& ctx, std::size_t n);
  static ScalarMatrix zero(const FieldCtxPtr& ctx, std::size_t n);
  static ScalarMatrix from_rows(const FieldCtxPtr& ctx, std::vector<std::vector<Scalar>> rows);

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::size_t n() const { return n_; }
  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& v) { entries_[i * n_ + j] = v; }

  ScalarMatrix operator*(const ScalarMatrix& o) const;
  ScalarMatrix operator+(const ScalarMatrix& o) const;
  ScalarMatrix operator-(const ScalarMatrix& o) const;
  ScalarMatrix scaled(const Scalar& c) const;
  bool operator==(const ScalarMatrix& o) const;
  bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  Scalar det() const;
  bool invertible() const;
  ScalarMatrix inverse() const;  // SingularMatrix on failure
  ScalarMatrix power(std::size_t e) const;
  bool is_nilpotent() const;  // N^n = 0
  std::size_t rank() const;

  std::string str() const;

 private:
  FieldCtxPtr ctx_;
  std::size_t n_;
  std::vector<Scalar> entries_;
};

/// Square matrix of univariate polynomials in T.
class PolyMatrix {
 public:
  PolyMatrix(FieldCtxPtr ctx, std::size_t n);
  static PolyMatrix identity(const FieldCtxPtr& ctx, std::size_t n);
  static PolyMatrix from_entries(const FieldCtxPtr& ctx, std::vector<std::vector<Poly>> rows);
  static PolyMatrix constant(const ScalarMatrix& m);

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::size_t n() const { return n_; }
  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, Poly v);

  PolyMatrix operator*(const PolyMatrix& o) const;
  bool operator==(const PolyMatrix& o) const;
  bool operator!=(const PolyMatrix& o) const { return !(*this == o); }

  ScalarMatrix eval(const Scalar& t) const;
  ScalarMatrix derivative_at_zero() const;
  PolyMatrix transpose() const;
  Poly det() const;
  /// P A P^{-1} for a scalar matrix P.
  PolyMatrix conjugated(const ScalarMatrix& p) const;

  std::string str() const;

 private:
  FieldCtxPtr ctx_;
  std::size_t n_;
  std::vector<Poly> entries_;
};

/// Outcome of the exponential-axiom verification.  The functional identity
/// A(T)A(T') = A(T+T') is checked twice, once as a product of bivariate
/// matrices and once as the Hopf coproduct identity on entries; the two
/// verdicts are reported separately.
struct VerifyReport {
  bool valid = false;
  bool at_zero_ok = false;
  bool bivariate_ok = false;
  bool coproduct_ok = false;
  bool det_ok = false;
  bool routes_agree = false;
  int fail_row = -1;
  int fail_col = -1;
  std::string residual;
};

class ExpMatrix {
 public:
  static std::pair<std::optional<ExpMatrix>, VerifyReport> verify(const PolyMatrix& a);
  /// Wrap a matrix that must be exponential; throws InternalInconsistency if not.
  static ExpMatrix trusted(const PolyMatrix& a);

  const PolyMatrix& matrix() const { return mat_; }
  const FieldCtxPtr& ctx() const { return mat_.ctx(); }
  std::size_t n() const { return mat_.n(); }
  const Poly& at(std::size_t i, std::size_t j) const { return mat_.at(i, j); }
  bool is_identity() const { return mat_ == PolyMatrix::identity(ctx(), n()); }
  bool operator==(const ExpMatrix& o) const { return mat_ == o.mat_; }
  bool operator!=(const ExpMatrix& o) const { return !(*this == o); }

  ExpMatrix conjugated(const ScalarMatrix& p) const { return ExpMatrix(mat_.conjugated(p)); }

 private:
  explicit ExpMatrix(PolyMatrix m) : mat_(std::move(m)) {}
  PolyMatrix mat_;
};

/// Exp_N(T) = sum_i T^i N^i / i! for nilpotent N over a char-0 field.
ExpMatrix exp_nilpotent(const ScalarMatrix& n);

/// The unique nilpotent N with A = Exp_N, recovered as A'(0); round-trips
/// through exp_nilpotent or throws InternalInconsistency.
ScalarMatrix log_exponential(const ExpMatrix& a);

struct JordanResult {
  ScalarMatrix p;  // P N P^{-1} = j
  ScalarMatrix j;  // lower-shift blocks, decreasing size, zero block last
  std::vector<std::size_t> block_sizes;
};

JordanResult nilpotent_jordan(const ScalarMatrix& n);

/// Block sizes derived from ranks of powers, a Jordan oracle independent of
/// the chain construction.
std::vector<std::size_t> jordan_partition_from_ranks(const ScalarMatrix& n);

/// (1/det A) A for a matrix with nonzero constant determinant.
PolyMatrix det_normalize(const PolyMatrix& a);

}  // namespace expmat

#endif
