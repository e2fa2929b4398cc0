#ifndef EXPMAT_FIELD_HPP
#define EXPMAT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "expmat/error.hpp"

namespace expmat {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, FiniteField };

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Exact coefficient field: either Q or GF(p^m) with an explicit irreducible
/// modulus over GF(p).  Contexts are immutable; Scalars keep a shared handle.
class FieldCtx {
 public:
  static FieldCtxPtr rationals();
  /// modulus: coefficients low-to-high, degree m.  Empty modulus selects a
  /// shipped default for GF(4), GF(8), GF(9), GF(27) and otherwise the
  /// lexicographically first monic irreducible of degree m over GF(p).
  static FieldCtxPtr finite(std::uint32_t p, std::uint32_t m = 1,
                            std::vector<std::uint32_t> modulus = {});

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t ext_degree() const { return m_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint64_t order() const;  // p^m, finite fields only
  bool is_rationals() const { return kind_ == FieldKind::Rationals; }
  bool is_finite() const { return kind_ == FieldKind::FiniteField; }

  bool same(const FieldCtx& other) const;
  std::string describe() const;

 private:
  FieldCtx() = default;
  FieldKind kind_ = FieldKind::Rationals;
  std::uint32_t p_ = 0;
  std::uint32_t m_ = 1;
  std::vector<std::uint32_t> modulus_;  // size m+1, monic; empty for Q and m=1
};

bool same_field(const FieldCtxPtr& a, const FieldCtxPtr& b);

/// An exact field element in canonical form: reduced fraction over Q,
/// coefficient vector mod modulus over GF(p^m).  Equality is representational.
class Scalar {
 public:
  static Scalar zero(const FieldCtxPtr& ctx);
  static Scalar one(const FieldCtxPtr& ctx);
  static Scalar of_int(const FieldCtxPtr& ctx, long long v);
  static Scalar rational(const FieldCtxPtr& ctx, const Rational& r);
  static Scalar from_coeffs(const FieldCtxPtr& ctx, std::vector<std::uint32_t> coeffs);
  /// Element with the given enumeration index (base-p digits, low first).
  static Scalar from_index(const FieldCtxPtr& ctx, std::uint64_t index);
  static Scalar parse(const FieldCtxPtr& ctx, const std::string& text);

  const FieldCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint64_t index() const;  // inverse of from_index, finite fields only

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar frobenius() const;          // a^p
  Scalar frobenius_inverse() const;  // unique b with b^p = a

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const Rational& rational_value() const;
  const std::vector<std::uint32_t>& coeff_value() const;

  std::string str() const;

 private:
  Scalar(FieldCtxPtr ctx, Rational r) : ctx_(std::move(ctx)), repr_(std::move(r)) {}
  Scalar(FieldCtxPtr ctx, std::vector<std::uint32_t> v) : ctx_(std::move(ctx)), repr_(std::move(v)) {}
  void check_same_field(const Scalar& o) const;

  FieldCtxPtr ctx_;
  std::variant<Rational, std::vector<std::uint32_t>> repr_;
};

}  // namespace expmat

#endif
