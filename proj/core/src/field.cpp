#include "expmat/field.hpp"

#include <algorithm>
#include <sstream>

namespace expmat {

const char* errc_name(errc c) {
  switch (c) {
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_finite_field: return "NotFiniteField";
    case errc::not_additive: return "NotAdditive";
    case errc::zero_input: return "ZeroInput";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_nilpotent: return "NotNilpotent";
    case errc::wrong_characteristic: return "WrongCharacteristic";
    case errc::nonconstant_determinant: return "NonConstantDeterminant";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::zero_scalar: return "ZeroScalar";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::bad_derivation_shape: return "BadDerivationShape";
    case errc::too_large: return "TooLarge";
    case errc::triangularization_failed: return "TriangularizationFailed";
    case errc::not_found: return "NotFound";
    case errc::not_normalized: return "NotNormalized";
    case errc::bad_input: return "BadInput";
  }
  return "UnknownError";
}

namespace {

constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, low-to-high, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f mod g, g monic.
FpPoly fp_mod(FpPoly f, const FpPoly& g, std::uint64_t p) {
  fp_trim(f);
  while (f.size() >= g.size() && !f.empty()) {
    std::uint64_t lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = (lead * g[i]) % p;
      std::uint64_t cur = f[shift + i];
      f[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
    }
    fp_trim(f);
  }
  return f;
}

bool fp_divides(const FpPoly& g, const FpPoly& f, std::uint64_t p) {
  return fp_mod(f, g, p).empty();
}

bool fp_irreducible(const FpPoly& f, std::uint64_t p) {
  if (f.size() < 2) return false;  // constants are not irreducible
  std::size_t m = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      FpPoly g(d + 1, 0);
      std::uint64_t k = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(k % p);
        k /= p;
      }
      g[d] = 1;
      if (fp_divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  if (p == 2 && m == 2) return {1, 1, 1};        // x^2+x+1
  if (p == 2 && m == 3) return {1, 1, 0, 1};     // x^3+x+1
  if (p == 3 && m == 2) return {1, 0, 1};        // x^2+1
  if (p == 3 && m == 3) return {1, 2, 0, 1};     // x^3+2x+1
  // Lexicographically first monic irreducible of degree m.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    FpPoly g(m + 1, 0);
    std::uint64_t k = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      g[i] = static_cast<std::uint32_t>(k % p);
      k /= p;
    }
    g[m] = 1;
    if (fp_irreducible(g, p)) return g;
  }
  raise(errc::bad_input, "no irreducible modulus found");
}

}  // namespace

FieldCtxPtr FieldCtx::rationals() {
  static FieldCtxPtr instance = [] {
    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->kind_ = FieldKind::Rationals;
    ctx->p_ = 0;
    ctx->m_ = 1;
    return FieldCtxPtr(ctx);
  }();
  return instance;
}

FieldCtxPtr FieldCtx::finite(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
  require(is_prime(p), errc::bad_input, "characteristic must be prime");
  require(m >= 1, errc::bad_input, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    require(q <= kMaxFieldOrder, errc::too_large, "field order exceeds 2^20");
  }
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->kind_ = FieldKind::FiniteField;
  ctx->p_ = p;
  ctx->m_ = m;
  if (m == 1) {
    require(modulus.empty(), errc::bad_input, "prime field takes no modulus");
  } else {
    if (modulus.empty()) modulus = default_modulus(p, m);
    require(modulus.size() == m + 1, errc::bad_input, "modulus degree must equal extension degree");
    for (auto& c : modulus) c %= p;
    require(modulus.back() != 0, errc::bad_input, "modulus must have degree m");
    if (modulus.back() != 1) {
      // Normalize to monic.
      std::uint64_t inv = 1, lead = modulus.back();
      for (std::uint64_t e = p - 2, base = lead; e; e >>= 1, base = (base * base) % p)
        if (e & 1) inv = (inv * base) % p;
      for (auto& c : modulus) c = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * inv) % p);
    }
    require(fp_irreducible(modulus, p), errc::bad_input, "modulus is reducible over GF(p)");
    ctx->modulus_ = std::move(modulus);
  }
  return FieldCtxPtr(ctx);
}

std::uint64_t FieldCtx::order() const {
  require(is_finite(), errc::not_finite_field, "order of the rationals");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m_; ++i) q *= p_;
  return q;
}

bool FieldCtx::same(const FieldCtx& other) const {
  return kind_ == other.kind_ && p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

std::string FieldCtx::describe() const {
  if (is_rationals()) return "Q";
  std::ostringstream os;
  os << "GF(" << p_;
  if (m_ > 1) os << "^" << m_;
  os << ")";
  return os.str();
}

bool same_field(const FieldCtxPtr& a, const FieldCtxPtr& b) {
  return a && b && (a.get() == b.get() || a->same(*b));
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(const FieldCtxPtr& ctx) {
  if (ctx->is_rationals()) return Scalar(ctx, Rational(0));
  return Scalar(ctx, std::vector<std::uint32_t>(ctx->ext_degree(), 0));
}

Scalar Scalar::one(const FieldCtxPtr& ctx) { return of_int(ctx, 1); }

Scalar Scalar::of_int(const FieldCtxPtr& ctx, long long v) {
  if (ctx->is_rationals()) return Scalar(ctx, Rational(v));
  std::uint32_t p = ctx->characteristic();
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  std::vector<std::uint32_t> coeffs(ctx->ext_degree(), 0);
  coeffs[0] = static_cast<std::uint32_t>(r);
  return Scalar(ctx, std::move(coeffs));
}

Scalar Scalar::rational(const FieldCtxPtr& ctx, const Rational& r) {
  require(ctx->is_rationals(), errc::bad_input, "rational value in a finite field");
  return Scalar(ctx, r);
}

Scalar Scalar::from_coeffs(const FieldCtxPtr& ctx, std::vector<std::uint32_t> coeffs) {
  require(ctx->is_finite(), errc::not_finite_field, "coefficient vector over Q");
  require(coeffs.size() <= ctx->ext_degree(), errc::bad_input, "too many extension coefficients");
  coeffs.resize(ctx->ext_degree(), 0);
  for (auto& c : coeffs) c %= ctx->characteristic();
  return Scalar(ctx, std::move(coeffs));
}

Scalar Scalar::from_index(const FieldCtxPtr& ctx, std::uint64_t index) {
  require(ctx->is_finite(), errc::not_finite_field, "element index over Q");
  std::uint32_t p = ctx->characteristic();
  std::vector<std::uint32_t> coeffs(ctx->ext_degree(), 0);
  for (std::uint32_t i = 0; i < ctx->ext_degree(); ++i) {
    coeffs[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  require(index == 0, errc::bad_input, "element index out of range");
  return Scalar(ctx, std::move(coeffs));
}

std::uint64_t Scalar::index() const {
  require(ctx_->is_finite(), errc::not_finite_field, "element index over Q");
  const auto& v = coeff_value();
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * ctx_->characteristic() + v[i];
  return idx;
}

Scalar Scalar::parse(const FieldCtxPtr& ctx, const std::string& text) {
  require(!text.empty(), errc::bad_input, "empty scalar literal");
  if (ctx->is_rationals()) {
    try {
      return Scalar(ctx, Rational(text));
    } catch (const std::exception&) {
      raise(errc::bad_input, "bad rational literal '" + text + "'");
    }
  }
  std::vector<std::uint32_t> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      long long v = std::stoll(part);
      long long r = v % static_cast<long long>(ctx->characteristic());
      if (r < 0) r += ctx->characteristic();
      coeffs.push_back(static_cast<std::uint32_t>(r));
    } catch (const std::exception&) {
      raise(errc::bad_input, "bad field element literal '" + text + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return from_coeffs(ctx, std::move(coeffs));
}

bool Scalar::is_zero() const {
  if (ctx_->is_rationals()) return rational_value() == 0;
  const auto& v = coeff_value();
  return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

bool Scalar::is_one() const {
  if (ctx_->is_rationals()) return rational_value() == 1;
  const auto& v = coeff_value();
  if (v[0] != 1) return false;
  return std::all_of(v.begin() + 1, v.end(), [](std::uint32_t c) { return c == 0; });
}

void Scalar::check_same_field(const Scalar& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields,
          ctx_->describe() + " vs " + o.ctx_->describe());
}

const Rational& Scalar::rational_value() const { return std::get<Rational>(repr_); }
const std::vector<std::uint32_t>& Scalar::coeff_value() const {
  return std::get<std::vector<std::uint32_t>>(repr_);
}

Scalar Scalar::operator-() const {
  if (ctx_->is_rationals()) return Scalar(ctx_, -rational_value());
  std::uint32_t p = ctx_->characteristic();
  auto v = coeff_value();
  for (auto& c : v) c = (p - c) % p;
  return Scalar(ctx_, std::move(v));
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (ctx_->is_rationals()) return Scalar(ctx_, rational_value() + o.rational_value());
  std::uint32_t p = ctx_->characteristic();
  auto v = coeff_value();
  const auto& w = o.coeff_value();
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i]) % p;
  return Scalar(ctx_, std::move(v));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (ctx_->is_rationals()) return Scalar(ctx_, rational_value() * o.rational_value());
  std::uint32_t p = ctx_->characteristic();
  std::uint32_t m = ctx_->ext_degree();
  const auto& a = coeff_value();
  const auto& b = o.coeff_value();
  if (m == 1) {
    std::uint64_t prod = (static_cast<std::uint64_t>(a[0]) * b[0]) % p;
    return Scalar(ctx_, std::vector<std::uint32_t>{static_cast<std::uint32_t>(prod)});
  }
  std::vector<std::uint64_t> acc(2 * m - 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  // Reduce modulo the monic modulus.
  const auto& mod = ctx_->modulus();
  for (std::size_t d = acc.size(); d-- > m;) {
    std::uint64_t lead = acc[d];
    if (lead == 0) continue;
    acc[d] = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      std::uint64_t sub = (lead * mod[i]) % p;
      acc[d - m + i] = (acc[d - m + i] + p - sub) % p;
    }
  }
  std::vector<std::uint32_t> v(m);
  for (std::uint32_t i = 0; i < m; ++i) v[i] = static_cast<std::uint32_t>(acc[i]);
  return Scalar(ctx_, std::move(v));
}

Scalar Scalar::inverse() const {
  require(!is_zero(), errc::division_by_zero, "inverse of zero");
  if (ctx_->is_rationals()) return Scalar(ctx_, Rational(1) / rational_value());
  return pow(ctx_->order() - 2);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  require(!o.is_zero(), errc::division_by_zero, "division by zero");
  return *this * o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar base = *this;
  Scalar result = Scalar::one(ctx_);
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::frobenius() const {
  require(ctx_->is_finite(), errc::not_finite_field, "Frobenius over Q");
  return pow(ctx_->characteristic());
}

Scalar Scalar::frobenius_inverse() const {
  require(ctx_->is_finite(), errc::not_finite_field, "Frobenius over Q");
  // a^(p^(m-1)) inverts x -> x^p on GF(p^m).
  Scalar result = *this;
  for (std::uint32_t i = 0; i + 1 < ctx_->ext_degree(); ++i) result = result.frobenius();
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!same_field(ctx_, o.ctx_)) return false;
  return repr_ == o.repr_;
}

std::string Scalar::str() const {
  if (ctx_->is_rationals()) {
    std::ostringstream os;
    os << rational_value();
    return os.str();
  }
  const auto& v = coeff_value();
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

}  // namespace expmat
