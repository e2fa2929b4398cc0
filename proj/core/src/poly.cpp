#include "expmat/poly.hpp"

#include <sstream>

#include "expmat/bipoly.hpp"

namespace expmat {

Poly Poly::constant(const Scalar& c) {
  Poly f(c.ctx());
  if (!c.is_zero()) f.coeffs_.push_back(c);
  return f;
}

Poly Poly::variable(const FieldCtxPtr& ctx) { return monomial(Scalar::one(ctx), 1); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  Poly f(c.ctx());
  if (c.is_zero()) return f;
  f.coeffs_.reserve(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) f.coeffs_.push_back(Scalar::zero(c.ctx()));
  f.coeffs_.push_back(c);
  return f;
}

Poly Poly::from_coeffs(const FieldCtxPtr& ctx, std::vector<Scalar> coeffs) {
  Poly f(ctx);
  for (const auto& c : coeffs)
    require(same_field(ctx, c.ctx()), errc::mixed_fields, "coefficient from another field");
  f.coeffs_ = std::move(coeffs);
  f.normalize();
  return f;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields,
          ctx_->describe() + " vs " + o.ctx_->describe());
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

Scalar Poly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return Scalar::zero(ctx_);
}

const Scalar& Poly::leading() const {
  require(!coeffs_.empty(), errc::zero_input, "leading coefficient of zero");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly f(ctx_);
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) f.coeffs_.push_back(-c);
  return f;
}

Poly Poly::operator+(const Poly& o) const {
  check_same_field(o);
  Poly f(ctx_);
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  f.coeffs_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) f.coeffs_.push_back(coeff(i) + o.coeff(i));
  f.normalize();
  return f;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_same_field(o);
  Poly f(ctx_);
  if (is_zero() || o.is_zero()) return f;
  std::size_t n = coeffs_.size() + o.coeffs_.size() - 1;
  f.coeffs_.assign(n, Scalar::zero(ctx_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      f.coeffs_[i + j] = f.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  f.normalize();
  return f;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly f(ctx_);
  if (c.is_zero()) return f;
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) f.coeffs_.push_back(a * c);
  f.normalize();
  return f;
}

bool Poly::operator==(const Poly& o) const {
  return same_field(ctx_, o.ctx_) && coeffs_ == o.coeffs_;
}

Scalar Poly::eval(const Scalar& t) const {
  Scalar acc = Scalar::zero(ctx_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  check_same_field(inner);
  Poly acc = Poly::zero(ctx_);
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * inner + Poly::constant(coeffs_[i]);
  return acc;
}

Poly Poly::derivative() const {
  Poly f(ctx_);
  if (coeffs_.size() <= 1) return f;
  f.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    f.coeffs_.push_back(coeffs_[i] * Scalar::of_int(ctx_, static_cast<long long>(i)));
  f.normalize();
  return f;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = coeffs_[i].is_one() && i > 0;
    if (!unit) os << coeffs_[i].str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

BiPoly bivariate_shift(const Poly& f) {
  BiPoly acc = BiPoly::zero(f.ctx());
  BiPoly shift = BiPoly::t_plus_tprime(f.ctx());
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * shift + BiPoly::constant(f.coeffs()[i]);
  return acc;
}

}  // namespace expmat
