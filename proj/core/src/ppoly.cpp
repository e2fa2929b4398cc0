#include "expmat/ppoly.hpp"

#include <sstream>

namespace expmat {

PPoly::PPoly(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
  require(ctx_->is_finite(), errc::wrong_characteristic, "p-polynomials need char p > 0");
}

PPoly PPoly::identity(const FieldCtxPtr& ctx) { return monomial(Scalar::one(ctx), 0); }

PPoly PPoly::monomial(const Scalar& c, std::size_t index) {
  PPoly f(c.ctx());
  if (c.is_zero()) return f;
  f.coeffs_.reserve(index + 1);
  for (std::size_t i = 0; i < index; ++i) f.coeffs_.push_back(Scalar::zero(c.ctx()));
  f.coeffs_.push_back(c);
  return f;
}

PPoly PPoly::from_coeffs(const FieldCtxPtr& ctx, std::vector<Scalar> coeffs) {
  PPoly f(ctx);
  for (const auto& c : coeffs)
    require(same_field(ctx, c.ctx()), errc::mixed_fields, "coefficient from another field");
  f.coeffs_ = std::move(coeffs);
  f.normalize();
  return f;
}

PPoly PPoly::from_poly(const Poly& f) {
  PPoly g(f.ctx());
  std::uint64_t p = f.ctx()->characteristic();
  std::uint64_t power = 1;
  std::size_t index = 0;
  for (std::size_t d = 0; d < f.coeffs().size(); ++d) {
    const Scalar& c = f.coeffs()[d];
    if (c.is_zero()) continue;
    if (d == 0) raise(errc::not_additive, "constant term present");
    while (power < d) {
      power *= p;
      ++index;
    }
    if (power != d)
      raise(errc::not_additive, "exponent " + std::to_string(d) + " is not a power of " +
                                    std::to_string(p));
    while (g.coeffs_.size() < index) g.coeffs_.push_back(Scalar::zero(f.ctx()));
    g.coeffs_.push_back(c);
  }
  g.normalize();
  return g;
}

void PPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::uint64_t PPoly::plain_degree() const {
  if (is_zero()) return 0;
  std::uint64_t d = 1;
  for (int i = 0; i < degree_index(); ++i) d *= ctx_->characteristic();
  return d;
}

Scalar PPoly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return Scalar::zero(ctx_);
}

const Scalar& PPoly::leading() const {
  require(!coeffs_.empty(), errc::zero_input, "leading coefficient of zero");
  return coeffs_.back();
}

Poly PPoly::to_poly() const {
  Poly f = Poly::zero(ctx_);
  std::size_t power = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) f = f + Poly::monomial(coeffs_[i], power);
    power *= ctx_->characteristic();
  }
  return f;
}

PPoly PPoly::operator-() const {
  PPoly f(ctx_);
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) f.coeffs_.push_back(-c);
  return f;
}

PPoly PPoly::operator+(const PPoly& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields, "p-polynomial add across fields");
  PPoly f(ctx_);
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  f.coeffs_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) f.coeffs_.push_back(coeff(i) + o.coeff(i));
  f.normalize();
  return f;
}

PPoly PPoly::operator-(const PPoly& o) const { return *this + (-o); }

PPoly PPoly::scaled(const Scalar& c) const {
  PPoly f(ctx_);
  if (c.is_zero()) return f;
  f.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) f.coeffs_.push_back(a * c);
  f.normalize();
  return f;
}

PPoly PPoly::compose(const PPoly& alpha) const {
  require(same_field(ctx_, alpha.ctx_), errc::mixed_fields, "composition across fields");
  PPoly f(ctx_);
  if (is_zero() || alpha.is_zero()) return f;
  f.coeffs_.assign(coeffs_.size() + alpha.coeffs_.size() - 1, Scalar::zero(ctx_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < alpha.coeffs_.size(); ++j) {
      if (alpha.coeffs_[j].is_zero()) continue;
      // a_i (b_j T^{p^j})^{p^i} contributes a_i b_j^{p^i} T^{p^{i+j}}.
      Scalar twisted = alpha.coeffs_[j];
      for (std::size_t k = 0; k < i; ++k) twisted = twisted.frobenius();
      f.coeffs_[i + j] = f.coeffs_[i + j] + coeffs_[i] * twisted;
    }
  }
  f.normalize();
  return f;
}

bool PPoly::operator==(const PPoly& o) const {
  return same_field(ctx_, o.ctx_) && coeffs_ == o.coeffs_;
}

PPoly PPoly::monic() const {
  require(!is_zero(), errc::zero_input, "monic normalization of zero");
  return scaled(leading().inverse());
}

std::string PPoly::str() const { return to_poly().str(); }

const char* reduce_case_name(ReduceCase c) {
  switch (c) {
    case ReduceCase::I: return "i";
    case ReduceCase::II: return "ii";
    case ReduceCase::III: return "iii";
  }
  return "?";
}

namespace {

Scalar iterated_frobenius(Scalar a, std::size_t times) {
  for (std::size_t i = 0; i < times; ++i) a = a.frobenius();
  return a;
}

}  // namespace

ReduceStep reduce_step(const PPoly& alpha1, const PPoly& alpha2) {
  require(!alpha1.is_zero() && !alpha2.is_zero(), errc::zero_input, "reduce_step on a zero entry");
  int e = alpha1.degree_index();
  int f = alpha2.degree_index();
  const Scalar c_e = alpha1.leading();
  const Scalar d_f = alpha2.leading();
  if (e < f) {
    // lambda = (d_f / c_e^{p^{f-e}}) T^{p^{f-e}} kills the top of alpha2.
    Scalar denom = iterated_frobenius(c_e, static_cast<std::size_t>(f - e));
    PPoly lambda = PPoly::monomial(d_f / denom, static_cast<std::size_t>(f - e));
    return {alpha1, alpha2 - lambda.compose(alpha1), lambda, ReduceCase::I};
  }
  if (e == f) {
    PPoly lambda = PPoly::monomial(d_f / c_e, 0);
    return {alpha1, alpha2 - lambda.compose(alpha1), lambda, ReduceCase::II};
  }
  Scalar denom = iterated_frobenius(d_f, static_cast<std::size_t>(e - f));
  PPoly lambda = PPoly::monomial(c_e / denom, static_cast<std::size_t>(e - f));
  return {alpha1 - lambda.compose(alpha2), alpha2, lambda, ReduceCase::III};
}

ReduceResult reduce_loop(const PPoly& alpha1, const PPoly& alpha2) {
  require(!alpha1.is_zero() && !alpha2.is_zero(), errc::zero_input, "reduce_loop on a zero entry");
  PPoly a1 = alpha1;
  PPoly a2 = alpha2;
  std::vector<ReduceTraceEntry> steps;
  while (true) {
    ReduceStep step = reduce_step(a1, a2);
    steps.push_back({a1, a2, step});
    a1 = step.beta1;
    a2 = step.beta2;
    if (a2.is_zero()) return {a1, Slot::First, std::move(steps)};
    if (a1.is_zero()) return {a2, Slot::Second, std::move(steps)};
  }
}

std::vector<PPoly> span_canonical(const std::vector<PPoly>& tuple, std::size_t dim_expected) {
  require(!tuple.empty(), errc::zero_input, "span of an empty tuple");
  FieldCtxPtr ctx = tuple.front().ctx();
  std::size_t cols = 0;
  for (const auto& f : tuple) {
    require(same_field(ctx, f.ctx()), errc::mixed_fields, "tuple across fields");
    cols = std::max(cols, f.coeffs().size());
  }
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(tuple.size());
  for (const auto& f : tuple) {
    std::vector<Scalar> row;
    row.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) row.push_back(f.coeff(j));
    rows.push_back(std::move(row));
  }
  // Reduced row echelon form, pivots left to right.
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Scalar inv = rows[pivot_row][col].inverse();
    for (auto& v : rows[pivot_row]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] = rows[r][j] - factor * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  std::vector<PPoly> basis;
  for (std::size_t r = 0; r < pivot_row; ++r) basis.push_back(PPoly::from_coeffs(ctx, rows[r]));
  // Dimension one is the GL(1) quotient: normalize to leading coefficient 1.
  if (basis.size() == 1) basis[0] = basis[0].monic();
  if (dim_expected != 0)
    require(basis.size() == dim_expected, errc::dimension_mismatch,
            "span dimension " + std::to_string(basis.size()) + ", expected " +
                std::to_string(dim_expected));
  return basis;
}

SpanRank linear_independent(const std::vector<PPoly>& tuple) {
  if (tuple.empty()) return {true, 0};
  std::size_t rank = span_canonical(tuple).size();
  return {rank == tuple.size(), rank};
}

}  // namespace expmat
