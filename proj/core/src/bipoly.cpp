#include "expmat/bipoly.hpp"

#include <sstream>

namespace expmat {

BiPoly BiPoly::constant(const Scalar& c) {
  BiPoly b(c.ctx());
  if (!c.is_zero()) b.grid_ = {{c}};
  return b;
}

BiPoly BiPoly::from_t(const Poly& f) {
  BiPoly b(f.ctx());
  for (const auto& c : f.coeffs()) b.grid_.push_back({c});
  b.normalize();
  return b;
}

BiPoly BiPoly::from_tprime(const Poly& f) {
  BiPoly b(f.ctx());
  if (f.is_zero()) return b;
  b.grid_.push_back(f.coeffs());
  b.normalize();
  return b;
}

BiPoly BiPoly::t_plus_tprime(const FieldCtxPtr& ctx) {
  BiPoly b(ctx);
  b.grid_ = {{Scalar::zero(ctx), Scalar::one(ctx)}, {Scalar::one(ctx)}};
  return b;
}

void BiPoly::normalize() {
  for (auto& row : grid_)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!grid_.empty() && grid_.back().empty()) grid_.pop_back();
}

Scalar BiPoly::coeff(std::size_t i, std::size_t j) const {
  if (i < grid_.size() && j < grid_[i].size()) return grid_[i][j];
  return Scalar::zero(ctx_);
}

BiPoly BiPoly::operator-() const {
  BiPoly b(ctx_);
  b.grid_.reserve(grid_.size());
  for (const auto& row : grid_) {
    std::vector<Scalar> r;
    r.reserve(row.size());
    for (const auto& c : row) r.push_back(-c);
    b.grid_.push_back(std::move(r));
  }
  return b;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields, "bivariate add across fields");
  BiPoly b(ctx_);
  std::size_t rows = std::max(grid_.size(), o.grid_.size());
  b.grid_.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t cols = std::max(i < grid_.size() ? grid_[i].size() : 0,
                                i < o.grid_.size() ? o.grid_[i].size() : 0);
    std::vector<Scalar> row;
    row.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) row.push_back(coeff(i, j) + o.coeff(i, j));
    b.grid_.push_back(std::move(row));
  }
  b.normalize();
  return b;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields, "bivariate mul across fields");
  BiPoly b(ctx_);
  if (is_zero() || o.is_zero()) return b;
  std::size_t rows = grid_.size() + o.grid_.size() - 1;
  std::size_t cols = 0;
  for (const auto& r : grid_) cols = std::max(cols, r.size());
  std::size_t ocols = 0;
  for (const auto& r : o.grid_) ocols = std::max(ocols, r.size());
  cols += ocols;
  b.grid_.assign(rows, std::vector<Scalar>(cols, Scalar::zero(ctx_)));
  for (std::size_t i = 0; i < grid_.size(); ++i)
    for (std::size_t j = 0; j < grid_[i].size(); ++j) {
      if (grid_[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < o.grid_.size(); ++k)
        for (std::size_t l = 0; l < o.grid_[k].size(); ++l)
          b.grid_[i + k][j + l] = b.grid_[i + k][j + l] + grid_[i][j] * o.grid_[k][l];
    }
  b.normalize();
  return b;
}

bool BiPoly::operator==(const BiPoly& o) const {
  return same_field(ctx_, o.ctx_) && grid_ == o.grid_;
}

Poly BiPoly::eval_tprime_zero() const {
  std::vector<Scalar> coeffs;
  coeffs.reserve(grid_.size());
  for (const auto& row : grid_)
    coeffs.push_back(row.empty() ? Scalar::zero(ctx_) : row[0]);
  return Poly::from_coeffs(ctx_, std::move(coeffs));
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = grid_.size(); i-- > 0;)
    for (std::size_t j = grid_[i].size(); j-- > 0;) {
      if (grid_[i][j].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      bool unit = grid_[i][j].is_one() && (i > 0 || j > 0);
      if (!unit) os << grid_[i][j].str();
      if (i > 0) {
        if (!unit) os << "*";
        os << "T";
        if (i > 1) os << "^" << i;
        unit = false;
      }
      if (j > 0) {
        if (!unit) os << "*";
        os << "T'";
        if (j > 1) os << "^" << j;
      }
    }
  return os.str();
}

// ---------------------------------------------------------------------------
// TensorPoly

void TensorPoly::insert(std::pair<std::size_t, std::size_t> key, const Scalar& c) {
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
    return;
  }
  Scalar sum = it->second + c;
  if (sum.is_zero())
    terms_.erase(it);
  else
    it->second = sum;
}

TensorPoly TensorPoly::basis(const Scalar& c, std::size_t i, std::size_t j) {
  TensorPoly t(c.ctx());
  if (!c.is_zero()) t.terms_.emplace(std::make_pair(i, j), c);
  return t;
}

TensorPoly TensorPoly::coproduct_t(const FieldCtxPtr& ctx) {
  TensorPoly t(ctx);
  t.terms_.emplace(std::make_pair(std::size_t{1}, std::size_t{0}), Scalar::one(ctx));
  t.terms_.emplace(std::make_pair(std::size_t{0}, std::size_t{1}), Scalar::one(ctx));
  return t;
}

TensorPoly TensorPoly::tensor(const Poly& f, const Poly& g) {
  require(same_field(f.ctx(), g.ctx()), errc::mixed_fields, "tensor across fields");
  TensorPoly t(f.ctx());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      Scalar c = f.coeffs()[i] * g.coeffs()[j];
      t.insert({i, j}, c);
    }
  }
  return t;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields, "tensor add across fields");
  TensorPoly t = *this;
  for (const auto& [key, c] : o.terms_) t.insert(key, c);
  return t;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
  require(same_field(ctx_, o.ctx_), errc::mixed_fields, "tensor mul across fields");
  TensorPoly t(ctx_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      t.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return t;
}

bool TensorPoly::operator==(const TensorPoly& o) const {
  return same_field(ctx_, o.ctx_) && terms_ == o.terms_;
}

TensorPoly TensorPoly::eval_poly(const Poly& f, const TensorPoly& at) {
  TensorPoly acc = TensorPoly::zero(f.ctx());
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * at + TensorPoly::basis(f.coeffs()[i], 0, 0);
  return acc;
}

}  // namespace expmat
