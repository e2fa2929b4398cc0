#include "expmat/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace expmat {

ScalarMatrix::ScalarMatrix(FieldCtxPtr ctx, std::size_t n, const Scalar& fill)
    : ctx_(std::move(ctx)), n_(n), entries_(n * n, fill) {}

ScalarMatrix ScalarMatrix::identity(const FieldCtxPtr& ctx, std::size_t n) {
  ScalarMatrix m(ctx, n, Scalar::zero(ctx));
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(ctx));
  return m;
}

ScalarMatrix ScalarMatrix::zero(const FieldCtxPtr& ctx, std::size_t n) {
  return ScalarMatrix(ctx, n, Scalar::zero(ctx));
}

ScalarMatrix ScalarMatrix::from_rows(const FieldCtxPtr& ctx,
                                     std::vector<std::vector<Scalar>> rows) {
  std::size_t n = rows.size();
  ScalarMatrix m(ctx, n, Scalar::zero(ctx));
  for (std::size_t i = 0; i < n; ++i) {
    require(rows[i].size() == n, errc::dimension_mismatch, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      require(same_field(ctx, rows[i][j].ctx()), errc::mixed_fields, "entry from another field");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
  require(n_ == o.n_, errc::dimension_mismatch, "matrix sizes differ");
  ScalarMatrix r(ctx_, n_, Scalar::zero(ctx_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        r.set(i, j, r.at(i, j) + at(i, k) * o.at(k, j));
    }
  return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
  require(n_ == o.n_, errc::dimension_mismatch, "matrix sizes differ");
  ScalarMatrix r = *this;
  for (std::size_t i = 0; i < n_ * n_; ++i) r.entries_[i] = r.entries_[i] + o.entries_[i];
  return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
  require(n_ == o.n_, errc::dimension_mismatch, "matrix sizes differ");
  ScalarMatrix r = *this;
  for (std::size_t i = 0; i < n_ * n_; ++i) r.entries_[i] = r.entries_[i] - o.entries_[i];
  return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& c) const {
  ScalarMatrix r = *this;
  for (auto& e : r.entries_) e = e * c;
  return r;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
  return n_ == o.n_ && same_field(ctx_, o.ctx_) && entries_ == o.entries_;
}

bool ScalarMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool ScalarMatrix::is_identity() const { return *this == identity(ctx_, n_); }

namespace {

// Gaussian elimination; returns rank and optionally accumulates the inverse.
std::size_t eliminate(std::vector<std::vector<Scalar>>& rows,
                      std::vector<std::vector<Scalar>>* inverse) {
  std::size_t n_rows = rows.size();
  std::size_t n_cols = rows.empty() ? 0 : rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n_cols && pivot_row < n_rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n_rows && rows[sel][col].is_zero()) ++sel;
    if (sel == n_rows) continue;
    std::swap(rows[pivot_row], rows[sel]);
    if (inverse) std::swap((*inverse)[pivot_row], (*inverse)[sel]);
    Scalar inv = rows[pivot_row][col].inverse();
    for (auto& v : rows[pivot_row]) v = v * inv;
    if (inverse)
      for (auto& v : (*inverse)[pivot_row]) v = v * inv;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t j = 0; j < n_cols; ++j) rows[r][j] = rows[r][j] - factor * rows[pivot_row][j];
      if (inverse)
        for (std::size_t j = 0; j < n_cols; ++j)
          (*inverse)[r][j] = (*inverse)[r][j] - factor * (*inverse)[pivot_row][j];
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::vector<std::vector<Scalar>> to_rows(const ScalarMatrix& m) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    std::vector<Scalar> row;
    row.reserve(m.n());
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Basis of the null space of m, from the RREF free columns.  Deterministic:
// free columns in increasing order, pivot entries filled from the RREF rows.
std::vector<std::vector<Scalar>> kernel_basis(const ScalarMatrix& m) {
  auto rows = to_rows(m);
  eliminate(rows, nullptr);
  std::size_t n = m.n();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  for (const auto& row : rows) {
    int pc = -1;
    for (std::size_t j = 0; j < n; ++j)
      if (!row[j].is_zero()) {
        pc = static_cast<int>(j);
        break;
      }
    pivot_col_of_row.push_back(pc);
    if (pc >= 0) is_pivot[pc] = true;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Scalar> v(n, Scalar::zero(m.ctx()));
    v[free_col] = Scalar::one(m.ctx());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int pc = pivot_col_of_row[r];
      if (pc < 0) continue;
      v[pc] = -rows[r][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Incremental row-space tracker for independence tests.
class SpanTracker {
 public:
  explicit SpanTracker(std::size_t dim) : dim_(dim) {}
  bool insert(std::vector<Scalar> v) {
    for (const auto& [col, row] : pivots_) {
      if (v[col].is_zero()) continue;
      Scalar factor = v[col];
      for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] - factor * row[j];
    }
    std::size_t col = 0;
    while (col < dim_ && v[col].is_zero()) ++col;
    if (col == dim_) return false;
    Scalar inv = v[col].inverse();
    for (auto& x : v) x = x * inv;
    pivots_.emplace_back(col, std::move(v));
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> pivots_;
};

}  // namespace

Scalar ScalarMatrix::det() const {
  auto rows = to_rows(*this);
  Scalar d = Scalar::one(ctx_);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n_ && pivot_row < n_; ++col) {
    std::size_t sel = pivot_row;
    while (sel < n_ && rows[sel][col].is_zero()) ++sel;
    if (sel == n_) return Scalar::zero(ctx_);
    if (sel != pivot_row) {
      std::swap(rows[pivot_row], rows[sel]);
      d = -d;
    }
    d = d * rows[pivot_row][col];
    Scalar inv = rows[pivot_row][col].inverse();
    for (auto& v : rows[pivot_row]) v = v * inv;
    for (std::size_t r = pivot_row + 1; r < n_; ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col];
      for (std::size_t j = 0; j < n_; ++j) rows[r][j] = rows[r][j] - factor * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  return pivot_row == n_ ? d : Scalar::zero(ctx_);
}

bool ScalarMatrix::invertible() const { return rank() == n_; }

ScalarMatrix ScalarMatrix::inverse() const {
  auto rows = to_rows(*this);
  auto inv_rows = to_rows(identity(ctx_, n_));
  std::size_t rank = eliminate(rows, &inv_rows);
  require(rank == n_, errc::singular_matrix, "matrix is singular");
  return from_rows(ctx_, std::move(inv_rows));
}

ScalarMatrix ScalarMatrix::power(std::size_t e) const {
  ScalarMatrix acc = identity(ctx_, n_);
  for (std::size_t i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

bool ScalarMatrix::is_nilpotent() const { return power(n_).is_zero(); }

std::size_t ScalarMatrix::rank() const {
  auto rows = to_rows(*this);
  return eliminate(rows, nullptr);
}

std::string ScalarMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(FieldCtxPtr ctx, std::size_t n)
    : ctx_(std::move(ctx)), n_(n), entries_(n * n, Poly::zero(ctx_)) {}

PolyMatrix PolyMatrix::identity(const FieldCtxPtr& ctx, std::size_t n) {
  PolyMatrix m(ctx, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, Poly::constant(Scalar::one(ctx)));
  return m;
}

PolyMatrix PolyMatrix::from_entries(const FieldCtxPtr& ctx, std::vector<std::vector<Poly>> rows) {
  std::size_t n = rows.size();
  PolyMatrix m(ctx, n);
  for (std::size_t i = 0; i < n; ++i) {
    require(rows[i].size() == n, errc::dimension_mismatch, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      require(same_field(ctx, rows[i][j].ctx()), errc::mixed_fields, "entry from another field");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::constant(const ScalarMatrix& s) {
  PolyMatrix m(s.ctx(), s.n());
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t j = 0; j < s.n(); ++j) m.set(i, j, Poly::constant(s.at(i, j)));
  return m;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly v) { entries_[i * n_ + j] = std::move(v); }

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  require(n_ == o.n_, errc::dimension_mismatch, "matrix sizes differ");
  PolyMatrix r(ctx_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r.set(i, j, r.at(i, j) + at(i, k) * o.at(k, j));
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return n_ == o.n_ && same_field(ctx_, o.ctx_) && entries_ == o.entries_;
}

ScalarMatrix PolyMatrix::eval(const Scalar& t) const {
  ScalarMatrix r(ctx_, n_, Scalar::zero(ctx_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.set(i, j, at(i, j).eval(t));
  return r;
}

ScalarMatrix PolyMatrix::derivative_at_zero() const {
  ScalarMatrix r(ctx_, n_, Scalar::zero(ctx_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.set(i, j, at(i, j).coeff(1));
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(ctx_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.set(j, i, at(i, j));
  return r;
}

Poly PolyMatrix::det() const {
  // Cofactor expansion; matrices here are desk-scale (n <= 5).
  if (n_ == 0) return Poly::constant(Scalar::one(ctx_));
  if (n_ == 1) return at(0, 0);
  Poly acc = Poly::zero(ctx_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (at(0, j).is_zero()) continue;
    PolyMatrix minor(ctx_, n_ - 1);
    for (std::size_t r = 1; r < n_; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n_; ++c) {
        if (c == j) continue;
        minor.set(r - 1, cc++, at(r, c));
      }
    }
    Poly term = at(0, j) * minor.det();
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

PolyMatrix PolyMatrix::conjugated(const ScalarMatrix& p) const {
  require(p.n() == n_, errc::dimension_mismatch, "conjugator size differs");
  ScalarMatrix pinv = p.inverse();
  PolyMatrix r(ctx_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Poly acc = Poly::zero(ctx_);
      for (std::size_t k = 0; k < n_; ++k) {
        if (p.at(i, k).is_zero()) continue;
        for (std::size_t l = 0; l < n_; ++l)
          acc = acc + at(k, l).scaled(p.at(i, k) * pinv.at(l, j));
      }
      r.set(i, j, acc);
    }
  return r;
}

std::string PolyMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Exponential verification

std::pair<std::optional<ExpMatrix>, VerifyReport> ExpMatrix::verify(const PolyMatrix& a) {
  VerifyReport rep;
  const FieldCtxPtr& ctx = a.ctx();
  std::size_t n = a.n();

  rep.at_zero_ok = a.eval(Scalar::zero(ctx)).is_identity();

  // Route 1: expand A(T) A(T') and A(T+T') in Mat(n, k[T,T']).
  rep.bivariate_ok = true;
  for (std::size_t i = 0; i < n && rep.bivariate_ok; ++i)
    for (std::size_t j = 0; j < n && rep.bivariate_ok; ++j) {
      BiPoly sum = BiPoly::zero(ctx);
      for (std::size_t l = 0; l < n; ++l)
        sum = sum + BiPoly::from_t(a.at(i, l)) * BiPoly::from_tprime(a.at(l, j));
      BiPoly shifted = bivariate_shift(a.at(i, j));
      if (sum != shifted) {
        rep.bivariate_ok = false;
        rep.fail_row = static_cast<int>(i);
        rep.fail_col = static_cast<int>(j);
        rep.residual = (shifted - sum).str();
      }
    }

  // Route 2: the coproduct identity on entries in k[T] (x) k[T].
  rep.coproduct_ok = true;
  TensorPoly delta_t = TensorPoly::coproduct_t(ctx);
  for (std::size_t i = 0; i < n && rep.coproduct_ok; ++i)
    for (std::size_t j = 0; j < n && rep.coproduct_ok; ++j) {
      TensorPoly lhs = TensorPoly::eval_poly(a.at(i, j), delta_t);
      TensorPoly rhs = TensorPoly::zero(ctx);
      for (std::size_t l = 0; l < n; ++l)
        rhs = rhs + TensorPoly::tensor(a.at(i, l), a.at(l, j));
      if (lhs != rhs) rep.coproduct_ok = false;
    }

  rep.routes_agree = rep.bivariate_ok == rep.coproduct_ok;

  Poly d = a.det();
  rep.det_ok = d.is_one();

  rep.valid = rep.at_zero_ok && rep.bivariate_ok && rep.coproduct_ok && rep.det_ok;
  if (!rep.valid) return {std::nullopt, rep};
  return {ExpMatrix(a), rep};
}

ExpMatrix ExpMatrix::trusted(const PolyMatrix& a) {
  auto [m, rep] = verify(a);
  require(m.has_value(), errc::internal_inconsistency, "matrix failed the exponential axioms");
  return *m;
}

ExpMatrix exp_nilpotent(const ScalarMatrix& n) {
  const FieldCtxPtr& ctx = n.ctx();
  require(ctx->is_rationals(), errc::wrong_characteristic, "Exp_N needs characteristic 0");
  require(n.is_nilpotent(), errc::not_nilpotent, "Exp_N needs a nilpotent matrix");
  PolyMatrix acc = PolyMatrix::identity(ctx, n.n());
  ScalarMatrix npow = n;
  Rational factorial = 1;
  for (std::size_t i = 1; i < n.n(); ++i) {
    if (npow.is_zero()) break;
    factorial *= static_cast<int>(i);
    Scalar c = Scalar::rational(ctx, Rational(1) / factorial);
    for (std::size_t r = 0; r < n.n(); ++r)
      for (std::size_t s = 0; s < n.n(); ++s) {
        if (npow.at(r, s).is_zero()) continue;
        acc.set(r, s, acc.at(r, s) + Poly::monomial(npow.at(r, s) * c, i));
      }
    npow = npow * n;
  }
  return ExpMatrix::trusted(acc);
}

ScalarMatrix log_exponential(const ExpMatrix& a) {
  require(a.ctx()->is_rationals(), errc::wrong_characteristic, "Log needs characteristic 0");
  ScalarMatrix n = a.matrix().derivative_at_zero();
  require(n.is_nilpotent(), errc::internal_inconsistency, "A'(0) is not nilpotent");
  require(exp_nilpotent(n).matrix() == a.matrix(), errc::internal_inconsistency,
          "Exp(A'(0)) does not reproduce A");
  return n;
}

std::vector<std::size_t> jordan_partition_from_ranks(const ScalarMatrix& n) {
  // Number of blocks of size >= s equals rank(N^{s-1}) - rank(N^s).
  std::vector<std::size_t> ranks;
  ScalarMatrix pow = ScalarMatrix::identity(n.ctx(), n.n());
  for (std::size_t s = 0; s <= n.n(); ++s) {
    ranks.push_back(pow.rank());
    pow = pow * n;
  }
  std::vector<std::size_t> partition;
  for (std::size_t size = n.n(); size >= 1; --size) {
    std::size_t at_least_this = ranks[size - 1] - ranks[size];
    std::size_t at_least_next = size < n.n() ? ranks[size] - ranks[size + 1] : 0;
    std::size_t exactly = at_least_this - at_least_next;
    for (std::size_t k = 0; k < exactly; ++k) partition.push_back(size);
  }
  return partition;
}

JordanResult nilpotent_jordan(const ScalarMatrix& n) {
  const FieldCtxPtr& ctx = n.ctx();
  require(ctx->is_rationals(), errc::wrong_characteristic, "Jordan step runs in characteristic 0");
  require(n.is_nilpotent(), errc::not_nilpotent, "input is not nilpotent");
  std::size_t dim = n.n();

  // Nilpotency index and kernels of powers.
  std::size_t index = 0;
  {
    ScalarMatrix pow = ScalarMatrix::identity(ctx, dim);
    while (!pow.is_zero()) {
      pow = pow * n;
      ++index;
    }
  }
  std::vector<std::vector<std::vector<Scalar>>> kernels(index + 1);
  {
    ScalarMatrix pow = ScalarMatrix::identity(ctx, dim);
    for (std::size_t k = 0; k <= index; ++k) {
      kernels[k] = kernel_basis(pow);
      pow = pow * n;
    }
  }

  auto apply = [&](const std::vector<Scalar>& v) {
    std::vector<Scalar> w;
    w.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      Scalar acc = Scalar::zero(ctx);
      for (std::size_t j = 0; j < dim; ++j) acc = acc + n.at(i, j) * v[j];
      w.push_back(acc);
    }
    return w;
  };

  // Chains top-down: at height k, new tops extend ker N^{k-1} plus the
  // height-k vectors of the chains already started above.
  struct Chain {
    std::vector<std::vector<Scalar>> vectors;  // top, N top, N^2 top, ...
  };
  std::vector<Chain> chains;
  for (std::size_t k = index; k >= 1; --k) {
    SpanTracker tracker(dim);
    for (const auto& v : kernels[k - 1]) tracker.insert(v);
    for (const auto& chain : chains) {
      std::size_t h = chain.vectors.size();
      if (h >= k) tracker.insert(chain.vectors[h - k]);
    }
    for (const auto& candidate : kernels[k]) {
      if (!tracker.insert(candidate)) continue;
      Chain chain;
      chain.vectors.push_back(candidate);
      for (std::size_t s = 1; s < k; ++s) chain.vectors.push_back(apply(chain.vectors.back()));
      chains.push_back(std::move(chain));
    }
  }
  std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
    return a.vectors.size() > b.vectors.size();
  });

  ScalarMatrix q(ctx, dim, Scalar::zero(ctx));
  std::vector<std::size_t> block_sizes;
  std::size_t col = 0;
  for (const auto& chain : chains) {
    block_sizes.push_back(chain.vectors.size());
    for (const auto& v : chain.vectors) {
      for (std::size_t i = 0; i < dim; ++i) q.set(i, col, v[i]);
      ++col;
    }
  }
  require(col == dim, errc::internal_inconsistency, "Jordan basis is incomplete");

  ScalarMatrix j(ctx, dim, Scalar::zero(ctx));
  std::size_t offset = 0;
  for (std::size_t size : block_sizes) {
    for (std::size_t i = 1; i < size; ++i)
      j.set(offset + i, offset + i - 1, Scalar::one(ctx));
    offset += size;
  }

  ScalarMatrix p = q.inverse();
  require(p * n * q == j, errc::internal_inconsistency, "Jordan conjugation check failed");
  return {p, j, block_sizes};
}

PolyMatrix det_normalize(const PolyMatrix& a) {
  Poly d = a.det();
  require(!d.is_zero() && d.is_constant(), errc::nonconstant_determinant,
          "determinant is " + d.str());
  Scalar inv = d.coeff(0).inverse();
  PolyMatrix r(a.ctx(), a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) r.set(i, j, a.at(i, j).scaled(inv));
  return r;
}

}  // namespace expmat
