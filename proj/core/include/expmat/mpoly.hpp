#ifndef EXPMAT_MPOLY_HPP
#define EXPMAT_MPOLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "expmat/poly.hpp"

namespace expmat {

/// Exponent vector of a monomial; size equals the variable count.
using Mono = std::vector<std::uint32_t>;

inline std::uint32_t mono_total_degree(const Mono& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

/// Graded-lex term order, highest term first, so map iteration and printing
/// are canonical.
struct GrlexDesc {
  bool operator()(const Mono& a, const Mono& b) const {
    std::uint32_t da = mono_total_degree(a), db = mono_total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors
  }
};

template <typename C>
struct CoeffOps;

template <>
struct CoeffOps<Scalar> {
  static Scalar zero(const FieldCtxPtr& ctx) { return Scalar::zero(ctx); }
  static Scalar embed(const Scalar& s) { return s; }
  static std::string str(const Scalar& s) { return s.str(); }
  static bool is_one(const Scalar& s) { return s.is_one(); }
};

template <>
struct CoeffOps<Poly> {
  static Poly zero(const FieldCtxPtr& ctx) { return Poly::zero(ctx); }
  static Poly embed(const Scalar& s) { return Poly::constant(s); }
  static std::string str(const Poly& f) {
    if (f.is_constant()) return f.str();
    return "(" + f.str() + ")";
  }
  static bool is_one(const Poly& f) { return f.is_one(); }
};

/// Sparse multivariate polynomial in x0..x_{nvars-1} with coefficients in C,
/// where C is the ground field k (Scalar) or k[T] (Poly).  No zero terms are
/// stored and the term map is grlex-ordered, so representation is canonical.
template <typename C>
class MPolyT {
 public:
  MPolyT(FieldCtxPtr ctx, std::size_t nvars) : ctx_(std::move(ctx)), nvars_(nvars) {}

  static MPolyT zero(const FieldCtxPtr& ctx, std::size_t nvars) { return MPolyT(ctx, nvars); }

  static MPolyT constant(const FieldCtxPtr& ctx, std::size_t nvars, const C& c) {
    MPolyT f(ctx, nvars);
    f.add_term(Mono(nvars, 0), c);
    return f;
  }

  static MPolyT variable(const FieldCtxPtr& ctx, std::size_t nvars, std::size_t i) {
    require(i < nvars, errc::bad_input, "variable index out of range");
    MPolyT f(ctx, nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    f.add_term(m, CoeffOps<C>::embed(Scalar::one(ctx)));
    return f;
  }

  static MPolyT term(const FieldCtxPtr& ctx, Mono mono, const C& c) {
    MPolyT f(ctx, mono.size());
    f.add_term(std::move(mono), c);
    return f;
  }

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, C, GrlexDesc>& terms() const { return terms_; }

  void add_term(Mono mono, const C& c) {
    require(mono.size() == nvars_, errc::dimension_mismatch, "monomial arity");
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
      terms_.emplace(std::move(mono), c);
      return;
    }
    C sum = it->second + c;
    if (sum.is_zero())
      terms_.erase(it);
    else
      it->second = sum;
  }

  MPolyT operator-() const {
    MPolyT f(ctx_, nvars_);
    for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
    return f;
  }

  MPolyT operator+(const MPolyT& o) const {
    check_compatible(o);
    MPolyT f = *this;
    for (const auto& [m, c] : o.terms_) f.add_term(m, c);
    return f;
  }

  MPolyT operator-(const MPolyT& o) const { return *this + (-o); }

  MPolyT operator*(const MPolyT& o) const {
    check_compatible(o);
    MPolyT f(ctx_, nvars_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        Mono m(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
        f.add_term(std::move(m), ca * cb);
      }
    return f;
  }

  MPolyT scaled(const C& c) const {
    MPolyT f(ctx_, nvars_);
    if (c.is_zero()) return f;
    for (const auto& [m, a] : terms_) f.add_term(m, a * c);
    return f;
  }

  MPolyT scaled_scalar(const Scalar& s) const { return scaled(CoeffOps<C>::embed(s)); }

  bool operator==(const MPolyT& o) const {
    return same_field(ctx_, o.ctx_) && nvars_ == o.nvars_ && terms_ == o.terms_;
  }
  bool operator!=(const MPolyT& o) const { return !(*this == o); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(mono_total_degree(m)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint32_t d = mono_total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
      if (mono_total_degree(m) != d) return false;
    return true;
  }

  MPolyT multiplied_by_var_power(std::size_t var, std::uint32_t k) const {
    MPolyT f(ctx_, nvars_);
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      mm[var] += k;
      f.terms_.emplace(std::move(mm), c);
    }
    return f;
  }

  bool divisible_by_var(std::size_t var) const {
    if (terms_.empty()) return false;
    for (const auto& [m, c] : terms_)
      if (m[var] == 0) return false;
    return true;
  }

  MPolyT divided_by_var_power(std::size_t var, std::uint32_t k) const {
    MPolyT f(ctx_, nvars_);
    for (const auto& [m, c] : terms_) {
      require(m[var] >= k, errc::bad_input, "inexact monomial division");
      Mono mm = m;
      mm[var] -= k;
      f.terms_.emplace(std::move(mm), c);
    }
    return f;
  }

  /// Exponent-wise minimum over all terms; all-zero for the zero polynomial.
  Mono content_monomial() const {
    Mono content(nvars_, 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first) {
        content = m;
        first = false;
      } else {
        for (std::size_t i = 0; i < nvars_; ++i) content[i] = std::min(content[i], m[i]);
      }
    }
    return content;
  }

  /// this(values[0], ..., values[nvars-1]).
  MPolyT substitute(const std::vector<MPolyT>& values) const {
    require(values.size() == nvars_, errc::dimension_mismatch, "substitution arity");
    std::size_t out_vars = values.empty() ? nvars_ : values[0].nvars();
    MPolyT acc(ctx_, out_vars);
    // Cache powers of each value.
    std::vector<std::vector<MPolyT>> powers(nvars_);
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const MPolyT& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(ctx_, out_vars, CoeffOps<C>::embed(Scalar::one(ctx_))));
      while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
      return cache[e];
    };
    for (const auto& [m, c] : terms_) {
      MPolyT prod = constant(ctx_, out_vars, c);
      for (std::size_t i = 0; i < nvars_; ++i)
        if (m[i] > 0) prod = prod * power_of(i, m[i]);
      acc = acc + prod;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      bool unit = CoeffOps<C>::is_one(c) && mono_total_degree(m) > 0;
      if (!unit) os << CoeffOps<C>::str(c);
      bool printed = !unit;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (printed) os << "*";
        printed = true;
        os << "x" << i;
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

 private:
  void check_compatible(const MPolyT& o) const {
    require(same_field(ctx_, o.ctx_), errc::mixed_fields, "multivariate op across fields");
    require(nvars_ == o.nvars_, errc::dimension_mismatch, "variable count mismatch");
  }

  FieldCtxPtr ctx_;
  std::size_t nvars_;
  std::map<Mono, C, GrlexDesc> terms_;
};

using MPoly = MPolyT<Scalar>;
using TMPoly = MPolyT<Poly>;

/// Embed k[x] into k[T][x].
TMPoly to_tpoly(const MPoly& f);

template <typename C>
MPolyT<C> mpow(const MPolyT<C>& base, std::uint32_t e) {
  MPolyT<C> acc = MPolyT<C>::constant(base.ctx(), base.nvars(),
                                      CoeffOps<C>::embed(Scalar::one(base.ctx())));
  for (std::uint32_t i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

/// Element a / x0^pow of k[x0,...,x_{n-1}][1/x0], kept with pow minimal.
class LocElem {
 public:
  explicit LocElem(MPoly numerator, std::uint32_t pow = 0);
  static LocElem zero(const FieldCtxPtr& ctx, std::size_t nvars) {
    return LocElem(MPoly::zero(ctx, nvars), 0);
  }

  const MPoly& numerator() const { return num_; }
  std::uint32_t x0_power() const { return pow_; }
  bool is_zero() const { return num_.is_zero(); }

  LocElem operator-() const { return LocElem(-num_, pow_); }
  LocElem operator+(const LocElem& o) const;
  LocElem operator-(const LocElem& o) const { return *this + (-o); }
  LocElem operator*(const LocElem& o) const;
  LocElem scaled(const Scalar& s) const { return LocElem(num_.scaled(s), pow_); }
  bool operator==(const LocElem& o) const { return pow_ == o.pow_ && num_ == o.num_; }

  std::string str() const;

 private:
  void reduce();
  MPoly num_;
  std::uint32_t pow_;
};

}  // namespace expmat

#endif
