#include "expmat/oracle.hpp"

#include <cstdlib>

namespace expmat {

std::uint64_t search_candidate_ceiling() {
  constexpr std::uint64_t kDefault = 100'000'000;
  const char* env = std::getenv("EXPMAT_MAX_CANDIDATES");
  if (!env) return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || v == 0) return kDefault;
  return std::min<std::uint64_t>(v, kDefault);
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    require(v <= limit / base, errc::too_large, "candidate count overflows the ceiling");
    v *= base;
  }
  return v;
}

// Odometer over coefficient tuples: index vector -> scalars, last index
// varies fastest, giving lexicographic emission order.
class TupleOdometer {
 public:
  TupleOdometer(FieldCtxPtr ctx, std::size_t len)
      : ctx_(std::move(ctx)), q_(ctx_->order()), digits_(len, 0), done_(len == 0) {}

  bool done() const { return done_; }

  std::vector<Scalar> scalars() const {
    std::vector<Scalar> out;
    out.reserve(digits_.size());
    for (auto d : digits_) out.push_back(Scalar::from_index(ctx_, d));
    return out;
  }

  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < q_) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

 private:
  FieldCtxPtr ctx_;
  std::uint64_t q_;
  std::vector<std::uint64_t> digits_;
  bool done_;
};

PPoly ppoly_from_tuple(const FieldCtxPtr& ctx, const std::vector<Scalar>& coeffs,
                       std::size_t offset, std::size_t len) {
  std::vector<Scalar> c(coeffs.begin() + offset, coeffs.begin() + offset + len);
  return PPoly::from_coeffs(ctx, std::move(c));
}

ScalarMatrix matrix_from_tuple(const FieldCtxPtr& ctx, std::size_t n,
                               const std::vector<Scalar>& entries) {
  ScalarMatrix m(ctx, n, Scalar::zero(ctx));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, entries[i * n + j]);
  return m;
}

PolyMatrix left_mul(const ScalarMatrix& p, const PolyMatrix& a) {
  std::size_t n = a.n();
  PolyMatrix r(a.ctx(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (p.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        r.set(i, j, r.at(i, j) + a.at(k, j).scaled(p.at(i, k)));
    }
  return r;
}

PolyMatrix right_mul(const PolyMatrix& a, const ScalarMatrix& p) {
  std::size_t n = a.n();
  PolyMatrix r(a.ctx(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        r.set(i, j, r.at(i, j) + a.at(i, k).scaled(p.at(k, j)));
    }
  return r;
}

void check_enum_spec(const EnumSpec& spec) {
  require(spec.field && spec.field->is_finite(), errc::bad_input, "enumeration needs a finite field");
  require(spec.field->order() <= 9, errc::too_large, "enumeration fields are bounded by q = 9");
  require(spec.n == 2 || spec.n == 3, errc::bad_input, "enumeration covers n = 2 and n = 3");
  require(spec.degree_bound <= 3, errc::too_large, "degree exponent is bounded by 3");
}

}  // namespace

void enumerate_family(const EnumSpec& spec,
                      const std::function<void(const ExpMatrix&, const FamilyForm&)>& sink) {
  check_enum_spec(spec);
  const FieldCtxPtr& ctx = spec.field;
  std::uint64_t q = ctx->order();
  std::size_t len = spec.degree_bound + 1;
  std::uint64_t ceiling = std::min(kEnumerationCeiling, search_candidate_ceiling());

  std::vector<Family> families;
  if (spec.n == 2) {
    families = {Family::Upper2};
  } else if (spec.family) {
    families = {*spec.family};
  } else {
    families = {Family::A12, Family::A21};
    if (ctx->characteristic() >= 3) families.push_back(Family::J3);
  }

  std::uint64_t total = 0;
  for (Family fam : families) {
    std::size_t params = (fam == Family::Upper2) ? 1 : 2;
    std::uint64_t count = checked_pow(q, params * len, ceiling);
    require(total + count >= total && total + count <= ceiling, errc::too_large,
            "enumeration exceeds the candidate ceiling");
    total += count;
  }

  for (Family fam : families) {
    require(spec.n == 3 || fam == Family::Upper2, errc::bad_input, "family does not match n");
    std::size_t params = (fam == Family::Upper2) ? 1 : 2;
    for (TupleOdometer odo(ctx, params * len); !odo.done(); odo.advance()) {
      auto coeffs = odo.scalars();
      if (fam == Family::Upper2) {
        PPoly alpha = ppoly_from_tuple(ctx, coeffs, 0, len);
        sink(make_upper2(alpha), {Family::Upper2, alpha, std::nullopt});
        continue;
      }
      PPoly a1 = ppoly_from_tuple(ctx, coeffs, 0, len);
      PPoly a2 = ppoly_from_tuple(ctx, coeffs, len, len);
      switch (fam) {
        case Family::A12:
          sink(make_a12(a1, a2), {Family::A12, a1, a2});
          break;
        case Family::A21:
          sink(make_a21(a1, a2), {Family::A21, a1, a2});
          break;
        case Family::J3:
          if (a1.is_zero()) continue;  // the Jordan family needs alpha1 != 0
          sink(make_j3(a1, a2), {Family::J3, a1, a2});
          break;
        default:
          raise(errc::bad_input, "unsupported family filter");
      }
    }
  }
}

std::vector<ExpMatrix> enumerate_family_vec(const EnumSpec& spec) {
  std::vector<ExpMatrix> out;
  enumerate_family(spec, [&](const ExpMatrix& m, const FamilyForm&) { out.push_back(m); });
  return out;
}

std::optional<ScalarMatrix> brute_linear_equiv(const ExpMatrix& a, const ExpMatrix& b) {
  require(same_field(a.ctx(), b.ctx()), errc::mixed_fields, "search across fields");
  require(a.n() == b.n(), errc::dimension_mismatch, "matrix sizes differ");
  const FieldCtxPtr& ctx = a.ctx();
  require(ctx->is_finite(), errc::not_finite_field, "exhaustive search needs a finite field");
  std::size_t n = a.n();
  checked_pow(ctx->order(), n * n, search_candidate_ceiling());
  for (TupleOdometer odo(ctx, n * n); !odo.done(); odo.advance()) {
    ScalarMatrix p = matrix_from_tuple(ctx, n, odo.scalars());
    if (!p.invertible()) continue;
    if (left_mul(p, a.matrix()) == right_mul(b.matrix(), p)) return p;
  }
  return std::nullopt;
}

std::optional<ScalarMatrix> brute_gl2_tuple_equiv(const std::pair<PPoly, PPoly>& alpha,
                                                  const std::pair<PPoly, PPoly>& beta) {
  const FieldCtxPtr& ctx = alpha.first.ctx();
  require(ctx->is_finite(), errc::not_finite_field, "exhaustive search needs a finite field");
  checked_pow(ctx->order(), 4, search_candidate_ceiling());
  for (TupleOdometer odo(ctx, 4); !odo.done(); odo.advance()) {
    ScalarMatrix q = matrix_from_tuple(ctx, 2, odo.scalars());
    if (!q.invertible()) continue;
    PPoly lhs1 = beta.first.scaled(q.at(0, 0)) + beta.second.scaled(q.at(1, 0));
    PPoly lhs2 = beta.first.scaled(q.at(0, 1)) + beta.second.scaled(q.at(1, 1));
    if (lhs1 == alpha.first && lhs2 == alpha.second) return q;
  }
  return std::nullopt;
}

FamilyConjugation brute_conjugate_to_family(const ExpMatrix& a) {
  const FieldCtxPtr& ctx = a.ctx();
  require(ctx->is_finite(), errc::not_finite_field, "exhaustive search needs a finite field");
  require(a.n() == 3, errc::dimension_mismatch, "family search is for n = 3");
  FamilyForm direct = recognize_family_shape(a);
  if (direct.family != Family::General) return {ScalarMatrix::identity(ctx, 3), direct};
  checked_pow(ctx->order(), 9, search_candidate_ceiling());
  for (TupleOdometer odo(ctx, 9); !odo.done(); odo.advance()) {
    ScalarMatrix p = matrix_from_tuple(ctx, 3, odo.scalars());
    if (!p.invertible()) continue;
    ExpMatrix conj = a.conjugated(p);
    FamilyForm form = recognize_family_shape(conj);
    if (form.family != Family::General) return {p, form};
  }
  raise(errc::not_found, "no GL(3) conjugate lands in a family shape");
}

}  // namespace expmat
