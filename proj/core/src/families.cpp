#include "expmat/families.hpp"

namespace expmat {

const char* family_name(Family f) {
  switch (f) {
    case Family::A12: return "A12";
    case Family::A21: return "A21";
    case Family::J3: return "J3";
    case Family::Upper2: return "Upper2";
    case Family::General: return "General";
  }
  return "?";
}

namespace {

PolyMatrix unipotent3(const FieldCtxPtr& ctx) { return PolyMatrix::identity(ctx, 3); }

}  // namespace

ExpMatrix make_a12(const PPoly& alpha1, const PPoly& alpha2) {
  const FieldCtxPtr& ctx = alpha1.ctx();
  PolyMatrix m = unipotent3(ctx);
  m.set(0, 1, alpha1.to_poly());
  m.set(0, 2, alpha2.to_poly());
  return ExpMatrix::trusted(m);
}

ExpMatrix make_a21(const PPoly& alpha1, const PPoly& alpha2) {
  const FieldCtxPtr& ctx = alpha1.ctx();
  PolyMatrix m = unipotent3(ctx);
  m.set(0, 2, alpha2.to_poly());
  m.set(1, 2, alpha1.to_poly());
  return ExpMatrix::trusted(m);
}

ExpMatrix make_a11(const PPoly& alpha) {
  const FieldCtxPtr& ctx = alpha.ctx();
  PolyMatrix m = unipotent3(ctx);
  m.set(0, 2, alpha.to_poly());
  return ExpMatrix::trusted(m);
}

ExpMatrix make_j3(const PPoly& alpha1, const PPoly& alpha2) {
  const FieldCtxPtr& ctx = alpha1.ctx();
  require(ctx->characteristic() >= 3, errc::wrong_characteristic, "J3 needs p >= 3");
  require(!alpha1.is_zero(), errc::zero_input, "J3 needs alpha1 != 0");
  Scalar half = Scalar::of_int(ctx, 2).inverse();
  Poly a1 = alpha1.to_poly();
  PolyMatrix m = unipotent3(ctx);
  m.set(0, 1, a1);
  m.set(0, 2, (a1 * a1).scaled(half) + alpha2.to_poly());
  m.set(1, 2, a1);
  return ExpMatrix::trusted(m);
}

ExpMatrix make_upper2(const PPoly& alpha) {
  const FieldCtxPtr& ctx = alpha.ctx();
  PolyMatrix m = PolyMatrix::identity(ctx, 2);
  m.set(0, 1, alpha.to_poly());
  return ExpMatrix::trusted(m);
}

ExpMatrix char0_standard(const FieldCtxPtr& ctx, std::size_t n) {
  require(ctx->is_rationals(), errc::wrong_characteristic, "characteristic 0 expected");
  PolyMatrix m = PolyMatrix::identity(ctx, n);
  m.set(0, 1, Poly::variable(ctx));
  return ExpMatrix::trusted(m);
}

ExpMatrix char0_lower_standard(const FieldCtxPtr& ctx, std::size_t n) {
  require(ctx->is_rationals(), errc::wrong_characteristic, "characteristic 0 expected");
  PolyMatrix m = PolyMatrix::identity(ctx, n);
  m.set(1, 0, Poly::variable(ctx));
  return ExpMatrix::trusted(m);
}

namespace {

bool is_one_poly(const Poly& f) { return f.is_one(); }

std::optional<PPoly> as_ppoly(const Poly& f) {
  try {
    return PPoly::from_poly(f);
  } catch (const error&) {
    return std::nullopt;
  }
}

}  // namespace

FamilyForm recognize_family_shape(const ExpMatrix& a) {
  const FieldCtxPtr& ctx = a.ctx();
  if (a.n() == 2) {
    if (is_one_poly(a.at(0, 0)) && is_one_poly(a.at(1, 1)) && a.at(1, 0).is_zero()) {
      auto alpha = as_ppoly(a.at(0, 1));
      if (alpha) return {Family::Upper2, *alpha, std::nullopt};
    }
    return {Family::General, std::nullopt, std::nullopt};
  }
  if (a.n() != 3) return {Family::General, std::nullopt, std::nullopt};
  bool unipotent_diag = is_one_poly(a.at(0, 0)) && is_one_poly(a.at(1, 1)) &&
                        is_one_poly(a.at(2, 2)) && a.at(1, 0).is_zero() &&
                        a.at(2, 0).is_zero() && a.at(2, 1).is_zero();
  if (!unipotent_diag) return {Family::General, std::nullopt, std::nullopt};

  if (a.at(1, 2).is_zero()) {
    // Row shape: [1 a1 a2; 0 1 0; 0 0 1], the A11 overlap included.
    auto a1 = as_ppoly(a.at(0, 1));
    auto a2 = as_ppoly(a.at(0, 2));
    if (a1 && a2) return {Family::A12, *a1, *a2};
  }
  if (a.at(0, 1).is_zero()) {
    // Column shape: [1 0 a2; 0 1 a1; 0 0 1].
    auto a1 = as_ppoly(a.at(1, 2));
    auto a2 = as_ppoly(a.at(0, 2));
    if (a1 && a2) return {Family::A21, *a1, *a2};
  }
  if (ctx->characteristic() >= 3 && a.at(0, 1) == a.at(1, 2) && !a.at(0, 1).is_zero()) {
    // Jordan shape: entry (0,2) = a1^2/2 + a2.
    auto a1 = as_ppoly(a.at(0, 1));
    if (a1) {
      Scalar half = Scalar::of_int(ctx, 2).inverse();
      Poly a1p = a1->to_poly();
      auto a2 = as_ppoly(a.at(0, 2) - (a1p * a1p).scaled(half));
      if (a2) return {Family::J3, *a1, *a2};
    }
  }
  return {Family::General, std::nullopt, std::nullopt};
}

}  // namespace expmat
