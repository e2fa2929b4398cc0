#include <doctest.h>

#include <random>

#include "expmat/classify.hpp"
#include "expmat/lnd.hpp"
#include "expmat/oracle.hpp"

using namespace expmat;

namespace {

PPoly ppoly_of(const FieldCtxPtr& ctx, std::initializer_list<long long> coeffs) {
  std::vector<Scalar> c;
  for (long long v : coeffs) c.push_back(Scalar::of_int(ctx, v));
  return PPoly::from_coeffs(ctx, std::move(c));
}

ExpMatrix identity_exp(const FieldCtxPtr& ctx, std::size_t n) {
  return ExpMatrix::trusted(PolyMatrix::identity(ctx, n));
}

}  // namespace

TEST_CASE("BirClass equality and payload validation") {
  auto f2 = FieldCtx::finite(2);
  CHECK(BirClass::identity() == BirClass::identity());
  CHECK(BirClass::identity() != BirClass::char0_standard());
  BirClass l1 = BirClass::line(PPoly::identity(f2));
  BirClass l2 = BirClass::line(ppoly_of(f2, {1, 1}));
  CHECK(l1 != l2);
  CHECK(l1 == BirClass::line(PPoly::identity(f2)));
  // Line payload must be monic, Plane payload echelon.
  CHECK_THROWS_AS(BirClass::line(PPoly::zero(f2)), error);
  CHECK_THROWS_AS(BirClass::plane(ppoly_of(f2, {1, 1}), ppoly_of(f2, {0, 1})), error);
  CHECK(BirClass::plane(PPoly::identity(f2), ppoly_of(f2, {0, 1})).str() ==
        "Plane(T, T^2)");
}

TEST_CASE("classify_char0 spec examples") {
  auto q = FieldCtx::rationals();
  SUBCASE("identity of any size") {
    ClassifyResult r = classify_char0(identity_exp(q, 4));
    CHECK(r.cls == BirClass::identity());
    CHECK(r.witness.empty());
    CHECK(r.verified);
  }
  SUBCASE("the canonical matrix classifies to Char0Standard") {
    ClassifyResult r = classify_char0(char0_standard(q, 3));
    CHECK(r.cls == BirClass::char0_standard());
    CHECK(r.canonical == char0_standard(q, 3));
    CHECK(r.verified);
  }
  SUBCASE("Exp of the full 3x3 shift") {
    ScalarMatrix n = ScalarMatrix::zero(q, 3);
    n.set(0, 1, Scalar::one(q));
    n.set(1, 2, Scalar::one(q));
    ClassifyResult r = classify_char0(exp_nilpotent(n));
    CHECK(r.cls == BirClass::char0_standard());
    CHECK(verify_witness(r.witness).ok);
    CHECK(r.witness.front().from == exp_nilpotent(n));
    CHECK(r.witness.back().to == char0_standard(q, 3));
  }
  SUBCASE("wrong characteristic rejected") {
    auto f2 = FieldCtx::finite(2);
    CHECK_THROWS_AS(classify_char0(identity_exp(f2, 2)), error);
  }
}

TEST_CASE("classify_2x2 spec examples") {
  SUBCASE("identity") {
    auto f2 = FieldCtx::finite(2);
    ClassifyResult r = classify_2x2(identity_exp(f2, 2));
    CHECK(r.cls == BirClass::identity());
  }
  SUBCASE("[[1,3T],[0,1]] over GF(5) normalizes to Line(T)") {
    auto f5 = FieldCtx::finite(5);
    ClassifyResult r = classify_2x2(make_upper2(ppoly_of(f5, {3})));
    CHECK(r.cls == BirClass::line(PPoly::identity(f5)));
    CHECK(r.canonical == make_upper2(PPoly::identity(f5)));
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("GF(4) scaling collapses to one class") {
    auto f4 = FieldCtx::finite(2, 2);
    PPoly base = ppoly_of(f4, {1, 1});  // T + T^2
    for (std::uint64_t ci = 1; ci < 4; ++ci) {
      Scalar c = Scalar::from_index(f4, ci);
      ClassifyResult r = classify_2x2(make_upper2(base.scaled(c)));
      CHECK(r.cls == BirClass::line(base));
    }
  }
  SUBCASE("lower-triangular input is triangularized first") {
    auto f3 = FieldCtx::finite(3);
    PolyMatrix m = PolyMatrix::identity(f3, 2);
    m.set(1, 0, Poly::variable(f3));
    ClassifyResult r = classify_2x2(ExpMatrix::trusted(m));
    CHECK(r.cls == BirClass::line(PPoly::identity(f3)));
    CHECK(r.witness.front().is_conjugation());
    CHECK(verify_witness(r.witness).ok);
  }
}

TEST_CASE("classify_3x3 spec examples") {
  auto f2 = FieldCtx::finite(2);
  auto f3 = FieldCtx::finite(3);
  SUBCASE("identity") {
    CHECK(classify_3x3(identity_exp(f2, 3)).cls == BirClass::identity());
  }
  SUBCASE("A21(T, T^2) over GF(2) reduces to Line(T)") {
    ClassifyResult r =
        classify_3x3(make_a21(PPoly::identity(f2), PPoly::monomial(Scalar::one(f2), 1)));
    CHECK(r.cls == BirClass::line(PPoly::identity(f2)));
    CHECK(r.canonical == make_a11(PPoly::identity(f2)));
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("A12(T, T^2) over GF(2) is Plane(T, T^2)") {
    ClassifyResult r =
        classify_3x3(make_a12(PPoly::identity(f2), PPoly::monomial(Scalar::one(f2), 1)));
    CHECK(r.cls == BirClass::plane(PPoly::identity(f2), PPoly::monomial(Scalar::one(f2), 1)));
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("J3(T, T^3) over GF(3) matches its A21 partner's class") {
    ClassifyResult rj = classify_3x3(make_j3(PPoly::identity(f3), ppoly_of(f3, {0, 1})));
    ClassifyResult ra = classify_3x3(make_a21(PPoly::identity(f3), ppoly_of(f3, {0, 1})));
    CHECK(rj.cls == ra.cls);
    CHECK(rj.cls.kind() == BirClass::Kind::Line);
    CHECK(verify_witness(rj.witness).ok);
  }
  SUBCASE("dependent A12 collapses to Line") {
    // (alpha1, alpha2) = (T, 2T) over GF(3): span is one-dimensional.
    ClassifyResult r = classify_3x3(make_a12(PPoly::identity(f3), ppoly_of(f3, {2})));
    CHECK(r.cls == BirClass::line(PPoly::identity(f3)));
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("A21 with alpha1 = 0 is already A11") {
    ClassifyResult r = classify_3x3(make_a21(PPoly::zero(f2), ppoly_of(f2, {1, 1})));
    CHECK(r.cls == BirClass::line(ppoly_of(f2, {1, 1})));
  }
  SUBCASE("A21 with alpha2 = 0 swaps into A11") {
    ClassifyResult r = classify_3x3(make_a21(ppoly_of(f2, {0, 1}), PPoly::zero(f2)));
    CHECK(r.cls == BirClass::line(ppoly_of(f2, {0, 1})));
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("a conjugated family matrix is normalized by the oracle fallback") {
    // Transpose-like scramble: conjugate A21(T,T^2) by a random GL(3,F_2).
    ExpMatrix base = make_a21(PPoly::identity(f2), PPoly::monomial(Scalar::one(f2), 1));
    ScalarMatrix p = ScalarMatrix::zero(f2, 3);
    p.set(0, 2, Scalar::one(f2));
    p.set(1, 0, Scalar::one(f2));
    p.set(1, 1, Scalar::one(f2));
    p.set(2, 1, Scalar::one(f2));
    REQUIRE(p.invertible());
    ExpMatrix scrambled = base.conjugated(p);
    CHECK(recognize_family_shape(scrambled).family == Family::General);
    ClassifyResult r = classify_3x3(scrambled);
    CHECK(r.cls == classify_3x3(base).cls);
    CHECK(verify_witness(r.witness).ok);
  }
}

TEST_CASE("classification over extension fields") {
  SUBCASE("GF(4): A21 reduction with twisted coefficients") {
    auto f4 = FieldCtx::finite(2, 2);
    Scalar c = Scalar::from_coeffs(f4, {0, 1});
    ExpMatrix a = make_a21(PPoly::monomial(c, 0), PPoly::monomial(Scalar::one(f4), 2));
    ClassifyResult r = classify_3x3(a);
    CHECK(r.cls.kind() == BirClass::Kind::Line);
    CHECK(r.cls.line_poly().leading().is_one());
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("GF(4): dependent A12 pair scaled by a generator") {
    auto f4 = FieldCtx::finite(2, 2);
    Scalar c = Scalar::from_coeffs(f4, {0, 1});
    PPoly gamma = PPoly::from_coeffs(f4, {Scalar::one(f4), c});
    ClassifyResult r = classify_3x3(make_a12(gamma.scaled(c), gamma.scaled(c * c)));
    CHECK(r.cls == BirClass::line(gamma.scaled(c).monic()));
    CHECK(verify_witness(r.witness).ok);
  }
  SUBCASE("GF(9): lower-triangular 2x2 still triangularizes") {
    auto f9 = FieldCtx::finite(3, 2);
    Scalar x = Scalar::from_coeffs(f9, {0, 1});
    PolyMatrix m = PolyMatrix::identity(f9, 2);
    m.set(1, 0, Poly::monomial(x, 3));
    ClassifyResult r = classify_2x2(ExpMatrix::trusted(m));
    CHECK(r.cls.kind() == BirClass::Kind::Line);
    CHECK(verify_witness(r.witness).ok);
  }
}

TEST_CASE("classify dispatch") {
  auto q = FieldCtx::rationals();
  auto f2 = FieldCtx::finite(2);
  CHECK(classify(identity_exp(q, 3)).cls == BirClass::identity());
  CHECK(classify(identity_exp(f2, 2)).cls == BirClass::identity());
  CHECK(classify(identity_exp(f2, 3)).cls == BirClass::identity());
  CHECK_THROWS_AS(classify(identity_exp(f2, 4)), error);
}

TEST_CASE("equiv_bir spec examples") {
  auto f2 = FieldCtx::finite(2);
  SUBCASE("reflexive with witness") {
    ExpMatrix a = make_a21(PPoly::identity(f2), PPoly::monomial(Scalar::one(f2), 1));
    EquivResult r = equiv_bir(a, a);
    CHECK(r.equivalent);
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(*r.witness).ok);
    CHECK(r.witness->front().from == a);
    CHECK(r.witness->back().to == a);
  }
  SUBCASE("Lemma 5.10 separation: A11(T^2) vs A12(T, T^2)") {
    ExpMatrix a = make_a11(PPoly::monomial(Scalar::one(f2), 1));
    ExpMatrix b = make_a12(PPoly::identity(f2), PPoly::monomial(Scalar::one(f2), 1));
    EquivResult r = equiv_bir(a, b);
    CHECK(!r.equivalent);
    CHECK(!r.witness.has_value());
  }
  SUBCASE("A21(T,T^4) ~ A21(T+T^2,T^4): both reduce to Line(T)") {
    ExpMatrix a = make_a21(PPoly::identity(f2), ppoly_of(f2, {0, 0, 1}));
    ExpMatrix b = make_a21(ppoly_of(f2, {1, 1}), ppoly_of(f2, {0, 0, 1}));
    EquivResult r = equiv_bir(a, b);
    CHECK(r.equivalent);
    CHECK(r.class_a == BirClass::line(PPoly::identity(f2)));
    REQUIRE(r.witness.has_value());
    CHECK(verify_witness(*r.witness).ok);
  }
}

TEST_CASE("identity isolation: only I classifies as Identity over enumerated families") {
  auto f2 = FieldCtx::finite(2);
  EnumSpec spec;
  spec.field = f2;
  spec.n = 3;
  spec.degree_bound = 1;
  for (const auto& m : enumerate_family_vec(spec)) {
    ClassifyResult r = classify_3x3(m, {.verify_witness = false});
    CHECK((r.cls == BirClass::identity()) == m.is_identity());
  }
}

TEST_CASE("scaling invariance of classify_2x2, exhaustive small fields") {
  for (auto ctx : {FieldCtx::finite(2), FieldCtx::finite(3)}) {
    std::uint64_t q = ctx->order();
    // all alpha with exponent <= 2
    for (std::uint64_t code = 1; code < q * q * q; ++code) {
      std::uint64_t rest = code;
      std::vector<Scalar> coeffs;
      for (int i = 0; i < 3; ++i) {
        coeffs.push_back(Scalar::from_index(ctx, rest % q));
        rest /= q;
      }
      PPoly alpha = PPoly::from_coeffs(ctx, coeffs);
      if (alpha.is_zero()) continue;
      BirClass base = classify_2x2(make_upper2(alpha), {.verify_witness = false}).cls;
      for (std::uint64_t li = 1; li < q; ++li) {
        Scalar lambda = Scalar::from_index(ctx, li);
        BirClass scaled =
            classify_2x2(make_upper2(alpha.scaled(lambda)), {.verify_witness = false}).cls;
        CHECK(base == scaled);
      }
    }
  }
}

TEST_CASE("GL(2) invariance of classify_3x3 on independent A12 pairs, exhaustive GF(2)") {
  auto f2 = FieldCtx::finite(2);
  std::vector<PPoly> polys;
  for (std::uint64_t code = 0; code < 8; ++code) {
    std::vector<Scalar> coeffs;
    std::uint64_t rest = code;
    for (int i = 0; i < 3; ++i) {
      coeffs.push_back(Scalar::of_int(f2, static_cast<long long>(rest & 1)));
      rest >>= 1;
    }
    polys.push_back(PPoly::from_coeffs(f2, coeffs));
  }
  std::vector<std::array<int, 4>> gl2;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (a * d - b * c != 0) gl2.push_back({a, b, c, d});
  for (const auto& b1 : polys)
    for (const auto& b2 : polys) {
      if (linear_independent({b1, b2}).dimension != 2) continue;
      BirClass base = classify_3x3(make_a12(b1, b2), {.verify_witness = false}).cls;
      for (const auto& qm : gl2) {
        PPoly a1 = b1.scaled(Scalar::of_int(f2, qm[0])) + b2.scaled(Scalar::of_int(f2, qm[2]));
        PPoly a2 = b1.scaled(Scalar::of_int(f2, qm[1])) + b2.scaled(Scalar::of_int(f2, qm[3]));
        CHECK(classify_3x3(make_a12(a1, a2), {.verify_witness = false}).cls == base);
      }
    }
}
