#include <doctest.h>

#include <array>
#include <cstdlib>

#include "expmat/classify.hpp"
#include "expmat/oracle.hpp"

using namespace expmat;

namespace {

PPoly ppoly_of(const FieldCtxPtr& ctx, std::initializer_list<long long> coeffs) {
  std::vector<Scalar> c;
  for (long long v : coeffs) c.push_back(Scalar::of_int(ctx, v));
  return PPoly::from_coeffs(ctx, std::move(c));
}

}  // namespace

TEST_CASE("enumerate_family counts from the spec") {
  SUBCASE("GF(2), n = 2, i <= 1: 4 matrices") {
    EnumSpec spec{FieldCtx::finite(2), 2, std::nullopt, 1};
    CHECK(enumerate_family_vec(spec).size() == 4);
  }
  SUBCASE("GF(2), n = 3, family A12, i <= 1: 16 matrices") {
    EnumSpec spec{FieldCtx::finite(2), 3, Family::A12, 1};
    CHECK(enumerate_family_vec(spec).size() == 16);
  }
  SUBCASE("GF(3), n = 2, i <= 1: 9 matrices") {
    EnumSpec spec{FieldCtx::finite(3), 2, std::nullopt, 1};
    CHECK(enumerate_family_vec(spec).size() == 9);
  }
  SUBCASE("J3 excludes alpha1 = 0") {
    EnumSpec spec{FieldCtx::finite(3), 3, Family::J3, 1};
    CHECK(enumerate_family_vec(spec).size() == 9 * 8);
  }
}

TEST_CASE("enumeration is deterministic and validated") {
  EnumSpec spec{FieldCtx::finite(2), 3, std::nullopt, 1};
  auto first = enumerate_family_vec(spec);
  auto second = enumerate_family_vec(spec);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
  for (const auto& m : first) {
    auto [exp, rep] = ExpMatrix::verify(m.matrix());
    CHECK(exp.has_value());
  }
}

TEST_CASE("enumeration bounds") {
  EnumSpec spec{FieldCtx::finite(2, 4), 3, std::nullopt, 1};
  CHECK_THROWS_AS(enumerate_family_vec(spec), error);  // q = 16 > 9
  EnumSpec deep{FieldCtx::finite(2), 3, std::nullopt, 7};
  CHECK_THROWS_AS(enumerate_family_vec(deep), error);  // exponent bound
}

TEST_CASE("brute_linear_equiv spec examples") {
  SUBCASE("identity pair") {
    auto f2 = FieldCtx::finite(2);
    ExpMatrix i2 = ExpMatrix::trusted(PolyMatrix::identity(f2, 2));
    auto p = brute_linear_equiv(i2, i2);
    REQUIRE(p.has_value());
    // The lexicographically first invertible matrix conjugates I to I.
    CHECK(i2.conjugated(*p) == i2);
  }
  SUBCASE("[[1,T],[0,1]] vs [[1,2T],[0,1]] over GF(3)") {
    auto f3 = FieldCtx::finite(3);
    ExpMatrix a = make_upper2(PPoly::identity(f3));
    ExpMatrix b = make_upper2(ppoly_of(f3, {2}));
    auto p = brute_linear_equiv(a, b);
    REQUIRE(p.has_value());
    // Any returned witness must satisfy P A = B P with P invertible.
    CHECK(a.conjugated(*p) == b);
  }
  SUBCASE("A11(T) vs A12(T,T^2) over GF(2): no conjugator (Lemma 5.10 consistent)") {
    auto f2 = FieldCtx::finite(2);
    ExpMatrix a = make_a11(PPoly::identity(f2));
    ExpMatrix b = make_a12(PPoly::identity(f2), ppoly_of(f2, {0, 1}));
    CHECK(!brute_linear_equiv(a, b).has_value());
  }
}

TEST_CASE("brute_gl2_tuple_equiv spec examples") {
  auto f2 = FieldCtx::finite(2);
  PPoly t = PPoly::identity(f2);
  PPoly t2 = ppoly_of(f2, {0, 1});
  PPoly t4 = ppoly_of(f2, {0, 0, 1});
  SUBCASE("equal tuples find the identity") {
    auto q = brute_gl2_tuple_equiv({t, t2}, {t, t2});
    REQUIRE(q.has_value());
    CHECK(q->is_identity());
  }
  SUBCASE("(T, T^2) vs (T+T^2, T^2): Q = [[1,0],[1,1]]") {
    auto q = brute_gl2_tuple_equiv({t, t2}, {t + t2, t2});
    REQUIRE(q.has_value());
    // (T+T^2, T^2) Q = (T, T^2)
    PPoly c1 = (t + t2).scaled(q->at(0, 0)) + t2.scaled(q->at(1, 0));
    PPoly c2 = (t + t2).scaled(q->at(0, 1)) + t2.scaled(q->at(1, 1));
    CHECK(c1 == t);
    CHECK(c2 == t2);
  }
  SUBCASE("different spans have no witness") {
    CHECK(!brute_gl2_tuple_equiv({t, t2}, {t, t4}).has_value());
  }
}

TEST_CASE("brute_gl2_tuple_equiv agrees with span_canonical, exhaustive GF(2) i <= 1") {
  auto f2 = FieldCtx::finite(2);
  std::vector<PPoly> polys;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1)
      polys.push_back(ppoly_of(f2, {c0, c1}));
  for (const auto& a1 : polys)
    for (const auto& a2 : polys)
      for (const auto& b1 : polys)
        for (const auto& b2 : polys) {
          if (linear_independent({a1, a2}).dimension != 2) continue;
          if (linear_independent({b1, b2}).dimension != 2) continue;
          bool same_span = span_canonical({a1, a2}, 2) == span_canonical({b1, b2}, 2);
          CHECK(same_span == brute_gl2_tuple_equiv({a1, a2}, {b1, b2}).has_value());
        }
}

TEST_CASE("brute_conjugate_to_family spec examples") {
  auto f2 = FieldCtx::finite(2);
  SUBCASE("already in A21 shape: P = I") {
    ExpMatrix a = make_a21(PPoly::identity(f2), ppoly_of(f2, {0, 1}));
    FamilyConjugation r = brute_conjugate_to_family(a);
    CHECK(r.p.is_identity());
    CHECK(r.form.family == Family::A21);
  }
  SUBCASE("transposed A12 lands in A21 via a basis reversal") {
    ExpMatrix a = make_a12(PPoly::identity(f2), ppoly_of(f2, {0, 1}));
    PolyMatrix transposed = a.matrix().transpose();
    auto [exp, rep] = ExpMatrix::verify(transposed);
    REQUIRE(exp.has_value());
    FamilyConjugation r = brute_conjugate_to_family(*exp);
    CHECK(r.form.family != Family::General);
    CHECK(recognize_family_shape(exp->conjugated(r.p)).family == r.form.family);
  }
}

TEST_CASE("agreement: conjugate matrices share a BirClass (Lemma 2.1 direction)") {
  auto f2 = FieldCtx::finite(2);
  EnumSpec spec{f2, 2, std::nullopt, 1};
  auto matrices = enumerate_family_vec(spec);
  for (const auto& a : matrices)
    for (const auto& b : matrices) {
      auto p = brute_linear_equiv(a, b);
      if (p.has_value()) {
        EquivResult r = equiv_bir(a, b, {.verify_witness = false});
        CHECK(r.equivalent);
      }
    }
}

TEST_CASE("candidate ceiling honors the environment override") {
  // The override can only lower the bound, never raise it past 1e8.
  setenv("EXPMAT_MAX_CANDIDATES", "10", 1);
  CHECK(search_candidate_ceiling() == 10);
  setenv("EXPMAT_MAX_CANDIDATES", "999999999999", 1);
  CHECK(search_candidate_ceiling() == 100'000'000);
  unsetenv("EXPMAT_MAX_CANDIDATES");
  CHECK(search_candidate_ceiling() == 100'000'000);

  setenv("EXPMAT_MAX_CANDIDATES", "10", 1);
  auto f3 = FieldCtx::finite(3);
  ExpMatrix a = make_upper2(PPoly::identity(f3));
  CHECK_THROWS_AS(brute_linear_equiv(a, a), error);  // 3^4 = 81 > 10
  unsetenv("EXPMAT_MAX_CANDIDATES");
}
