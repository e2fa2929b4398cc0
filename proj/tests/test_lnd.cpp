#include <doctest.h>

#include <random>

#include "expmat/families.hpp"
#include "expmat/lnd.hpp"
#include "expmat/projmap.hpp"

using namespace expmat;

namespace {

// D = x0 d/dx1 + x1 d/dx2 + ... + x_{k-2} d/dx_{k-1} on the first k vars.
LinDerivation shift_derivation(const FieldCtxPtr& ctx, std::size_t n, std::size_t k) {
  std::vector<MPoly> images;
  images.reserve(n);
  images.push_back(MPoly::zero(ctx, n));
  for (std::size_t i = 1; i < n; ++i) {
    if (i < k)
      images.push_back(MPoly::variable(ctx, n, i - 1));
    else
      images.push_back(MPoly::zero(ctx, n));
  }
  return LinDerivation(ctx, std::move(images));
}

MPoly random_mpoly(const FieldCtxPtr& ctx, std::size_t n, std::mt19937_64& rng) {
  MPoly f = MPoly::zero(ctx, n);
  for (int t = 0; t < 4; ++t) {
    Mono m(n, 0);
    for (std::size_t v = 0; v < n; ++v) m[v] = rng() % 3;
    f = f + MPoly::term(ctx, std::move(m),
                        Scalar::of_int(ctx, static_cast<long long>(rng() % 5) - 2));
  }
  return f;
}

// phi_{D,x_var}(f) inside an extended ring where x_var is a fresh variable
// killed by D; lets the group law be stated with two formal times.
MPoly flow_in_var(const LinDerivation& d, const MPoly& f, std::size_t var) {
  const FieldCtxPtr& ctx = d.ctx();
  MPoly acc = MPoly::zero(ctx, f.nvars());
  MPoly current = f;
  MPoly tpow = MPoly::constant(ctx, f.nvars(), Scalar::one(ctx));
  MPoly tvar = MPoly::variable(ctx, f.nvars(), var);
  Rational factorial = 1;
  std::size_t i = 0;
  while (!current.is_zero()) {
    acc = acc + (current * tpow).scaled(Scalar::rational(ctx, Rational(1) / factorial));
    current = d.apply(current);
    tpow = tpow * tvar;
    ++i;
    factorial *= static_cast<int>(i);
  }
  return acc;
}

}  // namespace

TEST_CASE("derive spec examples") {
  auto q = FieldCtx::rationals();
  LinDerivation d = shift_derivation(q, 2, 2);  // D = x0 d/dx1
  MPoly x0 = MPoly::variable(q, 2, 0);
  MPoly x1 = MPoly::variable(q, 2, 1);
  SUBCASE("D(x0) = 0") { CHECK(d.apply(x0).is_zero()); }
  SUBCASE("Leibniz: D(x1^2) = 2 x0 x1") {
    CHECK(d.apply(x1 * x1) == (x0 * x1).scaled(Scalar::of_int(q, 2)));
  }
  SUBCASE("denominators pass through: D(x1/x0) = 1") {
    LocElem f(x1, 1);
    LocElem out = d.apply(f);
    CHECK(out.x0_power() == 0);
    CHECK(out.numerator() == MPoly::constant(q, 2, Scalar::one(q)));
  }
}

TEST_CASE("flow spec examples") {
  auto q = FieldCtx::rationals();
  LinDerivation d = shift_derivation(q, 2, 2);
  SUBCASE("phi(x0) = x0") {
    TMPoly out = d.flow(MPoly::variable(q, 2, 0));
    CHECK(out == to_tpoly(MPoly::variable(q, 2, 0)));
  }
  SUBCASE("phi(x1) = x1 + T x0") {
    TMPoly out = d.flow(MPoly::variable(q, 2, 1));
    TMPoly expected = to_tpoly(MPoly::variable(q, 2, 1));
    Mono m(2, 0);
    m[0] = 1;
    expected.add_term(m, Poly::variable(q));
    CHECK(out == expected);
  }
}

TEST_CASE("flow is a ring homomorphism, randomized") {
  auto q = FieldCtx::rationals();
  std::mt19937_64 rng(31337);
  for (std::size_t n : {3u, 4u}) {
    LinDerivation d = shift_derivation(q, n + 1, n);  // extra formal variable
    for (int iter = 0; iter < 50; ++iter) {
      MPoly f = random_mpoly(q, n + 1, rng);
      MPoly g = random_mpoly(q, n + 1, rng);
      MPoly lhs = flow_in_var(d, f * g, n);
      MPoly rhs = flow_in_var(d, f, n) * flow_in_var(d, g, n);
      CHECK(lhs == rhs);
      CHECK(flow_in_var(d, f + g, n) == flow_in_var(d, f, n) + flow_in_var(d, g, n));
    }
  }
}

TEST_CASE("one-parameter group law phi_{T+T'} = phi_T o phi_T', symbolically") {
  auto q = FieldCtx::rationals();
  for (std::size_t n = 2; n <= 5; ++n) {
    // Two extra formal time variables at indices n and n+1.
    LinDerivation d = shift_derivation(q, n + 2, n);
    MPoly u = MPoly::variable(q, n + 2, n);
    MPoly v = MPoly::variable(q, n + 2, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      MPoly xi = MPoly::variable(q, n + 2, i);
      // phi_{D, u+v}: sum_m D^m(x_i) (u+v)^m / m!.
      MPoly lhs = MPoly::zero(q, n + 2);
      {
        MPoly current = xi;
        MPoly upow = MPoly::constant(q, n + 2, Scalar::one(q));
        Rational factorial = 1;
        std::size_t m = 0;
        while (!current.is_zero()) {
          lhs = lhs + (current * upow).scaled(Scalar::rational(q, Rational(1) / factorial));
          current = d.apply(current);
          upow = upow * (u + v);
          ++m;
          factorial *= static_cast<int>(m);
        }
      }
      MPoly rhs = flow_in_var(d, flow_in_var(d, xi, n + 1), n);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("sigma_lemma31 spec examples") {
  auto q = FieldCtx::rationals();
  SUBCASE("n = 2: sigma is the identity map") {
    LinDerivation d = shift_derivation(q, 2, 2);
    BirationalPair pair = sigma_lemma31(d);
    CHECK(pair.sigma == ProjMap::identity(q, 2));
    CHECK(pair.sigma_inv == ProjMap::identity(q, 2));
  }
  SUBCASE("n = 3 full shift: third component homogenizes x0 x2 - x1^2/2") {
    LinDerivation d = shift_derivation(q, 3, 3);
    BirationalPair pair = sigma_lemma31(d);
    MPoly x0 = MPoly::variable(q, 3, 0);
    MPoly x1 = MPoly::variable(q, 3, 1);
    MPoly x2 = MPoly::variable(q, 3, 2);
    Scalar half = Scalar::rational(q, Rational(1, 2));
    CHECK(pair.sigma.components()[0] == to_tpoly(x0 * x0));
    CHECK(pair.sigma.components()[1] == to_tpoly(x0 * x1));
    CHECK(pair.sigma.components()[2] == to_tpoly(x0 * x2 - (x1 * x1).scaled(half)));
  }
  SUBCASE("equivariance against the standard action") {
    for (std::size_t n : {2u, 3u, 4u}) {
      LinDerivation d = shift_derivation(q, n, n);
      BirationalPair pair = sigma_lemma31(d);
      ScalarMatrix jordan = ScalarMatrix::zero(q, n);
      for (std::size_t i = 1; i < n; ++i) jordan.set(i, i - 1, Scalar::one(q));
      ExpMatrix a_star = exp_nilpotent(jordan);
      EquivarianceReport rep =
          verify_equivariance(pair.sigma, a_star, char0_lower_standard(q, n));
      CHECK(rep.ok);
    }
  }
  SUBCASE("sigma composed with its inverse is the identity") {
    for (std::size_t n : {3u, 4u, 5u}) {
      LinDerivation d = shift_derivation(q, n, n);
      BirationalPair pair = sigma_lemma31(d);
      CHECK(inverse_pair_ok(pair.sigma, pair.sigma_inv));
    }
  }
  SUBCASE("bad shapes rejected") {
    std::vector<MPoly> images;
    images.push_back(MPoly::variable(q, 2, 1));  // D(x0) != 0
    images.push_back(MPoly::zero(q, 2));
    CHECK_THROWS_AS(LinDerivation(q, std::move(images)), error);
  }
}

TEST_CASE("mixed block shapes also satisfy the square") {
  auto q = FieldCtx::rationals();
  // Blocks (2,2): D = x0 d/dx1 + x2 d/dx3 fails the triangular-form rule
  // D(x_i) in k[x0..x_{i-1}] only if ordered badly; the Jordan pipeline always
  // emits decreasing blocks, here (2,2) with D(x3) = x2.
  std::vector<MPoly> images;
  images.push_back(MPoly::zero(q, 4));
  images.push_back(MPoly::variable(q, 4, 0));
  images.push_back(MPoly::zero(q, 4));
  images.push_back(MPoly::variable(q, 4, 2));
  LinDerivation d(q, std::move(images));
  BirationalPair pair = sigma_lemma31(d);
  ScalarMatrix jordan = ScalarMatrix::zero(q, 4);
  jordan.set(1, 0, Scalar::one(q));
  jordan.set(3, 2, Scalar::one(q));
  ExpMatrix a_star = exp_nilpotent(jordan);
  CHECK(verify_equivariance(pair.sigma, a_star, char0_lower_standard(q, 4)).ok);
  CHECK(inverse_pair_ok(pair.sigma, pair.sigma_inv));
}
