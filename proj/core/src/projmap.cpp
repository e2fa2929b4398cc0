#include "expmat/projmap.hpp"

#include <sstream>

namespace expmat {

ProjMap ProjMap::from_components(std::vector<TMPoly> comps) {
  require(!comps.empty(), errc::bad_input, "projective map needs components");
  FieldCtxPtr ctx = comps.front().ctx();
  std::size_t n = comps.size();
  int degree = -1;
  for (const auto& c : comps) {
    require(same_field(ctx, c.ctx()), errc::mixed_fields, "components across fields");
    require(c.nvars() == n, errc::dimension_mismatch, "component arity must equal n");
    if (c.is_zero()) continue;
    require(c.is_homogeneous(), errc::bad_input, "components must be homogeneous");
    int d = c.total_degree();
    if (degree == -1) degree = d;
    require(d == degree, errc::bad_input, "components must share one degree");
  }
  require(degree >= 0, errc::bad_input, "all components are zero");
  return ProjMap(ctx, std::move(comps), static_cast<std::uint32_t>(degree));
}

ProjMap ProjMap::from_scalar_components(const std::vector<MPoly>& comps) {
  std::vector<TMPoly> lifted;
  lifted.reserve(comps.size());
  for (const auto& c : comps) lifted.push_back(to_tpoly(c));
  return from_components(std::move(lifted));
}

ProjMap ProjMap::identity(const FieldCtxPtr& ctx, std::size_t n) {
  std::vector<TMPoly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(to_tpoly(MPoly::variable(ctx, n, i)));
  return from_components(std::move(comps));
}

ProjMap ProjMap::linear(const ScalarMatrix& m) {
  require(m.invertible(), errc::singular_matrix, "linear projective map must be invertible");
  const FieldCtxPtr& ctx = m.ctx();
  std::size_t n = m.n();
  std::vector<TMPoly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly c = MPoly::zero(ctx, n);
    for (std::size_t j = 0; j < n; ++j)
      c = c + MPoly::variable(ctx, n, j).scaled(m.at(i, j));
    comps.push_back(to_tpoly(c));
  }
  return from_components(std::move(comps));
}

std::string ProjMap::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) os << " : ";
    os << comps_[i].str();
  }
  os << ")";
  return os.str();
}

ProjMap action_of(const ExpMatrix& a) {
  const FieldCtxPtr& ctx = a.ctx();
  std::size_t n = a.n();
  std::vector<TMPoly> comps;
  comps.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    TMPoly c = TMPoly::zero(ctx, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.at(j, i).is_zero()) continue;
      Mono m(n, 0);
      m[i] = 1;
      c.add_term(std::move(m), a.at(j, i));
    }
    comps.push_back(std::move(c));
  }
  return ProjMap::from_components(std::move(comps));
}

std::vector<TMPoly> compose_components(const ProjMap& outer, const ProjMap& inner) {
  require(outer.n() == inner.n(), errc::dimension_mismatch, "composition arity mismatch");
  std::vector<TMPoly> values = inner.components();
  std::vector<TMPoly> result;
  result.reserve(outer.n());
  for (const auto& c : outer.components()) result.push_back(c.substitute(values));
  // Strip the common monomial content across all components.
  std::size_t n = outer.n();
  Mono content(n, 0);
  bool first = true;
  for (const auto& c : result) {
    if (c.is_zero()) continue;
    Mono m = c.content_monomial();
    if (first) {
      content = m;
      first = false;
    } else {
      for (std::size_t i = 0; i < n; ++i) content[i] = std::min(content[i], m[i]);
    }
  }
  for (auto& c : result)
    for (std::size_t var = 0; var < n; ++var)
      if (content[var] > 0 && !c.is_zero()) c = c.divided_by_var_power(var, content[var]);
  return result;
}

CrossCheck projectively_equal(const std::vector<TMPoly>& f, const std::vector<TMPoly>& g) {
  CrossCheck out;
  require(f.size() == g.size(), errc::dimension_mismatch, "tuple sizes differ");
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      TMPoly cross = f[i] * g[j] - f[j] * g[i];
      if (!cross.is_zero()) {
        out.equal = false;
        out.i = static_cast<int>(i);
        out.j = static_cast<int>(j);
        out.residual = cross.str();
        return out;
      }
    }
  out.equal = true;
  return out;
}

EquivarianceReport verify_equivariance(const ProjMap& sigma, const ExpMatrix& a,
                                       const ExpMatrix& b) {
  require(sigma.n() == a.n() && a.n() == b.n(), errc::dimension_mismatch,
          "equivariance check arity mismatch");
  require(same_field(sigma.ctx(), a.ctx()) && same_field(a.ctx(), b.ctx()), errc::mixed_fields,
          "equivariance check across fields");
  ProjMap mu_a = action_of(a);
  ProjMap mu_b = action_of(b);
  // sigma o mu_A and mu_B o (id x sigma) as component tuples over k[T][x].
  std::vector<TMPoly> lhs;
  lhs.reserve(sigma.n());
  for (const auto& c : sigma.components()) lhs.push_back(c.substitute(mu_a.components()));
  std::vector<TMPoly> rhs;
  rhs.reserve(sigma.n());
  for (const auto& c : mu_b.components()) rhs.push_back(c.substitute(sigma.components()));
  CrossCheck cc = projectively_equal(lhs, rhs);
  EquivarianceReport rep;
  rep.ok = cc.equal;
  rep.i = cc.i;
  rep.j = cc.j;
  rep.residual = cc.residual;
  return rep;
}

bool inverse_pair_ok(const ProjMap& sigma, const ProjMap& sigma_inv) {
  ProjMap id = ProjMap::identity(sigma.ctx(), sigma.n());
  CrossCheck fwd = projectively_equal(compose_components(sigma, sigma_inv), id.components());
  if (!fwd.equal) return false;
  CrossCheck bwd = projectively_equal(compose_components(sigma_inv, sigma), id.components());
  return bwd.equal;
}

ProjMap sigma_scaling(const Scalar& lambda, std::size_t slot, std::size_t n) {
  require(!lambda.is_zero(), errc::zero_scalar, "scaling by zero");
  require(slot < n, errc::dimension_mismatch, "slot out of range");
  const FieldCtxPtr& ctx = lambda.ctx();
  std::vector<MPoly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly v = MPoly::variable(ctx, n, i);
    comps.push_back(i == slot ? v.scaled(lambda) : v);
  }
  return ProjMap::from_scalar_components(comps);
}

namespace {

// lambda(x_src/x_den) homogenized to degree p^m, as a polynomial in x.
MPoly homogenized_ppoly(const PPoly& lambda, std::size_t n, std::size_t src, std::size_t den) {
  const FieldCtxPtr& ctx = lambda.ctx();
  std::uint64_t p = ctx->characteristic();
  std::size_t m = static_cast<std::size_t>(lambda.degree_index());
  std::uint64_t top = 1;
  for (std::size_t i = 0; i < m; ++i) top *= p;
  MPoly acc = MPoly::zero(ctx, n);
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < lambda.coeffs().size(); ++i) {
    if (!lambda.coeffs()[i].is_zero()) {
      Mono mono(n, 0);
      mono[src] = static_cast<std::uint32_t>(power);
      mono[den] = static_cast<std::uint32_t>(top - power);
      acc.add_term(std::move(mono), lambda.coeffs()[i]);
    }
    power *= p;
  }
  return acc;
}

ProjMap reduce_chart_map(const PPoly& lambda, ReduceCase which, bool inverse) {
  const FieldCtxPtr& ctx = lambda.ctx();
  constexpr std::size_t n = 3;
  if (lambda.is_zero()) return ProjMap::identity(ctx, n);
  // Cases i and ii act on the x0 slot through x1; case iii mirrors on x1
  // through x0.  The denominator chart is x2 throughout.
  std::size_t target = which == ReduceCase::III ? 1 : 0;
  std::size_t src = which == ReduceCase::III ? 0 : 1;
  std::uint64_t p = ctx->characteristic();
  std::uint64_t top = 1;
  for (int i = 0; i < lambda.degree_index(); ++i) top *= p;
  MPoly shift = homogenized_ppoly(lambda, n, src, 2);
  if (!inverse) shift = -shift;
  std::vector<MPoly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly c = MPoly::variable(ctx, n, i);
    Mono mono(n, 0);
    mono[2] = static_cast<std::uint32_t>(top - 1);
    c = c * MPoly::term(ctx, std::move(mono), Scalar::one(ctx));
    if (i == target) c = c + shift;
    comps.push_back(std::move(c));
  }
  return ProjMap::from_scalar_components(comps);
}

}  // namespace

SigmaPair sigma_reduce(const PPoly& lambda, ReduceCase which) {
  return {reduce_chart_map(lambda, which, false), reduce_chart_map(lambda, which, true)};
}

ProjMap sigma_gl2(const ScalarMatrix& q) {
  require(q.n() == 2, errc::dimension_mismatch, "expected a 2x2 block");
  require(q.invertible(), errc::singular_matrix, "GL(2) block is singular");
  const FieldCtxPtr& ctx = q.ctx();
  ScalarMatrix m = ScalarMatrix::identity(ctx, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.set(i + 1, j + 1, q.at(i, j));
  return ProjMap::linear(m);
}

SigmaPair sigma_lemma56(const FieldCtxPtr& ctx) {
  require(ctx->is_finite() && ctx->characteristic() >= 3, errc::wrong_characteristic,
          "the quadratic witness needs p >= 3");
  constexpr std::size_t n = 3;
  Scalar half = Scalar::of_int(ctx, 2).inverse();
  MPoly x0 = MPoly::variable(ctx, n, 0);
  MPoly x1 = MPoly::variable(ctx, n, 1);
  MPoly x2 = MPoly::variable(ctx, n, 2);
  MPoly x1sq_half = (x1 * x1).scaled(half);
  std::vector<MPoly> fwd = {x0 * x2 - x1sq_half, x1 * x2, x2 * x2};
  std::vector<MPoly> bwd = {x0 * x2 + x1sq_half, x1 * x2, x2 * x2};
  return {ProjMap::from_scalar_components(fwd), ProjMap::from_scalar_components(bwd)};
}

// ---------------------------------------------------------------------------
// Witness steps

WitnessCheck verify_step(const WitnessStep& step) {
  WitnessCheck out;
  if (step.from.n() != step.to.n() || !same_field(step.from.ctx(), step.to.ctx())) {
    out.reason = "endpoints live in different spaces";
    return out;
  }
  if (const auto* conj = std::get_if<ConjugationMove>(&step.move)) {
    if (!conj->p.invertible()) {
      out.reason = "conjugator is singular";
      return out;
    }
    if (step.from.matrix().conjugated(conj->p) != step.to.matrix()) {
      out.reason = "P from P^-1 differs from the target matrix";
      return out;
    }
    out.ok = true;
    return out;
  }
  const auto& bir = std::get<BirationalMove>(step.move);
  EquivarianceReport eq = verify_equivariance(bir.sigma, step.from, step.to);
  if (!eq.ok) {
    out.reason = "equivariance square fails at cross product (" + std::to_string(eq.i) + "," +
                 std::to_string(eq.j) + "): " + eq.residual;
    return out;
  }
  if (!inverse_pair_ok(bir.sigma, bir.sigma_inv)) {
    out.reason = "sigma and its inverse do not compose to the identity";
    return out;
  }
  out.ok = true;
  return out;
}

WitnessCheck verify_witness(const Witness& chain) {
  WitnessCheck out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0 && chain[i - 1].to != chain[i].from) {
      out.failed_step = static_cast<int>(i);
      out.reason = "step does not start where the previous one ended";
      return out;
    }
    WitnessCheck step = verify_step(chain[i]);
    if (!step.ok) {
      out.failed_step = static_cast<int>(i);
      out.reason = step.reason;
      return out;
    }
  }
  out.ok = true;
  return out;
}

WitnessStep reversed_step(const WitnessStep& step) {
  if (const auto* conj = std::get_if<ConjugationMove>(&step.move))
    return {ConjugationMove{conj->p.inverse()}, step.to, step.from};
  const auto& bir = std::get<BirationalMove>(step.move);
  return {BirationalMove{bir.sigma_inv, bir.sigma}, step.to, step.from};
}

Witness reversed_witness(const Witness& chain) {
  Witness out;
  out.reserve(chain.size());
  for (std::size_t i = chain.size(); i-- > 0;) out.push_back(reversed_step(chain[i]));
  return out;
}

}  // namespace expmat
