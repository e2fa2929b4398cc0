#include "expmat/lnd.hpp"

#include "expmat/projmap.hpp"

namespace expmat {

LinDerivation::LinDerivation(FieldCtxPtr ctx, std::vector<MPoly> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
  require(ctx_->is_rationals(), errc::wrong_characteristic,
          "triangular derivations are a characteristic-0 device here");
  std::size_t n = images_.size();
  require(n >= 2, errc::bad_derivation_shape, "need at least two variables");
  for (const auto& f : images_) {
    require(same_field(ctx_, f.ctx()), errc::mixed_fields, "image over another field");
    require(f.nvars() == n, errc::bad_derivation_shape, "image arity mismatch");
  }
  require(images_[0].is_zero(), errc::bad_derivation_shape, "D(x0) must vanish");
  require(images_[1] == MPoly::variable(ctx_, n, 0), errc::bad_derivation_shape,
          "D(x1) must equal x0");
  for (std::size_t i = 2; i < n; ++i) {
    const MPoly& f = images_[i];
    if (f.is_zero()) continue;
    require(f.is_homogeneous() && f.total_degree() == 1, errc::bad_derivation_shape,
            "images must be homogeneous linear forms");
    for (const auto& [mono, c] : f.terms())
      for (std::size_t v = i; v < n; ++v)
        require(mono[v] == 0, errc::bad_derivation_shape,
                "D(xi) may only involve x0..x_{i-1}");
  }
}

LinDerivation LinDerivation::from_jordan(const ScalarMatrix& n) {
  const FieldCtxPtr& ctx = n.ctx();
  std::size_t dim = n.n();
  std::vector<MPoly> images;
  images.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    MPoly f = MPoly::zero(ctx, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (!n.at(j, i).is_zero()) f = f + MPoly::variable(ctx, dim, i).scaled(n.at(j, i));
    images.push_back(std::move(f));
  }
  return LinDerivation(ctx, std::move(images));
}

MPoly LinDerivation::apply(const MPoly& f) const {
  std::size_t n = nvars();
  require(f.nvars() == n, errc::dimension_mismatch, "derivation arity mismatch");
  MPoly out = MPoly::zero(ctx_, n);
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t v = 0; v < n; ++v) {
      if (mono[v] == 0 || images_[v].is_zero()) continue;
      Mono reduced = mono;
      reduced[v] -= 1;
      Scalar factor = c * Scalar::of_int(ctx_, mono[v]);
      out = out + images_[v] * MPoly::term(ctx_, std::move(reduced), factor);
    }
  }
  return out;
}

LocElem LinDerivation::apply(const LocElem& f) const {
  return LocElem(apply(f.numerator()), f.x0_power());
}

TMPoly LinDerivation::flow(const MPoly& f) const {
  TMPoly acc = TMPoly::zero(ctx_, nvars());
  MPoly current = f;
  Rational factorial = 1;
  std::size_t i = 0;
  while (!current.is_zero()) {
    Scalar c = Scalar::rational(ctx_, Rational(1) / factorial);
    for (const auto& [mono, coeff] : current.terms())
      acc.add_term(mono, Poly::monomial(coeff * c, i));
    current = apply(current);
    ++i;
    factorial *= static_cast<int>(i);
  }
  return acc;
}

LocElem LinDerivation::flow_at(const LocElem& f, const LocElem& t) const {
  LocElem acc = LocElem::zero(ctx_, nvars());
  LocElem current = f;
  LocElem tpow = LocElem(MPoly::constant(ctx_, nvars(), Scalar::one(ctx_)), 0);
  Rational factorial = 1;
  std::size_t i = 0;
  while (!current.is_zero()) {
    Scalar c = Scalar::rational(ctx_, Rational(1) / factorial);
    acc = acc + (current * tpow).scaled(c);
    current = apply(current);
    tpow = tpow * t;
    ++i;
    factorial *= static_cast<int>(i);
  }
  return acc;
}

namespace {

// Affine functional a0*1 + sum_l a[l] u_l on the chart coordinates
// u_l = x_l/x0, l = 1..n-1.
struct Affine {
  Scalar constant;
  std::vector<Scalar> linear;  // indexed by l-1 for u_l
};

}  // namespace

BirationalPair sigma_lemma31(const LinDerivation& d) {
  const FieldCtxPtr& ctx = d.ctx();
  std::size_t n = d.nvars();

  // Forward components as elements of k[x][1/x0].
  std::vector<LocElem> comps;
  comps.reserve(n);
  comps.push_back(LocElem(MPoly::constant(ctx, n, Scalar::one(ctx)), 0));
  comps.push_back(LocElem(MPoly::variable(ctx, n, 1), 1));
  LocElem minus_s = LocElem(-MPoly::variable(ctx, n, 1), 1);
  for (std::size_t i = 2; i < n; ++i)
    comps.push_back(d.flow_at(LocElem(MPoly::variable(ctx, n, i), 1), minus_s));

  auto homogenize = [&](const std::vector<LocElem>& parts) {
    std::uint32_t level = 0;
    for (const auto& c : parts) level = std::max(level, c.x0_power());
    std::vector<MPoly> out;
    out.reserve(parts.size());
    for (const auto& c : parts)
      out.push_back(c.numerator().multiplied_by_var_power(0, level - c.x0_power()));
    return out;
  };

  ProjMap sigma = ProjMap::from_scalar_components(homogenize(comps));

  // Inverse: u_i = sum_j pi(delta^j u_i) s^j / j! in slice coordinates, where
  // delta is the induced derivation on the chart, pi kills u_1 = s and fixes
  // the other slice coordinates.  delta is affine on the u_l, so iterate it
  // on affine functionals.
  std::vector<Affine> delta_of_u;  // delta_of_u[l] describes delta(u_l), l >= 1
  delta_of_u.reserve(n);
  for (std::size_t l = 0; l < n; ++l) {
    Affine a{Scalar::zero(ctx), std::vector<Scalar>(n - 1, Scalar::zero(ctx))};
    if (l >= 1) {
      // D(x_l) = c0 x0 + sum_{v>=1} cv x_v  =>  delta(u_l) = c0 + sum cv u_v.
      for (const auto& [mono, c] : d.images()[l].terms()) {
        std::size_t v = 0;
        while (mono[v] == 0) ++v;
        if (v == 0)
          a.constant = a.constant + c;
        else
          a.linear[v - 1] = a.linear[v - 1] + c;
      }
    }
    delta_of_u.push_back(std::move(a));
  }
  auto delta_apply = [&](const Affine& a) {
    Affine out{Scalar::zero(ctx), std::vector<Scalar>(n - 1, Scalar::zero(ctx))};
    for (std::size_t l = 1; l < n; ++l) {
      if (a.linear[l - 1].is_zero()) continue;
      const Affine& img = delta_of_u[l];
      out.constant = out.constant + a.linear[l - 1] * img.constant;
      for (std::size_t v = 0; v < n - 1; ++v)
        out.linear[v] = out.linear[v] + a.linear[l - 1] * img.linear[v];
    }
    return out;
  };
  auto affine_is_zero = [](const Affine& a) {
    if (!a.constant.is_zero()) return false;
    for (const auto& c : a.linear)
      if (!c.is_zero()) return false;
    return true;
  };

  std::vector<LocElem> inv_comps;
  inv_comps.reserve(n);
  inv_comps.push_back(LocElem(MPoly::constant(ctx, n, Scalar::one(ctx)), 0));
  inv_comps.push_back(LocElem(MPoly::variable(ctx, n, 1), 1));
  LocElem s = LocElem(MPoly::variable(ctx, n, 1), 1);
  for (std::size_t i = 2; i < n; ++i) {
    Affine current{Scalar::zero(ctx), std::vector<Scalar>(n - 1, Scalar::zero(ctx))};
    current.linear[i - 1] = Scalar::one(ctx);
    LocElem acc = LocElem::zero(ctx, n);
    LocElem spow = LocElem(MPoly::constant(ctx, n, Scalar::one(ctx)), 0);
    Rational factorial = 1;
    std::size_t j = 0;
    while (!affine_is_zero(current)) {
      // pi: u_1 -> 0, u_l -> y_l/y0 for l >= 2, constants unchanged.
      MPoly num = MPoly::constant(ctx, n, current.constant).multiplied_by_var_power(0, 1);
      for (std::size_t l = 2; l < n; ++l)
        if (!current.linear[l - 1].is_zero())
          num = num + MPoly::variable(ctx, n, l).scaled(current.linear[l - 1]);
      LocElem projected(num, 1);
      Scalar c = Scalar::rational(ctx, Rational(1) / factorial);
      acc = acc + (projected * spow).scaled(c);
      current = delta_apply(current);
      spow = spow * s;
      ++j;
      factorial *= static_cast<int>(j);
    }
    inv_comps.push_back(acc);
  }

  ProjMap sigma_inv = ProjMap::from_scalar_components(homogenize(inv_comps));
  return {sigma, sigma_inv};
}

}  // namespace expmat
