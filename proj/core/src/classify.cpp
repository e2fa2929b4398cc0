#include "expmat/classify.hpp"

#include <sstream>

#include "expmat/lnd.hpp"
#include "expmat/oracle.hpp"

namespace expmat {

BirClass BirClass::line(PPoly gamma) {
  require(!gamma.is_zero(), errc::zero_input, "Line payload must be nonzero");
  require(gamma.leading().is_one(), errc::internal_inconsistency, "Line payload must be monic");
  BirClass c(Kind::Line);
  c.line_ = std::move(gamma);
  return c;
}

BirClass BirClass::plane(PPoly gamma1, PPoly gamma2) {
  auto rank = linear_independent({gamma1, gamma2});
  require(rank.independent, errc::internal_inconsistency, "Plane payload must be independent");
  auto echelon = span_canonical({gamma1, gamma2}, 2);
  require(echelon[0] == gamma1 && echelon[1] == gamma2, errc::internal_inconsistency,
          "Plane payload must be in echelon form");
  BirClass c(Kind::Plane);
  c.plane_ = std::make_pair(std::move(gamma1), std::move(gamma2));
  return c;
}

const PPoly& BirClass::line_poly() const {
  require(kind_ == Kind::Line, errc::bad_input, "not a Line class");
  return *line_;
}

const std::pair<PPoly, PPoly>& BirClass::plane_pair() const {
  require(kind_ == Kind::Plane, errc::bad_input, "not a Plane class");
  return *plane_;
}

bool BirClass::operator==(const BirClass& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Identity:
    case Kind::Char0Standard:
      return true;
    case Kind::Line:
      return *line_ == *o.line_;
    case Kind::Plane:
      return plane_->first == o.plane_->first && plane_->second == o.plane_->second;
  }
  return false;
}

std::string BirClass::str() const {
  switch (kind_) {
    case Kind::Identity: return "Identity";
    case Kind::Char0Standard: return "Char0Standard";
    case Kind::Line: return "Line(" + line_->str() + ")";
    case Kind::Plane: return "Plane(" + plane_->first.str() + ", " + plane_->second.str() + ")";
  }
  return "?";
}

RecognizedFamily recognize_family(const ExpMatrix& a) {
  FamilyForm direct = recognize_family_shape(a);
  if (direct.family != Family::General)
    return {direct, ScalarMatrix::identity(a.ctx(), a.n())};
  if (a.n() == 3 && a.ctx()->is_finite()) {
    try {
      FamilyConjugation found = brute_conjugate_to_family(a);
      return {found.form, found.p};
    } catch (const error& e) {
      if (e.code() != errc::too_large && e.code() != errc::not_found) throw;
    }
  }
  return {FamilyForm{Family::General, std::nullopt, std::nullopt}, std::nullopt};
}

namespace {

// Chain-building state: the current matrix plus the accumulated steps.
struct ChainBuilder {
  ExpMatrix current;
  Witness steps;

  void conjugate(const ScalarMatrix& p) {
    ExpMatrix next = current.conjugated(p);
    steps.push_back({ConjugationMove{p}, current, next});
    current = next;
  }

  void birational(const ProjMap& sigma, const ProjMap& sigma_inv, const ExpMatrix& target) {
    steps.push_back({BirationalMove{sigma, sigma_inv}, current, target});
    current = target;
  }
};

ScalarMatrix swap01(const FieldCtxPtr& ctx, std::size_t n) {
  ScalarMatrix s = ScalarMatrix::zero(ctx, n);
  s.set(0, 1, Scalar::one(ctx));
  s.set(1, 0, Scalar::one(ctx));
  for (std::size_t i = 2; i < n; ++i) s.set(i, i, Scalar::one(ctx));
  return s;
}

ClassifyResult finish(BirClass cls, ExpMatrix canonical, ChainBuilder chain,
                      const ClassifyOptions& opts) {
  require(chain.current == canonical, errc::internal_inconsistency,
          "chain does not land on the canonical matrix");
  ClassifyResult out{std::move(cls), std::move(canonical), std::move(chain.steps), false};
  if (opts.verify_witness) {
    WitnessCheck check = verify_witness(out.witness);
    require(check.ok, errc::internal_inconsistency,
            "emitted witness failed re-verification: " + check.reason);
    out.verified = true;
  }
  return out;
}

// Scale an A11 form to its monic representative (Lemma 5.8 scaling witness)
// and finish with the Line class.  Expects chain.current == make_a11(gamma0).
ClassifyResult finish_line_3x3(ChainBuilder chain, const PPoly& gamma0,
                               const ClassifyOptions& opts) {
  PPoly gamma = gamma0.monic();
  if (gamma != gamma0) {
    Scalar lambda = gamma0.leading();
    chain.birational(sigma_scaling(lambda, 2, 3), sigma_scaling(lambda.inverse(), 2, 3),
                     make_a11(gamma));
  }
  return finish(BirClass::line(gamma), make_a11(gamma), std::move(chain), opts);
}

// Conjugator diag(1,Q) moving A12(alpha) to A12(alpha Q^-1).
ScalarMatrix embed_gl2(const ScalarMatrix& q) {
  ScalarMatrix p = ScalarMatrix::identity(q.ctx(), 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) p.set(i + 1, j + 1, q.at(i, j));
  return p;
}

ClassifyResult classify_a21_like(ChainBuilder chain, PPoly a1, PPoly a2,
                                 const ClassifyOptions& opts) {
  const FieldCtxPtr& ctx = a1.ctx();
  if (a1.is_zero() && a2.is_zero())
    return finish(BirClass::identity(), ExpMatrix::trusted(PolyMatrix::identity(ctx, 3)),
                  std::move(chain), opts);
  if (!a1.is_zero() && !a2.is_zero()) {
    ReduceResult loop = reduce_loop(a1, a2);
    for (const auto& entry : loop.steps) {
      SigmaPair pair = sigma_reduce(entry.step.lambda, entry.step.which);
      chain.birational(pair.sigma, pair.sigma_inv,
                       make_a21(entry.step.beta1, entry.step.beta2));
    }
    if (loop.slot == Slot::First) {
      a1 = loop.gamma;
      a2 = PPoly::zero(ctx);
    } else {
      a1 = PPoly::zero(ctx);
      a2 = loop.gamma;
    }
  }
  if (!a1.is_zero()) {
    // [1 0 0; 0 1 g; 0 0 1] -> A11(g) by swapping the first two coordinates.
    chain.conjugate(swap01(ctx, 3));
    return finish_line_3x3(std::move(chain), a1, opts);
  }
  return finish_line_3x3(std::move(chain), a2, opts);
}

}  // namespace

ClassifyResult classify_char0(const ExpMatrix& a, const ClassifyOptions& opts) {
  const FieldCtxPtr& ctx = a.ctx();
  require(ctx->is_rationals(), errc::wrong_characteristic, "classify_char0 needs char 0");
  require(a.n() >= 2, errc::bad_input, "classification starts at n = 2");
  ChainBuilder chain{a, {}};
  if (a.is_identity())
    return finish(BirClass::identity(), ExpMatrix::trusted(PolyMatrix::identity(ctx, a.n())),
                  std::move(chain), opts);

  // Log -> Jordan -> derivation -> the Lemma 3.1 square -> swap to the
  // upper-triangular representative.
  ScalarMatrix n = log_exponential(a);
  JordanResult jordan = nilpotent_jordan(n);
  chain.conjugate(jordan.p);
  LinDerivation d = LinDerivation::from_jordan(jordan.j);
  BirationalPair sigma = sigma_lemma31(d);
  chain.birational(sigma.sigma, sigma.sigma_inv, char0_lower_standard(ctx, a.n()));
  chain.conjugate(swap01(ctx, a.n()));
  return finish(BirClass::char0_standard(), char0_standard(ctx, a.n()), std::move(chain), opts);
}

ClassifyResult classify_2x2(const ExpMatrix& a, const ClassifyOptions& opts) {
  const FieldCtxPtr& ctx = a.ctx();
  require(ctx->is_finite(), errc::wrong_characteristic, "classify_2x2 needs char p > 0");
  require(a.n() == 2, errc::dimension_mismatch, "classify_2x2 needs n = 2");
  ChainBuilder chain{a, {}};
  if (a.is_identity())
    return finish(BirClass::identity(), ExpMatrix::trusted(PolyMatrix::identity(ctx, 2)),
                  std::move(chain), opts);

  FamilyForm form = recognize_family_shape(a);
  if (form.family != Family::Upper2) {
    // Triangularization by exhaustive conjugation; replaces the cited
    // external normal-form lemma at desk scale.
    ExpMatrix upper = a;
    std::optional<ScalarMatrix> conj;
    const std::uint64_t q = ctx->order();
    std::uint64_t total = q * q * q * q;
    require(total <= search_candidate_ceiling(), errc::too_large,
            "triangularization search too large");
    for (std::uint64_t code = 0; code < total && !conj; ++code) {
      std::uint64_t rest = code;
      ScalarMatrix p = ScalarMatrix::zero(ctx, 2);
      for (std::size_t pos = 4; pos-- > 0;) {
        p.set(pos / 2, pos % 2, Scalar::from_index(ctx, rest % q));
        rest /= q;
      }
      if (!p.invertible()) continue;
      ExpMatrix candidate = a.conjugated(p);
      if (recognize_family_shape(candidate).family == Family::Upper2) {
        conj = p;
        upper = candidate;
      }
    }
    require(conj.has_value(), errc::triangularization_failed,
            "no upper-unipotent conjugate found");
    chain.conjugate(*conj);
    form = recognize_family_shape(upper);
  }

  PPoly alpha = *form.alpha1;
  require(!alpha.is_zero(), errc::internal_inconsistency,
          "non-identity matrix triangularized to the identity");
  PPoly gamma = alpha.monic();
  if (gamma != alpha) {
    Scalar lambda = alpha.leading();
    chain.birational(sigma_scaling(lambda, 1, 2), sigma_scaling(lambda.inverse(), 1, 2),
                     make_upper2(gamma));
  }
  return finish(BirClass::line(gamma), make_upper2(gamma), std::move(chain), opts);
}

ClassifyResult classify_3x3(const ExpMatrix& a, const ClassifyOptions& opts) {
  const FieldCtxPtr& ctx = a.ctx();
  require(ctx->is_finite(), errc::wrong_characteristic, "classify_3x3 needs char p > 0");
  require(a.n() == 3, errc::dimension_mismatch, "classify_3x3 needs n = 3");
  ChainBuilder chain{a, {}};

  RecognizedFamily rec = recognize_family(a);
  require(rec.form.family != Family::General, errc::not_normalized,
          "no family conjugate found within the search bounds");
  if (!rec.conjugator->is_identity()) chain.conjugate(*rec.conjugator);

  FamilyForm form = rec.form;
  if (form.family == Family::J3) {
    // Quadratic witness to the A21 partner (Lemma 5.6 shape).
    SigmaPair pair = sigma_lemma56(ctx);
    ExpMatrix target = make_a21(*form.alpha1, *form.alpha2);
    chain.birational(pair.sigma, pair.sigma_inv, target);
    return classify_a21_like(std::move(chain), *form.alpha1, *form.alpha2, opts);
  }
  if (form.family == Family::A21)
    return classify_a21_like(std::move(chain), *form.alpha1, *form.alpha2, opts);

  require(form.family == Family::A12, errc::internal_inconsistency, "unexpected family");
  PPoly a1 = *form.alpha1;
  PPoly a2 = *form.alpha2;
  auto rank = linear_independent({a1, a2});
  if (rank.dimension == 0)
    return finish(BirClass::identity(), ExpMatrix::trusted(PolyMatrix::identity(ctx, 3)),
                  std::move(chain), opts);
  if (rank.dimension == 1) {
    // (alpha1 alpha2) = (0 gamma) Q with Q's second row the coordinates of
    // the alphas over the monic generator.
    PPoly gamma = span_canonical({a1, a2}, 1)[0];
    std::size_t top = static_cast<std::size_t>(gamma.degree_index());
    Scalar c1 = a1.coeff(top);
    Scalar c2 = a2.coeff(top);
    require(a1 == gamma.scaled(c1) && a2 == gamma.scaled(c2), errc::internal_inconsistency,
            "dependent pair is not a scalar multiple of its generator");
    ScalarMatrix q = ScalarMatrix::zero(ctx, 2);
    if (c1.is_zero()) {
      q.set(0, 0, Scalar::one(ctx));
    } else {
      q.set(0, 1, Scalar::one(ctx));
    }
    q.set(1, 0, c1);
    q.set(1, 1, c2);
    chain.conjugate(embed_gl2(q));
    return finish_line_3x3(std::move(chain), gamma, opts);
  }
  // Independent pair: echelon canonical basis, Q from the pivot columns.
  auto echelon = span_canonical({a1, a2}, 2);
  ScalarMatrix q = ScalarMatrix::zero(ctx, 2);
  std::vector<PPoly> alphas = {a1, a2};
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t pivot = 0;
    while (echelon[i].coeff(pivot).is_zero()) ++pivot;
    for (std::size_t j = 0; j < 2; ++j) q.set(i, j, alphas[j].coeff(pivot));
  }
  require(echelon[0].scaled(q.at(0, 0)) + echelon[1].scaled(q.at(1, 0)) == a1 &&
              echelon[0].scaled(q.at(0, 1)) + echelon[1].scaled(q.at(1, 1)) == a2,
          errc::internal_inconsistency, "echelon decomposition failed");
  if (!q.is_identity()) chain.conjugate(embed_gl2(q));
  return finish(BirClass::plane(echelon[0], echelon[1]), make_a12(echelon[0], echelon[1]),
                std::move(chain), opts);
}

ClassifyResult classify(const ExpMatrix& a, const ClassifyOptions& opts) {
  if (a.ctx()->is_rationals()) return classify_char0(a, opts);
  if (a.n() == 2) return classify_2x2(a, opts);
  if (a.n() == 3) return classify_3x3(a, opts);
  raise(errc::bad_input, "no classification pipeline for this (char, n)");
}

EquivResult equiv_bir(const ExpMatrix& a, const ExpMatrix& b, const ClassifyOptions& opts) {
  require(a.n() == b.n(), errc::dimension_mismatch, "matrices of different size");
  require(same_field(a.ctx(), b.ctx()), errc::mixed_fields, "matrices over different fields");
  ClassifyResult ca = classify(a, opts);
  ClassifyResult cb = classify(b, opts);
  EquivResult out{false, ca.cls, cb.cls, std::nullopt};
  if (ca.cls != cb.cls) return out;
  out.equivalent = true;
  Witness combined = ca.witness;
  Witness back = reversed_witness(cb.witness);
  combined.insert(combined.end(), back.begin(), back.end());
  if (opts.verify_witness) {
    WitnessCheck check = verify_witness(combined);
    require(check.ok, errc::internal_inconsistency,
            "combined witness failed re-verification: " + check.reason);
  }
  out.witness = std::move(combined);
  return out;
}

}  // namespace expmat
