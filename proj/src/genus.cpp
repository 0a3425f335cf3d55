#include "singulens/genus.hpp"

#include <functional>

#include "singulens/errors.hpp"
#include "singulens/invariants.hpp"
#include "singulens/sections.hpp"

namespace singulens {

std::string SingularityClass::to_string() const {
  std::string out;
  if (ordinary_multiplicity) out = "ordinary(" + std::to_string(*ordinary_multiplicity) + ")";
  if (weights) {
    if (!out.empty()) out += "+";
    out += "weighted" + weights->to_string();
  }
  return out.empty() ? "unknown" : out;
}

SingularityClass classify(const Polynomial& f) {
  if (f.is_zero()) throw HypothesisError("f is zero");
  if (f.constant_term() != 0) throw HypothesisError("the origin is not on the hypersurface");
  const Ideal singular = sum(Ideal(f.ring(), {f}), jacobian_ideal(f));
  if (!origin_isolated(singular)) throw HypothesisError("the singularity at the origin is not isolated");

  SingularityClass cls;
  const auto parts = f.homogeneous_components();
  const auto& [d, g] = *parts.begin();
  if (d >= 2 && jacobian_ideal(g).is_m_primary()) cls.ordinary_multiplicity = static_cast<unsigned>(d);
  cls.weights = find_weights(f);
  return cls;
}

namespace {

Rational ceil_of(const Rational& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c);
}

// Visits every u in the box 0 <= u_i <= bound_i.
void for_each_in_box(const std::vector<std::uint32_t>& bounds,
                     const std::function<void(const ExponentVector&)>& visit) {
  ExponentVector u(bounds.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bounds.size()) {
      visit(u);
      return;
    }
    for (std::uint32_t e = 0; e <= bounds[i]; ++e) {
      u.set(i, e);
      rec(i + 1);
    }
    u.set(i, 0);
  };
  rec(0);
}

std::vector<std::uint32_t> box_for(const WeightSystem& w, const Rational& t) {
  std::vector<std::uint32_t> bounds;
  for (const auto& wi : w.values()) {
    const Rational c = t > 0 ? ceil_of(t / wi) : Rational(0);
    bounds.push_back(static_cast<std::uint32_t>(c.get_num().get_ui()));
  }
  return bounds;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_ui();
}

}  // namespace

Ideal multiplier_span_generators(const RingContext& ring, const WeightSystem& w,
                                 const Rational& t, bool strict) {
  if (w.arity() != ring.arity()) throw Error("weight system arity does not match the ring");
  auto in_span = [&](const ExponentVector& u) {
    const Rational r = w.rho(u);
    return strict ? r > t : r >= t;
  };
  if (in_span(ExponentVector(ring.arity()))) return Ideal::unit(ring);
  std::vector<Polynomial> gens;
  for_each_in_box(box_for(w, t), [&](const ExponentVector& u) {
    if (!in_span(u)) return;
    for (std::size_t i = 0; i < u.arity(); ++i) {
      if (u[i] == 0) continue;
      ExponentVector v = u;
      v.set(i, u[i] - 1);
      if (in_span(v)) return;
    }
    gens.push_back(Polynomial::monomial(ring, Rational(1), u));
  });
  return Ideal(ring, std::move(gens));
}

std::size_t weighted_lattice_genus(const WeightSystem& w) {
  std::size_t count = 0;
  for_each_in_box(box_for(w, Rational(1)), [&](const ExponentVector& u) {
    if (w.rho(u) == 1) ++count;
  });
  return count;
}

GenusResult genus_ordinary(const Polynomial& f) {
  const auto cls = classify(f);
  if (!cls.ordinary_multiplicity) throw HypothesisError("f is not an ordinary singularity");
  const unsigned d = *cls.ordinary_multiplicity;
  const unsigned n = static_cast<unsigned>(f.ring().arity());
  GenusResult r{
      .genus = 0,
      .i0 = Ideal::maximal_power(f.ring(), d > n ? d - n : 0),
      .adjoint = Ideal::maximal_power(f.ring(), d + 1 > n ? d + 1 - n : 0),
      .log_canonical = d <= n,
      .method = "ordinary",
      .extrapolated = d != n + 1,
  };
  r.genus = quotient_dimension(r.i0, r.adjoint);
  const std::size_t expected = d >= n ? binomial(d - 1, n - 1) : 0;
  if (r.genus != expected) throw Error("internal: ordinary genus does not match binomial count");
  return r;
}

GenusResult genus_weighted(const Polynomial& f, const WeightSystem& w) {
  if (!euler_check(f, w)) throw HypothesisError("f is not weighted homogeneous for " + w.to_string());
  if (!jacobian_ideal(f).is_m_primary()) {
    throw HypothesisError("the singularity at the origin is not isolated");
  }
  GenusResult r{
      .genus = weighted_lattice_genus(w),
      .i0 = multiplier_span_generators(f.ring(), w, Rational(1), false),
      .adjoint = multiplier_span_generators(f.ring(), w, Rational(1), true),
      .log_canonical = w.rho(ExponentVector(f.ring().arity())) >= 1,
      .method = "weighted",
      .extrapolated = false,
  };
  const std::size_t by_colength = quotient_dimension(r.i0, r.adjoint);
  if (by_colength != r.genus) {
    throw Error("weighted genus mismatch: lattice count " + std::to_string(r.genus) +
                " vs colength difference " + std::to_string(by_colength));
  }
  return r;
}

GenusResult reduced_genus(const Polynomial& f, const SingularityClass& cls) {
  if (cls.is_unknown()) throw HypothesisError("genus unavailable: singularity class unknown");
  if (cls.ordinary_multiplicity && cls.weights) {
    auto a = genus_ordinary(f);
    const auto b = genus_weighted(f, *cls.weights);
    if (a.genus != b.genus || !a.i0.equals(b.i0) || !a.adjoint.equals(b.adjoint)) {
      throw Error("ordinary and weighted genus computations disagree");
    }
    return a;
  }
  if (cls.ordinary_multiplicity) return genus_ordinary(f);
  return genus_weighted(f, *cls.weights);
}

}  // namespace singulens
