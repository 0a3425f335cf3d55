#include "singulens/analyzer.hpp"

#include <algorithm>
#include <future>

#include "singulens/errors.hpp"
#include "singulens/parse.hpp"

namespace singulens {

ScreenResult screen_isolated(const Polynomial& f) {
  const Ideal jac = jacobian_ideal(f);
  const Ideal singular = sum(Ideal(f.ring(), {f}), jac);
  return ScreenResult{singular.is_supported_at_origin(), origin_isolated(jac)};
}

LengthBound length_bound(const Polynomial& f, const SingularityClass& cls) {
  if (f.ring().arity() < 3) throw HypothesisError("the length bound needs at least 3 variables");
  if (cls.is_unknown()) throw HypothesisError("genus unavailable: singularity class unknown");
  auto genus = reduced_genus(f, cls);
  const std::size_t bound = genus.genus + 2;
  return LengthBound{bound, std::move(genus)};
}

std::string_view to_string(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::proven_at_level: return "ProvenAtLevel";
    case EqualityKind::proven_by_descent: return "ProvenByDescent";
    case EqualityKind::unknown_up_to: return "UnknownUpTo";
  }
  return "UnknownUpTo";
}

EqualityVerdict equality_certificate(const Polynomial& f, const Ideal& i0, unsigned max_level,
                                     const std::optional<WeightSystem>& weights) {
  if (max_level < 1) throw Error("the level cap must be at least 1");
  EqualityVerdict v;
  if (weights && euler_check(f, *weights) &&
      i0.contains(multiplier_span_generators(f.ring(), *weights, Rational(1), false))) {
    auto chain = generation_descent(f, *weights, 0);
    if (chain.replay()) v.descent = std::move(chain);
  }
  Polynomial fk = Polynomial::constant(f.ring(), 1);
  for (unsigned k = 0; k <= max_level; ++k) {
    const bool ok = local_member(fk, jk_ideal(f, i0, k));
    v.level_results.push_back(ok);
    if (ok) {
      v.kind = EqualityKind::proven_at_level;
      v.level = k;
      return v;
    }
    if (k == 1) v.refuted_at_level1 = true;
    fk *= f;
  }
  if (v.descent) {
    v.kind = EqualityKind::proven_by_descent;
    v.level = 0;
  } else {
    v.kind = EqualityKind::unknown_up_to;
    v.level = max_level;
  }
  return v;
}

bool AnalysisReport::all_certified() const {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.verdict; });
}

namespace {

Certificate make(std::string_view name, bool verdict, std::string_view citation, std::string detail) {
  return Certificate{std::string(name), verdict, std::string(citation), std::move(detail)};
}

std::string ideal_string(const Ideal& ideal) {
  std::string out = "(";
  const auto& gb = ideal.groebner_basis();
  for (std::size_t i = 0; i < gb.size(); ++i) {
    if (i) out += ", ";
    out += print(gb[i]);
  }
  return out + ")";
}

}  // namespace

AnalysisReport analyze(const Polynomial& f, const AnalyzerConfig& config) {
  AnalysisReport r{.input = f};
  if (f.is_zero()) {
    r.notes.push_back("f is zero");
    return r;
  }
  r.screen = screen_isolated(f);
  if (!r.screen.isolated) {
    r.notes.push_back("singular locus is not contained in the origin; later stages skipped");
    return r;
  }
  if (f.constant_term() != 0) r.notes.push_back("f(0) != 0: the origin is not on the hypersurface");

  r.milnor = milnor_number(f, config.degree_cap);
  r.tjurina = tjurina_number(f, config.degree_cap);
  if (r.milnor) {
    r.qh = is_quasi_homogeneous(f, config.degree_cap);
  } else {
    r.notes.push_back("Jac(f) is not isolated at the origin: Milnor number infinite");
  }
  if (f.constant_term() != 0) return r;

  r.cls = classify(f);
  const std::size_t n = f.ring().arity();
  if (n < 3) {
    r.notes.push_back("fewer than 3 variables: no genus or length claims");
    if (r.cls->weights) {
      const auto chain = generation_descent(f, *r.cls->weights, 0);
      r.certificates.push_back(make("descent", chain.replay(), anchors::kWeightedDescent,
                                    "1/f generated by x^u/f with rho(u) >= 1"));
    }
    return r;
  }
  if (r.cls->is_unknown()) {
    r.notes.push_back("genus unavailable: singularity class unknown");
    return r;
  }
  if (r.cls->ordinary_multiplicity && !r.cls->weights &&
      *r.cls->ordinary_multiplicity != n + 1) {
    r.notes.push_back("ordinary multiplier and adjoint ideals extrapolated from the d = n+1 case");
  }

  auto bound = length_bound(f, *r.cls);
  r.genus = bound.genus;
  r.length_lower_bound = bound.bound;
  r.certificates.push_back(make(
      "genus", true, anchors::kGenusColength,
      "g = dim I0/adj = " + std::to_string(r.genus->genus) + " (" + r.genus->method + ")"));
  r.certificates.push_back(make("length-lower-bound", true, anchors::kLengthLowerBound,
                                "length >= g + 2 = " + std::to_string(bound.bound)));

  r.equality = equality_certificate(f, r.genus->i0, config.max_level, r.cls->weights);
  const auto& eq = *r.equality;
  if (eq.kind == EqualityKind::proven_at_level) {
    r.certificates.push_back(make(
        "equality", true, r.genus->log_canonical ? anchors::kLogCanonicalEquality : anchors::kEqualityCriterion,
        "f^" + std::to_string(eq.level) + " in J_" + std::to_string(eq.level) + " at the origin"));
  }
  if (eq.descent) {
    r.certificates.push_back(make("descent", eq.descent->replay(), anchors::kWeightedDescent,
                                  std::to_string(eq.descent->steps.size()) + " steps, depth " +
                                      std::to_string(eq.descent->depth())));
  }
  if (eq.refuted_at_level1) {
    r.certificates.push_back(make("refuted-at-level-1", true, anchors::kLevelOneContainment,
                                  "f not in J_1 at the origin"));
  }
  return r;
}

Polynomial default_counterexample() {
  return parse_polynomial("x^4 + y^4 + z^4 + x*y^2*z^2", RingContext::xyz());
}

const std::vector<std::string>& counterexample_check_names() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C5", "C6", "C7"};
  return names;
}

namespace {

struct Split {
  Polynomial g;
  Polynomial h;
  unsigned d;
  unsigned n;
};

Split split(const Polynomial& f) {
  if (f.is_zero() || f.constant_term() != 0) throw HypothesisError("f must vanish at the origin");
  const auto parts = f.homogeneous_components();
  const auto& [d, g] = *parts.begin();
  Polynomial h = f - g;
  if (!h.is_zero() && (!h.is_homogeneous() || h.total_degree() != d + 1)) {
    throw HypothesisError("f - (lowest part) is not homogeneous of degree " + std::to_string(d + 1));
  }
  return Split{g, std::move(h), static_cast<unsigned>(d), static_cast<unsigned>(f.ring().arity())};
}

Ideal level_one(const Polynomial& f) { return jk_ideal(f, Ideal::maximal(f.ring()), 1); }

}  // namespace

Certificate run_counterexample_check(const Polynomial& f, std::string_view name) {
  const Split s = split(f);
  const RingContext& ring = f.ring();
  if (name == "C1") {
    const Ideal jac = jacobian_ideal(s.g);
    return make(name, !jac.member(s.h), anchors::kSqhJacobian,
                print(s.h) + " not in Jac(g) = " + ideal_string(jac));
  }
  if (name == "C2") {
    bool lemma = false;
    try {
      lemma = sqh_obstruction(s.g, s.h).has_value();
    } catch (const HypothesisError&) {
      lemma = false;
    }
    const bool direct = !local_member(f, jacobian_ideal(f));
    return make(name, lemma && direct, anchors::kSqhJacobian,
                std::string("f not in Jac(f) at 0: lemma ") + (lemma ? "yes" : "no") +
                    ", direct " + (direct ? "yes" : "no"));
  }
  if (name == "C3") {
    bool ok = false;
    std::string detail = "not ordinary";
    try {
      const auto cls = classify(f);
      if (cls.ordinary_multiplicity && *cls.ordinary_multiplicity == s.n + 1) {
        const auto genus = genus_ordinary(f);
        ok = genus.i0.equals(Ideal::maximal(ring)) &&
             genus.adjoint.equals(Ideal::maximal_power(ring, 2)) && genus.genus == s.n;
        detail = "ordinary(" + std::to_string(s.d) + "), I0 = m, adj = m^2, g = " +
                 std::to_string(genus.genus);
      }
    } catch (const HypothesisError& e) {
      detail = e.what();
    }
    return make(name, ok, anchors::kOrdinaryIdeals, detail);
  }
  if (name == "C4") {
    // -sum_i d_i x_i (1/f) = ((d - n) f + h) / f^2 and every x_i lies in I0 = m.
    DiffOp op(ring);
    for (std::size_t i = 0; i < ring.arity(); ++i) {
      op = op + DiffOp::multiplication(Polynomial::variable(ring, i)).compose_derivative(i);
    }
    op = op * Rational(-1);
    const Polynomial target = f * Rational(static_cast<long>(s.d) - static_cast<long>(s.n)) + s.h;
    const bool identity = op.apply(RationalSection::inverse_power(f, 1)) == RationalSection(f, target, 2);
    const bool member = level_one(f).member(target);
    return make(name, identity && member, anchors::kLevelOneIdentity,
                print(target) + " in J_1; identity " + (identity ? "holds" : "fails"));
  }
  if (name == "C5") {
    const unsigned e = s.d + 2;
    return make(name, level_one(f).contains(Ideal::maximal_power(ring, e)), anchors::kLevelOneContainment,
                "m^" + std::to_string(e) + " contained in J_1");
  }
  if (name == "C6") {
    const unsigned e = s.d + 2;
    const Ideal bigger = sum(level_one(f), Ideal::maximal_power(ring, e));
    return make(name, !bigger.member(s.h), anchors::kLevelOneContainment,
                print(s.h) + " not in J_1 + m^" + std::to_string(e));
  }
  if (name == "C7") {
    return make(name, !local_member(f, level_one(f)), anchors::kLevelOneContainment,
                "f not in J_1 at the origin");
  }
  throw Error("unknown counterexample check '" + std::string(name) + "'");
}

CounterexampleReport counterexample_suite(const std::optional<Polynomial>& f) {
  CounterexampleReport r{.input = f ? *f : default_counterexample()};
  const auto& names = counterexample_check_names();
  std::vector<std::future<Certificate>> pending;
  for (const auto& name : names) {
    pending.push_back(std::async(std::launch::async, [&r, name] {
      try {
        return run_counterexample_check(r.input, name);
      } catch (const HypothesisError& e) {
        return make(name, false, anchors::kCounterexample, e.what());
      }
    }));
  }
  for (auto& p : pending) r.certificates.push_back(p.get());
  const bool all = std::all_of(r.certificates.begin(), r.certificates.end(),
                               [](const Certificate& c) { return c.verdict; });
  r.genus = r.input.ring().arity();
  r.strict_length = all;
  if (all) {
    r.certificates.push_back(make("conclusion", true, anchors::kHodgeStrictness,
                                  "length > g + 2 = " + std::to_string(r.genus + 2)));
  }
  return r;
}

}  // namespace singulens
