// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only. Exit status is
// nonzero when any criterion fails.
#include <array>
#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "singulens/analyzer.hpp"
#include "singulens/corpus.hpp"
#include "support.hpp"

using namespace singulens;
using testing_support::P;
using testing_support::Random;
using testing_support::kPropertyCases;

namespace {

const RingContext R = RingContext::xyz();

// Collects the reasons a criterion failed; an empty list means PASS.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    std::ostringstream os;
    os << what << ": got " << actual << ", expected " << expected;
    failures_.push_back(os.str());
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

Ideal counterexample_j1() { return jk_ideal(default_counterexample(), Ideal::maximal(R), 1); }

void counterexample_suite_values(Checks& c) {
  const Polynomial f = default_counterexample();
  const Polynomial h = P("x*y^2*z^2");
  const auto suite = counterexample_suite();
  for (const auto& cert : suite.certificates) c.expect(cert.verdict, cert.name + " failed: " + cert.detail);
  c.equal(suite.certificates.size(), 8u, "certificate count (C1-C7 and conclusion)");
  c.expect(suite.strict_length, "strict length not established");

  c.expect(!testing_support::I("x^3, y^3, z^3").member(h), "x*y^2*z^2 in (x^3, y^3, z^3)");
  const Ideal j1 = counterexample_j1();
  c.expect(j1.member(f + h), "f + x*y^2*z^2 not in J_1");
  const Ideal m6 = Ideal::maximal_power(R, 6);
  c.equal(m6.generators().size(), 28u, "degree-6 monomials");
  for (const auto& g : m6.generators()) c.expect(j1.member(g), print(g) + " not in J_1");
  c.expect(!sum(j1, m6).member(h), "x*y^2*z^2 in J_1 + m^6");
  c.expect(!local_member(f, j1), "f in J_1 at the origin");
  const auto cls = classify(f);
  const auto bound = length_bound(f, cls);
  c.equal(bound.genus.genus, 3u, "g_0");
  c.equal(bound.bound, 5u, "bound");
}

void spot_values(Checks& c) {
  const Ideal j1 = counterexample_j1();
  const Polynomial f = default_counterexample();
  for (std::size_t i = 0; i < 3; ++i) {
    c.expect(j1.member(Polynomial::variable(R, i) * f), R.name(i) + "*f not in J_1");
  }
  for (const char* m : {"x^4*y", "x^4*z", "y^4*z", "y*z^4", "x*y^4", "x*z^4", "x^5", "y^5", "z^5"}) {
    c.expect(j1.member(P(m)), std::string(m) + " not in J_1");
  }
}

void quasi_homogeneity(Checks& c) {
  c.expect(!is_quasi_homogeneous(default_counterexample()).quasi_homogeneous, "counterexample is QH");
  c.expect(is_quasi_homogeneous(P("x^4 + y^4 + z^4")).quasi_homogeneous, "x^4+y^4+z^4 not QH");
  c.expect(is_quasi_homogeneous(P("x^2 + y^3 + z^5")).quasi_homogeneous, "x^2+y^3+z^5 not QH");
  for (const auto& entry : load_corpus(SINGULENS_CORPUS)) {
    const Polynomial f = parse_polynomial(entry.polynomial, R);
    const auto mu = milnor_number(f), tau = tjurina_number(f);
    c.expect(mu && tau, entry.name() + ": infinite invariant");
    if (mu && tau) c.equal(*mu == *tau, is_quasi_homogeneous(f).quasi_homogeneous, entry.name() + " mu=tau vs QH");
  }
}

void genus_table(Checks& c) {
  const std::vector<std::pair<std::vector<Rational>, std::size_t>> rows{
      {{Rational(1, 2), Rational(1, 3), Rational(1, 5)}, 0},
      {{Rational(1, 3), Rational(1, 3), Rational(1, 3)}, 1},
      {{Rational(1, 4), Rational(1, 4), Rational(1, 4)}, 3},
  };
  for (const auto& [w, g] : rows) {
    const WeightSystem ws(w);
    const std::size_t oracle = testing_support::lattice_count3(w[0], w[1], w[2], 1);
    c.equal(oracle, g, "lattice oracle " + ws.to_string());
    c.equal(weighted_lattice_genus(ws), g, "weighted_lattice_genus " + ws.to_string());
    const Ideal i0 = multiplier_span_generators(R, ws, 1, false);
    const Ideal adj = multiplier_span_generators(R, ws, 1, true);
    c.equal(quotient_dimension(i0, adj), g, "quotient_dimension " + ws.to_string());
  }
  const std::size_t expected[] = {1, 3, 6, 10};
  for (unsigned d = 3; d <= 6; ++d) {
    const std::string e = std::to_string(d);
    const Polynomial f = P("x^" + e + " + y^" + e + " + z^" + e);
    const auto ord = genus_ordinary(f);
    const auto wtd = genus_weighted(f, WeightSystem::uniform(3, Rational(1, d)));
    c.equal(ord.genus, expected[d - 3], "ordinary genus d=" + e);
    c.equal(wtd.genus, expected[d - 3], "weighted genus d=" + e);
    c.equal(quotient_dimension(ord.i0, ord.adjoint), ord.genus, "ordinary quotient_dimension d=" + e);
  }
}

void equality_certificates(Checks& c) {
  const auto cubic = analyze(P("x^3 + y^3 + z^3"));
  c.expect(cubic.equality && cubic.equality->kind == EqualityKind::proven_at_level && cubic.equality->level == 0,
           "x^3+y^3+z^3 not ProvenAtLevel(0)");
  const auto quartic = analyze(P("x^4 + y^4 + z^4"));
  c.expect(quartic.equality && quartic.equality->kind == EqualityKind::proven_at_level &&
               quartic.equality->level == 1,
           "x^4+y^4+z^4 not ProvenAtLevel(1)");
  c.expect(local_member(P("x^4 + y^4 + z^4"), jk_ideal(P("x^4 + y^4 + z^4"), Ideal::maximal(R), 1)),
           "x^4+y^4+z^4 not in its J_1");
  const auto ce = analyze(default_counterexample());
  c.expect(ce.equality && ce.equality->kind == EqualityKind::unknown_up_to && ce.equality->level == 3,
           "counterexample not UnknownUpTo(3)");
  c.expect(ce.equality && ce.equality->refuted_at_level1, "counterexample lacks RefutedAtLevel1");
}

void descent(Checks& c) {
  const Polynomial f = P("x^4 + y^4 + z^4");
  const auto w = WeightSystem::uniform(3, Rational(1, 4));
  for (unsigned k = 0; k <= 1; ++k) {
    const DescentChain chain = generation_descent(f, w, k);
    c.expect(chain.replay(), "chain k=" + std::to_string(k) + " does not replay");
    c.expect(!chain.steps.empty() && chain.steps.back().output == RationalSection::inverse_power(f, k + 1),
             "chain k=" + std::to_string(k) + " does not end at 1/f^(k+1)");
  }
  RationalSection sum(f, P("0"), 0);
  for (std::size_t i = 0; i < 3; ++i) sum = sum - RationalSection(f, Polynomial::variable(R, i), 1).derive(i);
  c.expect(sum == RationalSection::inverse_power(f, 1), "-sum d_i(x_i/f) != 1/f");
  const DescentChain level0 = generation_descent(f, w, 0);
  c.equal(level0.steps.size(), 1u, "k=0 chain length");
  if (level0.steps.size() == 1) {
    const auto& step = level0.steps.front();
    RationalSection replayed(f, P("0"), 0);
    for (std::size_t i = 0; i < step.operators.size(); ++i) replayed = replayed + step.operators[i].apply(step.inputs[i]);
    c.expect(replayed == sum, "k=0 chain differs from -sum d_i(x_i/f)");
  }
}

void milnor(Checks& c) {
  const std::vector<std::pair<std::array<int, 3>, std::size_t>> rows{
      {{2, 2, 2}, 1}, {{3, 3, 3}, 8}, {{4, 4, 4}, 27}, {{2, 3, 5}, 8}};
  for (const auto& [a, mu] : rows) {
    const Polynomial f = P("x^" + std::to_string(a[0]) + " + y^" + std::to_string(a[1]) + " + z^" +
                           std::to_string(a[2]));
    const auto got = milnor_number(f);
    c.expect(got.has_value(), print(f) + ": infinite Milnor number");
    if (got) c.equal(*got, mu, "milnor " + print(f));
    c.equal(static_cast<std::size_t>((a[0] - 1) * (a[1] - 1) * (a[2] - 1)), mu, "product oracle");
  }
}

std::vector<Polynomial> random_generators(Random& rng) {
  std::vector<Polynomial> gens;
  for (int i = rng.integer(1, 3); i > 0; --i) gens.push_back(rng.nonzero_polynomial(R, 3, 3));
  return gens;
}

MonomialOrder random_order(Random& rng) {
  switch (rng.integer(0, 2)) {
    case 0: return MonomialOrder::lex();
    case 1: return MonomialOrder::grlex();
    default: return MonomialOrder::grevlex();
  }
}

void property_suites(Checks& c) {
  Random rng(80);
  int failures = 0;
  auto record = [&](bool ok, const std::string& what) {
    if (!ok && failures++ < 5) c.expect(false, what);
    if (!ok && failures == 6) c.expect(false, "further property failures suppressed");
  };
  for (int n = 0; n < kPropertyCases; ++n) {
    auto gens = random_generators(rng);
    const MonomialOrder order = random_order(rng);
    const auto basis = buchberger(gens, order);
    auto shuffled = gens;
    rng.shuffle(shuffled);
    for (auto& g : shuffled) g = g * rng.nonzero_rational();
    record(buchberger(shuffled, order) == basis, "reduced basis not unique");
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        record(reduce(testing_support::s_polynomial(basis[i], basis[j]), basis, order).is_zero(),
               "S-polynomial does not reduce to zero");
  }
  for (int n = 0; n < kPropertyCases; ++n) {
    const Polynomial p = rng.polynomial(R, 5, 4), q = rng.polynomial(R, 5, 4);
    const std::size_t i = rng.integer(0, 2);
    record((p * q).partial_derivative(i) == p.partial_derivative(i) * q + p * q.partial_derivative(i),
           "Leibniz for polynomials");
    const RationalSection s(rng.nonzero_polynomial(R, 3, 3), rng.polynomial(R, 3, 3), rng.integer(0, 3));
    record((s * p).derive(i) == s * p.partial_derivative(i) + s.derive(i) * p, "Leibniz for sections");
  }
  for (int n = 0; n < kPropertyCases; ++n) {
    const Ideal ideal(R, random_generators(rng));
    const Polynomial p = rng.nonzero_polynomial(R, 3, 2);
    const Ideal colon = quotient(ideal, p);
    for (const auto& g : colon.generators()) record(ideal.member(g * p), "quotient generator law");
  }
  const std::vector<std::string> entries{"x^2 + y^3 + z^5", "x^3 + y^4 + z^2", "x^3 + y^3 + z^3"};
  int chain_cases = 0;
  for (const auto& text : entries) {
    const Polynomial f = P(text);
    for (unsigned k = 1; k <= 3; ++k) {
      const Ideal lower = jk_ideal(f, Ideal::maximal(R), k - 1);
      const Ideal upper = jk_ideal(f, Ideal::maximal(R), k);
      for (int n = 0; n < kPropertyCases / 9 + 1; ++n, ++chain_cases) {
        Polynomial combo(R);
        for (const auto& g : lower.generators()) combo = combo + g * rng.polynomial(R, 2, 2);
        record(upper.member(combo * f), "f*J_(k-1) not in J_k for " + text);
      }
    }
  }
  c.expect(chain_cases >= kPropertyCases, "too few filtration cases");
  for (int n = 0; n < kPropertyCases; ++n) {
    const Polynomial p = rng.polynomial(R, 6, 5);
    const std::string text = print(p);
    record(parse_polynomial(text, R) == p && print(parse_polynomial(text, R)) == text, "round trip " + text);
  }
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Checks&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      setenv("SINGULENS_SEED", argv[++i], 1);
    } else {
      std::fprintf(stderr, "usage: acceptance [--seed N]\n");
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "counterexample certificates C1-C7, g=3, bound=5", 30, counterexample_suite_values},
      {2, "J_1 spot members", 5, spot_values},
      {3, "quasi-homogeneity and mu=tau across the corpus", 0, quasi_homogeneity},
      {4, "genus table and ordinary=weighted", 0, genus_table},
      {5, "equality certificates", 60, equality_certificates},
      {6, "descent chains replay to 1/f^(k+1)", 0, descent},
      {7, "Milnor numbers of diagonal f", 0, milnor},
      {8, "property suites, 200 random cases each", 0, property_suites},
  };
  std::printf("seed %llu\n", static_cast<unsigned long long>(testing_support::seed()));
  bool all = true;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(checks);
    } catch (const std::exception& e) {
      checks.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && seconds > cr.limit_seconds) {
      checks.expect(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(cr.limit_seconds));
    }
    const bool ok = checks.failures().empty();
    all = all && ok;
    std::printf("%s %d %s (%.2f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.title, seconds);
    for (const auto& f : checks.failures()) std::printf("    %s\n", f.c_str());
  }
  return all ? 0 : 1;
}
