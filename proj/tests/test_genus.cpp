#include <gtest/gtest.h>

#include "singulens/errors.hpp"
#include "singulens/genus.hpp"
#include "support.hpp"

using namespace singulens;
using testing_support::I;
using testing_support::P;
using testing_support::Random;
using testing_support::kPropertyCases;

namespace {

const RingContext R = RingContext::xyz();
const Polynomial kCounterexample = P("x^4 + y^4 + z^4 + x*y^2*z^2");

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(Rho, Examples) {
  const auto quarter = WeightSystem::uniform(3, Rational(1, 4));
  EXPECT_EQ(rho(ExponentVector(3), quarter), Rational(3, 4));
  EXPECT_EQ(rho(ExponentVector{1, 2, 2}, quarter), 2);
  EXPECT_EQ(rho(ExponentVector(3), WeightSystem({Rational(1, 2), Rational(1, 3), Rational(1, 5)})),
            Rational(31, 30));
}

TEST(Rho, AdditivityProperty) {
  Random rng(40);
  for (int n = 0; n < kPropertyCases; ++n) {
    const WeightSystem w({Rational(1, rng.integer(1, 9)), Rational(1, rng.integer(1, 9)),
                          Rational(rng.integer(1, 3), rng.integer(2, 9))});
    const ExponentVector u = rng.exponent(3, 6), v = rng.exponent(3, 6);
    EXPECT_EQ(rho(u + v, w), rho(u, w) + w.degree(v));
  }
}

TEST(Classify, Examples) {
  const auto ce = classify(kCounterexample);
  EXPECT_EQ(ce.ordinary_multiplicity, 4u);
  EXPECT_FALSE(ce.weights);

  const auto cubic = classify(P("x^3 + y^3 + z^3"));
  EXPECT_EQ(cubic.ordinary_multiplicity, 3u);
  EXPECT_EQ(cubic.weights, WeightSystem::uniform(3, Rational(1, 3)));
  EXPECT_EQ(cubic.to_string(), "ordinary(3)+weighted(1/3,1/3,1/3)");

  // The tangent cone x^2*y + y^3 is singular projectively.
  const auto d4 = classify(P("x^2*y + y^3 + z^4"));
  EXPECT_FALSE(d4.ordinary_multiplicity);
  EXPECT_TRUE(d4.weights);

  EXPECT_THROW(classify(P("x^2 + y^2")), HypothesisError);
  EXPECT_THROW(classify(P("x^2 + 1")), HypothesisError);
}

TEST(Spans, Examples) {
  const auto quarter = WeightSystem::uniform(3, Rational(1, 4));
  EXPECT_TRUE(multiplier_span_generators(R, quarter, 1, false).equals(Ideal::maximal(R)));
  EXPECT_TRUE(multiplier_span_generators(R, quarter, 1, true).equals(Ideal::maximal_power(R, 2)));
  EXPECT_TRUE(multiplier_span_generators(R, WeightSystem::uniform(3, Rational(1, 3)), 1, false).is_unit());
}

// The span ideal contains x^u exactly when some generator divides it, and the spans are
// order ideals upward, so membership must match rho(u) >= t on a box of monomials.
TEST(Spans, MembershipMatchesRhoProperty) {
  Random rng(41);
  for (int n = 0; n < kPropertyCases; ++n) {
    const WeightSystem w({Rational(1, rng.integer(2, 6)), Rational(1, rng.integer(2, 6)),
                          Rational(1, rng.integer(2, 6))});
    const Rational t(rng.integer(1, 3));
    const bool strict = rng.coin();
    const Ideal span = multiplier_span_generators(R, w, t, strict);
    const ExponentVector u = rng.exponent(3, 8);
    const bool expected = strict ? rho(u, w) > t : rho(u, w) >= t;
    EXPECT_EQ(span.member(Polynomial::monomial(R, 1, u)), expected) << w.to_string() << " " << t;
  }
}

TEST(Genus, WeightedTable) {
  struct Row {
    const char* f;
    WeightSystem w;
    std::size_t g;
  };
  const std::vector<Row> rows{
      {"x^2 + y^3 + z^5", WeightSystem({Rational(1, 2), Rational(1, 3), Rational(1, 5)}), 0},
      {"x^3 + y^3 + z^3", WeightSystem::uniform(3, Rational(1, 3)), 1},
      {"x^4 + y^4 + z^4", WeightSystem::uniform(3, Rational(1, 4)), 3},
  };
  for (const auto& row : rows) {
    SCOPED_TRACE(row.f);
    const auto& v = row.w.values();
    EXPECT_EQ(testing_support::lattice_count3(v[0], v[1], v[2], 1), row.g);
    EXPECT_EQ(weighted_lattice_genus(row.w), row.g);
    const GenusResult r = genus_weighted(P(row.f), row.w);
    EXPECT_EQ(r.genus, row.g);
    EXPECT_EQ(quotient_dimension(r.i0, r.adjoint), row.g);
    EXPECT_EQ(r.method, "weighted");
  }
  EXPECT_TRUE(genus_weighted(P("x^2 + y^3 + z^5"),
                             WeightSystem({Rational(1, 2), Rational(1, 3), Rational(1, 5)}))
                  .log_canonical);
  EXPECT_THROW(genus_weighted(kCounterexample, WeightSystem::uniform(3, Rational(1, 4))), HypothesisError);
}

TEST(Genus, LatticeCountMatchesEnumerationProperty) {
  Random rng(42);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Rational a(1, rng.integer(2, 9)), b(1, rng.integer(2, 9)), c(1, rng.integer(2, 9));
    EXPECT_EQ(weighted_lattice_genus(WeightSystem({a, b, c})), testing_support::lattice_count3(a, b, c, 1));
  }
}

TEST(Genus, FermatOrdinaryEqualsWeighted) {
  for (unsigned d = 3; d <= 6; ++d) {
    const Polynomial f = P("x^" + std::to_string(d) + " + y^" + std::to_string(d) + " + z^" + std::to_string(d));
    SCOPED_TRACE(print(f));
    const GenusResult ord = genus_ordinary(f);
    const GenusResult wtd = genus_weighted(f, WeightSystem::uniform(3, Rational(1, d)));
    EXPECT_EQ(ord.genus, binom(d - 1, 2));
    EXPECT_EQ(ord.genus, wtd.genus);
    EXPECT_TRUE(ord.i0.equals(wtd.i0));
    EXPECT_TRUE(ord.adjoint.equals(wtd.adjoint));
    EXPECT_EQ(ord.extrapolated, d != 4);
    EXPECT_EQ(ord.log_canonical, d <= 3);
    EXPECT_EQ(ord.log_canonical, ord.i0.is_unit());
    EXPECT_EQ(reduced_genus(f, classify(f)).genus, ord.genus);
  }
}

TEST(Genus, CounterexampleIsOrdinaryQuartic) {
  const GenusResult r = genus_ordinary(kCounterexample);
  EXPECT_TRUE(r.i0.equals(Ideal::maximal(R)));
  EXPECT_TRUE(r.adjoint.equals(Ideal::maximal_power(R, 2)));
  EXPECT_EQ(r.genus, 3u);
  EXPECT_FALSE(r.log_canonical);
  EXPECT_FALSE(r.extrapolated);
  EXPECT_EQ(reduced_genus(kCounterexample, classify(kCounterexample)).genus, 3u);
}

TEST(Genus, AdjointInsideMultiplierIdeal) {
  for (const char* text : {"x^2 + y^3 + z^5", "x^2*y + y^3 + z^4", "x^5 + y^5 + z^5", "x^3 + y^4 + z^2"}) {
    const Polynomial f = P(text);
    const GenusResult r = reduced_genus(f, classify(f));
    EXPECT_TRUE(r.i0.contains(r.adjoint)) << text;
    EXPECT_EQ(r.log_canonical, r.i0.is_unit()) << text;
  }
}

TEST(Genus, UnknownClassThrows) {
  EXPECT_THROW(reduced_genus(P("x^2 + y^2 + z^2"), SingularityClass{}), HypothesisError);
  EXPECT_THROW(genus_ordinary(P("x^2*y + y^3 + z^4")), HypothesisError);
}

}  // namespace
