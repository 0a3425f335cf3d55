#include <gtest/gtest.h>

#include <sstream>

#include "singulens/errors.hpp"
#include "singulens/parse.hpp"
#include "support.hpp"

using namespace singulens;
using testing_support::P;
using testing_support::Random;
using testing_support::kPropertyCases;

namespace {

const RingContext R = RingContext::xyz();

TEST(ExponentVector, ArithmeticAndDivisibility) {
  const ExponentVector a{2, 0, 1};
  const ExponentVector b{1, 3, 0};
  EXPECT_EQ(a + b, (ExponentVector{3, 3, 1}));
  EXPECT_EQ(a.lcm(b), (ExponentVector{2, 3, 1}));
  EXPECT_EQ((a + b).total_degree(), 7u);
  EXPECT_TRUE((ExponentVector{1, 0, 1}).divides(a));
  EXPECT_FALSE(b.divides(a));
  EXPECT_TRUE((ExponentVector{1, 0, 0}).coprime(ExponentVector{0, 2, 1}));
  EXPECT_EQ(a - ExponentVector({1, 0, 1}), (ExponentVector{1, 0, 0}));
  EXPECT_THROW(a - b, Error);
}

TEST(ExponentVector, ExponentOverflowThrows) {
  ExponentVector big(1);
  big.set(0, 0xFFFFFFFFu);
  EXPECT_THROW(big + ExponentVector({1}), Error);
}

// Orders compared against their textbook definitions on all pairs of small monomials.
TEST(MonomialOrder, AgreesWithDefinitions) {
  std::vector<ExponentVector> all;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      for (std::uint32_t c = 0; c < 3; ++c) all.push_back({a, b, c});
  auto lex = [](const ExponentVector& u, const ExponentVector& v) {
    for (std::size_t i = 0; i < 3; ++i)
      if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
    return 0;
  };
  auto grlex = [&](const ExponentVector& u, const ExponentVector& v) {
    if (u.total_degree() != v.total_degree()) return u.total_degree() > v.total_degree() ? 1 : -1;
    return lex(u, v);
  };
  auto grevlex = [](const ExponentVector& u, const ExponentVector& v) {
    if (u.total_degree() != v.total_degree()) return u.total_degree() > v.total_degree() ? 1 : -1;
    for (std::size_t i = 3; i-- > 0;)
      if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
    return 0;
  };
  auto sign = [](int x) { return (x > 0) - (x < 0); };
  for (const auto& u : all) {
    for (const auto& v : all) {
      EXPECT_EQ(sign(MonomialOrder::lex().compare(u, v)), lex(u, v));
      EXPECT_EQ(sign(MonomialOrder::grlex().compare(u, v)), grlex(u, v));
      EXPECT_EQ(sign(MonomialOrder::grevlex().compare(u, v)), grevlex(u, v));
    }
  }
}

TEST(MonomialOrder, ParseNames) {
  EXPECT_EQ(MonomialOrder::parse("lex"), MonomialOrder::lex());
  EXPECT_EQ(MonomialOrder::parse("grlex"), MonomialOrder::grlex());
  EXPECT_EQ(MonomialOrder::parse("grevlex").name(), "grevlex");
  EXPECT_THROW(MonomialOrder::parse("deglex"), Error);
}

TEST(RingContext, RejectsBadNames) {
  EXPECT_THROW(RingContext({}), Error);
  EXPECT_THROW(RingContext({"x", "x"}), Error);
  EXPECT_THROW(RingContext({"1x"}), Error);
  EXPECT_THROW(RingContext({"x", std::string(kAuxiliaryVariable)}), Error);
  EXPECT_EQ(RingContext({"a", "b"}).index_of("b"), 1u);
  EXPECT_FALSE(RingContext({"a", "b"}).index_of("c"));
}

TEST(Polynomial, MixingRingsThrows) {
  const RingContext other({"a", "b"});
  EXPECT_THROW(P("x") + P("a", other), RingMismatch);
}

TEST(Polynomial, ArithmeticBasics) {
  EXPECT_EQ(P("(x + y)^2"), P("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(P("(x - y)*(x + y)"), P("x^2 - y^2"));
  EXPECT_TRUE((P("x*y - y*x")).is_zero());
  EXPECT_EQ(P("x^3 + y").total_degree(), 3u);
  EXPECT_EQ(P("x^3 + y").order_at_origin(), 1u);
  EXPECT_EQ(P("3 + x").constant_term(), 3);
  EXPECT_TRUE(P("x^2 + y*z").is_homogeneous());
  EXPECT_FALSE(P("x^2 + y").is_homogeneous());
  EXPECT_EQ(P("2*x^2*y").partial_derivative(0), P("4*x*y"));
  EXPECT_TRUE(P("y").partial_derivative(0).is_zero());
  EXPECT_EQ(P("x + 1").pow(3), P("x^3 + 3*x^2 + 3*x + 1"));
}

TEST(Polynomial, LeadingTermFollowsOrder) {
  const Polynomial p = P("x*z^2 + y^3 + x^2");
  EXPECT_EQ(p.with_order(MonomialOrder::lex()).leading_exponent(), (ExponentVector{2, 0, 0}));
  EXPECT_EQ(p.with_order(MonomialOrder::grlex()).leading_exponent(), (ExponentVector{1, 0, 2}));
  EXPECT_EQ(p.with_order(MonomialOrder::grevlex()).leading_exponent(), (ExponentVector{0, 3, 0}));
}

TEST(Polynomial, HomogeneousComponents) {
  const auto parts = P("x^4 + y^4 + z^4 + x*y^2*z^2").homogeneous_components();
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(4), P("x^4 + y^4 + z^4"));
  EXPECT_EQ(parts.at(5), P("x*y^2*z^2"));
}

TEST(Polynomial, ExactDivision) {
  EXPECT_EQ(divide_exact(P("x^2 - y^2"), P("x - y")), P("x + y"));
  EXPECT_FALSE(divide_exact(P("x^2 + y^2"), P("x - y")));
}

TEST(Polynomial, LeibnizRuleProperty) {
  Random rng(1);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Polynomial p = rng.polynomial(R, 5, 4);
    const Polynomial q = rng.polynomial(R, 5, 4);
    const std::size_t i = rng.integer(0, 2);
    SCOPED_TRACE(print(p) + " | " + print(q));
    EXPECT_EQ((p * q).partial_derivative(i),
              p.partial_derivative(i) * q + p * q.partial_derivative(i));
    EXPECT_EQ((p + q).partial_derivative(i), p.partial_derivative(i) + q.partial_derivative(i));
  }
}

TEST(Polynomial, RingAxiomsProperty) {
  Random rng(2);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Polynomial a = rng.polynomial(R, 4, 3);
    const Polynomial b = rng.polynomial(R, 4, 3);
    const Polynomial c = rng.polynomial(R, 4, 3);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(Parse, CanonicalPrint) {
  EXPECT_EQ(print(P("x^4+y^4+z^4+x*y^2*z^2")), "x*y^2*z^2 + x^4 + y^4 + z^4");
  EXPECT_EQ(print(P("-3/2*x*y")), "-3/2*x*y");
  EXPECT_EQ(print(P("0")), "0");
  EXPECT_EQ(print(P("2/4")), "1/2");
  EXPECT_EQ(print(P("-(x - 1)")), "-x + 1");
}

TEST(Parse, ErrorsCarryPositions) {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_polynomial(text, R);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("x^"), 2u);
  EXPECT_EQ(position_of("x + w"), 4u);
  EXPECT_THROW(parse_polynomial("2x", R), ParseError);
  EXPECT_THROW(parse_polynomial("x^-1", R), ParseError);
  EXPECT_THROW(parse_polynomial("1/0", R), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", R), ParseError);
  EXPECT_THROW(parse_polynomial("x y", R), ParseError);
  EXPECT_THROW(parse_polynomial("", R), ParseError);
}

TEST(Parse, ListSplitsAtTopLevelCommas) {
  const auto ps = parse_polynomial_list("x, (y + z)^2, x*z - 1", R);
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps[1], P("y^2 + 2*y*z + z^2"));
}

// Random expression trees rendered as text; the oracle evaluates the tree with polynomial
// arithmetic, independently of the parser.
struct Expr {
  std::string text;
  Polynomial value;
};

Expr random_expr(Random& rng, int depth) {
  if (depth == 0 || rng.integer(0, 3) == 0) {
    if (rng.coin()) {
      const std::size_t i = rng.integer(0, 2);
      return {R.name(i), Polynomial::variable(R, i)};
    }
    const Rational c(rng.integer(0, 9), rng.integer(1, 4));
    return {c.get_str(), Polynomial::constant(R, c)};
  }
  switch (rng.integer(0, 4)) {
    case 0: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return {a.text + " + (" + b.text + ")", a.value + b.value};
    }
    case 1: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return {a.text + " - (" + b.text + ")", a.value - b.value};
    }
    case 2: {
      auto a = random_expr(rng, depth - 1), b = random_expr(rng, depth - 1);
      return {"(" + a.text + ")*(" + b.text + ")", a.value * b.value};
    }
    case 3: {
      auto a = random_expr(rng, depth - 1);
      const unsigned e = rng.integer(0, 3);
      return {"(" + a.text + ")^" + std::to_string(e), a.value.pow(e)};
    }
    default: {
      auto a = random_expr(rng, depth - 1);
      return {"-(" + a.text + ")", -a.value};
    }
  }
}

TEST(Parse, RoundTripProperty) {
  Random rng(3);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Polynomial p = rng.polynomial(R, 6, 5);
    const std::string text = print(p);
    EXPECT_EQ(parse_polynomial(text, R), p) << text;
    EXPECT_EQ(print(parse_polynomial(text, R)), text);
  }
}

TEST(Parse, ExpressionTreeProperty) {
  Random rng(4);
  for (int n = 0; n < kPropertyCases; ++n) {
    const Expr e = random_expr(rng, 4);
    EXPECT_EQ(parse_polynomial(e.text, R), e.value) << e.text;
  }
}

TEST(Parse, StreamOperatorMatchesPrint) {
  std::ostringstream os;
  os << P("y - x^2");
  EXPECT_EQ(os.str(), "-x^2 + y");
}

}  // namespace
