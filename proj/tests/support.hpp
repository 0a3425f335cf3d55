// Shared helpers for the test suites: seeded randomness and brute-force oracles that do
// not go through the Gröbner machinery.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "singulens/ideal.hpp"
#include "singulens/parse.hpp"
#include "singulens/weights.hpp"

namespace testing_support {

using singulens::ExponentVector;
using singulens::Ideal;
using singulens::Polynomial;
using singulens::Rational;
using singulens::RingContext;

inline constexpr int kPropertyCases = 200;

/// SINGULENS_SEED when set (the test binaries also accept --seed N), otherwise a fixed default.
inline std::uint64_t seed() {
  if (const char* s = std::getenv("SINGULENS_SEED"); s && *s) return std::strtoull(s, nullptr, 10);
  return 20261015;
}

class Random {
 public:
  explicit Random(std::uint64_t salt) : engine_(seed() ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational nonzero_rational(int range = 5) {
    int num = 0;
    while (num == 0) num = integer(-range, range);
    Rational q(num, integer(1, 3));
    q.canonicalize();
    return q;
  }

  ExponentVector exponent(std::size_t arity, int max_degree) {
    ExponentVector u(arity);
    int budget = integer(0, max_degree);
    for (std::size_t i = 0; i < arity && budget > 0; ++i) {
      const int e = i + 1 == arity ? budget : integer(0, budget);
      u.set(i, static_cast<std::uint32_t>(e));
      budget -= e;
    }
    // Shuffle so the last variable does not collect the remainder every time.
    std::vector<std::uint32_t> v(u.view().begin(), u.view().end());
    std::shuffle(v.begin(), v.end(), engine_);
    return ExponentVector(std::span<const std::uint32_t>(v));
  }

  Polynomial polynomial(const RingContext& ring, int terms, int max_degree) {
    std::vector<singulens::Term> ts;
    const int count = integer(1, terms);
    for (int i = 0; i < count; ++i) ts.push_back({nonzero_rational(), exponent(ring.arity(), max_degree)});
    return Polynomial::from_terms(ring, std::move(ts));
  }

  Polynomial nonzero_polynomial(const RingContext& ring, int terms, int max_degree) {
    for (;;) {
      Polynomial p = polynomial(ring, terms, max_degree);
      if (!p.is_zero()) return p;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) { std::shuffle(v.begin(), v.end(), engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline Polynomial P(const std::string& text, const RingContext& ring = RingContext::xyz()) {
  return singulens::parse_polynomial(text, ring);
}

inline Ideal I(const std::string& gens, const RingContext& ring = RingContext::xyz()) {
  return Ideal(ring, singulens::parse_polynomial_list(gens, ring));
}

/// x^u divisible by one of the generators' exponents.
inline bool monomial_in(const ExponentVector& u, const std::vector<ExponentVector>& gens) {
  for (const auto& g : gens) {
    if (g.divides(u)) return true;
  }
  return false;
}

/// Number of monomials outside a monomial ideal, by enumerating a box that must contain
/// them all (every variable has a pure power among the generators).
inline std::size_t monomial_colength(const std::vector<ExponentVector>& gens, std::size_t arity) {
  std::vector<std::uint32_t> bound(arity, 0);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < arity; ++i) {
      if (g.total_degree() == g[i]) bound[i] = std::max(bound[i], g[i]);
    }
  }
  std::size_t count = 0;
  ExponentVector u(arity);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == arity) {
      if (!monomial_in(u, gens)) ++count;
      return;
    }
    for (std::uint32_t e = 0; e < bound[i]; ++e) {
      u.set(i, e);
      self(self, i + 1);
    }
    u.set(i, 0);
  };
  rec(rec, 0);
  return count;
}

/// #{u in N^3 : sum (u_i + 1) w_i = t}, nested loops.
inline std::size_t lattice_count3(const Rational& w0, const Rational& w1, const Rational& w2,
                                  const Rational& t) {
  std::size_t count = 0;
  for (int a = 0; Rational(a + 1) * w0 <= t; ++a) {
    for (int b = 0; Rational(a + 1) * w0 + Rational(b + 1) * w1 <= t; ++b) {
      for (int c = 0; Rational(a + 1) * w0 + Rational(b + 1) * w1 + Rational(c + 1) * w2 <= t; ++c) {
        if (Rational(a + 1) * w0 + Rational(b + 1) * w1 + Rational(c + 1) * w2 == t) ++count;
      }
    }
  }
  return count;
}

/// S-polynomial of two nonzero polynomials in the given order.
inline Polynomial s_polynomial(const Polynomial& a, const Polynomial& b) {
  const auto l = a.leading_exponent().lcm(b.leading_exponent());
  const Polynomial ta = Polynomial::monomial(a.ring(), Rational(1 / a.leading_coeff()), l - a.leading_exponent(), a.order());
  const Polynomial tb = Polynomial::monomial(b.ring(), Rational(1 / b.leading_coeff()), l - b.leading_exponent(), b.order());
  return ta * a - tb * b;
}

}  // namespace testing_support
