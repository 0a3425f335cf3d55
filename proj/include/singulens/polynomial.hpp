#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "singulens/ring.hpp"

namespace singulens {

struct Term {
  Rational coeff;
  ExponentVector exponents;
};

/// Sparse multivariate polynomial over Q in canonical form.
///
/// Terms carry nonzero coefficients and pairwise distinct exponents, sorted strictly
/// descending in the polynomial's monomial order. The zero polynomial has no terms.
/// Values are immutable from the outside; all arithmetic returns new values.
class Polynomial {
 public:
  explicit Polynomial(RingContext ring, MonomialOrder order = {});

  static Polynomial constant(RingContext ring, const Rational& c, MonomialOrder order = {});
  static Polynomial variable(RingContext ring, std::size_t index, MonomialOrder order = {});
  static Polynomial monomial(RingContext ring, const Rational& c, const ExponentVector& u,
                             MonomialOrder order = {});
  /// Sorts, merges like terms and drops zeros.
  static Polynomial from_terms(RingContext ring, std::vector<Term> terms, MonomialOrder order = {});

  const RingContext& ring() const noexcept { return ring_; }
  MonomialOrder order() const noexcept { return order_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Leading term in this polynomial's order; requires a nonzero polynomial.
  const Term& leading_term() const;
  const ExponentVector& leading_exponent() const { return leading_term().exponents; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Rational constant_term() const;
  Rational coefficient(const ExponentVector& u) const;
  /// Highest total degree of a term; 0 for the zero polynomial.
  std::uint64_t total_degree() const noexcept;
  /// Lowest total degree of a term; requires a nonzero polynomial.
  std::uint64_t order_at_origin() const;
  bool is_homogeneous() const noexcept;

  Polynomial with_order(MonomialOrder order) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scale(const Rational& c) const { return *this * c; }
  Polynomial pow(unsigned k) const;
  Polynomial shifted(const ExponentVector& u) const;
  /// Everything but the leading term.
  Polynomial tail() const;
  /// this - c * x^shift * g, in one merge pass.
  Polynomial subtract_multiple(const Rational& c, const ExponentVector& shift,
                               const Polynomial& g) const;

  Polynomial partial_derivative(std::size_t index) const;
  /// Degree -> nonzero homogeneous component.
  std::map<std::uint64_t, Polynomial> homogeneous_components() const;

  /// Re-express in a ring with the auxiliary variable appended, or remove it again.
  Polynomial extended(const RingContext& target) const;
  Polynomial truncated(const RingContext& target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;
  Polynomial aligned(const Polynomial& other) const;

  RingContext ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

/// Quotient when `divisor` divides `dividend` exactly, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor);

/// The monomials x^u with |u| = degree, in grevlex descending order.
std::vector<ExponentVector> monomials_of_degree(std::size_t arity, std::uint64_t degree);

}  // namespace singulens
