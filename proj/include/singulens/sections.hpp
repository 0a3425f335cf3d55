#pragma once

#include <string>
#include <vector>

#include "singulens/ideal.hpp"
#include "singulens/polynomial.hpp"
#include "singulens/weights.hpp"

namespace singulens {

/// Element p / f^m of the localization Q[x][1/f] for a fixed nonzero f.
///
/// Always normalized: either m = 0 or f does not divide p. Two sections are equal exactly
/// when their normalized representatives are.
class RationalSection {
 public:
  RationalSection(Polynomial base, Polynomial numerator, unsigned pole_order);

  /// 1 / f^m.
  static RationalSection inverse_power(const Polynomial& base, unsigned pole_order);
  /// x^u / f^m.
  static RationalSection monomial(const Polynomial& base, const ExponentVector& u,
                                  unsigned pole_order);

  const Polynomial& base() const noexcept { return base_; }
  const Polynomial& numerator() const noexcept { return numerator_; }
  unsigned pole_order() const noexcept { return pole_; }
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  /// Numerator q with this section = q / f^pole; requires pole >= pole_order().
  Polynomial numerator_at(unsigned pole) const;

  /// d/dx_i (p/f^m) = (d_i(p) f - m p d_i(f)) / f^(m+1).
  RationalSection derive(std::size_t index) const;

  RationalSection operator+(const RationalSection& other) const;
  RationalSection operator-(const RationalSection& other) const;
  RationalSection operator*(const Polynomial& p) const;
  RationalSection operator*(const Rational& c) const;

  std::string to_string() const;

  friend bool operator==(const RationalSection& a, const RationalSection& b);

 private:
  void check_base(const RationalSection& other) const;

  Polynomial base_;
  Polynomial numerator_;
  unsigned pole_;
};

/// Differential operator sum_beta c_beta(x) d^beta, coefficients to the left.
class DiffOp {
 public:
  struct Term {
    Polynomial coeff;
    ExponentVector derivative;
  };

  explicit DiffOp(RingContext ring);

  static DiffOp identity(const RingContext& ring);
  static DiffOp multiplication(const Polynomial& p);
  static DiffOp derivative(const RingContext& ring, std::size_t index);

  const RingContext& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Maximal |beta|; 0 for the zero operator.
  unsigned order() const noexcept;

  DiffOp operator+(const DiffOp& other) const;
  DiffOp operator*(const Rational& c) const;
  /// p * D.
  DiffOp left_multiply(const Polynomial& p) const;
  /// d_i o D, brought back to normal form: sum (d_i c) d^beta + c d^(beta + e_i).
  DiffOp compose_derivative(std::size_t index) const;

  RationalSection apply(const RationalSection& s) const;

  std::string to_string() const;

 private:
  void add_term(Polynomial coeff, const ExponentVector& beta);

  RingContext ring_;
  std::vector<Term> terms_;
};

/// d^beta applied to a section (derivatives commute, applied variable by variable).
RationalSection derive_multi(const RationalSection& s, const ExponentVector& beta);

/// The ideal J_k with F_k D · (I / f) = J_k / f^(k+1). Generators: for every generator g
/// of I and |beta| <= k, write d^beta(g/f) = q / f^m normalized and take f^(k+1-m) q.
Ideal jk_ideal(const Polynomial& f, const Ideal& ideal, unsigned k);

/// sum_i w_i x_i d_i(f) == f.
bool euler_check(const Polynomial& f, const WeightSystem& w);

/// The Euler operator sum_i w_i d_i x_i in normal form.
DiffOp euler_operator(const RingContext& ring, const WeightSystem& w);

/// One descent step: x^u / f^(k+1) = sum_i scale w_i d_i (x^(u+e_i) / f^(k+1)),
/// with scale = (rho(u) - (k+1))^-1.
struct DescentStep {
  ExponentVector u;
  unsigned level = 0;
  Rational scale;
  /// scale * sum_i w_i d_i x_i; acts on x^u/f^(k+1) as the identity.
  DiffOp euler;
  /// operators[i] = scale * w_i * d_i, applied to inputs[i] = x^(u+e_i) / f^(k+1).
  std::vector<DiffOp> operators;
  std::vector<RationalSection> inputs;
  RationalSection output;
  bool verified = false;

  /// Re-applies the stored operators to the stored inputs with exact arithmetic.
  bool replay() const;
};

DescentStep euler_descent_witness(const Polynomial& f, const WeightSystem& w,
                                  const ExponentVector& u, unsigned k);

/// Certificate that 1/f^(k+1) is generated over differential operators by the sections
/// x^u / f^(k+1) with rho(u) >= k+1.
struct DescentChain {
  unsigned level = 0;
  WeightSystem weights;
  /// Ordered so that every input of a step is a base case or the output of an earlier step.
  std::vector<DescentStep> steps;
  std::vector<ExponentVector> base_cases;

  bool replay() const;
  /// Depth of the descent tree (0 when 1/f^(k+1) is itself a base case).
  unsigned depth() const;
};

DescentChain generation_descent(const Polynomial& f, const WeightSystem& w, unsigned k);

}  // namespace singulens
