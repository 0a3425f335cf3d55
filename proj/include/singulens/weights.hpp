#pragma once

#include <string>
#include <vector>

#include "singulens/ring.hpp"

namespace singulens {

/// Positive rational weights w_1, ..., w_n attached to the variables.
class WeightSystem {
 public:
  explicit WeightSystem(std::vector<Rational> weights);
  /// n copies of the same weight.
  static WeightSystem uniform(std::size_t arity, const Rational& w);

  std::size_t arity() const noexcept { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_.at(i); }
  const std::vector<Rational>& values() const noexcept { return weights_; }

  /// Weighted degree sum_i u_i w_i.
  Rational degree(const ExponentVector& u) const;
  /// rho(u) = sum_i (u_i + 1) w_i.
  Rational rho(const ExponentVector& u) const;

  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;

 private:
  std::vector<Rational> weights_;
};

Rational rho(const ExponentVector& u, const WeightSystem& w);

}  // namespace singulens
