#include "singulens/weights.hpp"

#include "singulens/errors.hpp"

namespace singulens {

WeightSystem::WeightSystem(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error("a weight system needs at least one weight");
  for (auto& w : weights_) {
    w.canonicalize();
    if (w <= 0) throw Error("weights must be positive");
  }
}

WeightSystem WeightSystem::uniform(std::size_t arity, const Rational& w) {
  return WeightSystem(std::vector<Rational>(arity, w));
}

Rational WeightSystem::degree(const ExponentVector& u) const {
  if (u.arity() != arity()) throw Error("weight system arity does not match");
  Rational d = 0;
  for (std::size_t i = 0; i < arity(); ++i) d += weights_[i] * u[i];
  return d;
}

Rational WeightSystem::rho(const ExponentVector& u) const {
  if (u.arity() != arity()) throw Error("weight system arity does not match");
  Rational r = 0;
  for (std::size_t i = 0; i < arity(); ++i) r += weights_[i] * (u[i] + 1);
  return r;
}

std::string WeightSystem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += weights_[i].get_str();
  }
  return out + ")";
}

Rational rho(const ExponentVector& u, const WeightSystem& w) { return w.rho(u); }

}  // namespace singulens
