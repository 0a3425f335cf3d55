#pragma once

#include <optional>
#include <string>

#include "singulens/ideal.hpp"
#include "singulens/weights.hpp"

namespace singulens {

/// (d_1 f, ..., d_n f), zero partials dropped.
Ideal jacobian_ideal(const Polynomial& f);

/// Local colength of Jac(f) at the origin; nullopt when the singularity is not isolated.
std::optional<std::size_t> milnor_number(const Polynomial& f, unsigned cap = kDefaultDegreeCap);

/// Local colength of (f) + Jac(f) at the origin; nullopt when not isolated.
std::optional<std::size_t> tjurina_number(const Polynomial& f, unsigned cap = kDefaultDegreeCap);

/// Positive weights with <u, w> = 1 for every exponent u of f, if the given coordinates
/// admit them. Underdetermined systems are resolved by a small search over the free
/// weights; see the implementation for the tie-break.
std::optional<WeightSystem> find_weights(const Polynomial& f);

struct QHVerdict {
  bool quasi_homogeneous = false;
  std::optional<WeightSystem> witness;
  /// The higher-degree part h when the homogeneous-plus-perturbation test refutes.
  std::optional<Polynomial> obstruction;
};

/// f lies in its Jacobian ideal in the local ring at the origin. Throws HypothesisError
/// when the singularity at the origin is not isolated.
QHVerdict is_quasi_homogeneous(const Polynomial& f, unsigned cap = kDefaultDegreeCap);

/// Witness that f = g + h is not in Jac(f) at the origin: g homogeneous of degree d >= 3
/// with Jac(g) m-primary, h homogeneous of degree d+1 and h outside Jac(g).
struct SqhCertificate {
  Polynomial g;
  Polynomial h;
  unsigned degree = 0;
};

/// Returns the certificate when h is not in Jac(g), nullopt when it is. Hypothesis
/// violations throw HypothesisError naming the failed condition.
std::optional<SqhCertificate> sqh_obstruction(const Polynomial& g, const Polynomial& h);

}  // namespace singulens
