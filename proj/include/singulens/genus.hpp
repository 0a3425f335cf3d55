#pragma once

#include <optional>
#include <string>

#include "singulens/ideal.hpp"
#include "singulens/weights.hpp"

namespace singulens {

/// What is known about the singularity at the origin. Both fields may be set
/// (e.g. Fermat hypersurfaces); neither set means the class is unknown.
struct SingularityClass {
  /// d when the lowest homogeneous part g of f has degree d >= 2 and Jac(g) is m-primary.
  std::optional<unsigned> ordinary_multiplicity;
  /// Weights making f weighted homogeneous, when the given coordinates admit them.
  std::optional<WeightSystem> weights;

  bool is_unknown() const noexcept { return !ordinary_multiplicity && !weights; }
  /// "ordinary(4)", "weighted(1/2,1/3,1/4)", "ordinary(4)+weighted(...)" or "unknown".
  std::string to_string() const;
};

/// Throws HypothesisError when f(0) != 0 or the singularity at the origin is not isolated.
SingularityClass classify(const Polynomial& f);

/// Monomial ideal spanned by x^u with rho(u) >= t (strict: rho(u) > t), given by its
/// minimal generators.
Ideal multiplier_span_generators(const RingContext& ring, const WeightSystem& w,
                                 const Rational& t, bool strict);

/// Number of u in N^n with rho(u) = 1.
std::size_t weighted_lattice_genus(const WeightSystem& w);

struct GenusResult {
  std::size_t genus = 0;
  Ideal i0;
  Ideal adjoint;
  bool log_canonical = false;
  /// "ordinary" or "weighted".
  std::string method;
  /// Ordinary case with d != n+1: the ideals are extrapolated from the d = n+1 statement.
  bool extrapolated = false;
};

/// I_0 = m^max(d-n,0), adj = m^max(d-n+1,0), g = dim I_0/adj.
GenusResult genus_ordinary(const Polynomial& f);

/// I_0 spanned by rho(u) >= 1, adj by rho(u) > 1. The lattice count is cross-checked
/// against the colength difference; a mismatch throws Error.
GenusResult genus_weighted(const Polynomial& f, const WeightSystem& w);

/// Picks the formula from the class; when both apply they must agree. Throws
/// HypothesisError when the class is unknown.
GenusResult reduced_genus(const Polynomial& f, const SingularityClass& cls);

}  // namespace singulens
