#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "singulens/polynomial.hpp"

namespace singulens {

inline constexpr unsigned kDefaultDegreeCap = 40;

/// Reduced Groebner basis of the given generators (monic, auto-reduced, sorted by
/// ascending leading monomial). Buchberger with the normal selection strategy and the
/// Gebauer-Moeller installation of the coprime and chain criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators, MonomialOrder order);

/// Full reduction of p modulo a Groebner basis (sorted in `order`).
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, MonomialOrder order);

/// Polynomial ideal given by generators. Logically immutable; the reduced Groebner basis
/// for each monomial order is computed at most once and shared between copies.
class Ideal {
 public:
  Ideal(RingContext ring, std::vector<Polynomial> generators);

  static Ideal zero(RingContext ring);
  static Ideal unit(RingContext ring);
  /// The maximal ideal m = (x_1, ..., x_n) of the origin.
  static Ideal maximal(RingContext ring);
  /// m^k, generated by all monomials of degree k.
  static Ideal maximal_power(RingContext ring, unsigned k);

  const RingContext& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  const std::vector<Polynomial>& groebner_basis(MonomialOrder order = {}) const;
  Polynomial normal_form(const Polynomial& p, MonomialOrder order = {}) const;
  bool member(const Polynomial& p) const;
  /// Every generator of `other` lies in this ideal.
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

  bool is_zero() const;
  bool is_unit() const;

  /// The quotient ring is finite dimensional: every variable has a pure power among the
  /// leading monomials of the grevlex basis.
  bool is_m_primary() const;
  /// Finite dimensional and every variable nilpotent modulo the ideal, i.e. the zero
  /// locus is exactly the origin (or empty for the unit ideal).
  bool is_supported_at_origin() const;

  /// Monomials outside the grevlex leading-term ideal. Throws InfiniteColength.
  std::vector<ExponentVector> standard_monomials() const;
  std::size_t colength() const;

 private:
  struct Cache;

  RingContext ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned k);
/// Ideal generated by the generators of `a` times p.
Ideal multiply(const Ideal& a, const Polynomial& p);

/// (I : p) = { q : q p in I }, via I ∩ (p) computed with one elimination variable.
Ideal quotient(const Ideal& ideal, const Polynomial& p);
/// (I : x_i^∞), via I + (1 - t x_i) with t eliminated.
Ideal saturation_by_variable(const Ideal& ideal, std::size_t index);

/// p lies in I after localizing at the origin, i.e. (I : p) is not contained in m.
bool local_member(const Polynomial& p, const Ideal& ideal);

/// The origin is an isolated point of the zero locus of I (or not on it at all).
bool origin_isolated(const Ideal& ideal);

/// Colength of I in the local ring at the origin. Stops at the first N with
/// m^N ⊆ I + m^(N+1); nullopt when the origin is a non-isolated point of V(I).
/// Throws DegreeCapExceeded when no N <= cap qualifies.
std::optional<std::size_t> local_colength(const Ideal& ideal, unsigned cap = kDefaultDegreeCap);

/// dim_Q(I / J) for J ⊆ I, supported at the origin. Throws HypothesisError when J ⊄ I.
std::size_t quotient_dimension(const Ideal& larger, const Ideal& smaller,
                               unsigned cap = kDefaultDegreeCap);

}  // namespace singulens
