#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace singulens {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Maximum number of variables a ring may carry, the reserved auxiliary variable included.
inline constexpr std::size_t kMaxArity = 12;

/// Name of the elimination variable used internally by ideal quotients and saturations.
inline constexpr std::string_view kAuxiliaryVariable = "_aux";

/// Exponent vector of a monomial x^u in a ring of fixed arity.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t arity);
  ExponentVector(std::initializer_list<std::uint32_t> exponents);
  explicit ExponentVector(std::span<const std::uint32_t> exponents);

  static ExponentVector unit(std::size_t arity, std::size_t index);

  std::size_t arity() const noexcept { return arity_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return e_[i]; }
  std::uint64_t total_degree() const noexcept { return degree_; }
  bool is_zero() const noexcept { return degree_ == 0; }

  void set(std::size_t i, std::uint32_t value);

  /// True when this monomial divides `other`.
  bool divides(const ExponentVector& other) const noexcept;
  bool coprime(const ExponentVector& other) const noexcept;

  ExponentVector operator+(const ExponentVector& other) const;
  /// Requires `other.divides(*this)`.
  ExponentVector operator-(const ExponentVector& other) const;
  ExponentVector lcm(const ExponentVector& other) const;

  /// Same exponents with one trailing zero slot appended or the last slot dropped.
  ExponentVector extended() const;
  ExponentVector truncated() const;

  std::span<const std::uint32_t> view() const noexcept { return {e_.data(), arity_}; }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) noexcept {
    return a.arity_ == b.arity_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint32_t, kMaxArity> e_{};
  std::uint64_t degree_ = 0;
  std::uint8_t arity_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& u) const noexcept;
};

enum class OrderKind {
  lex,
  graded_lex,
  graded_reverse_lex,
  /// Block order: exponent of the last variable first, then grevlex on the rest.
  eliminate_last,
};

/// Monomial order; ties between variables follow ring declaration order (x1 > x2 > ...).
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::graded_lex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::graded_reverse_lex); }
  static MonomialOrder elimination() { return MonomialOrder(OrderKind::eliminate_last); }

  /// Accepts "lex", "grlex", "grevlex".
  static MonomialOrder parse(std::string_view name);

  OrderKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const ExponentVector& a, const ExponentVector& b) const noexcept;
  bool greater(const ExponentVector& a, const ExponentVector& b) const noexcept {
    return compare(a, b) > 0;
  }

  friend bool operator==(MonomialOrder a, MonomialOrder b) noexcept { return a.kind_ == b.kind_; }

 private:
  OrderKind kind_ = OrderKind::graded_reverse_lex;
};

/// Ordered list of variable names shared by every polynomial of one ring.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> variable_names);

  /// Convenience for the common x,y,z ring.
  static RingContext xyz() { return RingContext({"x", "y", "z"}); }

  std::size_t arity() const noexcept { return names_->size(); }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// This ring with the reserved elimination variable appended as the last variable.
  RingContext with_auxiliary() const;
  bool has_auxiliary() const noexcept;
  /// Inverse of with_auxiliary().
  RingContext without_auxiliary() const;

  friend bool operator==(const RingContext& a, const RingContext& b) noexcept {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  struct Unchecked {};
  RingContext(Unchecked, std::vector<std::string> names);

  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view text) noexcept;

}  // namespace singulens
