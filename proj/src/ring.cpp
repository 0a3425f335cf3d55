#include "singulens/ring.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "singulens/errors.hpp"

namespace singulens {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) {
    throw Error("exponent overflow");
  }
  return a + b;
}

}  // namespace

ExponentVector::ExponentVector(std::size_t arity) {
  if (arity > kMaxArity) {
    throw Error("ring arity " + std::to_string(arity) + " exceeds the supported maximum of " +
                std::to_string(kMaxArity));
  }
  arity_ = static_cast<std::uint8_t>(arity);
}

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> exponents)
    : ExponentVector(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

ExponentVector::ExponentVector(std::span<const std::uint32_t> exponents)
    : ExponentVector(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    e_[i] = exponents[i];
    degree_ += exponents[i];
  }
}

ExponentVector ExponentVector::unit(std::size_t arity, std::size_t index) {
  ExponentVector u(arity);
  u.set(index, 1);
  return u;
}

void ExponentVector::set(std::size_t i, std::uint32_t value) {
  if (i >= arity_) throw Error("exponent index out of range");
  degree_ = degree_ - e_[i] + value;
  e_[i] = value;
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

bool ExponentVector::coprime(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < arity_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < arity_; ++i) r.e_[i] = checked_add(e_[i], other.e_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  ExponentVector r(*this);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (other.e_[i] > e_[i]) throw Error("monomial division is not exact");
    r.e_[i] = e_[i] - other.e_[i];
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

ExponentVector ExponentVector::lcm(const ExponentVector& other) const {
  ExponentVector r(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    r.e_[i] = std::max(e_[i], other.e_[i]);
    r.degree_ += r.e_[i];
  }
  return r;
}

ExponentVector ExponentVector::extended() const {
  ExponentVector r(static_cast<std::size_t>(arity_) + 1);
  std::copy_n(e_.begin(), arity_, r.e_.begin());
  r.degree_ = degree_;
  return r;
}

ExponentVector ExponentVector::truncated() const {
  if (arity_ == 0 || e_[arity_ - 1] != 0) {
    throw Error("cannot drop a variable that occurs in the monomial");
  }
  ExponentVector r(static_cast<std::size_t>(arity_) - 1);
  std::copy_n(e_.begin(), arity_ - 1, r.e_.begin());
  r.degree_ = degree_;
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& u) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : u.view()) {
    h ^= e;
    h *= 0x100000001b3ull;
  }
  return h;
}

MonomialOrder MonomialOrder::parse(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  if (name == "grevlex") return grevlex();
  throw Error("unknown monomial order '" + std::string(name) + "'");
}

std::string_view MonomialOrder::name() const noexcept {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::graded_lex:
      return "grlex";
    case OrderKind::graded_reverse_lex:
      return "grevlex";
    case OrderKind::eliminate_last:
      return "elim";
  }
  return "?";
}

namespace {

int compare_lex(const ExponentVector& a, const ExponentVector& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// Degree-then-reverse-lex restricted to the first n variables.
int compare_grevlex(const ExponentVector& a, const ExponentVector& b, std::size_t n) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const noexcept {
  const std::size_t n = a.arity();
  switch (kind_) {
    case OrderKind::lex:
      return compare_lex(a, b, n);
    case OrderKind::graded_lex:
      if (a.total_degree() != b.total_degree()) {
        return a.total_degree() > b.total_degree() ? 1 : -1;
      }
      return compare_lex(a, b, n);
    case OrderKind::graded_reverse_lex:
      if (a.total_degree() != b.total_degree()) {
        return a.total_degree() > b.total_degree() ? 1 : -1;
      }
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::eliminate_last:
      if (a[n - 1] != b[n - 1]) return a[n - 1] > b[n - 1] ? 1 : -1;
      return compare_grevlex(a, b, n - 1);
  }
  return 0;
}

bool is_identifier(std::string_view text) noexcept {
  if (text.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(text.front())) return false;
  return std::all_of(text.begin(), text.end(), [&](char c) { return alpha(c) || digit(c); });
}

RingContext::RingContext(std::vector<std::string> variable_names) {
  if (variable_names.empty()) throw Error("a ring needs at least one variable");
  if (variable_names.size() >= kMaxArity) {
    throw Error("at most " + std::to_string(kMaxArity - 1) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& name : variable_names) {
    if (!is_identifier(name)) throw Error("invalid variable name '" + name + "'");
    if (name == kAuxiliaryVariable) throw Error("variable name '" + name + "' is reserved");
    if (!seen.insert(name).second) throw Error("duplicate variable name '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(variable_names));
}

RingContext::RingContext(Unchecked, std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  const auto& names = *names_;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

RingContext RingContext::with_auxiliary() const {
  if (has_auxiliary()) throw Error("ring already carries the auxiliary variable");
  auto names = *names_;
  names.emplace_back(kAuxiliaryVariable);
  return RingContext(Unchecked{}, std::move(names));
}

bool RingContext::has_auxiliary() const noexcept { return names_->back() == kAuxiliaryVariable; }

RingContext RingContext::without_auxiliary() const {
  if (!has_auxiliary()) throw Error("ring has no auxiliary variable");
  auto names = *names_;
  names.pop_back();
  return RingContext(Unchecked{}, std::move(names));
}

}  // namespace singulens
