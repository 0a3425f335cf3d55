#include "singulens/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "singulens/errors.hpp"

namespace singulens {

Polynomial::Polynomial(RingContext ring, MonomialOrder order)
    : ring_(std::move(ring)), order_(order) {}

namespace {

// GMP arithmetic assumes canonical operands; values built from raw numerator and
// denominator pairs may not be.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

}  // namespace

Polynomial Polynomial::constant(RingContext ring, const Rational& c, MonomialOrder order) {
  Polynomial p(std::move(ring), order);
  if (c != 0) p.terms_.push_back({canonical(c), ExponentVector(p.ring_.arity())});
  return p;
}

Polynomial Polynomial::variable(RingContext ring, std::size_t index, MonomialOrder order) {
  if (index >= ring.arity()) throw Error("variable index out of range");
  const auto n = ring.arity();
  return monomial(std::move(ring), 1, ExponentVector::unit(n, index), order);
}

Polynomial Polynomial::monomial(RingContext ring, const Rational& c, const ExponentVector& u,
                                MonomialOrder order) {
  if (u.arity() != ring.arity()) throw Error("exponent vector arity does not match the ring");
  Polynomial p(std::move(ring), order);
  if (c != 0) p.terms_.push_back({canonical(c), u});
  return p;
}

Polynomial Polynomial::from_terms(RingContext ring, std::vector<Term> terms, MonomialOrder order) {
  Polynomial p(std::move(ring), order);
  for (const auto& t : terms) {
    if (t.exponents.arity() != p.ring_.arity()) {
      throw Error("exponent vector arity does not match the ring");
    }
  }
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return order.greater(a.exponents, b.exponents);
  });
  for (auto& t : terms) {
    t.coeff.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponents.is_zero());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("the zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::constant_term() const {
  return coefficient(ExponentVector(ring_.arity()));
}

Rational Polynomial::coefficient(const ExponentVector& u) const {
  for (const auto& t : terms_) {
    if (t.exponents == u) return t.coeff;
  }
  return 0;
}

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exponents.total_degree());
  return d;
}

std::uint64_t Polynomial::order_at_origin() const {
  if (terms_.empty()) throw Error("the zero polynomial has no order");
  std::uint64_t d = terms_.front().exponents.total_degree();
  for (const auto& t : terms_) d = std::min(d, t.exponents.total_degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.exponents.total_degree() == terms_.front().exponents.total_degree();
  });
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(ring_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [order](const Term& a, const Term& b) {
    return order.greater(a.exponents, b.exponents);
  });
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  if (leading_coeff() == 1) return *this;
  Rational inv = 1 / leading_coeff();
  return *this * inv;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch();
}

Polynomial Polynomial::aligned(const Polynomial& other) const {
  check_ring(other);
  return other.with_order(order_);
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  return subtract_multiple(-1, ExponentVector(ring_.arity()), other);
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return subtract_multiple(1, ExponentVector(ring_.arity()), other);
}

Polynomial Polynomial::subtract_multiple(const Rational& c, const ExponentVector& shift,
                                         const Polynomial& g) const {
  check_ring(g);
  if (c == 0) return *this;
  std::optional<Polynomial> resorted;
  if (!(g.order_ == order_)) resorted = g.with_order(order_);
  const Polynomial& rhs = resorted ? *resorted : g;
  Polynomial out(ring_, order_);
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  const bool trivial_shift = shift.is_zero();
  ExponentVector ub;
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b != rhs.terms_.end()) ub = trivial_shift ? b->exponents : b->exponents + shift;
    int cmp;
    if (a == terms_.end()) {
      cmp = -1;
    } else if (b == rhs.terms_.end()) {
      cmp = 1;
    } else {
      cmp = order_.compare(a->exponents, ub);
    }
    if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else if (cmp < 0) {
      out.terms_.push_back({-c * b->coeff, ub});
      ++b;
    } else {
      Rational v = a->coeff - c * b->coeff;
      if (v != 0) out.terms_.push_back({std::move(v), ub});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  const Polynomial rhs = aligned(other);
  if (is_zero() || rhs.is_zero()) return Polynomial(ring_, order_);
  std::unordered_map<ExponentVector, Rational, ExponentVectorHash> acc;
  acc.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : rhs.terms_) acc[s.exponents + t.exponents] += s.coeff * t.coeff;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [u, c] : acc) {
    if (c != 0) terms.push_back({std::move(c), u});
  }
  return from_terms(ring_, std::move(terms), order_);
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_, order_);
  const Rational k = canonical(c);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= k;
  return p;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1, order_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::shifted(const ExponentVector& u) const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.exponents = t.exponents + u;
  return p;
}

Polynomial Polynomial::tail() const {
  Polynomial p(ring_, order_);
  if (terms_.size() > 1) p.terms_.assign(terms_.begin() + 1, terms_.end());
  return p;
}

Polynomial Polynomial::partial_derivative(std::size_t index) const {
  if (index >= ring_.arity()) throw Error("variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    const auto e = t.exponents[index];
    if (e == 0) continue;
    ExponentVector u = t.exponents;
    u.set(index, e - 1);
    terms.push_back({t.coeff * e, u});
  }
  // Lowering one exponent can reorder terms under lex-type orders.
  return from_terms(ring_, std::move(terms), order_);
}

std::map<std::uint64_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::uint64_t, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.exponents.total_degree()].push_back(t);
  std::map<std::uint64_t, Polynomial> out;
  for (auto& [d, terms] : buckets) out.emplace(d, from_terms(ring_, std::move(terms), order_));
  return out;
}

Polynomial Polynomial::extended(const RingContext& target) const {
  if (!target.has_auxiliary() || !(target.without_auxiliary() == ring_)) throw RingMismatch();
  Polynomial p(target, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff, t.exponents.extended()});
  // Appending a zero exponent keeps the relative order for every supported order.
  if (order_.kind() == OrderKind::eliminate_last) return from_terms(target, p.terms_, order_);
  return p;
}

Polynomial Polynomial::truncated(const RingContext& target) const {
  if (!ring_.has_auxiliary() || !(ring_.without_auxiliary() == target)) throw RingMismatch();
  const MonomialOrder order =
      order_.kind() == OrderKind::eliminate_last ? MonomialOrder::grevlex() : order_;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back({t.coeff, t.exponents.truncated()});
  return from_terms(target, std::move(terms), order);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  const Polynomial rhs = b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coeff != rhs.terms_[i].coeff ||
        !(a.terms_[i].exponents == rhs.terms_[i].exponents)) {
      return false;
    }
  }
  return true;
}

std::optional<Polynomial> divide_exact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error("division by the zero polynomial");
  if (!(dividend.ring() == divisor.ring())) throw RingMismatch();
  const MonomialOrder order = dividend.order();
  const Polynomial d = divisor.with_order(order);
  const auto& lead = d.leading_term();
  Polynomial rest = dividend;
  std::vector<Term> quotient;
  // {d} is a Groebner basis of (d), so the remainder vanishes iff d divides the dividend;
  // any non-divisible leading term therefore settles the question at once.
  while (!rest.is_zero()) {
    const auto& t = rest.leading_term();
    if (!lead.exponents.divides(t.exponents)) return std::nullopt;
    Rational c = t.coeff / lead.coeff;
    ExponentVector shift = t.exponents - lead.exponents;
    rest = rest.subtract_multiple(c, shift, d);
    quotient.push_back({std::move(c), shift});
  }
  return Polynomial::from_terms(dividend.ring(), std::move(quotient), order);
}

std::vector<ExponentVector> monomials_of_degree(std::size_t arity, std::uint64_t degree) {
  std::vector<ExponentVector> out;
  ExponentVector u(arity);
  // Recursive distribution of `remaining` over variables i..arity-1.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (i + 1 == arity) {
      u.set(i, static_cast<std::uint32_t>(remaining));
      out.push_back(u);
      return;
    }
    for (std::uint64_t e = remaining + 1; e-- > 0;) {
      u.set(i, static_cast<std::uint32_t>(e));
      self(self, i + 1, remaining - e);
    }
    u.set(i, 0);
  };
  rec(rec, 0, degree);
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [order](const auto& a, const auto& b) { return order.greater(a, b); });
  return out;
}

}  // namespace singulens
