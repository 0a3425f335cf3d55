#include "singulens/sections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "singulens/errors.hpp"
#include "singulens/parse.hpp"

namespace singulens {

namespace {

using ExponentKey = std::vector<std::uint32_t>;

ExponentKey key_of(const ExponentVector& u) { return {u.view().begin(), u.view().end()}; }

}  // namespace

RationalSection::RationalSection(Polynomial base, Polynomial numerator, unsigned pole_order)
    : base_(std::move(base)), numerator_(std::move(numerator)), pole_(pole_order) {
  if (base_.is_zero()) throw Error("the base of a rational section must be nonzero");
  if (!(base_.ring() == numerator_.ring())) throw RingMismatch();
  while (pole_ > 0 && !numerator_.is_zero()) {
    auto q = divide_exact(numerator_, base_);
    if (!q) break;
    numerator_ = std::move(*q);
    --pole_;
  }
  if (numerator_.is_zero()) pole_ = 0;
}

RationalSection RationalSection::inverse_power(const Polynomial& base, unsigned pole_order) {
  return RationalSection(base, Polynomial::constant(base.ring(), 1), pole_order);
}

RationalSection RationalSection::monomial(const Polynomial& base, const ExponentVector& u,
                                          unsigned pole_order) {
  return RationalSection(base, Polynomial::monomial(base.ring(), 1, u), pole_order);
}

Polynomial RationalSection::numerator_at(unsigned pole) const {
  if (pole < pole_) throw Error("requested pole order is below the reduced pole order");
  return numerator_ * base_.pow(pole - pole_);
}

RationalSection RationalSection::derive(std::size_t index) const {
  if (index >= base_.ring().arity()) throw Error("variable index out of range");
  if (pole_ == 0) return RationalSection(base_, numerator_.partial_derivative(index), 0);
  Polynomial top = numerator_.partial_derivative(index) * base_ -
                   numerator_ * base_.partial_derivative(index) * Rational(pole_);
  return RationalSection(base_, std::move(top), pole_ + 1);
}

void RationalSection::check_base(const RationalSection& other) const {
  if (!(base_ == other.base_)) throw Error("rational sections over different bases");
}

RationalSection RationalSection::operator+(const RationalSection& other) const {
  check_base(other);
  const unsigned pole = std::max(pole_, other.pole_);
  return RationalSection(base_, numerator_at(pole) + other.numerator_at(pole), pole);
}

RationalSection RationalSection::operator-(const RationalSection& other) const {
  return *this + other * Rational(-1);
}

RationalSection RationalSection::operator*(const Polynomial& p) const {
  return RationalSection(base_, numerator_ * p, pole_);
}

RationalSection RationalSection::operator*(const Rational& c) const {
  return RationalSection(base_, numerator_ * c, pole_);
}

std::string RationalSection::to_string() const {
  if (pole_ == 0) return print(numerator_);
  std::string out = "(" + print(numerator_) + ")/f";
  if (pole_ > 1) out += "^" + std::to_string(pole_);
  return out;
}

bool operator==(const RationalSection& a, const RationalSection& b) {
  return a.base_ == b.base_ && a.pole_ == b.pole_ && a.numerator_ == b.numerator_;
}

DiffOp::DiffOp(RingContext ring) : ring_(std::move(ring)) {}

DiffOp DiffOp::identity(const RingContext& ring) {
  return multiplication(Polynomial::constant(ring, 1));
}

DiffOp DiffOp::multiplication(const Polynomial& p) {
  DiffOp d(p.ring());
  d.add_term(p, ExponentVector(p.ring().arity()));
  return d;
}

DiffOp DiffOp::derivative(const RingContext& ring, std::size_t index) {
  DiffOp d(ring);
  d.add_term(Polynomial::constant(ring, 1), ExponentVector::unit(ring.arity(), index));
  return d;
}

unsigned DiffOp::order() const noexcept {
  unsigned k = 0;
  for (const auto& t : terms_) k = std::max<unsigned>(k, static_cast<unsigned>(t.derivative.total_degree()));
  return k;
}

void DiffOp::add_term(Polynomial coeff, const ExponentVector& beta) {
  if (!(coeff.ring() == ring_)) throw RingMismatch();
  auto it = std::find_if(terms_.begin(), terms_.end(),
                         [&](const Term& t) { return t.derivative == beta; });
  if (it != terms_.end()) {
    it->coeff += coeff;
    if (it->coeff.is_zero()) terms_.erase(it);
    return;
  }
  if (coeff.is_zero()) return;
  terms_.push_back({std::move(coeff), beta});
  const auto order = MonomialOrder::grevlex();
  std::sort(terms_.begin(), terms_.end(), [order](const Term& a, const Term& b) {
    return order.greater(a.derivative, b.derivative);
  });
}

DiffOp DiffOp::operator+(const DiffOp& other) const {
  if (!(ring_ == other.ring_)) throw RingMismatch();
  DiffOp out = *this;
  for (const auto& t : other.terms_) out.add_term(t.coeff, t.derivative);
  return out;
}

DiffOp DiffOp::operator*(const Rational& c) const {
  DiffOp out(ring_);
  for (const auto& t : terms_) out.add_term(t.coeff * c, t.derivative);
  return out;
}

DiffOp DiffOp::left_multiply(const Polynomial& p) const {
  DiffOp out(ring_);
  for (const auto& t : terms_) out.add_term(p * t.coeff, t.derivative);
  return out;
}

DiffOp DiffOp::compose_derivative(std::size_t index) const {
  DiffOp out(ring_);
  const auto e = ExponentVector::unit(ring_.arity(), index);
  for (const auto& t : terms_) {
    out.add_term(t.coeff.partial_derivative(index), t.derivative);
    out.add_term(t.coeff, t.derivative + e);
  }
  return out;
}

RationalSection derive_multi(const RationalSection& s, const ExponentVector& beta) {
  RationalSection out = s;
  for (std::size_t i = 0; i < beta.arity(); ++i) {
    for (std::uint32_t k = 0; k < beta[i]; ++k) out = out.derive(i);
  }
  return out;
}

RationalSection DiffOp::apply(const RationalSection& s) const {
  if (!(s.base().ring() == ring_)) throw RingMismatch();
  RationalSection acc(s.base(), Polynomial(ring_), 0);
  for (const auto& t : terms_) acc = acc + derive_multi(s, t.derivative) * t.coeff;
  return acc;
}

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k) out += " + ";
    const std::string c = print(t.coeff);
    const bool plain = t.coeff.size() == 1 && t.coeff.leading_coeff() > 0;
    if (t.derivative.is_zero()) {
      out += plain ? c : "(" + c + ")";
      continue;
    }
    if (!(t.coeff.is_constant() && t.coeff.constant_term() == 1)) {
      out += (plain ? c : "(" + c + ")") + "*";
    }
    bool first = true;
    for (std::size_t i = 0; i < t.derivative.arity(); ++i) {
      if (t.derivative[i] == 0) continue;
      if (!first) out += "*";
      first = false;
      out += "d_" + ring_.name(i);
      if (t.derivative[i] > 1) out += "^" + std::to_string(t.derivative[i]);
    }
  }
  return out;
}

Ideal jk_ideal(const Polynomial& f, const Ideal& ideal, unsigned k) {
  if (f.is_zero()) throw Error("J_k needs a nonzero f");
  if (!(f.ring() == ideal.ring())) throw RingMismatch();
  if (k == 0) return ideal;
  const RingContext& ring = f.ring();
  const std::size_t n = ring.arity();

  std::vector<ExponentVector> betas;
  for (unsigned d = 0; d <= k; ++d) {
    auto layer = monomials_of_degree(n, d);
    betas.insert(betas.end(), layer.begin(), layer.end());
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    std::map<ExponentKey, RationalSection> derivatives;
    for (const auto& beta : betas) {
      std::optional<RationalSection> s;
      if (beta.is_zero()) {
        s = RationalSection(f, g, 1);
      } else {
        std::size_t i = 0;
        while (beta[i] == 0) ++i;
        const ExponentVector parent = beta - ExponentVector::unit(n, i);
        s = derivatives.at(key_of(parent)).derive(i);
      }
      if (!s->is_zero()) gens.push_back(s->numerator_at(k + 1));
      derivatives.emplace(key_of(beta), std::move(*s));
    }
  }
  return Ideal(ring, std::move(gens));
}

bool euler_check(const Polynomial& f, const WeightSystem& w) {
  const RingContext& ring = f.ring();
  if (w.arity() != ring.arity()) throw Error("weight system arity does not match the ring");
  Polynomial acc(ring);
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    acc += Polynomial::variable(ring, i) * f.partial_derivative(i) * w[i];
  }
  return acc == f;
}

DiffOp euler_operator(const RingContext& ring, const WeightSystem& w) {
  if (w.arity() != ring.arity()) throw Error("weight system arity does not match the ring");
  DiffOp out(ring);
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    out = out + DiffOp::multiplication(Polynomial::variable(ring, i)).compose_derivative(i) * w[i];
  }
  return out;
}

bool DescentStep::replay() const {
  if (inputs.size() != operators.size() || inputs.empty()) return false;
  RationalSection acc(output.base(), Polynomial(output.base().ring()), 0);
  for (std::size_t i = 0; i < inputs.size(); ++i) acc = acc + operators[i].apply(inputs[i]);
  return acc == output && euler.apply(output) == output;
}

DescentStep euler_descent_witness(const Polynomial& f, const WeightSystem& w,
                                  const ExponentVector& u, unsigned k) {
  if (!euler_check(f, w)) {
    throw HypothesisError("f is not weighted homogeneous for weights " + w.to_string());
  }
  const Rational r = w.rho(u);
  if (r >= k + 1) {
    throw HypothesisError("base case: rho(u) = " + r.get_str() + " >= " + std::to_string(k + 1) +
                          ", no descent needed");
  }
  const RingContext& ring = f.ring();
  DescentStep step{u, k, Rational(1) / (r - (k + 1)), euler_operator(ring, w), {}, {},
                   RationalSection::monomial(f, u, k + 1)};
  step.euler = step.euler * step.scale;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    step.operators.push_back(DiffOp::derivative(ring, i) * (step.scale * w[i]));
    step.inputs.push_back(
        RationalSection::monomial(f, u + ExponentVector::unit(ring.arity(), i), k + 1));
  }
  step.verified = step.replay();
  if (!step.verified) throw Error("internal: descent identity failed to replay");
  return step;
}

DescentChain generation_descent(const Polynomial& f, const WeightSystem& w, unsigned k) {
  if (!euler_check(f, w)) {
    throw HypothesisError("f is not weighted homogeneous for weights " + w.to_string());
  }
  const std::size_t n = f.ring().arity();
  const Rational target = k + 1;

  // Every u with rho(u) < k+1 has u_i <= ceil((k+1)/w_i).
  std::vector<std::uint32_t> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational q = target / w[i];
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    bound[i] = static_cast<std::uint32_t>(c.get_ui());
  }
  std::vector<ExponentVector> pending;
  ExponentVector u(n);
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (w.rho(u) < target) pending.push_back(u);
      return;
    }
    for (std::uint32_t e = 0; e <= bound[i]; ++e) {
      u.set(i, e);
      self(self, i + 1);
    }
    u.set(i, 0);
  };
  walk(walk, 0);
  const auto order = MonomialOrder::grevlex();
  std::sort(pending.begin(), pending.end(), [order](const auto& a, const auto& b) {
    return order.greater(a, b);
  });

  DescentChain chain{k, w, {}, {}};
  std::set<ExponentKey> base;
  if (pending.empty()) base.insert(key_of(ExponentVector(n)));
  for (const auto& v : pending) {
    chain.steps.push_back(euler_descent_witness(f, w, v, k));
    for (std::size_t i = 0; i < n; ++i) {
      const auto next = v + ExponentVector::unit(n, i);
      if (w.rho(next) >= target) base.insert(key_of(next));
    }
  }
  for (const auto& b : base) chain.base_cases.emplace_back(std::span<const std::uint32_t>(b));
  std::sort(chain.base_cases.begin(), chain.base_cases.end(),
            [order](const auto& a, const auto& b) { return order.greater(a, b); });
  if (!chain.replay()) throw Error("internal: descent chain failed to replay");
  return chain;
}

bool DescentChain::replay() const {
  std::set<ExponentKey> certified;
  for (const auto& b : base_cases) {
    if (weights.rho(b) < level + 1) return false;
    certified.insert(key_of(b));
  }
  for (const auto& step : steps) {
    if (step.level != level) return false;
    const std::size_t n = step.u.arity();
    for (std::size_t i = 0; i < n; ++i) {
      if (!certified.count(key_of(step.u + ExponentVector::unit(n, i)))) return false;
    }
    if (!step.replay()) return false;
    certified.insert(key_of(step.u));
  }
  if (steps.empty()) return !base_cases.empty() && certified.count(key_of(ExponentVector(weights.arity())));
  return certified.count(key_of(ExponentVector(steps.front().u.arity()))) > 0;
}

unsigned DescentChain::depth() const {
  if (steps.empty()) return 0;
  std::map<ExponentKey, unsigned> depth;
  for (const auto& step : steps) {
    unsigned d = 0;
    const std::size_t n = step.u.arity();
    for (std::size_t i = 0; i < n; ++i) {
      auto it = depth.find(key_of(step.u + ExponentVector::unit(n, i)));
      if (it != depth.end()) d = std::max(d, it->second);
    }
    depth[key_of(step.u)] = d + 1;
  }
  return depth.at(key_of(ExponentVector(steps.front().u.arity())));
}

}  // namespace singulens
