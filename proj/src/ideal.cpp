#include "singulens/ideal.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "singulens/errors.hpp"

namespace singulens {

namespace {

struct CriticalPair {
  std::size_t first;
  std::size_t second;
  ExponentVector lcm;
};

const Polynomial* find_reducer(const ExponentVector& u, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    if (g.leading_exponent().divides(u)) return &g;
  }
  return nullptr;
}

// Buchberger's algorithm with the Gebauer-Moeller pair update.
class GroebnerEngine {
 public:
  explicit GroebnerEngine(MonomialOrder order) : order_(order) {}

  std::vector<Polynomial> run(const std::vector<Polynomial>& generators) {
    std::vector<Polynomial> input;
    for (const auto& g : generators) {
      if (!g.is_zero()) input.push_back(g.with_order(order_));
    }
    std::sort(input.begin(), input.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_exponent(), b.leading_exponent()) < 0;
    });
    for (const auto& g : input) {
      Polynomial h = reduce_by_active(g);
      if (!h.is_zero()) install(h.monic());
      if (has_unit()) return unit_basis(g);
    }
    while (!pairs_.empty()) {
      const std::size_t k = select_pair();
      const CriticalPair pair = pairs_[k];
      pairs_[k] = pairs_.back();
      pairs_.pop_back();
      Polynomial h = reduce_by_active(s_polynomial(pair));
      if (h.is_zero()) continue;
      install(h.monic());
      if (has_unit()) return unit_basis(h);
    }
    return reduced_basis();
  }

 private:
  bool has_unit() const {
    return !basis_.empty() && polys_[basis_.back()].leading_exponent().is_zero();
  }

  std::vector<Polynomial> unit_basis(const Polynomial& like) const {
    return {Polynomial::constant(like.ring(), 1, order_)};
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    out.reserve(basis_.size());
    for (auto i : basis_) out.push_back(polys_[i]);
    return out;
  }

  Polynomial reduce_by_active(const Polynomial& p) const {
    Polynomial work = p;
    std::vector<Term> remainder;
    while (!work.is_zero()) {
      const Term& lt = work.leading_term();
      const Polynomial* reducer = nullptr;
      for (auto i : basis_) {
        if (polys_[i].leading_exponent().divides(lt.exponents)) {
          reducer = &polys_[i];
          break;
        }
      }
      if (reducer == nullptr) {
        remainder.push_back(lt);
        work = work.tail();
        continue;
      }
      work = work.subtract_multiple(lt.coeff / reducer->leading_coeff(),
                                    lt.exponents - reducer->leading_exponent(), *reducer);
    }
    return Polynomial::from_terms(p.ring(), std::move(remainder), order_);
  }

  Polynomial s_polynomial(const CriticalPair& pair) const {
    const Polynomial& a = polys_[pair.first];
    const Polynomial& b = polys_[pair.second];
    return a.shifted(pair.lcm - a.leading_exponent())
        .subtract_multiple(1, pair.lcm - b.leading_exponent(), b);
  }

  // Normal strategy: smallest lcm first, by total degree then by the monomial order.
  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.total_degree() < b.total_degree() ||
          (a.total_degree() == b.total_degree() && order_.compare(a, b) < 0)) {
        best = k;
      }
    }
    return best;
  }

  void install(Polynomial h) {
    const std::size_t hi = polys_.size();
    const ExponentVector lh = h.leading_exponent();
    polys_.push_back(std::move(h));

    std::vector<CriticalPair> fresh;
    fresh.reserve(basis_.size());
    for (auto g : basis_) fresh.push_back({g, hi, lh.lcm(polys_[g].leading_exponent())});

    // Chain criterion among the new pairs; coprime pairs survive this stage only to
    // shadow others and are discarded afterwards.
    std::vector<CriticalPair> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& p = fresh[k];
      bool keep = lh.coprime(polys_[p.first].leading_exponent());
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < fresh.size() && keep; ++l) {
          if (fresh[l].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t l = 0; l < kept.size() && keep; ++l) {
          if (kept[l].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(p);
    }

    std::vector<CriticalPair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      const bool chain = lh.divides(p.lcm) &&
                         !(lh.lcm(polys_[p.first].leading_exponent()) == p.lcm) &&
                         !(lh.lcm(polys_[p.second].leading_exponent()) == p.lcm);
      if (!chain) next.push_back(std::move(p));
    }
    for (auto& p : kept) {
      if (!lh.coprime(polys_[p.first].leading_exponent())) next.push_back(std::move(p));
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> basis;
    basis.reserve(basis_.size() + 1);
    for (auto g : basis_) {
      if (!lh.divides(polys_[g].leading_exponent())) basis.push_back(g);
    }
    basis.push_back(hi);
    basis_ = std::move(basis);
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal = active();
    std::vector<Polynomial> out;
    out.reserve(minimal.size());
    for (const auto& g : minimal) {
      const Term& lt = g.leading_term();
      Polynomial reduced = reduce(g.tail(), minimal, order_);
      out.push_back((reduced + Polynomial::monomial(g.ring(), lt.coeff, lt.exponents, order_))
                        .monic());
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      return order_.compare(a.leading_exponent(), b.leading_exponent()) < 0;
    });
    return out;
  }

  MonomialOrder order_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> basis_;
  std::vector<CriticalPair> pairs_;
};

// Monomials outside the leading-term ideal of a zero-dimensional basis. They form an
// order ideal, so a breadth-first walk upward from 1 finds them all.
std::vector<ExponentVector> staircase(const std::vector<Polynomial>& gb, std::size_t arity) {
  auto standard = [&gb](const ExponentVector& u) { return find_reducer(u, gb) == nullptr; };
  std::vector<ExponentVector> out;
  const ExponentVector origin(arity);
  if (!standard(origin)) return out;
  std::unordered_set<ExponentVector, ExponentVectorHash> seen{origin};
  std::vector<ExponentVector> frontier{origin};
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& u : frontier) {
      out.push_back(u);
      for (std::size_t i = 0; i < arity; ++i) {
        ExponentVector v = u + ExponentVector::unit(arity, i);
        if (standard(v) && seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return out;
}

bool zero_dimensional(const std::vector<Polynomial>& gb, std::size_t arity) {
  for (std::size_t i = 0; i < arity; ++i) {
    const bool found = std::any_of(gb.begin(), gb.end(), [i](const Polynomial& g) {
      const auto& u = g.leading_exponent();
      return u.total_degree() == u[i];
    });
    if (!found) return false;
  }
  return true;
}

// FGLM for a zero-dimensional reduced basis: walk monomials upward in the target order
// and detect linear dependencies among the normal forms of m * seed. With seed = 1 this
// is a change of order; in general the result is a reduced basis of I : seed.
std::vector<Polynomial> fglm(const std::vector<Polynomial>& gb, MonomialOrder source,
                             MonomialOrder target, const Polynomial& seed) {
  const RingContext& ring = gb.front().ring();
  const std::size_t n = ring.arity();
  const auto basis_monomials = staircase(gb, n);
  std::unordered_map<ExponentVector, std::size_t, ExponentVectorHash> coordinate;
  for (std::size_t k = 0; k < basis_monomials.size(); ++k) coordinate[basis_monomials[k]] = k;
  const std::size_t dim = basis_monomials.size();

  struct Row {
    std::vector<Rational> v;
    std::size_t pivot;
    std::vector<Rational> comb;  // over the new standard monomials
  };
  std::vector<Row> rows;
  std::vector<ExponentVector> staircase_new;
  std::unordered_map<ExponentVector, Polynomial, ExponentVectorHash> normal_forms;
  std::vector<Polynomial> result;
  std::vector<ExponentVector> leading;

  auto by_target = [target](const ExponentVector& a, const ExponentVector& b) {
    return target.compare(a, b) < 0;
  };
  std::set<ExponentVector, decltype(by_target)> candidates(by_target);
  candidates.insert(ExponentVector(n));

  while (!candidates.empty()) {
    const ExponentVector m = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(leading.begin(), leading.end(), [&](const auto& l) { return l.divides(m); })) continue;

    Polynomial nf(ring, source);
    if (m.is_zero()) {
      nf = reduce(seed.with_order(source), gb, source);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        ExponentVector parent = m;
        parent.set(i, m[i] - 1);
        const auto it = normal_forms.find(parent);
        if (it == normal_forms.end()) continue;
        nf = reduce(it->second * Polynomial::variable(ring, i, source), gb, source);
        break;
      }
    }

    std::vector<Rational> v(dim);
    for (const auto& t : nf.terms()) v[coordinate.at(t.exponents)] = t.coeff;
    std::vector<Rational> comb(staircase_new.size() + 1);
    comb.back() = 1;
    for (const auto& row : rows) {
      if (v[row.pivot] == 0) continue;
      const Rational alpha = v[row.pivot];
      for (std::size_t j = 0; j < dim; ++j) {
        if (row.v[j] != 0) v[j] -= alpha * row.v[j];
      }
      for (std::size_t j = 0; j < row.comb.size(); ++j) {
        if (row.comb[j] != 0) comb[j] -= alpha * row.comb[j];
      }
    }
    const auto pivot = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    if (pivot == v.end()) {
      // comb.back() * NF(m) + sum comb[j] NF(b_j) = 0 with comb.back() = 1.
      std::vector<Term> terms{{Rational(1), m}};
      for (std::size_t j = 0; j + 1 < comb.size(); ++j) {
        if (comb[j] != 0) terms.push_back({comb[j], staircase_new[j]});
      }
      result.push_back(Polynomial::from_terms(ring, std::move(terms), target));
      leading.push_back(m);
      continue;
    }
    const auto index = static_cast<std::size_t>(pivot - v.begin());
    const Rational inv = 1 / v[index];
    for (auto& q : v) q *= inv;
    for (auto& q : comb) q *= inv;
    rows.push_back({std::move(v), index, std::move(comb)});
    staircase_new.push_back(m);
    normal_forms.emplace(m, std::move(nf));
    for (std::size_t i = 0; i < n; ++i) candidates.insert(m + ExponentVector::unit(n, i));
  }
  std::sort(result.begin(), result.end(), [target](const Polynomial& a, const Polynomial& b) {
    return target.compare(a.leading_exponent(), b.leading_exponent()) < 0;
  });
  return result;
}

bool vanishes_at_origin(const Polynomial& p) { return p.constant_term() == 0; }

void check_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
}

std::vector<Polynomial> dedupe(std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    if (std::none_of(out.begin(), out.end(), [&](const Polynomial& h) { return h.monic() == m; })) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Elements of a basis of the extended ring that do not involve the auxiliary variable,
// mapped back into `ring`.
std::vector<Polynomial> eliminate_auxiliary(const std::vector<Polynomial>& generators,
                                            const RingContext& ring) {
  const auto basis = buchberger(generators, MonomialOrder::elimination());
  const std::size_t t = ring.arity();
  std::vector<Polynomial> out;
  for (const auto& g : basis) {
    // In the block order a t-free leading monomial forces a t-free polynomial.
    if (g.leading_exponent()[t] == 0) out.push_back(g.truncated(ring));
  }
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators,
                                   MonomialOrder order) {
  if (order.kind() == OrderKind::lex) {
    // Lex suffers from coefficient growth; for zero-dimensional ideals it is much cheaper
    // to go through grevlex and convert.
    const auto base = GroebnerEngine(MonomialOrder::grevlex()).run(generators);
    if (!base.empty() && zero_dimensional(base, base.front().ring().arity())) {
      const auto one = Polynomial::constant(base.front().ring(), 1, MonomialOrder::grevlex());
      return fglm(base, MonomialOrder::grevlex(), order, one);
    }
  }
  return GroebnerEngine(order).run(generators);
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, MonomialOrder order) {
  Polynomial work = p.with_order(order);
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* reducer = find_reducer(lt.exponents, basis);
    if (reducer == nullptr) {
      remainder.push_back(lt);
      work = work.tail();
      continue;
    }
    work = work.subtract_multiple(lt.coeff / reducer->leading_coeff(),
                                  lt.exponents - reducer->leading_exponent(), *reducer);
  }
  return Polynomial::from_terms(p.ring(), std::move(remainder), order);
}

struct Ideal::Cache {
  std::array<std::once_flag, 4> once;
  std::array<std::vector<Polynomial>, 4> bases;
};

Ideal::Ideal(RingContext ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingContext ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(RingContext ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::maximal(RingContext ring) { return maximal_power(std::move(ring), 1); }

Ideal Ideal::maximal_power(RingContext ring, unsigned k) {
  std::vector<Polynomial> gens;
  for (const auto& u : monomials_of_degree(ring.arity(), k)) {
    gens.push_back(Polynomial::monomial(ring, 1, u));
  }
  return Ideal(std::move(ring), std::move(gens));
}

const std::vector<Polynomial>& Ideal::groebner_basis(MonomialOrder order) const {
  const auto slot = static_cast<std::size_t>(order.kind());
  std::call_once(cache_->once[slot],
                 [&] { cache_->bases[slot] = buchberger(generators_, order); });
  return cache_->bases[slot];
}

Polynomial Ideal::normal_form(const Polynomial& p, MonomialOrder order) const {
  if (!(p.ring() == ring_)) throw RingMismatch();
  return reduce(p, groebner_basis(order), order);
}

bool Ideal::member(const Polynomial& p) const { return normal_form(p).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  check_same_ring(*this, other);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [this](const Polynomial& g) { return member(g); });
}

bool Ideal::is_zero() const { return generators_.empty(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_m_primary() const {
  if (is_zero()) return false;
  const auto& gb = groebner_basis();
  for (std::size_t i = 0; i < ring_.arity(); ++i) {
    const bool found = std::any_of(gb.begin(), gb.end(), [i](const Polynomial& g) {
      const auto& u = g.leading_exponent();
      return u.total_degree() == u[i];
    });
    if (!found) return false;
  }
  return true;
}

bool Ideal::is_supported_at_origin() const {
  if (is_unit()) return true;
  if (!is_m_primary()) return false;
  const std::size_t dim = colength();
  for (std::size_t i = 0; i < ring_.arity(); ++i) {
    const Polynomial x = Polynomial::variable(ring_, i);
    Polynomial r = Polynomial::constant(ring_, 1);
    for (std::size_t k = 0; k < dim && !r.is_zero(); ++k) r = normal_form(r * x);
    if (!r.is_zero()) return false;
  }
  return true;
}

std::vector<ExponentVector> Ideal::standard_monomials() const {
  if (!is_m_primary()) throw InfiniteColength();
  auto out = staircase(groebner_basis(), ring_.arity());
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [order](const auto& a, const auto& b) { return order.compare(a, b) < 0; });
  return out;
}

std::size_t Ideal::colength() const { return standard_monomials().size(); }

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same_ring(a, b);
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return Ideal(a.ring(), dedupe(std::move(gens)));
}

Ideal power(const Ideal& a, unsigned k) {
  Ideal result = Ideal::unit(a.ring());
  for (unsigned i = 0; i < k; ++i) result = product(result, a);
  return result;
}

Ideal multiply(const Ideal& a, const Polynomial& p) {
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(g * p);
  return Ideal(a.ring(), std::move(gens));
}

Ideal quotient(const Ideal& ideal, const Polynomial& p) {
  if (p.is_zero()) throw Error("ideal quotient by the zero polynomial");
  if (!(p.ring() == ideal.ring())) throw RingMismatch();
  const RingContext& ring = ideal.ring();
  if (ideal.member(p)) return Ideal::unit(ring);
  if (p.is_constant() || ideal.is_zero()) return ideal;
  if (ideal.is_m_primary()) {
    const auto order = MonomialOrder::grevlex();
    return Ideal(ring, fglm(ideal.groebner_basis(order), order, order, p));
  }

  const RingContext ext = ring.with_auxiliary();
  const auto order = MonomialOrder::elimination();
  const Polynomial t = Polynomial::variable(ext, ring.arity(), order);
  const Polynomial one = Polynomial::constant(ext, 1, order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(t * g.extended(ext).with_order(order));
  gens.push_back((one - t) * p.extended(ext).with_order(order));

  std::vector<Polynomial> out;
  for (const auto& g : eliminate_auxiliary(gens, ring)) {
    auto q = divide_exact(g, p.with_order(g.order()));
    if (!q) throw Error("internal: intersection generator not divisible by the divisor");
    out.push_back(std::move(*q));
  }
  return Ideal(ring, std::move(out));
}

Ideal saturation_by_variable(const Ideal& ideal, std::size_t index) {
  const RingContext& ring = ideal.ring();
  if (index >= ring.arity()) throw Error("variable index out of range");
  const RingContext ext = ring.with_auxiliary();
  const auto order = MonomialOrder::elimination();
  const Polynomial t = Polynomial::variable(ext, ring.arity(), order);
  const Polynomial x = Polynomial::variable(ext, index, order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.extended(ext).with_order(order));
  gens.push_back(t * x - Polynomial::constant(ext, 1, order));
  return Ideal(ring, eliminate_auxiliary(gens, ring));
}

bool local_member(const Polynomial& p, const Ideal& ideal) {
  if (ideal.member(p)) return true;
  // An ideal whose only zero is the origin is primary to m, so it equals its own
  // contraction from the local ring and global membership already decides.
  if (ideal.is_supported_at_origin()) return false;
  const Ideal colon = quotient(ideal, p);
  const auto& gb = colon.groebner_basis();
  return std::any_of(gb.begin(), gb.end(),
                     [](const Polynomial& g) { return !vanishes_at_origin(g); });
}

bool origin_isolated(const Ideal& ideal) {
  if (ideal.is_unit() || ideal.is_m_primary()) return true;
  const auto& gens = ideal.generators();
  if (std::any_of(gens.begin(), gens.end(),
                  [](const Polynomial& g) { return !vanishes_at_origin(g); })) {
    return true;
  }
  // V(I : m^∞) is the closure of V(I) minus the origin; (I : m^∞) = ∩_i (I : x_i^∞)
  // avoids m exactly when every factor does.
  for (std::size_t i = 0; i < ideal.ring().arity(); ++i) {
    const Ideal sat = saturation_by_variable(ideal, i);
    const auto& sg = sat.generators();
    if (std::all_of(sg.begin(), sg.end(), vanishes_at_origin)) return false;
  }
  return true;
}

std::optional<std::size_t> local_colength(const Ideal& ideal, unsigned cap) {
  if (!origin_isolated(ideal)) return std::nullopt;
  const RingContext& ring = ideal.ring();
  // colength(I + m^0) = 0; stop at the first N with I + m^N = I + m^(N+1).
  std::size_t previous = 0;
  for (unsigned n = 0; n <= cap; ++n) {
    const std::size_t current = sum(ideal, Ideal::maximal_power(ring, n + 1)).colength();
    if (current == previous) return current;
    previous = current;
  }
  throw DegreeCapExceeded(cap);
}

std::size_t quotient_dimension(const Ideal& larger, const Ideal& smaller, unsigned cap) {
  check_same_ring(larger, smaller);
  if (!larger.contains(smaller)) throw HypothesisError("the smaller ideal is not contained in the larger one");
  if (smaller.contains(larger)) return 0;
  if (larger.is_supported_at_origin() && smaller.is_supported_at_origin()) {
    return smaller.colength() - larger.colength();
  }
  const auto big = local_colength(larger, cap);
  const auto small = local_colength(smaller, cap);
  if (!big || !small) throw InfiniteColength();
  return *small - *big;
}

}  // namespace singulens
