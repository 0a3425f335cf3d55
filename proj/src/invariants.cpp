#include "singulens/invariants.hpp"

#include <algorithm>
#include <set>

#include "singulens/errors.hpp"
#include "singulens/sections.hpp"

namespace singulens {

Ideal jacobian_ideal(const Polynomial& f) {
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.ring().arity(); ++i) partials.push_back(f.partial_derivative(i));
  return Ideal(f.ring(), std::move(partials));
}

std::optional<std::size_t> milnor_number(const Polynomial& f, unsigned cap) {
  return local_colength(jacobian_ideal(f), cap);
}

std::optional<std::size_t> tjurina_number(const Polynomial& f, unsigned cap) {
  return local_colength(sum(Ideal(f.ring(), {f}), jacobian_ideal(f)), cap);
}

namespace {

// Reduced row echelon form of the augmented system [A | 1]; nullopt when inconsistent.
struct Echelon {
  std::vector<std::vector<Rational>> rows;  // each row has n+1 entries
  std::vector<std::size_t> pivots;
};

std::optional<Echelon> solve_unit_system(const std::vector<ExponentVector>& exponents,
                                         std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& u : exponents) {
    std::vector<Rational> row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = u[i];
    row[n] = 1;
    m.push_back(std::move(row));
  }
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational factor = m[k][c];
      for (std::size_t j = 0; j <= n; ++j) m[k][j] -= factor * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < m.size(); ++k) {
    if (m[k][n] != 0) return std::nullopt;
  }
  m.resize(r);
  e.rows = std::move(m);
  return e;
}

}  // namespace

std::optional<WeightSystem> find_weights(const Polynomial& f) {
  if (f.is_zero()) throw Error("find_weights needs a nonzero polynomial");
  const std::size_t n = f.ring().arity();
  std::vector<ExponentVector> exponents;
  for (const auto& t : f.terms()) exponents.push_back(t.exponents);
  const auto echelon = solve_unit_system(exponents, n);
  if (!echelon) return std::nullopt;

  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(echelon->pivots.begin(), echelon->pivots.end(), c) == echelon->pivots.end()) {
      free.push_back(c);
    }
  }
  // Free weights range over 1/2, ..., 1/12; among positive solutions prefer the smallest
  // sum, then the smallest maximal weight, then lexicographically smallest.
  constexpr unsigned kMaxFree = 3;
  constexpr unsigned kLargestDenominator = 12;
  if (free.size() > kMaxFree) return std::nullopt;

  std::optional<std::vector<Rational>> best;
  auto better = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational sa = 0, sb = 0;
    for (const auto& x : a) sa += x;
    for (const auto& x : b) sb += x;
    if (sa != sb) return sa < sb;
    const Rational ma = *std::max_element(a.begin(), a.end());
    const Rational mb = *std::max_element(b.begin(), b.end());
    if (ma != mb) return ma < mb;
    return a < b;
  };
  std::vector<Rational> assignment(free.size());
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (k == free.size()) {
      std::vector<Rational> w(n);
      for (std::size_t j = 0; j < free.size(); ++j) w[free[j]] = assignment[j];
      for (std::size_t r = 0; r < echelon->pivots.size(); ++r) {
        Rational v = echelon->rows[r][n];
        for (std::size_t j = 0; j < free.size(); ++j) v -= echelon->rows[r][free[j]] * assignment[j];
        w[echelon->pivots[r]] = v;
      }
      if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x <= 0; })) return;
      if (!best || better(w, *best)) best = w;
      return;
    }
    for (unsigned d = 2; d <= kLargestDenominator; ++d) {
      assignment[k] = Rational(1, d);
      self(self, k + 1);
    }
  };
  search(search, 0);
  if (!best) return std::nullopt;
  WeightSystem w(std::move(*best));
  if (!euler_check(f, w)) throw Error("internal: weight solution fails the Euler check");
  return w;
}

std::optional<SqhCertificate> sqh_obstruction(const Polynomial& g, const Polynomial& h) {
  if (!(g.ring() == h.ring())) throw RingMismatch();
  if (g.is_zero() || !g.is_homogeneous()) throw HypothesisError("g is not homogeneous");
  const auto d = g.total_degree();
  if (d < 3) throw HypothesisError("g has degree " + std::to_string(d) + " < 3");
  if (!h.is_zero() && (!h.is_homogeneous() || h.total_degree() != d + 1)) {
    throw HypothesisError("h is not homogeneous of degree " + std::to_string(d + 1));
  }
  const Ideal jac = jacobian_ideal(g);
  if (!jac.is_m_primary()) {
    throw HypothesisError("Jac(g) is not m-primary: g has no isolated singularity at 0");
  }
  if (jac.member(h)) return std::nullopt;
  return SqhCertificate{g, h, static_cast<unsigned>(d)};
}

QHVerdict is_quasi_homogeneous(const Polynomial& f, unsigned cap) {
  const Ideal jac = jacobian_ideal(f);
  if (!local_colength(jac, cap)) {
    throw HypothesisError("the singularity at the origin is not isolated");
  }
  QHVerdict verdict;
  verdict.quasi_homogeneous = local_member(f, jac);
  if (!f.is_zero()) {
    if (auto w = find_weights(f)) verdict.witness = std::move(w);
  }
  if (!verdict.quasi_homogeneous && !f.is_zero()) {
    const auto parts = f.homogeneous_components();
    if (parts.size() == 2) {
      const auto& [d, g] = *parts.begin();
      const auto& [e, h] = *std::next(parts.begin());
      if (e == d + 1 && d >= 3 && jacobian_ideal(g).is_m_primary() && sqh_obstruction(g, h)) {
        verdict.obstruction = h;
      }
    }
  }
  return verdict;
}

}  // namespace singulens
