#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singulens/genus.hpp"
#include "singulens/invariants.hpp"
#include "singulens/sections.hpp"

namespace singulens {

/// Stable names for the statements each certificate relies on.
namespace anchors {
inline constexpr std::string_view kLengthLowerBound = "length-lower-bound";
inline constexpr std::string_view kEqualityCriterion = "equality-criterion";
inline constexpr std::string_view kLogCanonicalEquality = "log-canonical-equality";
inline constexpr std::string_view kWeightedDescent = "weighted-homogeneous-descent";
inline constexpr std::string_view kGenusColength = "genus-as-colength";
inline constexpr std::string_view kOrdinaryIdeals = "ordinary-singularity-ideals";
inline constexpr std::string_view kWeightedIdeals = "weighted-homogeneous-ideals";
inline constexpr std::string_view kSqhJacobian = "sqh-jacobian-lemma";
inline constexpr std::string_view kLevelOneIdentity = "level-one-identity";
inline constexpr std::string_view kLevelOneContainment = "level-one-containment";
inline constexpr std::string_view kCounterexample = "counterexample-strict-length";
inline constexpr std::string_view kHodgeStrictness = "hodge-strictness(trusted)";
}  // namespace anchors

struct AnalyzerConfig {
  unsigned max_level = 3;
  unsigned degree_cap = kDefaultDegreeCap;
};

struct ScreenResult {
  /// The origin is an isolated point of V(f) ∩ V(Jac f) (or not on it at all).
  bool isolated = false;
  /// The origin is an isolated zero of Jac(f) alone (finite Milnor number).
  bool jacobian_isolated = false;
};

ScreenResult screen_isolated(const Polynomial& f);

struct LengthBound {
  std::size_t bound = 0;
  GenusResult genus;
};

/// g + 2 for n >= 3; HypothesisError for n < 3 or when the genus is unavailable.
LengthBound length_bound(const Polynomial& f, const SingularityClass& cls);

enum class EqualityKind { proven_at_level, proven_by_descent, unknown_up_to };

std::string_view to_string(EqualityKind kind);

struct EqualityVerdict {
  EqualityKind kind = EqualityKind::unknown_up_to;
  /// The proving level, or K for unknown_up_to.
  unsigned level = 0;
  /// level_results[k] = f^k lies in J_k at the origin, for the levels that were tested.
  std::vector<bool> level_results;
  /// The level-1 test failed: the generation criterion cannot hold at level 1.
  bool refuted_at_level1 = false;
  std::optional<DescentChain> descent;
};

/// Levelwise test of f^k ∈ J_k(f, I_0) at the origin for k = 0..K, stopping at the first
/// success. When weights are given and I_0 contains the span of rho(u) >= 1, a descent
/// chain at level 0 proves equality without Gröbner bases.
EqualityVerdict equality_certificate(const Polynomial& f, const Ideal& i0, unsigned max_level,
                                     const std::optional<WeightSystem>& weights = std::nullopt);

struct Certificate {
  std::string name;
  bool verdict = false;
  std::string citation;
  std::string detail;
};

struct AnalysisReport {
  Polynomial input;
  ScreenResult screen{};
  std::optional<SingularityClass> cls{};
  std::optional<std::size_t> milnor{};
  std::optional<std::size_t> tjurina{};
  std::optional<QHVerdict> qh{};
  std::optional<GenusResult> genus{};
  std::optional<std::size_t> length_lower_bound{};
  std::optional<EqualityVerdict> equality{};
  std::vector<Certificate> certificates{};
  std::vector<std::string> notes{};

  /// Every certificate verdict is true.
  bool all_certified() const;
};

/// Full pipeline: screen, classify, invariants, genus, bound, equality. Each stage that
/// does not apply leaves its field empty and records a note.
AnalysisReport analyze(const Polynomial& f, const AnalyzerConfig& config = {});

/// Names of the counterexample checks, in report order.
const std::vector<std::string>& counterexample_check_names();

/// Runs one named check on f = g + h (g lowest homogeneous part, h the rest).
Certificate run_counterexample_check(const Polynomial& f, std::string_view name);

/// The default polynomial x^4 + y^4 + z^4 + x y^2 z^2 in Q[x, y, z].
Polynomial default_counterexample();

struct CounterexampleReport {
  Polynomial input;
  std::vector<Certificate> certificates{};
  /// All checks hold, so the length is strictly larger than g + 2 (Hodge step trusted).
  bool strict_length = false;
  std::size_t genus = 0;
};

/// Runs every check; independent checks run concurrently. Results do not depend on the
/// execution order.
CounterexampleReport counterexample_suite(const std::optional<Polynomial>& f = std::nullopt);

}  // namespace singulens
