#ifndef TGR_CONVERGE_HPP
#define TGR_CONVERGE_HPP

// Classifies a finite reduction trace under weak/strong metric and
// partial-order convergence.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgr/core.hpp"
#include "tgr/limits.hpp"
#include "tgr/metric.hpp"
#include "tgr/rewrite.hpp"

namespace tgr {

struct Certificate {
  enum class Kind {
    /// The graphs repeat with `cycle` and graphs `first`, `second` of one
    /// period are `distance` apart, so the sequence is not Cauchy.
    periodic_distance,
    /// The steps repeat with `cycle` and no redex in a period is deeper
    /// than `max_redex_depth`.
    bounded_redex_depth,
  };

  Kind kind = Kind::periodic_distance;
  Cycle cycle;
  std::size_t first = 0;
  std::size_t second = 0;
  Distance distance = Distance::zero();
  std::size_t max_redex_depth = 0;
};

std::string_view to_string(Certificate::Kind kind) noexcept;

struct Evidence {
  Termination termination = Termination::step_budget;
  std::size_t stabilization_index = 0;
  /// dist(g_i, g_i+1); metric disciplines only.
  std::vector<Distance> distances;
  /// strong-m only.
  std::vector<std::size_t> redex_depths;
  /// strong-p only: status of the liminf of the reduction contexts.
  std::optional<LimitStatus> context_status;
};

struct ConvergenceReport {
  Discipline discipline = Discipline::weak_m;
  Verdict verdict = Verdict::inconclusive;
  /// Present iff the verdict is converged-exact or converged-to-depth.
  std::optional<CanonicalTermGraph> limit;
  /// The depth bound of converged-to-depth.
  std::size_t depth = 0;
  /// Present iff the verdict is diverged.
  std::optional<Certificate> certificate;
  Evidence evidence;
};

ConvergenceReport analyze_weak_m(const Trace& trace, const LimitOptions& options);
ConvergenceReport analyze_weak_p(const Trace& trace, const LimitOptions& options);
ConvergenceReport analyze_strong_m(const Trace& trace, const LimitOptions& options);
ConvergenceReport analyze_strong_p(const Trace& trace, const LimitOptions& options);
ConvergenceReport analyze(const Trace& trace, Discipline discipline, const LimitOptions& options);

/// Re-checks a certificate against the trace it was produced from.
bool replay(const Certificate& certificate, const Trace& trace);

struct ConsistencyReport {
  ConvergenceReport weak_m, weak_p, strong_m, strong_p;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the implications between the disciplines on this trace:
/// a weak metric limit is also the weak liminf, and (for total traces)
/// strong metric convergence coincides with strong partial-order
/// convergence to a total limit.
ConsistencyReport cross_check(const Trace& trace, const LimitOptions& options);

}  // namespace tgr

#endif  // TGR_CONVERGE_HPP
