#ifndef TGR_METRIC_HPP
#define TGR_METRIC_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "tgr/core.hpp"
#include "tgr/limits.hpp"

namespace tgr {

/// Either 0 or 2^-d.
class Distance {
 public:
  static constexpr Distance zero() noexcept { return Distance(true, 0); }
  static constexpr Distance power(std::size_t exponent) noexcept {
    return Distance(false, exponent);
  }

  constexpr bool is_zero() const noexcept { return zero_; }
  constexpr std::size_t exponent() const noexcept { return exponent_; }
  double value() const noexcept;

  /// "0" or "2^-d".
  std::string to_string() const;

  friend constexpr bool operator==(Distance, Distance) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) noexcept {
    if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
    return b.exponent_ <=> a.exponent_;
  }

 private:
  constexpr Distance(bool zero, std::size_t exponent) noexcept
      : zero_(zero), exponent_(exponent) {}

  bool zero_;
  std::size_t exponent_;
};

/// nullopt stands for omega.
using ExtendedDepth = std::optional<std::size_t>;

/// Keeps nodes of depth <= d; those at depth exactly d become bot without
/// successors. d = omega returns g unchanged.
TermGraph truncate(const TermGraph& g, ExtendedDepth d);

/// omega when g and h are isomorphic, else the largest e with
/// truncate(g, e) iso truncate(h, e).
ExtendedDepth similarity_depth(const TermGraph& g, const TermGraph& h);

Distance dist(const TermGraph& g, const TermGraph& h);

/// Non-Cauchy witness: seq is periodic from cycle.start and the two witness
/// indices inside one period are `distance` apart, recurring every period.
struct DivergenceWitness {
  Cycle cycle;
  std::size_t first = 0;
  std::size_t second = 0;
  Distance distance = Distance::zero();
};

struct LimitResult {
  CanonicalTermGraph approximant;
  LimitStatus status = LimitStatus::inconclusive;
  std::size_t depth = 0;
  std::size_t stabilization_index = 0;
  std::optional<Cycle> cycle;
  std::optional<DivergenceWitness> witness;
};

/// Metric limit of a finite prefix.
///   exact            eventually constant.
///   divergent        eventually periodic with a non-trivial period.
///   stable_to_depth  the depth-d truncations agree over the final `window`
///                    entries.
///   inconclusive     otherwise.
LimitResult metric_limit(std::span<const CanonicalTermGraph> seq, const LimitOptions& options,
                         std::optional<Cycle> certified = std::nullopt);

/// Re-checks a witness against the sequence it was produced from.
bool replay(const DivergenceWitness& witness, std::span<const CanonicalTermGraph> seq);

}  // namespace tgr

#endif  // TGR_METRIC_HPP
