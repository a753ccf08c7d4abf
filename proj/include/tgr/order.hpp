#ifndef TGR_ORDER_HPP
#define TGR_ORDER_HPP

// The partial order on partial term graphs (g <= h iff a bot-homomorphism
// g -> h exists), greatest lower bounds, local truncation and the limit
// inferior of finite trace prefixes.

#include <optional>
#include <span>

#include "tgr/core.hpp"
#include "tgr/limits.hpp"

namespace tgr {

/// Term graphs over the signature extended with bot. Same representation;
/// see is_total().
using PartialTermGraph = TermGraph;

bool is_total(const TermGraph& g);

bool leq_bot(const TermGraph& g, const TermGraph& h);

/// Synchronised product from (root, root): a pair keeps the common label and
/// pairs up successors when both labels agree, and becomes bot otherwise.
CanonicalTermGraph glb(const TermGraph& g, const TermGraph& h);

CanonicalTermGraph glb_set(std::span<const TermGraph> graphs);
CanonicalTermGraph glb_set(std::span<const CanonicalTermGraph> graphs);

/// Relabels `n` with bot, drops its outgoing edges and whatever became
/// unreachable. The root stays the root.
TermGraph local_truncate(const TermGraph& g, NodeId n);

struct LiminfResult {
  CanonicalTermGraph approximant;
  LimitStatus status = LimitStatus::inconclusive;
  /// Depth bound the approximant is claimed to (only for stable_to_depth).
  std::size_t depth = 0;
  /// Index from which the suffix glbs agree with the approximant.
  std::size_t stabilization_index = 0;
  std::optional<Cycle> cycle;
};

/// Limit inferior of a finite prefix.
///   exact            the sequence is eventually periodic (a `certified`
///                    cycle, or one found by hashing); the result is the glb
///                    of one period.
///   stable_to_depth  the depth-d truncations of the suffix glbs agree over
///                    at least the final `window` start indices.
///   inconclusive     otherwise; the approximant is the last truncation.
LiminfResult liminf(std::span<const CanonicalTermGraph> seq, const LimitOptions& options,
                    std::optional<Cycle> certified = std::nullopt);

}  // namespace tgr

#endif  // TGR_ORDER_HPP
