#ifndef TGR_REWRITE_HPP
#define TGR_REWRITE_HPP

// Term graph rules, matching, reduction steps and reduction strategies.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tgr/core.hpp"
#include "tgr/limits.hpp"
#include "tgr/terms.hpp"

namespace tgr {

/// A rule as written: one node table holding both sides.
struct RawRule {
  std::string name;
  std::string lhs;
  std::string rhs;
  std::vector<RawNode> nodes;
};

struct Rule {
  std::string name;
  /// Shared body; every node is reachable from lhs_root or rhs_root.
  std::vector<Node> body;
  NodeId lhs_root = 0;
  NodeId rhs_root = 0;
  /// The left-hand side rooted at lhs_root, in body numbering restricted to
  /// the nodes reachable from it.
  TermGraph lhs;
  /// lhs node -> body node.
  std::vector<NodeId> lhs_to_body;
  /// body node -> lhs node, absent for nodes outside the left-hand side.
  std::vector<std::optional<NodeId>> body_to_lhs;

  /// The right-hand side as a term graph over the body.
  TermGraph rhs() const;
};

/// Checks a raw rule against `sig`. Body NodeId i is raw.nodes[i].
Rule validate_rule(const RawRule& raw, const Signature& sig);

/// No variable node has more than one incoming edge in the left-hand side.
bool is_left_linear(const Rule& rule);

class Grs {
 public:
  Grs() = default;
  /// Throws RewriteError(duplicate_rule) on repeated names.
  Grs(Signature sig, std::vector<Rule> rules);

  const Signature& signature() const noexcept { return sig_; }
  std::span<const Rule> rules() const noexcept { return rules_; }
  const Rule* find(std::string_view name) const;

 private:
  Signature sig_;
  std::vector<Rule> rules_;
};

/// The forced variable-homomorphism from the rule's left-hand side into `g`
/// rooted at `n`, indexed by lhs node.
std::optional<NodeMap> match(const Rule& rule, const TermGraph& g, NodeId n);

struct Redex {
  std::size_t rule = 0;
  NodeId node = 0;
};

/// Every match, ordered by the node's least position and then by rule order.
std::vector<Redex> find_redexes(const Grs& grs, const TermGraph& g);

/// Copies the right-hand side into `g`, redirects the edges into the redex
/// to the contractum and collects garbage. `phi` must come from match().
TermGraph pre_reduce(const TermGraph& g, const Rule& rule, NodeId n, const NodeMap& phi);

struct Step {
  CanonicalTermGraph source;
  CanonicalTermGraph target;
  std::string rule;
  NodeId redex = 0;
  Position redex_position;
  std::size_t redex_depth = 0;
  /// canonicalize(local_truncate(source, redex)).
  CanonicalTermGraph context;

  bool operator==(const Step&) const = default;
};

/// Throws RewriteError(no_match).
Step reduce_step(const CanonicalTermGraph& g, const Rule& rule, NodeId n);

struct LeftmostOutermost {};

struct ScriptStep {
  std::string rule;
  Position position;
};

using Script = std::vector<ScriptStep>;
using Strategy = std::variant<LeftmostOutermost, Script>;

struct Trace {
  CanonicalTermGraph initial;
  std::vector<Step> steps;
  Termination termination = Termination::step_budget;
  /// Over graph indices (initial = 0); set with cycle_detected.
  std::optional<Cycle> cycle;

  std::vector<CanonicalTermGraph> graphs() const;
  std::vector<CanonicalTermGraph> contexts() const;
};

/// Reduces until a normal form, `max_steps` steps, or (leftmost-outermost
/// only) a repeated graph. A script that runs out ends as step_budget.
/// An inapplicable script step throws RewriteError(scripted_redex_invalid)
/// carrying its index.
Trace run(const CanonicalTermGraph& g, const Grs& grs, const Strategy& strategy,
          std::size_t max_steps);

/// Both sides unravelled into terms. Cyclic sides need `bound`; the
/// unravelling must then fit within it.
TermRule unravel_rule(const Rule& rule, std::optional<std::size_t> bound = std::nullopt);

}  // namespace tgr

#endif  // TGR_REWRITE_HPP
