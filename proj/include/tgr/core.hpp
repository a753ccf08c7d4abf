#ifndef TGR_CORE_HPP
#define TGR_CORE_HPP

// Term graphs: rooted, ordered, labelled graphs whose nodes are all reachable
// from the root. Bottom ("bot") and variables ("$x") are ordinary nullary
// symbols here; only the operations parametrised by a SymbolSet treat them
// as holes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgr/error.hpp"

namespace tgr {

using Symbol = std::string;
using NodeId = std::uint32_t;

/// A path from the root: the i-th entry selects the i-th successor.
using Position = std::vector<std::size_t>;

/// Image of each source node (indexed by source NodeId).
using NodeMap = std::vector<NodeId>;

inline constexpr std::string_view bottom_symbol = "bot";

bool is_bottom(std::string_view symbol) noexcept;
bool is_variable(std::string_view symbol) noexcept;

class Signature {
 public:
  Signature();

  /// Records `symbol` with `arity`. Re-declaring with a different arity, or
  /// giving bot/variables a non-zero arity, throws GraphError(arity_mismatch).
  void declare(std::string_view symbol, std::size_t arity);

  /// Variables are implicitly nullary and always known.
  std::optional<std::size_t> arity(std::string_view symbol) const;

  const std::map<Symbol, std::size_t, std::less<>>& symbols() const noexcept {
    return symbols_;
  }

 private:
  std::map<Symbol, std::size_t, std::less<>> symbols_;
};

struct Node {
  Symbol label;
  std::vector<NodeId> successors;

  bool operator==(const Node&) const = default;
};

class TermGraph {
 public:
  /// The single-node graph labelled bot.
  TermGraph();

  /// Takes ownership of a node table. Successors must be in range and every
  /// node reachable from `root`; otherwise throws GraphError. Arity is not
  /// checked here (no signature); see validate().
  TermGraph(std::vector<Node> nodes, NodeId root);

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return root_; }
  bool contains(NodeId n) const noexcept { return n < nodes_.size(); }

  const Node& node(NodeId n) const;
  const Symbol& label(NodeId n) const { return node(n).label; }
  std::span<const NodeId> successors(NodeId n) const { return node(n).successors; }
  std::span<const Node> nodes() const noexcept { return nodes_; }

  bool operator==(const TermGraph&) const = default;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

/// Keeps only the nodes reachable from `root`, renumbered in breadth-first
/// order. Used wherever a construction may orphan nodes.
TermGraph collect_garbage(std::vector<Node> nodes, NodeId root);

struct RawNode {
  std::string name;
  Symbol label;
  std::vector<std::string> successors;
};

/// A named node table as it appears in a source file.
struct RawGraph {
  std::string root;
  std::vector<RawNode> nodes;
};

/// Checks a named node table against `sig` and returns the term graph whose
/// NodeId i is raw.nodes[i]. Unreachable nodes are rejected, not dropped.
TermGraph validate(const RawGraph& raw, const Signature& sig);

/// Nodes in order of their least position (shortest, then lexicographic).
std::vector<NodeId> bfs_order(const TermGraph& g);

/// Depth of every node, indexed by NodeId.
std::vector<std::size_t> depths(const TermGraph& g);

std::size_t depth(const TermGraph& g, NodeId n);

std::optional<NodeId> node_at(const TermGraph& g, const Position& position);

Position least_position(const TermGraph& g, NodeId n);

/// All positions of `n` whose length is at most `max_length`.
std::set<Position> positions_up_to(const TermGraph& g, NodeId n,
                                   std::size_t max_length);

/// Representative of an isomorphism class: nodes are numbered by least
/// position, so node 0 is the root.
class CanonicalTermGraph {
 public:
  CanonicalTermGraph();

  const TermGraph& graph() const noexcept { return graph_; }
  operator const TermGraph&() const noexcept { return graph_; }
  std::size_t size() const noexcept { return graph_.size(); }
  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const CanonicalTermGraph& a, const CanonicalTermGraph& b) {
    return a.hash_ == b.hash_ && a.graph_ == b.graph_;
  }

 private:
  friend CanonicalTermGraph canonicalize(const TermGraph& g);
  explicit CanonicalTermGraph(TermGraph g);

  TermGraph graph_;
  std::size_t hash_ = 0;
};

CanonicalTermGraph canonicalize(const TermGraph& g);

/// Nullary symbols at which the homomorphism conditions are suspended.
class SymbolSet {
 public:
  SymbolSet() = default;
  SymbolSet(std::initializer_list<Symbol> symbols);

  static SymbolSet none() { return {}; }
  static SymbolSet bottom() { return {Symbol(bottom_symbol)}; }
  /// Every "$"-prefixed symbol.
  static SymbolSet variables();

  bool contains(std::string_view symbol) const;

 private:
  std::set<Symbol, std::less<>> symbols_;
  bool all_variables_ = false;
};

/// The forced map from `src` (rooted at src_root) into `dst` (rooted at
/// dst_root) when one satisfying the homomorphism conditions outside `holes`
/// exists. With `injective`, images must be pairwise distinct.
std::optional<NodeMap> forced_map(const TermGraph& src, NodeId src_root,
                                  const TermGraph& dst, NodeId dst_root,
                                  const SymbolSet& holes, bool injective = false);

std::optional<NodeMap> delta_hom(const TermGraph& g, const TermGraph& h,
                                 const SymbolSet& holes);

bool iso(const TermGraph& g, const TermGraph& h);

/// Maximally shared graph with the same unravelling.
CanonicalTermGraph collapse(const TermGraph& g);

bool bisimilar(const TermGraph& g, const TermGraph& h);

/// The unravelling of `g` cut at depth `d`: a term tree whose nodes at depth
/// d are bot. Nodes are produced in breadth-first order, so the result is
/// already canonical.
TermGraph unravel_to_depth(const TermGraph& g, std::size_t d);

TermGraph subgraph(const TermGraph& g, NodeId n);

/// Every node has exactly one position.
bool is_term_tree(const TermGraph& g);

}  // namespace tgr

template <>
struct std::hash<tgr::CanonicalTermGraph> {
  std::size_t operator()(const tgr::CanonicalTermGraph& g) const noexcept {
    return g.hash();
  }
};

#endif  // TGR_CORE_HPP
