#include "tgr/core.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <utility>

namespace tgr {
namespace {

constexpr NodeId unset = std::numeric_limits<NodeId>::max();

std::string node_name(NodeId n) { return "n" + std::to_string(n); }

void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

bool is_bottom(std::string_view symbol) noexcept { return symbol == bottom_symbol; }

bool is_variable(std::string_view symbol) noexcept {
  return symbol.size() > 1 && symbol.front() == '$';
}

// ---------------------------------------------------------------- Signature

Signature::Signature() { symbols_.emplace(bottom_symbol, 0); }

void Signature::declare(std::string_view symbol, std::size_t arity) {
  if ((is_bottom(symbol) || is_variable(symbol)) && arity != 0) {
    throw GraphError(GraphErrc::arity_mismatch, std::string(symbol),
                     "symbol is nullary but used with " + std::to_string(arity) +
                         " successors");
  }
  if (is_variable(symbol)) return;
  auto it = symbols_.find(symbol);
  if (it == symbols_.end()) {
    symbols_.emplace(std::string(symbol), arity);
  } else if (it->second != arity) {
    throw GraphError(GraphErrc::arity_mismatch, std::string(symbol),
                     "declared with arity " + std::to_string(it->second) +
                         ", used with " + std::to_string(arity));
  }
}

std::optional<std::size_t> Signature::arity(std::string_view symbol) const {
  if (is_variable(symbol)) return 0;
  auto it = symbols_.find(symbol);
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- TermGraph

TermGraph::TermGraph() : nodes_{Node{Symbol(bottom_symbol), {}}}, root_(0) {}

TermGraph::TermGraph(std::vector<Node> nodes, NodeId root)
    : nodes_(std::move(nodes)), root_(root) {
  if (root_ >= nodes_.size()) {
    throw GraphError(GraphErrc::no_such_node, node_name(root_), "root out of range");
  }
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{root_};
  seen[root_] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId n = stack.back();
    stack.pop_back();
    for (NodeId s : nodes_[n].successors) {
      if (s >= nodes_.size()) {
        throw GraphError(GraphErrc::dangling_successor, node_name(n),
                         "successor " + std::to_string(s) + " out of range");
      }
      if (!seen[s]) {
        seen[s] = true;
        ++reached;
        stack.push_back(s);
      }
    }
  }
  if (reached != nodes_.size()) {
    auto it = std::find(seen.begin(), seen.end(), false);
    throw GraphError(GraphErrc::unreachable_node,
                     node_name(static_cast<NodeId>(it - seen.begin())),
                     "not reachable from the root");
  }
}

const Node& TermGraph::node(NodeId n) const {
  if (n >= nodes_.size()) {
    throw GraphError(GraphErrc::no_such_node, node_name(n), "node out of range");
  }
  return nodes_[n];
}

TermGraph collect_garbage(std::vector<Node> nodes, NodeId root) {
  std::vector<NodeId> rename(nodes.size(), unset);
  std::vector<NodeId> order{root};
  rename[root] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId s : nodes[order[i]].successors) {
      if (rename[s] == unset) {
        rename[s] = static_cast<NodeId>(order.size());
        order.push_back(s);
      }
    }
  }
  std::vector<Node> kept;
  kept.reserve(order.size());
  for (NodeId old : order) {
    Node n = std::move(nodes[old]);
    for (NodeId& s : n.successors) s = rename[s];
    kept.push_back(std::move(n));
  }
  return TermGraph(std::move(kept), 0);
}

TermGraph validate(const RawGraph& raw, const Signature& sig) {
  std::unordered_map<std::string, NodeId> ids;
  for (std::size_t i = 0; i < raw.nodes.size(); ++i) {
    if (!ids.emplace(raw.nodes[i].name, static_cast<NodeId>(i)).second) {
      throw GraphError(GraphErrc::duplicate_node, raw.nodes[i].name,
                       "node defined twice");
    }
  }
  auto root = ids.find(raw.root);
  if (root == ids.end()) {
    throw GraphError(GraphErrc::no_such_node, raw.root, "root is not defined");
  }
  std::vector<Node> nodes;
  nodes.reserve(raw.nodes.size());
  for (const RawNode& rn : raw.nodes) {
    auto arity = sig.arity(rn.label);
    if (!arity) {
      throw GraphError(GraphErrc::unknown_symbol, rn.label,
                       "symbol of node " + rn.name + " is not in the signature");
    }
    if (*arity != rn.successors.size()) {
      throw GraphError(GraphErrc::arity_mismatch, rn.name,
                       "symbol " + rn.label + " has arity " + std::to_string(*arity) +
                           " but the node has " + std::to_string(rn.successors.size()) +
                           " successors");
    }
    Node n{rn.label, {}};
    for (const std::string& s : rn.successors) {
      auto it = ids.find(s);
      if (it == ids.end()) {
        throw GraphError(GraphErrc::dangling_successor, rn.name,
                         "successor " + s + " is not defined");
      }
      n.successors.push_back(it->second);
    }
    nodes.push_back(std::move(n));
  }
  try {
    return TermGraph(std::move(nodes), root->second);
  } catch (const GraphError& e) {
    if (e.code() != GraphErrc::unreachable_node) throw;
    // Report the source name rather than the internal id.
    NodeId bad = static_cast<NodeId>(std::stoul(e.node().substr(1)));
    throw GraphError(GraphErrc::unreachable_node, raw.nodes[bad].name,
                     "not reachable from root " + raw.root);
  }
}

// ---------------------------------------------------------------- positions

std::vector<NodeId> bfs_order(const TermGraph& g) {
  std::vector<bool> seen(g.size(), false);
  std::vector<NodeId> order{g.root()};
  seen[g.root()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId s : g.successors(order[i])) {
      if (!seen[s]) {
        seen[s] = true;
        order.push_back(s);
      }
    }
  }
  return order;
}

std::vector<std::size_t> depths(const TermGraph& g) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> d(g.size(), inf);
  std::deque<NodeId> queue{g.root()};
  d[g.root()] = 0;
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    for (NodeId s : g.successors(n)) {
      if (d[s] == inf) {
        d[s] = d[n] + 1;
        queue.push_back(s);
      }
    }
  }
  return d;
}

std::size_t depth(const TermGraph& g, NodeId n) {
  if (!g.contains(n)) {
    throw GraphError(GraphErrc::no_such_node, node_name(n), "depth of unknown node");
  }
  return depths(g)[n];
}

std::optional<NodeId> node_at(const TermGraph& g, const Position& position) {
  NodeId n = g.root();
  for (std::size_t i : position) {
    auto succ = g.successors(n);
    if (i >= succ.size()) return std::nullopt;
    n = succ[i];
  }
  return n;
}

Position least_position(const TermGraph& g, NodeId n) {
  if (!g.contains(n)) {
    throw GraphError(GraphErrc::no_such_node, node_name(n), "position of unknown node");
  }
  // First discovery in breadth-first order follows the least position.
  std::vector<std::pair<NodeId, std::size_t>> parent(g.size(), {unset, 0});
  std::vector<bool> seen(g.size(), false);
  std::deque<NodeId> queue{g.root()};
  seen[g.root()] = true;
  while (!queue.empty() && !seen[n]) {
    NodeId m = queue.front();
    queue.pop_front();
    auto succ = g.successors(m);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      if (!seen[succ[i]]) {
        seen[succ[i]] = true;
        parent[succ[i]] = {m, i};
        queue.push_back(succ[i]);
      }
    }
  }
  Position pos;
  for (NodeId m = n; m != g.root(); m = parent[m].first) pos.push_back(parent[m].second);
  std::reverse(pos.begin(), pos.end());
  return pos;
}

std::set<Position> positions_up_to(const TermGraph& g, NodeId n, std::size_t max_length) {
  if (!g.contains(n)) {
    throw GraphError(GraphErrc::no_such_node, node_name(n), "positions of unknown node");
  }
  std::set<Position> result;
  Position path;
  auto walk = [&](auto&& self, NodeId m) -> void {
    if (m == n) result.insert(path);
    if (path.size() == max_length) return;
    auto succ = g.successors(m);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      path.push_back(i);
      self(self, succ[i]);
      path.pop_back();
    }
  };
  walk(walk, g.root());
  return result;
}

// ---------------------------------------------------------------- canonical

CanonicalTermGraph::CanonicalTermGraph() : CanonicalTermGraph(TermGraph()) {}

CanonicalTermGraph::CanonicalTermGraph(TermGraph g) : graph_(std::move(g)) {
  std::size_t seed = graph_.size();
  for (const Node& n : graph_.nodes()) {
    hash_combine(seed, std::hash<std::string>{}(n.label));
    hash_combine(seed, n.successors.size());
    for (NodeId s : n.successors) hash_combine(seed, s);
  }
  hash_ = seed;
}

CanonicalTermGraph canonicalize(const TermGraph& g) {
  std::vector<NodeId> order = bfs_order(g);
  std::vector<NodeId> rename(g.size(), unset);
  for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<NodeId>(i);
  std::vector<Node> nodes;
  nodes.reserve(order.size());
  for (NodeId old : order) {
    Node n{g.label(old), {}};
    for (NodeId s : g.successors(old)) n.successors.push_back(rename[s]);
    nodes.push_back(std::move(n));
  }
  return CanonicalTermGraph(TermGraph(std::move(nodes), 0));
}

// ---------------------------------------------------------------- homs

SymbolSet::SymbolSet(std::initializer_list<Symbol> symbols) : symbols_(symbols) {}

SymbolSet SymbolSet::variables() {
  SymbolSet s;
  s.all_variables_ = true;
  return s;
}

bool SymbolSet::contains(std::string_view symbol) const {
  if (all_variables_ && is_variable(symbol)) return true;
  return symbols_.find(symbol) != symbols_.end();
}

std::optional<NodeMap> forced_map(const TermGraph& src, NodeId src_root,
                                  const TermGraph& dst, NodeId dst_root,
                                  const SymbolSet& holes, bool injective) {
  NodeMap image(src.size(), unset);
  std::vector<NodeId> preimage(injective ? dst.size() : 0, unset);
  std::vector<NodeId> work;
  auto assign = [&](NodeId s, NodeId d) {
    if (image[s] != unset) return image[s] == d;
    if (injective) {
      if (preimage[d] != unset) return false;
      preimage[d] = s;
    }
    image[s] = d;
    work.push_back(s);
    return true;
  };
  assign(src_root, dst_root);
  while (!work.empty()) {
    NodeId s = work.back();
    work.pop_back();
    const Node& sn = src.node(s);
    if (holes.contains(sn.label)) continue;
    const Node& dn = dst.node(image[s]);
    if (sn.label != dn.label || sn.successors.size() != dn.successors.size()) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < sn.successors.size(); ++i) {
      if (!assign(sn.successors[i], dn.successors[i])) return std::nullopt;
    }
  }
  return image;
}

std::optional<NodeMap> delta_hom(const TermGraph& g, const TermGraph& h,
                                 const SymbolSet& holes) {
  return forced_map(g, g.root(), h, h.root(), holes);
}

bool iso(const TermGraph& g, const TermGraph& h) {
  return g.size() == h.size() &&
         forced_map(g, g.root(), h, h.root(), SymbolSet::none(), true).has_value();
}

// ---------------------------------------------------------------- bisimulation

CanonicalTermGraph collapse(const TermGraph& g) {
  // Partition refinement on (label, successor classes) until stable.
  std::vector<std::size_t> cls(g.size());
  std::size_t count = 0;
  {
    std::map<std::string_view, std::size_t> by_label;
    for (NodeId n = 0; n < g.size(); ++n) {
      auto [it, fresh] = by_label.emplace(g.label(n), by_label.size());
      cls[n] = it->second;
    }
    count = by_label.size();
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> by_signature;
    std::vector<std::size_t> next(g.size());
    for (NodeId n = 0; n < g.size(); ++n) {
      std::vector<std::size_t> key{cls[n]};
      for (NodeId s : g.successors(n)) key.push_back(cls[s]);
      auto [it, fresh] = by_signature.emplace(std::move(key), by_signature.size());
      next[n] = it->second;
    }
    cls = std::move(next);
    if (by_signature.size() == count) break;
    count = by_signature.size();
  }
  std::vector<Node> quotient(count);
  std::vector<bool> filled(count, false);
  for (NodeId n = 0; n < g.size(); ++n) {
    if (filled[cls[n]]) continue;
    filled[cls[n]] = true;
    Node& q = quotient[cls[n]];
    q.label = g.label(n);
    for (NodeId s : g.successors(n)) q.successors.push_back(static_cast<NodeId>(cls[s]));
  }
  return canonicalize(TermGraph(std::move(quotient), static_cast<NodeId>(cls[g.root()])));
}

bool bisimilar(const TermGraph& g, const TermGraph& h) { return collapse(g) == collapse(h); }

// ---------------------------------------------------------------- unravelling

TermGraph unravel_to_depth(const TermGraph& g, std::size_t d) {
  struct Pending {
    NodeId source;
    std::size_t depth;
  };
  std::vector<Node> tree;
  std::vector<Pending> pending{{g.root(), 0}};
  for (std::size_t i = 0; i < pending.size(); ++i) {
    auto [source, at] = pending[i];
    if (at == d) {
      tree.push_back(Node{Symbol(bottom_symbol), {}});
      continue;
    }
    Node n{g.label(source), {}};
    for (NodeId s : g.successors(source)) {
      n.successors.push_back(static_cast<NodeId>(pending.size()));
      pending.push_back({s, at + 1});
    }
    tree.push_back(std::move(n));
  }
  return TermGraph(std::move(tree), 0);
}

TermGraph subgraph(const TermGraph& g, NodeId n) {
  if (!g.contains(n)) {
    throw GraphError(GraphErrc::no_such_node, node_name(n), "subgraph at unknown node");
  }
  return collect_garbage(std::vector<Node>(g.nodes().begin(), g.nodes().end()), n);
}

bool is_term_tree(const TermGraph& g) {
  std::vector<std::size_t> indegree(g.size(), 0);
  for (const Node& n : g.nodes()) {
    for (NodeId s : n.successors) ++indegree[s];
  }
  for (NodeId n = 0; n < g.size(); ++n) {
    if (indegree[n] != (n == g.root() ? 0u : 1u)) return false;
  }
  return true;
}

}  // namespace tgr
