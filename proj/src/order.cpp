#include "tgr/order.hpp"

#include <map>
#include <utility>
#include <vector>

#include "tgr/metric.hpp"

namespace tgr {

bool is_total(const TermGraph& g) {
  for (const Node& n : g.nodes()) {
    if (is_bottom(n.label)) return false;
  }
  return true;
}

bool leq_bot(const TermGraph& g, const TermGraph& h) {
  return delta_hom(g, h, SymbolSet::bottom()).has_value();
}

CanonicalTermGraph glb(const TermGraph& g, const TermGraph& h) {
  std::map<std::pair<NodeId, NodeId>, NodeId> ids;
  std::vector<std::pair<NodeId, NodeId>> pairs;
  auto intern = [&](NodeId a, NodeId b) {
    auto [it, fresh] = ids.emplace(std::pair{a, b}, static_cast<NodeId>(pairs.size()));
    if (fresh) pairs.emplace_back(a, b);
    return it->second;
  };
  intern(g.root(), h.root());
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    const Node& na = g.node(a);
    const Node& nb = h.node(b);
    Node n{Symbol(bottom_symbol), {}};
    if (na.label == nb.label && na.successors.size() == nb.successors.size()) {
      n.label = na.label;
      for (std::size_t k = 0; k < na.successors.size(); ++k) {
        n.successors.push_back(intern(na.successors[k], nb.successors[k]));
      }
    }
    nodes.push_back(std::move(n));
  }
  return canonicalize(TermGraph(std::move(nodes), 0));
}

namespace {

template <class G>
CanonicalTermGraph fold_glb(std::span<const G> graphs) {
  if (graphs.empty()) throw EmptyInput("glb_set");
  CanonicalTermGraph acc = canonicalize(graphs.front());
  for (std::size_t i = 1; i < graphs.size(); ++i) acc = glb(acc, graphs[i]);
  return acc;
}

}  // namespace

CanonicalTermGraph glb_set(std::span<const TermGraph> graphs) { return fold_glb(graphs); }

CanonicalTermGraph glb_set(std::span<const CanonicalTermGraph> graphs) {
  return fold_glb(graphs);
}

TermGraph local_truncate(const TermGraph& g, NodeId n) {
  if (!g.contains(n)) {
    throw GraphError(GraphErrc::no_such_node, "n" + std::to_string(n),
                     "local truncation at unknown node");
  }
  std::vector<Node> nodes(g.nodes().begin(), g.nodes().end());
  nodes[n] = Node{Symbol(bottom_symbol), {}};
  return collect_garbage(std::move(nodes), g.root());
}

LiminfResult liminf(std::span<const CanonicalTermGraph> seq, const LimitOptions& options,
                    std::optional<Cycle> certified) {
  if (seq.empty()) throw EmptyInput("liminf");
  LiminfResult result;
  result.cycle = certified ? certified : find_cycle(seq);
  if (result.cycle) {
    // Every suffix glb from the cycle start on is the glb of one period.
    result.approximant = glb_set(seq.subspan(result.cycle->start, result.cycle->period));
    result.status = LimitStatus::exact;
    result.stabilization_index = result.cycle->start;
    return result;
  }

  const std::size_t n = seq.size();
  const std::size_t d = options.depth;
  // Suffix glbs G[b] = glb(seq[b..n)), truncated at d.
  std::vector<CanonicalTermGraph> truncated(n);
  CanonicalTermGraph suffix = seq[n - 1];
  truncated[n - 1] = canonicalize(truncate(suffix, d));
  for (std::size_t b = n - 1; b-- > 0;) {
    suffix = glb(seq[b], suffix);
    truncated[b] = canonicalize(truncate(suffix, d));
  }
  std::size_t start = n - 1;
  while (start > 0 && truncated[start - 1] == truncated[n - 1]) --start;

  result.approximant = truncated[n - 1];
  result.stabilization_index = start;
  if (n - start >= options.window) {
    result.status = LimitStatus::stable_to_depth;
    result.depth = d;
  }
  return result;
}

}  // namespace tgr
