#include "tgr/metric.hpp"

#include <cmath>
#include <vector>

namespace tgr {

double Distance::value() const noexcept {
  return zero_ ? 0.0 : std::ldexp(1.0, -static_cast<int>(exponent_));
}

std::string Distance::to_string() const {
  return zero_ ? std::string("0") : "2^-" + std::to_string(exponent_);
}

TermGraph truncate(const TermGraph& g, ExtendedDepth d) {
  if (!d) return g;
  std::vector<std::size_t> depth = depths(g);
  std::vector<Node> nodes(g.nodes().begin(), g.nodes().end());
  for (NodeId n = 0; n < nodes.size(); ++n) {
    if (depth[n] == *d) nodes[n] = Node{Symbol(bottom_symbol), {}};
  }
  // Nodes deeper than d are only reachable through the cut ones.
  return collect_garbage(std::move(nodes), g.root());
}

ExtendedDepth similarity_depth(const TermGraph& g, const TermGraph& h) {
  if (iso(g, h)) return std::nullopt;
  // Beyond the larger node count truncation is the identity, so the loop
  // stops by then.
  std::size_t e = 0;
  while (iso(truncate(g, e + 1), truncate(h, e + 1))) ++e;
  return e;
}

Distance dist(const TermGraph& g, const TermGraph& h) {
  ExtendedDepth d = similarity_depth(g, h);
  return d ? Distance::power(*d) : Distance::zero();
}

LimitResult metric_limit(std::span<const CanonicalTermGraph> seq, const LimitOptions& options,
                         std::optional<Cycle> certified) {
  if (seq.empty()) throw EmptyInput("metric_limit");
  LimitResult result;
  result.cycle = certified ? certified : find_cycle(seq);
  if (const auto& cycle = result.cycle) {
    result.stabilization_index = cycle->start;
    for (std::size_t j = cycle->start + 1; j < cycle->start + cycle->period; ++j) {
      if (!(seq[j] == seq[cycle->start])) {
        result.status = LimitStatus::divergent;
        result.witness = DivergenceWitness{*cycle, cycle->start, j, dist(seq[cycle->start], seq[j])};
        result.approximant = canonicalize(truncate(seq.back(), options.depth));
        return result;
      }
    }
    result.status = LimitStatus::exact;
    result.approximant = seq[cycle->start];
    return result;
  }

  const std::size_t n = seq.size();
  std::vector<CanonicalTermGraph> truncated(n);
  for (std::size_t i = 0; i < n; ++i) truncated[i] = canonicalize(truncate(seq[i], options.depth));
  std::size_t start = n - 1;
  while (start > 0 && truncated[start - 1] == truncated[n - 1]) --start;
  result.approximant = truncated[n - 1];
  result.stabilization_index = start;
  if (n - start >= options.window) {
    result.status = LimitStatus::stable_to_depth;
    result.depth = options.depth;
  }
  return result;
}

bool replay(const DivergenceWitness& witness, std::span<const CanonicalTermGraph> seq) {
  const Cycle& c = witness.cycle;
  if (c.period == 0 || c.start + c.period >= seq.size() + 1) return false;
  if (witness.first < c.start || witness.second <= witness.first ||
      witness.second >= c.start + c.period || witness.second >= seq.size()) {
    return false;
  }
  for (std::size_t i = c.start; i + c.period < seq.size(); ++i) {
    if (!(seq[i] == seq[i + c.period])) return false;
  }
  Distance d = dist(seq[witness.first], seq[witness.second]);
  return !d.is_zero() && d == witness.distance;
}

}  // namespace tgr
