#include "tgr/rewrite.hpp"

#include <map>
#include <unordered_map>
#include <utility>

#include "tgr/order.hpp"

namespace tgr {

namespace {

/// Breadth-first from `start` over a body that need not be one term graph.
std::vector<NodeId> reach(const std::vector<Node>& body, NodeId start) {
  std::vector<bool> seen(body.size(), false);
  std::vector<NodeId> order{start};
  seen[start] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId s : body[order[i]].successors) {
      if (!seen[s]) {
        seen[s] = true;
        order.push_back(s);
      }
    }
  }
  return order;
}

bool has_cycle(const TermGraph& g) {
  enum Colour : char { white, grey, black };
  std::vector<Colour> colour(g.size(), white);
  std::vector<std::pair<NodeId, std::size_t>> stack{{g.root(), 0}};
  colour[g.root()] = grey;
  while (!stack.empty()) {
    auto& [n, next] = stack.back();
    auto succ = g.successors(n);
    if (next == succ.size()) {
      colour[n] = black;
      stack.pop_back();
      continue;
    }
    NodeId s = succ[next++];
    if (colour[s] == grey) return true;
    if (colour[s] == white) {
      colour[s] = grey;
      stack.emplace_back(s, 0);
    }
  }
  return false;
}

Term unravel_side(const TermGraph& side, std::optional<std::size_t> bound,
                  const std::string& rule, const char* which) {
  if (has_cycle(side)) {
    throw RewriteError(RewriteErrc::cyclic_rule_needs_bound,
                       rule + ": " + which + " is cyclic and has no finite unravelling");
  }
  Term t = to_term(unravel_to_depth(side, side.size()));
  if (bound && term_height(t) > *bound) {
    throw RewriteError(RewriteErrc::cyclic_rule_needs_bound,
                       rule + ": " + which + " unravels beyond depth " + std::to_string(*bound));
  }
  return t;
}

}  // namespace

TermGraph Rule::rhs() const { return collect_garbage(body, rhs_root); }

Rule validate_rule(const RawRule& raw, const Signature& sig) {
  std::map<std::string, NodeId, std::less<>> ids;
  for (const RawNode& n : raw.nodes) {
    if (!ids.emplace(n.name, static_cast<NodeId>(ids.size())).second) {
      throw GraphError(GraphErrc::duplicate_node, n.name, "node defined twice in rule " + raw.name);
    }
  }
  auto lookup = [&](const std::string& name, GraphErrc code, const std::string& what) {
    auto it = ids.find(name);
    if (it == ids.end()) throw GraphError(code, name, what);
    return it->second;
  };

  Rule rule;
  rule.name = raw.name;
  rule.lhs_root = lookup(raw.lhs, GraphErrc::no_such_node, "lhs of rule " + raw.name);
  rule.rhs_root = lookup(raw.rhs, GraphErrc::no_such_node, "rhs of rule " + raw.name);

  std::map<Symbol, std::string> variable_nodes;
  for (const RawNode& n : raw.nodes) {
    if (is_bottom(n.label)) {
      throw RewriteError(RewriteErrc::bottom_in_rule, raw.name + ": node " + n.name);
    }
    auto arity = sig.arity(n.label);
    if (!arity) throw GraphError(GraphErrc::unknown_symbol, n.label, "in rule " + raw.name);
    if (*arity != n.successors.size()) {
      throw GraphError(GraphErrc::arity_mismatch, n.name,
                       n.label + " expects " + std::to_string(*arity) + " successors");
    }
    if (is_variable(n.label)) {
      auto [it, fresh] = variable_nodes.emplace(n.label, n.name);
      if (!fresh) {
        throw RewriteError(RewriteErrc::duplicate_variable_node,
                           raw.name + ": " + n.label + " labels " + it->second + " and " + n.name);
      }
    }
    Node node{n.label, {}};
    for (const std::string& s : n.successors) {
      node.successors.push_back(
          lookup(s, GraphErrc::dangling_successor, "successor of " + n.name));
    }
    rule.body.push_back(std::move(node));
  }

  if (rule.lhs_root == rule.rhs_root) {
    throw RewriteError(RewriteErrc::lhs_equals_rhs, raw.name + ": lhs and rhs are one node");
  }
  if (is_variable(rule.body[rule.lhs_root].label)) {
    throw RewriteError(RewriteErrc::variable_at_lhs_root, raw.name);
  }

  rule.lhs_to_body = reach(rule.body, rule.lhs_root);
  rule.body_to_lhs.assign(rule.body.size(), std::nullopt);
  for (std::size_t i = 0; i < rule.lhs_to_body.size(); ++i) {
    rule.body_to_lhs[rule.lhs_to_body[i]] = static_cast<NodeId>(i);
  }
  std::vector<bool> reachable(rule.body.size(), false);
  for (NodeId n : rule.lhs_to_body) reachable[n] = true;
  for (NodeId n : reach(rule.body, rule.rhs_root)) reachable[n] = true;
  for (NodeId n = 0; n < rule.body.size(); ++n) {
    if (!reachable[n]) {
      throw GraphError(GraphErrc::unreachable_node, raw.nodes[n].name,
                       "not reachable from lhs or rhs of " + raw.name);
    }
    if (is_variable(rule.body[n].label) && !rule.body_to_lhs[n]) {
      throw RewriteError(RewriteErrc::variable_unreachable_from_lhs,
                         raw.name + ": " + rule.body[n].label);
    }
  }

  std::vector<Node> lhs_nodes;
  for (NodeId b : rule.lhs_to_body) {
    Node n{rule.body[b].label, {}};
    for (NodeId s : rule.body[b].successors) n.successors.push_back(*rule.body_to_lhs[s]);
    lhs_nodes.push_back(std::move(n));
  }
  rule.lhs = TermGraph(std::move(lhs_nodes), 0);
  return rule;
}

bool is_left_linear(const Rule& rule) {
  std::vector<std::size_t> indegree(rule.lhs.size(), 0);
  for (const Node& n : rule.lhs.nodes()) {
    for (NodeId s : n.successors) ++indegree[s];
  }
  for (NodeId n = 0; n < rule.lhs.size(); ++n) {
    if (is_variable(rule.lhs.label(n)) && indegree[n] > 1) return false;
  }
  return true;
}

Grs::Grs(Signature sig, std::vector<Rule> rules) : sig_(std::move(sig)), rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rules_[i].name == rules_[j].name) {
        throw RewriteError(RewriteErrc::duplicate_rule, rules_[i].name);
      }
    }
  }
}

const Rule* Grs::find(std::string_view name) const {
  for (const Rule& r : rules_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::optional<NodeMap> match(const Rule& rule, const TermGraph& g, NodeId n) {
  if (!g.contains(n)) return std::nullopt;
  return forced_map(rule.lhs, rule.lhs.root(), g, n, SymbolSet::variables());
}

std::vector<Redex> find_redexes(const Grs& grs, const TermGraph& g) {
  std::vector<Redex> out;
  auto rules = grs.rules();
  for (NodeId n : bfs_order(g)) {
    for (std::size_t r = 0; r < rules.size(); ++r) {
      if (match(rules[r], g, n)) out.push_back({r, n});
    }
  }
  return out;
}

TermGraph pre_reduce(const TermGraph& g, const Rule& rule, NodeId n, const NodeMap& phi) {
  std::vector<Node> nodes(g.nodes().begin(), g.nodes().end());
  std::vector<NodeId> image(rule.body.size());
  for (NodeId b = 0; b < rule.body.size(); ++b) {
    if (auto l = rule.body_to_lhs[b]) {
      image[b] = phi[*l];
    } else {
      image[b] = static_cast<NodeId>(nodes.size());
      nodes.push_back(Node{rule.body[b].label, {}});
    }
  }
  for (NodeId b = 0; b < rule.body.size(); ++b) {
    if (rule.body_to_lhs[b]) continue;
    for (NodeId s : rule.body[b].successors) nodes[image[b]].successors.push_back(image[s]);
  }
  const NodeId contractum = image[rule.rhs_root];
  for (Node& node : nodes) {
    for (NodeId& s : node.successors) {
      if (s == n) s = contractum;
    }
  }
  return collect_garbage(std::move(nodes), g.root() == n ? contractum : g.root());
}

Step reduce_step(const CanonicalTermGraph& g, const Rule& rule, NodeId n) {
  auto phi = match(rule, g, n);
  if (!phi) {
    throw RewriteError(RewriteErrc::no_match,
                       rule.name + " does not match at n" + std::to_string(n));
  }
  Step step;
  step.source = g;
  step.target = canonicalize(pre_reduce(g, rule, n, *phi));
  step.rule = rule.name;
  step.redex = n;
  step.redex_position = least_position(g, n);
  step.redex_depth = step.redex_position.size();
  step.context = canonicalize(local_truncate(g, n));
  return step;
}

std::vector<CanonicalTermGraph> Trace::graphs() const {
  std::vector<CanonicalTermGraph> out{initial};
  for (const Step& s : steps) out.push_back(s.target);
  return out;
}

std::vector<CanonicalTermGraph> Trace::contexts() const {
  std::vector<CanonicalTermGraph> out;
  for (const Step& s : steps) out.push_back(s.context);
  return out;
}

Trace run(const CanonicalTermGraph& g, const Grs& grs, const Strategy& strategy,
          std::size_t max_steps) {
  Trace trace;
  trace.initial = g;
  const Script* script = std::get_if<Script>(&strategy);
  std::unordered_map<CanonicalTermGraph, std::size_t> seen{{g, 0}};
  CanonicalTermGraph current = g;
  for (;;) {
    auto redexes = find_redexes(grs, current);
    if (redexes.empty()) {
      trace.termination = Termination::normal_form;
      return trace;
    }
    const std::size_t k = trace.steps.size();
    if (k == max_steps || (script && k == script->size())) {
      trace.termination = Termination::step_budget;
      return trace;
    }
    if (script) {
      const ScriptStep& s = (*script)[k];
      const Rule* rule = grs.find(s.rule);
      auto n = node_at(current, s.position);
      if (!rule || !n || !match(*rule, current, *n)) {
        throw RewriteError(RewriteErrc::scripted_redex_invalid,
                           "step " + std::to_string(k) + " (" + s.rule + ")", k);
      }
      trace.steps.push_back(reduce_step(current, *rule, *n));
    } else {
      const Redex& r = redexes.front();
      trace.steps.push_back(reduce_step(current, grs.rules()[r.rule], r.node));
    }
    current = trace.steps.back().target;
    if (script) continue;
    auto [it, fresh] = seen.emplace(current, trace.steps.size());
    if (!fresh) {
      trace.termination = Termination::cycle_detected;
      trace.cycle = Cycle{it->second, trace.steps.size() - it->second};
      return trace;
    }
  }
}

TermRule unravel_rule(const Rule& rule, std::optional<std::size_t> bound) {
  return TermRule{rule.name, unravel_side(rule.lhs, bound, rule.name, "lhs"),
                  unravel_side(rule.rhs(), bound, rule.name, "rhs")};
}

}  // namespace tgr
