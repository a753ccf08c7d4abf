#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "tgr/order.hpp"

namespace tgr::testing {

const char* const fixpoint_source = R"(
termgraph g0 { root n0; n0: app(n1, n2); n1: Y; n2: f; }
rule rho1 {
  lhs l; rhs r;
  l: app(y, x); y: Y; x: $x;
  r: app(x, a); a: app(y2, x); y2: Y;
}
rule rho2 {
  lhs l; rhs r;
  l: app(y, x); y: Y; x: $x;
  r: app(x, l);
}
grs copying { use rho1; }
grs cyclic { use rho2; }
)";

const char* const weird_script_source = R"(
termgraph g0 { root n0; n0: f(n1, n2); n1: c; n2: c; }
termgraph g1 { root n0; n0: f(n1, n1); n1: c; }
rule rho1 { lhs l; rhs r; l: f(a, b); a: c; b: c; r: f(p, q); p: c; q: c; }
rule rho2 { lhs l; rhs r; l: f(a, b); a: c; b: c; r: f(s, s); s: c; }
grs weird { use rho1; use rho2; }
)";

const char* const weird_lo_source = R"(
termgraph g0 { root n0; n0: f(n1, n2); n1: c; n2: c; }
rule share { lhs l; rhs r; l: f(a, b); a: c; b: c; r: f(s, s); s: c; }
rule unshare { lhs l; rhs r; l: f(x, x); x: $x; r: f(a, b); a: c; b: c; }
grs weird { use unshare; use share; }
)";

const char* const from_source = R"(
termgraph start { root n0; n0: from(n1); n1: 0; }
rule from { lhs l; rhs r; l: from(x); x: $x; r: cons(x, t); t: from(sx); sx: s(x); }
grs nats { use from; }
)";

const char* const loop_source = R"(
termgraph a { root n0; n0: a; }
rule loop { lhs l; rhs r; l: a; r: a; }
grs spin { use loop; }
)";

TermGraph graph(std::string_view nodes) {
  std::string text(nodes);
  std::size_t colon = text.find(':');
  std::size_t begin = text.find_first_not_of(" \n");
  std::string root = text.substr(begin, colon - begin);
  Document doc = parse_document("termgraph t { root " + root + "; " + text + " }");
  return doc.graphs.front().graph;
}

TermGraph unshared_fcc() { return graph("n0: f(n1, n2); n1: c; n2: c;"); }
TermGraph shared_fcc() { return graph("n0: f(n1, n1); n1: c;"); }

TermGraph h0() { return TermGraph({Node{"app", {1, 0}}, Node{"f", {}}}, 0); }

TermGraph g_omega_cut(std::size_t d) {
  if (d == 0) return TermGraph();
  // Nodes 0..d-1 are the applications at depths 0..d-1, node d the shared f
  // and node d+1 the cut application at depth d.
  std::vector<Node> nodes;
  const NodeId f = static_cast<NodeId>(d);
  for (std::size_t k = 0; k < d; ++k) {
    nodes.push_back(Node{"app", {f, static_cast<NodeId>(k + 1 == d ? d + 1 : k + 1)}});
  }
  nodes.push_back(Node{d == 1 ? "bot" : "f", {}});
  nodes.push_back(Node{"bot", {}});
  return TermGraph(std::move(nodes), 0);
}

Term nat_stream(std::size_t elements) {
  Term tail = bottom_term();
  for (std::size_t k = elements; k-- > 0;) {
    Term n{"0", {}};
    for (std::size_t i = 0; i < k; ++i) n = Term{"s", {n}};
    tail = Term{"cons", {n, tail}};
  }
  return tail;
}

Document document(const char* source) { return parse_document(source); }

Trace alternating_trace(std::size_t steps) {
  Document doc = document(weird_script_source);
  Script script;
  for (std::size_t i = 0; i < steps; ++i) script.push_back({i % 2 == 0 ? "rho2" : "rho1", {}});
  return run(canonicalize(doc.graph("g0")->graph), doc.make_grs(*doc.grs("weird")), script,
             steps);
}

Trace fixpoint_trace(std::size_t steps) {
  Document doc = document(fixpoint_source);
  return run(canonicalize(doc.graph("g0")->graph), doc.make_grs(*doc.grs("copying")),
             LeftmostOutermost{}, steps);
}

std::vector<GoldenTrace> golden_traces() {
  const LimitOptions options{8, 4};
  std::vector<GoldenTrace> out;
  out.push_back({"fixpoint-rho1", fixpoint_trace(12), options});
  {
    Document doc = document(fixpoint_source);
    out.push_back({"fixpoint-rho2",
                   run(canonicalize(doc.graph("g0")->graph), doc.make_grs(*doc.grs("cyclic")),
                       LeftmostOutermost{}, 12),
                   options});
  }
  out.push_back({"alternating-script", alternating_trace(20), options});
  {
    Document doc = document(weird_lo_source);
    out.push_back({"alternating-lo",
                   run(canonicalize(doc.graph("g0")->graph), doc.make_grs(*doc.grs("weird")),
                       LeftmostOutermost{}, 100),
                   options});
  }
  {
    Document doc = document(from_source);
    out.push_back({"from",
                   run(canonicalize(doc.graph("start")->graph), doc.make_grs(*doc.grs("nats")),
                       LeftmostOutermost{}, 8),
                   options});
  }
  {
    Document doc = document(loop_source);
    out.push_back({"loop",
                   run(canonicalize(doc.graph("a")->graph), doc.make_grs(*doc.grs("spin")),
                       LeftmostOutermost{}, 100),
                   options});
  }
  return out;
}

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Sym {
  const char* name;
  std::size_t arity;
};

constexpr Sym total_symbols[] = {{"f", 2}, {"g", 1}, {"a", 0}, {"b", 0}};

}  // namespace

Signature random_signature() {
  Signature sig;
  for (const Sym& s : total_symbols) sig.declare(s.name, s.arity);
  return sig;
}

TermGraph random_graph(Rng& rng, std::size_t max_nodes, bool partial) {
  const std::size_t k = 1 + pick(rng, max_nodes);
  std::vector<Node> nodes(k);
  for (Node& n : nodes) {
    if (partial && chance(rng, 0.12)) {
      n.label = "bot";
      continue;
    }
    // Favour inner nodes so that graphs are not mostly a single leaf.
    const Sym& s = chance(rng, 0.6) ? total_symbols[pick(rng, 2)] : total_symbols[pick(rng, 4)];
    n.label = s.name;
    for (std::size_t i = 0; i < s.arity; ++i) n.successors.push_back(static_cast<NodeId>(pick(rng, k)));
  }
  return collect_garbage(std::move(nodes), 0);
}

TermGraph weaken(Rng& rng, const TermGraph& g) {
  TermGraph out = g;
  const std::size_t cuts = 1 + pick(rng, 2);
  for (std::size_t i = 0; i < cuts; ++i) {
    NodeId n = static_cast<NodeId>(pick(rng, out.size()));
    if (n == out.root() && !chance(rng, 0.1)) continue;
    out = local_truncate(out, n);
  }
  return out;
}

TermGraph random_partner(Rng& rng, const TermGraph& g, std::size_t max_nodes) {
  switch (pick(rng, 7)) {
    case 0: return weaken(rng, g);
    case 1: return permuted(rng, g);
    case 2: return unravel_to_depth(g, 1 + pick(rng, 3));
    case 3: return collapse(g);
    case 4: {
      std::vector<Node> nodes(g.nodes().begin(), g.nodes().end());
      Node& n = nodes[pick(rng, nodes.size())];
      if (n.label == "a" || n.label == "b") n.label = n.label == "a" ? "b" : "a";
      return TermGraph(std::move(nodes), g.root());
    }
    case 5: return weaken(rng, random_partner(rng, g, max_nodes));
    default: return random_graph(rng, max_nodes);
  }
}

TermGraph permuted(Rng& rng, const TermGraph& g) {
  std::vector<NodeId> pi(g.size());
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<Node> nodes(g.size());
  for (NodeId n = 0; n < g.size(); ++n) {
    Node moved{g.label(n), {}};
    for (NodeId s : g.successors(n)) moved.successors.push_back(pi[s]);
    nodes[pi[n]] = std::move(moved);
  }
  return TermGraph(std::move(nodes), pi[g.root()]);
}

namespace {

Term grow(Rng& rng, std::size_t budget, bool partial) {
  if (budget == 1 || chance(rng, 0.25)) {
    if (partial && chance(rng, 0.2)) return bottom_term();
    return Term{chance(rng, 0.5) ? "a" : "b", {}};
  }
  if (budget == 2 || chance(rng, 0.3)) return Term{"g", {grow(rng, budget - 1, partial)}};
  std::size_t left = 1 + pick(rng, budget - 2);
  return Term{"f", {grow(rng, left, partial), grow(rng, budget - 1 - left, partial)}};
}

Term* random_subterm(Rng& rng, Term& t) {
  std::vector<Term*> all;
  std::function<void(Term&)> walk = [&](Term& s) {
    all.push_back(&s);
    for (Term& a : s.args) walk(a);
  };
  walk(t);
  return all[pick(rng, all.size())];
}

}  // namespace

Term random_term(Rng& rng, std::size_t max_size, bool partial) {
  return grow(rng, 1 + pick(rng, max_size), partial);
}

Term random_term_partner(Rng& rng, const Term& t, std::size_t max_size) {
  Term out = t;
  switch (pick(rng, 4)) {
    case 0: return out;
    case 1: *random_subterm(rng, out) = bottom_term(); return out;
    case 2: {
      Term* at = random_subterm(rng, out);
      *at = random_term(rng, std::max<std::size_t>(1, max_size / 3));
      return term_size(out) <= max_size ? out : t;
    }
    default: return random_term(rng, max_size);
  }
}

std::vector<TermGraph> lower_bounds(const TermGraph& g, std::size_t max_nodes) {
  // Nodes are numbered in discovery order and each node's image is forced by
  // its first parent, so every class comes out exactly once.
  std::vector<Node> z{Node{}};
  std::vector<NodeId> image{g.root()};
  std::vector<TermGraph> found;

  std::function<void(std::size_t)> node;
  std::function<void(std::size_t, std::size_t)> slot;

  node = [&](std::size_t i) {
    if (i == z.size()) {
      found.emplace_back(z, 0);
      return;
    }
    z[i] = Node{"bot", {}};
    node(i + 1);
    const Symbol& label = g.label(image[i]);
    if (is_bottom(label)) return;
    z[i] = Node{label, {}};
    slot(i, 0);
    z[i] = Node{"bot", {}};
  };

  slot = [&](std::size_t i, std::size_t j) {
    auto succ = g.successors(image[i]);
    if (j == succ.size()) {
      node(i + 1);
      return;
    }
    const NodeId target = succ[j];
    for (NodeId q = 0; q < z.size(); ++q) {
      if (image[q] != target) continue;
      z[i].successors.push_back(q);
      slot(i, j + 1);
      z[i].successors.pop_back();
    }
    if (z.size() < max_nodes) {
      z[i].successors.push_back(static_cast<NodeId>(z.size()));
      z.push_back(Node{});
      image.push_back(target);
      slot(i, j + 1);
      image.pop_back();
      z.pop_back();
      z[i].successors.pop_back();
    }
  };

  node(0);
  return found;
}

RandomStep random_step(Rng& rng) {
  CanonicalTermGraph g = canonicalize(random_graph(rng, 8, false));
  const TermGraph& graph = g;
  const NodeId n = static_cast<NodeId>(pick(rng, graph.size()));
  const std::size_t k = 1 + pick(rng, 2);

  // Breadth-first from the redex; nodes at relative depth k become variables.
  std::map<NodeId, std::size_t> rel{{n, 0}};
  std::vector<NodeId> order{n};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (rel[order[i]] == k) continue;
    for (NodeId s : graph.successors(order[i])) {
      if (rel.emplace(s, rel[order[i]] + 1).second) order.push_back(s);
    }
  }
  std::map<NodeId, std::string> name;
  for (std::size_t i = 0; i < order.size(); ++i) name[order[i]] = "l" + std::to_string(i);

  RawRule raw;
  raw.name = "random";
  raw.lhs = "l0";
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId m = order[i];
    RawNode node{name[m], graph.label(m), {}};
    if (rel[m] == k && !(graph.successors(m).empty() && chance(rng, 0.5))) {
      node.label = "$v" + std::to_string(i);
    } else {
      for (NodeId s : graph.successors(m)) node.successors.push_back(name[s]);
    }
    raw.nodes.push_back(std::move(node));
  }
  const std::size_t lhs_count = raw.nodes.size();

  std::vector<std::string> all;
  for (const RawNode& l : raw.nodes) all.push_back(l.name);
  const std::size_t fresh = chance(rng, 0.2) && lhs_count > 1 ? 0 : 1 + pick(rng, 3);
  for (std::size_t j = 0; j < fresh; ++j) all.push_back("r" + std::to_string(j));
  std::vector<RawNode> rhs_nodes;
  for (std::size_t j = 0; j < fresh; ++j) {
    const Sym& s = total_symbols[pick(rng, 4)];
    RawNode node{"r" + std::to_string(j), s.name, {}};
    for (std::size_t i = 0; i < s.arity; ++i) node.successors.push_back(all[pick(rng, all.size())]);
    rhs_nodes.push_back(std::move(node));
  }
  raw.rhs = fresh ? "r0" : raw.nodes[1 + pick(rng, lhs_count - 1)].name;

  // Drop fresh nodes the right-hand side does not reach.
  std::set<std::string> reached{raw.rhs};
  for (bool grew = true; grew;) {
    grew = false;
    for (const RawNode& r : rhs_nodes) {
      if (!reached.count(r.name)) continue;
      for (const std::string& s : r.successors) grew |= reached.insert(s).second;
    }
  }
  for (RawNode& r : rhs_nodes) {
    if (reached.count(r.name)) raw.nodes.push_back(std::move(r));
  }
  return RandomStep{g, validate_rule(raw, random_signature()), n};
}

}  // namespace tgr::testing
