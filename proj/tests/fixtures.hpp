#ifndef TGR_TESTS_FIXTURES_HPP
#define TGR_TESTS_FIXTURES_HPP

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tgr/converge.hpp"
#include "tgr/core.hpp"
#include "tgr/document.hpp"
#include "tgr/rewrite.hpp"
#include "tgr/terms.hpp"

namespace tgr::testing {

using Rng = std::mt19937_64;

/// Graph from one-line node syntax: "n0: f(n1, n2); n1: c; n2: c;" rooted
/// at the first node.
TermGraph graph(std::string_view nodes);

/// f(c, c) without and with sharing.
TermGraph unshared_fcc();
TermGraph shared_fcc();

/// The cyclic result of the back-pointing fixed point rule: app(f, self).
TermGraph h0();

/// Depth-d truncation of the infinite app(f, app(f, ...)) with one shared f,
/// built directly (not by rewriting).
TermGraph g_omega_cut(std::size_t d);

/// cons(0, cons(s(0), cons(s(s(0)), ...))) with `elements` entries ending in
/// bot, built directly.
Term nat_stream(std::size_t elements);

extern const char* const fixpoint_source;
extern const char* const weird_script_source;
extern const char* const weird_lo_source;
extern const char* const from_source;
extern const char* const loop_source;

Document document(const char* source);

struct GoldenTrace {
  std::string name;
  Trace trace;
  LimitOptions options;
};

/// The reference reductions, each with the limit options it is checked at.
std::vector<GoldenTrace> golden_traces();

/// Alternating rho2/rho1 script of `steps` steps from g0.
Trace alternating_trace(std::size_t steps);
/// Leftmost-outermost rho1 trace with `steps` steps from app(Y, f).
Trace fixpoint_trace(std::size_t steps);

/// A random graph over f/2, g/1, a, b (and bot with `partial`) with at most
/// `max_nodes` nodes.
TermGraph random_graph(Rng& rng, std::size_t max_nodes, bool partial = true);

/// Replaces a few random nodes of `g` by bot.
TermGraph weaken(Rng& rng, const TermGraph& g);

/// A second graph related to `g` in some random way (weakened, unshared,
/// relabelled, or unrelated).
TermGraph random_partner(Rng& rng, const TermGraph& g, std::size_t max_nodes);

/// Same graph, node ids shuffled (root included).
TermGraph permuted(Rng& rng, const TermGraph& g);

/// A random term with at most `max_size` nodes.
Term random_term(Rng& rng, std::size_t max_size, bool partial = true);
Term random_term_partner(Rng& rng, const Term& t, std::size_t max_size);

/// Every graph z with at most `max_nodes` nodes and a bot-homomorphism into
/// `g`, one per isomorphism class.
std::vector<TermGraph> lower_bounds(const TermGraph& g, std::size_t max_nodes);

struct RandomStep {
  CanonicalTermGraph graph;
  Rule rule;
  NodeId redex = 0;
};

/// A random total graph with a redex of a random rule built to match it.
RandomStep random_step(Rng& rng);

/// The signature used by the random generators.
Signature random_signature();

}  // namespace tgr::testing

#endif  // TGR_TESTS_FIXTURES_HPP
