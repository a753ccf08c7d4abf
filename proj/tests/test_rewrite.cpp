#include "doctest.h"
#include "fixtures.hpp"
#include "tgr/order.hpp"
#include "tgr/rewrite.hpp"

using namespace tgr;
using tgr::testing::document;
using tgr::testing::graph;

namespace {

Signature app_sig() {
  Signature sig;
  sig.declare("app", 2);
  sig.declare("Y", 0);
  sig.declare("f", 0);
  return sig;
}

RewriteErrc rule_error(const RawRule& raw) {
  try {
    validate_rule(raw, app_sig());
  } catch (const RewriteError& e) {
    return e.code();
  }
  FAIL("rule was accepted");
  return RewriteErrc::no_match;
}

/// A path as long as the node count must revisit a node.
bool acyclic(const TermGraph& g) {
  for (NodeId n = 0; n < g.size(); ++n) {
    for (const Position& p : positions_up_to(g, n, g.size())) {
      if (p.size() == g.size()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rule validation") {
  Document doc = document(tgr::testing::fixpoint_source);
  CHECK(doc.rule("rho1")->rule.lhs.size() == 3);
  CHECK(doc.rule("rho2")->rule.rhs().size() == 4);
  CHECK(is_left_linear(doc.rule("rho1")->rule));

  CHECK(rule_error({"dup", "l", "r", {{"l", "app", {"x", "y"}}, {"x", "$x", {}}, {"y", "$x", {}},
                                       {"r", "app", {"x", "y"}}}}) ==
        RewriteErrc::duplicate_variable_node);
  CHECK(rule_error({"var", "l", "r", {{"l", "$x", {}}, {"r", "f", {}}}}) ==
        RewriteErrc::variable_at_lhs_root);
  CHECK(rule_error({"free", "l", "r", {{"l", "Y", {}}, {"r", "app", {"x", "x"}}, {"x", "$x", {}}}}) ==
        RewriteErrc::variable_unreachable_from_lhs);
  CHECK(rule_error({"bot", "l", "r", {{"l", "app", {"y", "b"}}, {"y", "Y", {}}, {"b", "bot", {}},
                                       {"r", "f", {}}}}) == RewriteErrc::bottom_in_rule);
  CHECK(rule_error({"same", "l", "l", {{"l", "Y", {}}}}) == RewriteErrc::lhs_equals_rhs);
  CHECK_THROWS_AS(validate_rule({"orphan", "l", "r", {{"l", "Y", {}}, {"r", "f", {}}, {"o", "f", {}}}},
                                app_sig()),
                  GraphError);
  CHECK_THROWS_AS(validate_rule({"arity", "l", "r", {{"l", "app", {"r"}}, {"r", "f", {}}}}, app_sig()),
                  GraphError);
  CHECK_THROWS_AS(Grs(app_sig(), {doc.rule("rho1")->rule, doc.rule("rho1")->rule}), RewriteError);

  Document weird = document(tgr::testing::weird_lo_source);
  CHECK_FALSE(is_left_linear(weird.rule("unshare")->rule));
}

TEST_CASE("matching") {
  Document doc = document(tgr::testing::fixpoint_source);
  const Rule& rho1 = doc.rule("rho1")->rule;
  const Rule& rho2 = doc.rule("rho2")->rule;
  TermGraph g0 = canonicalize(doc.graph("g0")->graph);
  auto phi = match(rho2, g0, 0);
  REQUIRE(phi);
  // lhs nodes in breadth-first order: app, Y, $x.
  CHECK(*phi == NodeMap{0, 1, 2});
  CHECK(g0.label((*phi)[2]) == "f");
  CHECK_FALSE(match(rho1, tgr::testing::h0(), 0).has_value());
  CHECK_FALSE(match(rho1, g0, 1).has_value());
}

TEST_CASE("finding redexes") {
  Document from = document(tgr::testing::from_source);
  Grs nats = from.make_grs(*from.grs("nats"));
  auto redexes = find_redexes(nats, from.graph("start")->graph);
  REQUIRE(redexes.size() == 1);
  CHECK(redexes[0].node == 0);
  CHECK(find_redexes(nats, graph("n: 0;")).empty());

  Document loop = document(tgr::testing::loop_source);
  Grs spin = loop.make_grs(*loop.grs("spin"));
  CHECK(find_redexes(spin, graph("n: a;")).size() == 1);

  Document weird = document(tgr::testing::weird_script_source);
  auto both = find_redexes(weird.make_grs(*weird.grs("weird")), tgr::testing::shared_fcc());
  REQUIRE(both.size() == 2);
  CHECK(both[0].rule == 0);
  CHECK(both[1].rule == 1);
}

TEST_CASE("the four-phase construction") {
  Document doc = document(tgr::testing::fixpoint_source);
  TermGraph g0 = canonicalize(doc.graph("g0")->graph);
  const Rule& rho2 = doc.rule("rho2")->rule;
  TermGraph h = pre_reduce(g0, rho2, 0, *match(rho2, g0, 0));
  CHECK(iso(h, tgr::testing::h0()));

  const Rule& rho1 = doc.rule("rho1")->rule;
  TermGraph g1 = pre_reduce(g0, rho1, 0, *match(rho1, g0, 0));
  CHECK(iso(g1, graph("n: app(f, a); f: f; a: app(y, f); y: Y;")));

  Document loop = document(tgr::testing::loop_source);
  const Rule& spin = loop.rule("loop")->rule;
  TermGraph a = graph("n: a;");
  CHECK(iso(pre_reduce(a, spin, 0, *match(spin, a, 0)), a));

  // A collapsing rule below the root: g(f(a, b)) with f($x, $y) -> $y.
  Signature sig = tgr::testing::random_signature();
  Rule second = validate_rule({"second", "l", "y", {{"l", "f", {"x", "y"}}, {"x", "$x", {}},
                                                    {"y", "$y", {}}}},
                              sig);
  TermGraph nested = graph("n: g(m); m: f(p, q); p: a; q: b;");
  CHECK(iso(pre_reduce(nested, second, 1, *match(second, nested, 1)), graph("n: g(q); q: b;")));
}

TEST_CASE("reduction steps") {
  Document doc = document(tgr::testing::fixpoint_source);
  CanonicalTermGraph g0 = canonicalize(doc.graph("g0")->graph);
  Step step = reduce_step(g0, doc.rule("rho2")->rule, 0);
  CHECK(step.redex_depth == 0);
  CHECK(step.context == canonicalize(TermGraph()));
  CHECK(step.target == canonicalize(tgr::testing::h0()));
  CHECK_THROWS_AS(reduce_step(canonicalize(tgr::testing::h0()), doc.rule("rho1")->rule, 0),
                  RewriteError);

  Trace fix = tgr::testing::fixpoint_trace(10);
  for (std::size_t i = 0; i < fix.steps.size(); ++i) CHECK(fix.steps[i].redex_depth >= i);

  Trace weird = tgr::testing::alternating_trace(6);
  auto graphs = weird.graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(iso(graphs[i], i % 2 ? tgr::testing::shared_fcc() : tgr::testing::unshared_fcc()));
  }
  for (const Step& s : weird.steps) CHECK(s.context == canonicalize(TermGraph()));
}

TEST_CASE("runs") {
  Document from = document(tgr::testing::from_source);
  Trace nats = run(canonicalize(from.graph("start")->graph), from.make_grs(*from.grs("nats")),
                   LeftmostOutermost{}, 5);
  CHECK(nats.termination == Termination::step_budget);
  REQUIRE(nats.steps.size() == 5);
  CHECK(to_term(unravel_to_depth(nats.steps.back().target, 20)) ==
        parse_term("cons(0, cons(s(0), cons(s(s(0)), cons(s(s(s(0))), cons(s(s(s(s(0)))), "
                   "from(s(s(s(s(s(0)))))))))))"));

  Document loop = document(tgr::testing::loop_source);
  Trace a = run(canonicalize(loop.graph("a")->graph), loop.make_grs(*loop.grs("spin")),
                LeftmostOutermost{}, 100);
  CHECK(a.termination == Termination::cycle_detected);
  CHECK(a.steps.size() == 1);
  CHECK(a.cycle == Cycle{0, 1});

  Trace closed = run(canonicalize(tgr::testing::h0()), loop.make_grs(*loop.grs("spin")),
                     LeftmostOutermost{}, 100);
  CHECK(closed.termination == Termination::normal_form);

  Document weird = document(tgr::testing::weird_script_source);
  Grs grs = weird.make_grs(*weird.grs("weird"));
  CanonicalTermGraph g0 = canonicalize(weird.graph("g0")->graph);
  try {
    run(g0, grs, Script{{"rho2", {}}, {"rho1", {0}}}, 10);
    FAIL("expected an invalid script step");
  } catch (const RewriteError& e) {
    CHECK(e.code() == RewriteErrc::scripted_redex_invalid);
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(run(g0, grs, Script{{"nope", {}}}, 10), RewriteError);
  Trace scripted = run(g0, grs, Script{{"rho2", {}}, {"rho1", {}}}, 10);
  CHECK(scripted.steps.size() == 2);
  CHECK(scripted.termination == Termination::step_budget);

  Trace ordered = tgr::testing::fixpoint_trace(6);
  for (std::size_t i = 0; i + 1 < ordered.steps.size(); ++i) {
    CHECK(ordered.steps[i].target == ordered.steps[i + 1].source);
  }
}

TEST_CASE("unravelling rules") {
  Document doc = document(tgr::testing::fixpoint_source);
  Term expected_rhs = parse_term("app($x, app(Y, $x))");
  TermRule u1 = unravel_rule(doc.rule("rho1")->rule);
  CHECK(u1.lhs == parse_term("app(Y, $x)"));
  CHECK(u1.rhs == expected_rhs);
  TermRule u2 = unravel_rule(doc.rule("rho2")->rule);
  CHECK(u2.lhs == parse_term("app(Y, $x)"));
  CHECK(u2.rhs == expected_rhs);

  Document from = document(tgr::testing::from_source);
  TermRule uf = unravel_rule(from.rule("from")->rule);
  CHECK(uf.lhs == parse_term("from($x)"));
  CHECK(uf.rhs == parse_term("cons($x, from(s($x)))"));
  CHECK_THROWS_AS(unravel_rule(from.rule("from")->rule, 1), RewriteError);

  Signature sig = tgr::testing::random_signature();
  Rule cyclic = validate_rule({"cyc", "l", "r", {{"l", "g", {"x"}}, {"x", "$x", {}},
                                                 {"r", "f", {"x", "r"}}}},
                              sig);
  try {
    unravel_rule(cyclic, 10);
    FAIL("expected cyclic_rule_needs_bound");
  } catch (const RewriteError& e) {
    CHECK(e.code() == RewriteErrc::cyclic_rule_needs_bound);
  }
}

TEST_CASE("random steps keep the context below source and target") {
  tgr::testing::Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    auto rs = tgr::testing::random_step(rng);
    Step step = reduce_step(rs.graph, rs.rule, rs.redex);
    CHECK(leq_bot(step.context, step.source));
    CHECK(leq_bot(step.context, step.target));
    CHECK(step.target == canonicalize(step.target.graph()));
    // Isomorphic inputs give isomorphic outputs.
    CHECK(reduce_step(canonicalize(tgr::testing::permuted(rng, rs.graph)), rs.rule, rs.redex).target ==
          step.target);
  }
}

TEST_CASE("a graph step is a complete development of the unravelled redexes") {
  tgr::testing::Rng rng(123);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    auto rs = tgr::testing::random_step(rng);
    const TermGraph& source = rs.graph;
    if (!acyclic(source)) continue;
    TermRule rule;
    try {
      rule = unravel_rule(rs.rule, 64);
    } catch (const RewriteError&) {
      continue;
    }
    Step step = reduce_step(rs.graph, rs.rule, rs.redex);
    if (!acyclic(step.target)) continue;
    Term term = to_term(unravel_to_depth(source, source.size() + 1));
    auto positions = positions_up_to(source, rs.redex, source.size());
    for (const Position& p : positions) term = term_rewrite_step(term, rule, p);
    CHECK(term == to_term(unravel_to_depth(step.target, step.target.size() + 1)));
    ++checked;
  }
  CHECK(checked > 50);
}
