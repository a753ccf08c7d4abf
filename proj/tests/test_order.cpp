#include <unordered_set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tgr/metric.hpp"
#include "tgr/order.hpp"

using namespace tgr;
using tgr::testing::graph;

TEST_CASE("leq_bot") {
  TermGraph u = tgr::testing::unshared_fcc();
  TermGraph s = tgr::testing::shared_fcc();
  CHECK(leq_bot(TermGraph(), u));
  CHECK(leq_bot(TermGraph(), tgr::testing::h0()));
  CHECK(leq_bot(u, s));
  CHECK_FALSE(leq_bot(s, u));
  CHECK(leq_bot(graph("n: f(x, y); x: bot; y: c;"), u));
  CHECK_FALSE(leq_bot(u, graph("n: f(x, y); x: bot; y: c;")));
  CHECK(is_total(u));
  CHECK_FALSE(is_total(TermGraph()));
}

TEST_CASE("glb of two graphs") {
  TermGraph u = tgr::testing::unshared_fcc();
  TermGraph s = tgr::testing::shared_fcc();
  CHECK(glb(u, u) == canonicalize(u));
  CHECK(glb(u, s) == canonicalize(u));
  CHECK(glb(s, u) == canonicalize(u));
  CHECK(glb(graph("n: f(x, y); x: a; y: b;"), graph("n: f(x, y); x: b; y: a;")) ==
        canonicalize(graph("n: f(x, y); x: bot; y: bot;")));
  CHECK(glb(graph("n: a;"), graph("n: b;")) == canonicalize(TermGraph()));
}

TEST_CASE("glb of a set") {
  TermGraph u = tgr::testing::unshared_fcc();
  TermGraph s = tgr::testing::shared_fcc();
  std::vector<TermGraph> one{u};
  CHECK(glb_set(one) == canonicalize(u));
  std::vector<TermGraph> three{u, s, u};
  CHECK(glb_set(three) == canonicalize(u));
  std::vector<TermGraph> consts{graph("n: a;"), graph("n: b;")};
  CHECK(glb_set(consts) == canonicalize(TermGraph()));
  CHECK_THROWS_AS(glb_set(std::span<const TermGraph>()), EmptyInput);
}

TEST_CASE("local truncation") {
  TermGraph u = tgr::testing::unshared_fcc();
  CHECK(iso(local_truncate(u, u.root()), TermGraph()));
  CHECK(iso(local_truncate(u, 1), graph("n: f(x, y); x: bot; y: c;")));
  CHECK(iso(local_truncate(tgr::testing::h0(), 1), graph("n: app(x, n); x: bot;")));
  CHECK_THROWS_AS(local_truncate(u, 5), GraphError);
}

TEST_CASE("liminf of finite prefixes") {
  const LimitOptions options{4, 4};
  CanonicalTermGraph g = canonicalize(tgr::testing::unshared_fcc());
  std::vector<CanonicalTermGraph> constant(5, g);
  LiminfResult c = liminf(constant, options);
  CHECK(c.status == LimitStatus::exact);
  CHECK(c.approximant == g);

  Trace alt_trace = tgr::testing::alternating_trace(20);
  LiminfResult alt = liminf(alt_trace.graphs(), options);
  CHECK(alt.status == LimitStatus::exact);
  CHECK(alt.approximant == g);
  REQUIRE(alt.cycle);
  CHECK(alt.cycle->period == 2);

  Trace fix = tgr::testing::fixpoint_trace(8);
  LiminfResult approx = liminf(fix.graphs(), options);
  CHECK(approx.status == LimitStatus::stable_to_depth);
  CHECK(approx.depth == 4);
  CHECK(iso(approx.approximant, tgr::testing::g_omega_cut(4)));

  LiminfResult short_window = liminf(fix.graphs(), LimitOptions{8, 8});
  CHECK(short_window.status == LimitStatus::inconclusive);
  CHECK_THROWS_AS(liminf(std::span<const CanonicalTermGraph>(), options), EmptyInput);
}

TEST_CASE("partial order properties") {
  tgr::testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    TermGraph g = tgr::testing::random_graph(rng, 8);
    TermGraph h = tgr::testing::random_partner(rng, g, 8);
    TermGraph k = tgr::testing::random_partner(rng, h, 8);
    CHECK(leq_bot(g, g));
    if (leq_bot(g, h) && leq_bot(h, k)) CHECK(leq_bot(g, k));
    if (leq_bot(g, h) && leq_bot(h, g)) CHECK(iso(g, h));
    CanonicalTermGraph m = glb(g, h);
    CHECK(leq_bot(m, g));
    CHECK(leq_bot(m, h));
    CHECK(m == glb(h, g));
    CHECK(glb(glb(g, h), k) == glb(g, glb(h, k)));
    if (leq_bot(g, h)) CHECK(m == canonicalize(g));
  }
}

TEST_CASE("suffix glbs grow with the start index") {
  Trace fix = tgr::testing::fixpoint_trace(8);
  auto graphs = fix.graphs();
  for (std::size_t b = 0; b + 1 < graphs.size(); ++b) {
    auto from_b = glb_set(std::span<const CanonicalTermGraph>(graphs).subspan(b));
    auto from_next = glb_set(std::span<const CanonicalTermGraph>(graphs).subspan(b + 1));
    CHECK(leq_bot(from_b, from_next));
  }
}

TEST_CASE("glb is the greatest lower bound on small instances") {
  tgr::testing::Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    TermGraph g = tgr::testing::random_graph(rng, 6);
    TermGraph h = tgr::testing::random_partner(rng, g, 6);
    CanonicalTermGraph m = glb(g, h);
    for (const TermGraph& z : tgr::testing::lower_bounds(g, 4)) {
      CHECK(leq_bot(z, g));
      if (leq_bot(z, h)) CHECK(leq_bot(z, m));
    }
  }
}

TEST_CASE("the lower bound enumeration lists each class once") {
  tgr::testing::Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    TermGraph g = tgr::testing::random_graph(rng, 6);
    auto zs = tgr::testing::lower_bounds(g, 4);
    std::unordered_set<CanonicalTermGraph> classes;
    for (const TermGraph& z : zs) {
      CHECK(leq_bot(z, g));
      classes.insert(canonicalize(z));
    }
    CHECK(classes.size() == zs.size());
  }
  // bot, then f over one shared child (bot or c) or two children (bot or c
  // each).
  CHECK(tgr::testing::lower_bounds(tgr::testing::shared_fcc(), 3).size() == 7);
}
