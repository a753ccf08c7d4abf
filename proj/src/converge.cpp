#include "tgr/converge.hpp"

#include <algorithm>

#include "tgr/order.hpp"

namespace tgr {

namespace {

bool closed(const Trace& trace) { return trace.termination == Termination::normal_form; }

const CanonicalTermGraph& last_graph(const Trace& trace) {
  return trace.steps.empty() ? trace.initial : trace.steps.back().target;
}

std::vector<Distance> consecutive_distances(const std::vector<CanonicalTermGraph>& graphs) {
  std::vector<Distance> out;
  for (std::size_t i = 0; i + 1 < graphs.size(); ++i) out.push_back(dist(graphs[i], graphs[i + 1]));
  return out;
}

std::vector<std::size_t> redex_depths(const Trace& trace) {
  std::vector<std::size_t> out;
  for (const Step& s : trace.steps) out.push_back(s.redex_depth);
  return out;
}

std::optional<Cycle> step_cycle(const Trace& trace) {
  if (trace.cycle) return trace.cycle;
  return find_cycle(std::span<const Step>(trace.steps));
}

void settle(ConvergenceReport& report, LimitStatus status, const CanonicalTermGraph& approximant,
            std::size_t depth) {
  switch (status) {
    case LimitStatus::exact:
      report.verdict = Verdict::converged_exact;
      report.limit = approximant;
      break;
    case LimitStatus::stable_to_depth:
      report.verdict = Verdict::converged_to_depth;
      report.limit = approximant;
      report.depth = depth;
      break;
    case LimitStatus::divergent: report.verdict = Verdict::diverged; break;
    case LimitStatus::inconclusive: report.verdict = Verdict::inconclusive; break;
  }
}

void settle_closed(ConvergenceReport& report, const Trace& trace) {
  report.verdict = Verdict::converged_exact;
  report.limit = last_graph(trace);
}

bool converged(const ConvergenceReport& r) {
  return r.verdict == Verdict::converged_exact || r.verdict == Verdict::converged_to_depth;
}

/// Depth to compare two converged reports at; nullopt when both are exact.
std::optional<std::size_t> common_depth(const ConvergenceReport& a, const ConvergenceReport& b) {
  if (a.verdict == Verdict::converged_exact && b.verdict == Verdict::converged_exact) {
    return std::nullopt;
  }
  if (a.verdict != Verdict::converged_to_depth) return b.depth;
  if (b.verdict != Verdict::converged_to_depth) return a.depth;
  return std::min(a.depth, b.depth);
}

bool limits_agree(const ConvergenceReport& a, const ConvergenceReport& b) {
  auto d = common_depth(a, b);
  if (!d) return *a.limit == *b.limit;
  return iso(truncate(*a.limit, *d), truncate(*b.limit, *d));
}

bool total_limit(const ConvergenceReport& r) {
  if (r.verdict == Verdict::converged_exact) return is_total(*r.limit);
  const TermGraph& g = *r.limit;
  auto depth = depths(g);
  for (NodeId n = 0; n < g.size(); ++n) {
    if (depth[n] < r.depth && is_bottom(g.label(n))) return false;
  }
  return true;
}

std::string describe(const ConvergenceReport& r) {
  std::string s(to_string(r.discipline));
  s += " ";
  s += to_string(r.verdict);
  if (r.verdict == Verdict::converged_to_depth) s += "(" + std::to_string(r.depth) + ")";
  return s;
}

}  // namespace

std::string_view to_string(Certificate::Kind kind) noexcept {
  return kind == Certificate::Kind::periodic_distance ? "periodic-distance"
                                                      : "bounded-redex-depth";
}

ConvergenceReport analyze_weak_m(const Trace& trace, const LimitOptions& options) {
  ConvergenceReport report;
  report.discipline = Discipline::weak_m;
  report.evidence.termination = trace.termination;
  auto graphs = trace.graphs();
  report.evidence.distances = consecutive_distances(graphs);
  if (closed(trace)) {
    settle_closed(report, trace);
    report.evidence.stabilization_index = graphs.size() - 1;
    return report;
  }
  LimitResult r = metric_limit(graphs, options, trace.cycle);
  report.evidence.stabilization_index = r.stabilization_index;
  settle(report, r.status, r.approximant, r.depth);
  if (r.witness) {
    report.certificate = Certificate{Certificate::Kind::periodic_distance, r.witness->cycle,
                                     r.witness->first, r.witness->second, r.witness->distance, 0};
  }
  return report;
}

ConvergenceReport analyze_weak_p(const Trace& trace, const LimitOptions& options) {
  ConvergenceReport report;
  report.discipline = Discipline::weak_p;
  report.evidence.termination = trace.termination;
  auto graphs = trace.graphs();
  if (closed(trace)) {
    settle_closed(report, trace);
    report.evidence.stabilization_index = graphs.size() - 1;
    return report;
  }
  LiminfResult r = liminf(graphs, options, trace.cycle);
  report.evidence.stabilization_index = r.stabilization_index;
  settle(report, r.status, r.approximant, r.depth);
  return report;
}

ConvergenceReport analyze_strong_m(const Trace& trace, const LimitOptions& options) {
  ConvergenceReport weak = analyze_weak_m(trace, options);
  ConvergenceReport report;
  report.discipline = Discipline::strong_m;
  report.evidence = weak.evidence;
  report.evidence.redex_depths = redex_depths(trace);
  if (closed(trace)) {
    settle_closed(report, trace);
    return report;
  }
  const auto& depths = report.evidence.redex_depths;
  if (auto cycle = step_cycle(trace)) {
    report.verdict = Verdict::diverged;
    Certificate c;
    c.kind = Certificate::Kind::bounded_redex_depth;
    c.cycle = *cycle;
    c.max_redex_depth = *std::max_element(depths.begin() + cycle->start,
                                          depths.begin() + cycle->start + cycle->period);
    report.certificate = c;
    return report;
  }
  if (!converged(weak)) {
    report.verdict = weak.verdict;
    report.certificate = weak.certificate;
    return report;
  }
  const std::size_t d = options.depth;
  if (depths.size() < options.window ||
      !std::all_of(depths.end() - options.window, depths.end(),
                   [&](std::size_t k) { return k >= d; })) {
    return report;
  }
  report.verdict = Verdict::converged_to_depth;
  report.limit = canonicalize(truncate(*weak.limit, d));
  report.depth = d;
  return report;
}

ConvergenceReport analyze_strong_p(const Trace& trace, const LimitOptions& options) {
  ConvergenceReport report;
  report.discipline = Discipline::strong_p;
  report.evidence.termination = trace.termination;
  if (closed(trace)) {
    settle_closed(report, trace);
    return report;
  }
  auto contexts = trace.contexts();
  if (contexts.empty()) return report;
  LiminfResult r = liminf(contexts, options, step_cycle(trace));
  report.evidence.context_status = r.status;
  report.evidence.stabilization_index = r.stabilization_index;
  settle(report, r.status, r.approximant, r.depth);
  return report;
}

ConvergenceReport analyze(const Trace& trace, Discipline discipline, const LimitOptions& options) {
  switch (discipline) {
    case Discipline::weak_m: return analyze_weak_m(trace, options);
    case Discipline::weak_p: return analyze_weak_p(trace, options);
    case Discipline::strong_m: return analyze_strong_m(trace, options);
    case Discipline::strong_p: return analyze_strong_p(trace, options);
  }
  return analyze_weak_m(trace, options);
}

bool replay(const Certificate& certificate, const Trace& trace) {
  auto graphs = trace.graphs();
  const Cycle& c = certificate.cycle;
  if (c.period == 0 || c.start + c.period > trace.steps.size()) return false;
  if (certificate.kind == Certificate::Kind::periodic_distance) {
    return replay(DivergenceWitness{c, certificate.first, certificate.second,
                                    certificate.distance},
                  graphs);
  }
  for (std::size_t i = c.start; i + c.period < graphs.size(); ++i) {
    if (!(graphs[i] == graphs[i + c.period])) return false;
  }
  for (std::size_t i = c.start; i + c.period < trace.steps.size(); ++i) {
    if (!(trace.steps[i] == trace.steps[i + c.period])) return false;
  }
  std::size_t deepest = 0;
  for (std::size_t i = c.start; i < c.start + c.period; ++i) {
    deepest = std::max(deepest, trace.steps[i].redex_depth);
  }
  return deepest == certificate.max_redex_depth;
}

ConsistencyReport cross_check(const Trace& trace, const LimitOptions& options) {
  ConsistencyReport out{analyze_weak_m(trace, options), analyze_weak_p(trace, options),
                        analyze_strong_m(trace, options), analyze_strong_p(trace, options), {}};
  auto violation = [&](const std::string& what, const ConvergenceReport& a,
                       const ConvergenceReport& b) {
    out.violations.push_back(what + ": " + describe(a) + " vs " + describe(b));
  };

  if (converged(out.weak_m)) {
    if (!converged(out.weak_p)) {
      violation("weak metric limit without weak liminf", out.weak_m, out.weak_p);
    } else if (!limits_agree(out.weak_m, out.weak_p)) {
      violation("weak limits differ", out.weak_m, out.weak_p);
    }
  }

  // The strong equivalence concerns reductions of total graphs.
  if (!is_total(trace.initial)) return out;
  const bool strong_p_total = converged(out.strong_p) && total_limit(out.strong_p);
  if (converged(out.strong_m)) {
    if (!strong_p_total) {
      violation("strong metric limit without total strong liminf", out.strong_m, out.strong_p);
    } else if (!limits_agree(out.strong_m, out.strong_p)) {
      violation("strong limits differ", out.strong_m, out.strong_p);
    }
  } else if (strong_p_total && out.strong_m.verdict == Verdict::diverged) {
    violation("total strong liminf without strong metric limit", out.strong_p, out.strong_m);
  }
  return out;
}

}  // namespace tgr
