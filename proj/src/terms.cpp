#include "tgr/terms.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "tgr/order.hpp"

namespace tgr {

namespace {

bool is_symbol_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '\'' ||
         c == '.' || c == '@' || c == '+' || c == '*' || c == '-';
}

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  Term term() {
    skip_space();
    std::size_t begin = pos_;
    while (pos_ < text_.size() && is_symbol_char(text_[pos_])) ++pos_;
    if (begin == pos_) fail("expected a symbol");
    Term t{Symbol(text_.substr(begin, pos_ - begin)), {}};
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      t.args.push_back(term());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        t.args.push_back(term());
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    }
    return t;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw TermError("term syntax at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Term& t, std::string& out) {
  out += t.head;
  if (t.args.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    print(t.args[i], out);
  }
  out += ')';
}

Term read_tree(const TermGraph& g, NodeId n) {
  Term t{g.label(n), {}};
  for (NodeId s : g.successors(n)) t.args.push_back(read_tree(g, s));
  return t;
}

std::optional<std::size_t> first_difference(const Term& s, const Term& t) {
  if (s.head != t.head || s.args.size() != t.args.size()) return 0;
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (auto k = first_difference(s.args[i], t.args[i])) {
      if (!best || *k + 1 < *best) best = *k + 1;
    }
  }
  return best;
}

bool match_into(const Term& pattern, const Term& t, Substitution& sigma) {
  if (is_variable(pattern.head)) {
    auto [it, fresh] = sigma.emplace(pattern.head, t);
    return fresh || it->second == t;
  }
  if (pattern.head != t.head || pattern.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (!match_into(pattern.args[i], t.args[i], sigma)) return false;
  }
  return true;
}

Term& subterm_ref(Term& t, const Position& p) {
  Term* at = &t;
  for (std::size_t i : p) {
    if (i >= at->args.size()) throw TermError("no such position");
    at = &at->args[i];
  }
  return *at;
}

bool shortlex_less(const Position& a, const Position& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void collect_redexes(std::span<const TermRule> rules, const Term& t, Position& at,
                     std::vector<TermRedex>& out) {
  for (std::size_t r = 0; r < rules.size(); ++r) {
    if (match_term(rules[r].lhs, t)) out.push_back({r, at});
  }
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    at.push_back(i);
    collect_redexes(rules, t.args[i], at, out);
    at.pop_back();
  }
}

std::size_t last_index_from(std::span<const Term> truncated) {
  std::size_t start = truncated.size() - 1;
  while (start > 0 && truncated[start - 1] == truncated.back()) --start;
  return start;
}

}  // namespace

Term bottom_term() { return Term{Symbol(bottom_symbol), {}}; }

bool is_total(const Term& t) {
  if (is_bottom(t.head)) return false;
  return std::all_of(t.args.begin(), t.args.end(), [](const Term& a) { return is_total(a); });
}

std::size_t term_size(const Term& t) {
  std::size_t n = 1;
  for (const Term& a : t.args) n += term_size(a);
  return n;
}

std::size_t term_height(const Term& t) {
  std::size_t h = 0;
  for (const Term& a : t.args) h = std::max(h, term_height(a) + 1);
  return h;
}

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

TermGraph to_graph(const Term& t) {
  std::vector<const Term*> queue{&t};
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Node n{queue[i]->head, {}};
    for (const Term& a : queue[i]->args) {
      n.successors.push_back(static_cast<NodeId>(queue.size()));
      queue.push_back(&a);
    }
    nodes.push_back(std::move(n));
  }
  return TermGraph(std::move(nodes), 0);
}

Term to_term(const TermGraph& g) {
  if (!is_term_tree(g)) throw TermError("graph is not a term tree");
  return read_tree(g, g.root());
}

Term cut(const Term& t, std::size_t d) {
  if (d == 0) return bottom_term();
  Term out{t.head, {}};
  for (const Term& a : t.args) out.args.push_back(cut(a, d - 1));
  return out;
}

Distance dd(const Term& s, const Term& t) {
  auto k = first_difference(s, t);
  return k ? Distance::power(*k) : Distance::zero();
}

bool leq_bot_term(const Term& s, const Term& t) {
  if (is_bottom(s.head)) return true;
  if (s.head != t.head || s.args.size() != t.args.size()) return false;
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (!leq_bot_term(s.args[i], t.args[i])) return false;
  }
  return true;
}

Term glb_term(const Term& s, const Term& t) {
  if (s.head != t.head || s.args.size() != t.args.size()) return bottom_term();
  Term out{s.head, {}};
  for (std::size_t i = 0; i < s.args.size(); ++i) out.args.push_back(glb_term(s.args[i], t.args[i]));
  return out;
}

Term glb_terms(std::span<const Term> ts) {
  if (ts.empty()) throw EmptyInput("glb_terms");
  Term acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = glb_term(acc, ts[i]);
  return acc;
}

std::optional<Substitution> match_term(const Term& pattern, const Term& t) {
  Substitution sigma;
  if (!match_into(pattern, t, sigma)) return std::nullopt;
  return sigma;
}

Term substitute(const Term& t, const Substitution& sigma) {
  if (is_variable(t.head)) {
    auto it = sigma.find(t.head);
    if (it == sigma.end()) throw TermError("unbound variable " + t.head);
    return it->second;
  }
  Term out{t.head, {}};
  for (const Term& a : t.args) out.args.push_back(substitute(a, sigma));
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  return subterm_ref(const_cast<Term&>(t), p);
}

Term replace_at(const Term& t, const Position& p, Term replacement) {
  Term out = t;
  subterm_ref(out, p) = std::move(replacement);
  return out;
}

Term term_rewrite_step(const Term& t, const TermRule& rule, const Position& p) {
  auto sigma = match_term(rule.lhs, subterm_at(t, p));
  if (!sigma) throw TermError("rule " + rule.name + " does not match at the given position");
  return replace_at(t, p, substitute(rule.rhs, *sigma));
}

std::vector<TermRedex> find_term_redexes(std::span<const TermRule> rules, const Term& t) {
  std::vector<TermRedex> out;
  Position at;
  collect_redexes(rules, t, at, out);
  std::stable_sort(out.begin(), out.end(), [](const TermRedex& a, const TermRedex& b) {
    return shortlex_less(a.position, b.position);
  });
  return out;
}

std::string_view to_string(Termination termination) noexcept {
  switch (termination) {
    case Termination::normal_form: return "normal-form";
    case Termination::step_budget: return "step-budget";
    case Termination::cycle_detected: return "cycle-detected";
  }
  return "step-budget";
}

std::vector<Term> TermTrace::terms() const {
  std::vector<Term> out{initial};
  for (const TermStep& s : steps) out.push_back(s.target);
  return out;
}

std::vector<Term> TermTrace::contexts() const {
  std::vector<Term> out;
  for (const TermStep& s : steps) out.push_back(s.context);
  return out;
}

TermTrace run_terms(const Term& t, std::span<const TermRule> rules, std::size_t max_steps) {
  TermTrace trace;
  trace.initial = t;
  std::map<std::string, std::size_t> seen{{to_string(t), 0}};
  Term current = t;
  for (;;) {
    auto redexes = find_term_redexes(rules, current);
    if (redexes.empty()) {
      trace.termination = Termination::normal_form;
      return trace;
    }
    if (trace.steps.size() == max_steps) {
      trace.termination = Termination::step_budget;
      return trace;
    }
    const TermRedex& r = redexes.front();
    TermStep step{current, term_rewrite_step(current, rules[r.rule], r.position), r.rule,
                  r.position, replace_at(current, r.position, bottom_term())};
    current = step.target;
    trace.steps.push_back(std::move(step));
    auto [it, fresh] = seen.emplace(to_string(current), trace.steps.size());
    if (!fresh) {
      trace.termination = Termination::cycle_detected;
      trace.cycle = Cycle{it->second, trace.steps.size() - it->second};
      return trace;
    }
  }
}

TermLimitResult liminf_term(std::span<const Term> seq, const LimitOptions& options,
                            std::optional<Cycle> certified) {
  if (seq.empty()) throw EmptyInput("liminf_term");
  TermLimitResult result;
  result.cycle = certified ? certified : find_cycle(seq);
  if (result.cycle) {
    result.approximant = glb_terms(seq.subspan(result.cycle->start, result.cycle->period));
    result.status = LimitStatus::exact;
    result.stabilization_index = result.cycle->start;
    return result;
  }
  const std::size_t n = seq.size();
  std::vector<Term> truncated(n);
  Term suffix = seq[n - 1];
  truncated[n - 1] = cut(suffix, options.depth);
  for (std::size_t b = n - 1; b-- > 0;) {
    suffix = glb_term(seq[b], suffix);
    truncated[b] = cut(suffix, options.depth);
  }
  std::size_t start = last_index_from(truncated);
  result.approximant = truncated[n - 1];
  result.stabilization_index = start;
  if (n - start >= options.window) {
    result.status = LimitStatus::stable_to_depth;
    result.depth = options.depth;
  }
  return result;
}

TermLimitResult metric_limit_term(std::span<const Term> seq, const LimitOptions& options,
                                  std::optional<Cycle> certified) {
  if (seq.empty()) throw EmptyInput("metric_limit_term");
  TermLimitResult result;
  result.cycle = certified ? certified : find_cycle(seq);
  if (const auto& cycle = result.cycle) {
    result.stabilization_index = cycle->start;
    auto period = seq.subspan(cycle->start, cycle->period);
    if (std::all_of(period.begin(), period.end(), [&](const Term& t) { return t == period[0]; })) {
      result.status = LimitStatus::exact;
      result.approximant = period[0];
    } else {
      result.status = LimitStatus::divergent;
      result.approximant = cut(seq.back(), options.depth);
    }
    return result;
  }
  const std::size_t n = seq.size();
  std::vector<Term> truncated(n);
  for (std::size_t i = 0; i < n; ++i) truncated[i] = cut(seq[i], options.depth);
  std::size_t start = last_index_from(truncated);
  result.approximant = truncated[n - 1];
  result.stabilization_index = start;
  if (n - start >= options.window) {
    result.status = LimitStatus::stable_to_depth;
    result.depth = options.depth;
  }
  return result;
}

namespace {

TermVerdict from_limit(const TermLimitResult& r) {
  switch (r.status) {
    case LimitStatus::exact: return {Verdict::converged_exact, r.approximant, 0};
    case LimitStatus::stable_to_depth: return {Verdict::converged_to_depth, r.approximant, r.depth};
    case LimitStatus::divergent: return {Verdict::diverged, std::nullopt, 0};
    case LimitStatus::inconclusive: break;
  }
  return {};
}

}  // namespace

TermVerdict analyze_term_trace(const TermTrace& trace, Discipline discipline,
                               const LimitOptions& options) {
  if (trace.termination == Termination::normal_form) {
    Term last = trace.steps.empty() ? trace.initial : trace.steps.back().target;
    return {Verdict::converged_exact, last, 0};
  }
  std::vector<Term> terms = trace.terms();
  switch (discipline) {
    case Discipline::weak_m: return from_limit(metric_limit_term(terms, options, trace.cycle));
    case Discipline::weak_p: return from_limit(liminf_term(terms, options, trace.cycle));
    case Discipline::strong_m: {
      if (trace.cycle) return {Verdict::diverged, std::nullopt, 0};
      TermVerdict weak = from_limit(metric_limit_term(terms, options));
      if (weak.verdict != Verdict::converged_to_depth && weak.verdict != Verdict::converged_exact) {
        return weak;
      }
      const auto& steps = trace.steps;
      if (steps.size() < options.window) return {};
      for (std::size_t i = steps.size() - options.window; i < steps.size(); ++i) {
        if (steps[i].position.size() < options.depth) return {};
      }
      return {Verdict::converged_to_depth, cut(*weak.limit, options.depth), options.depth};
    }
    case Discipline::strong_p: {
      std::vector<Term> contexts = trace.contexts();
      if (contexts.empty()) return {};
      return from_limit(liminf_term(contexts, options, trace.cycle));
    }
  }
  return {};
}

PreservationReport check_unravel_preservation(std::span<const CanonicalTermGraph> seq,
                                              const LimitOptions& options,
                                              std::optional<Cycle> certified) {
  const std::size_t d = options.depth;
  std::vector<Term> unravelled;
  for (const CanonicalTermGraph& g : seq) unravelled.push_back(to_term(unravel_to_depth(g, d + 1)));

  PreservationReport report;
  LiminfResult graph_inf = liminf(seq, options, certified);
  TermLimitResult term_inf = liminf_term(unravelled, options, certified);
  report.liminf_agrees = to_term(unravel_to_depth(graph_inf.approximant, d)) ==
                         cut(term_inf.approximant, d);

  LimitResult graph_lim = metric_limit(seq, options, certified);
  if (graph_lim.status == LimitStatus::exact ||
      graph_lim.status == LimitStatus::stable_to_depth) {
    TermLimitResult term_lim = metric_limit_term(unravelled, options, certified);
    bool converged = term_lim.status == LimitStatus::exact ||
                     term_lim.status == LimitStatus::stable_to_depth;
    report.limit_agrees = converged && to_term(unravel_to_depth(graph_lim.approximant, d)) ==
                                           cut(term_lim.approximant, d);
  }
  return report;
}

}  // namespace tgr
