#ifndef TGR_TERMS_HPP
#define TGR_TERMS_HPP

// Finite first-order terms, kept deliberately separate from the graph engine
// so that they can serve as an independent reference: the tree metric and
// order, term rewriting, and limits of term sequences.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tgr/core.hpp"
#include "tgr/limits.hpp"
#include "tgr/metric.hpp"

namespace tgr {

struct Term {
  Symbol head;
  std::vector<Term> args;

  bool operator==(const Term&) const = default;
};

Term bottom_term();
bool is_total(const Term& t);
std::size_t term_size(const Term& t);
/// Length of the longest position.
std::size_t term_height(const Term& t);

/// "f(a, g(b))", "$x", "bot". Throws TermError on malformed input.
Term parse_term(std::string_view text);
std::string to_string(const Term& t);

/// The term tree of `t`, nodes in breadth-first order.
TermGraph to_graph(const Term& t);
/// Reads a term tree back. Throws TermError when `g` shares a node.
Term to_term(const TermGraph& g);

/// Replaces every subterm at depth d by bot.
Term cut(const Term& t, std::size_t d);

/// 0 if equal, else 2^-k for the least depth k where the two differ.
Distance dd(const Term& s, const Term& t);

bool leq_bot_term(const Term& s, const Term& t);

/// Positionwise: common head and arity are kept, anything else is bot.
Term glb_term(const Term& s, const Term& t);
Term glb_terms(std::span<const Term> ts);

using Substitution = std::map<Symbol, Term>;

/// Syntactic matching; a repeated variable must bind equal subterms.
std::optional<Substitution> match_term(const Term& pattern, const Term& t);
Term substitute(const Term& t, const Substitution& sigma);

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term replacement);

struct TermRule {
  std::string name;
  Term lhs;
  Term rhs;
};

/// Throws TermError when the lhs does not match at `p`.
Term term_rewrite_step(const Term& t, const TermRule& rule, const Position& p);

struct TermRedex {
  std::size_t rule = 0;
  Position position;
};

/// Redexes ordered by position (shorter first, then lexicographic) and then
/// by rule order.
std::vector<TermRedex> find_term_redexes(std::span<const TermRule> rules, const Term& t);

struct TermStep {
  Term source;
  Term target;
  std::size_t rule = 0;
  Position position;
  /// The source with the redex replaced by bot.
  Term context;
};

enum class Termination { normal_form, step_budget, cycle_detected };

std::string_view to_string(Termination termination) noexcept;

struct TermTrace {
  Term initial;
  std::vector<TermStep> steps;
  Termination termination = Termination::step_budget;
  /// Over term indices (initial = 0); set with cycle_detected.
  std::optional<Cycle> cycle;

  std::vector<Term> terms() const;
  std::vector<Term> contexts() const;
};

/// Leftmost-outermost reduction, stopping at a normal form, after
/// `max_steps` steps, or when a term repeats.
TermTrace run_terms(const Term& t, std::span<const TermRule> rules, std::size_t max_steps);

struct TermLimitResult {
  Term approximant;
  LimitStatus status = LimitStatus::inconclusive;
  std::size_t depth = 0;
  std::size_t stabilization_index = 0;
  std::optional<Cycle> cycle;
};

TermLimitResult liminf_term(std::span<const Term> seq, const LimitOptions& options,
                            std::optional<Cycle> certified = std::nullopt);
TermLimitResult metric_limit_term(std::span<const Term> seq, const LimitOptions& options,
                                  std::optional<Cycle> certified = std::nullopt);

struct TermVerdict {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Term> limit;
  std::size_t depth = 0;
};

TermVerdict analyze_term_trace(const TermTrace& trace, Discipline discipline,
                               const LimitOptions& options);

struct PreservationReport {
  bool liminf_agrees = true;
  /// Checked only when the graph sequence has a metric limit.
  std::optional<bool> limit_agrees;

  bool ok() const { return liminf_agrees && limit_agrees.value_or(true); }
};

/// Compares, to depth options.depth, the unravelling of the graph liminf
/// (and metric limit) with the liminf (and limit) of the unravelled terms.
PreservationReport check_unravel_preservation(std::span<const CanonicalTermGraph> seq,
                                              const LimitOptions& options,
                                              std::optional<Cycle> certified = std::nullopt);

}  // namespace tgr

#endif  // TGR_TERMS_HPP
