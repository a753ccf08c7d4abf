#ifndef TGR_DOCUMENT_HPP
#define TGR_DOCUMENT_HPP

// The .tgr text format: term graphs, rules, rewriting systems and scripts.
//
//   termgraph g0 { root n0; n0: f(n1, n2); n1: c; n2: c; }
//   rule r { lhs l; rhs r; l: app(y, x); y: Y; x: $x; r: app(x, l); }
//   grs R { use r; }
//   script s { step r at [0, 1]; }
//
// The signature is inferred from use; "#" starts a line comment.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tgr/core.hpp"
#include "tgr/rewrite.hpp"

namespace tgr {

struct GraphDef {
  std::string name;
  RawGraph raw;
  /// NodeId i is raw.nodes[i].
  TermGraph graph;
};

struct RuleDef {
  RawRule raw;
  Rule rule;
};

struct GrsDef {
  std::string name;
  std::vector<std::string> rules;
};

struct ScriptDef {
  std::string name;
  Script steps;
};

struct Document {
  enum class Kind { termgraph, rule, grs, script };

  Signature signature;
  std::vector<GraphDef> graphs;
  std::vector<RuleDef> rules;
  std::vector<GrsDef> systems;
  std::vector<ScriptDef> scripts;
  /// Source order of all items, as (kind, index into the matching list).
  std::vector<std::pair<Kind, std::size_t>> items;

  const GraphDef* graph(std::string_view name) const;
  const RuleDef* rule(std::string_view name) const;
  const GrsDef* grs(std::string_view name) const;
  const ScriptDef* script(std::string_view name) const;

  Grs make_grs(const GrsDef& def) const;
};

/// Throws ParseError.
Document parse_document(std::string_view text);

/// Nodes named n<id>. `compact` puts everything on one line.
std::string print_termgraph(std::string_view name, const TermGraph& g, bool compact = false);

std::string print_rule(const RawRule& rule);

std::string print_document(const Document& doc);

std::string print_position(const Position& p);

}  // namespace tgr

#endif  // TGR_DOCUMENT_HPP
