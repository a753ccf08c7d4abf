#include "tgr/error.hpp"

#include <utility>

namespace tgr {

const char* to_string(GraphErrc code) noexcept {
  switch (code) {
    case GraphErrc::arity_mismatch: return "arity_mismatch";
    case GraphErrc::unreachable_node: return "unreachable_node";
    case GraphErrc::unknown_symbol: return "unknown_symbol";
    case GraphErrc::dangling_successor: return "dangling_successor";
    case GraphErrc::duplicate_node: return "duplicate_node";
    case GraphErrc::no_such_node: return "no_such_node";
  }
  return "unknown";
}

GraphError::GraphError(GraphErrc code, std::string node, const std::string& detail)
    : Error(std::string(to_string(code)) + " (" + node + "): " + detail),
      code_(code),
      node_(std::move(node)) {}

const char* to_string(RewriteErrc code) noexcept {
  switch (code) {
    case RewriteErrc::duplicate_variable_node: return "duplicate_variable_node";
    case RewriteErrc::variable_at_lhs_root: return "variable_at_lhs_root";
    case RewriteErrc::variable_unreachable_from_lhs: return "variable_unreachable_from_lhs";
    case RewriteErrc::bottom_in_rule: return "bottom_in_rule";
    case RewriteErrc::lhs_equals_rhs: return "lhs_equals_rhs";
    case RewriteErrc::duplicate_rule: return "duplicate_rule";
    case RewriteErrc::no_match: return "no_match";
    case RewriteErrc::scripted_redex_invalid: return "scripted_redex_invalid";
    case RewriteErrc::cyclic_rule_needs_bound: return "cyclic_rule_needs_bound";
  }
  return "unknown";
}

RewriteError::RewriteError(RewriteErrc code, const std::string& detail, std::size_t index)
    : Error(std::string(to_string(code)) + ": " + detail), code_(code), index_(index) {}

ParseError::ParseError(std::size_t line, std::size_t column, std::string kind,
                       const std::string& detail)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + kind + ": " +
            detail),
      line_(line),
      column_(column),
      kind_(std::move(kind)) {}

}  // namespace tgr
