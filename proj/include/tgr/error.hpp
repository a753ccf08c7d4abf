#ifndef TGR_ERROR_HPP
#define TGR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphErrc {
  arity_mismatch,
  unreachable_node,
  unknown_symbol,
  dangling_successor,
  duplicate_node,
  no_such_node,
};

const char* to_string(GraphErrc code) noexcept;

/// Structural problem with a node table. `node()` names the offending node
/// (or symbol, for unknown_symbol).
class GraphError : public Error {
 public:
  GraphError(GraphErrc code, std::string node, const std::string& detail);

  GraphErrc code() const noexcept { return code_; }
  const std::string& node() const noexcept { return node_; }

 private:
  GraphErrc code_;
  std::string node_;
};

/// A set-valued operation (glb_set, liminf, ...) was handed nothing.
class EmptyInput : public Error {
 public:
  explicit EmptyInput(const std::string& operation)
      : Error(operation + ": empty input") {}
};

enum class RewriteErrc {
  duplicate_variable_node,
  variable_at_lhs_root,
  variable_unreachable_from_lhs,
  bottom_in_rule,
  lhs_equals_rhs,
  duplicate_rule,
  no_match,
  scripted_redex_invalid,
  cyclic_rule_needs_bound,
};

const char* to_string(RewriteErrc code) noexcept;

class RewriteError : public Error {
 public:
  RewriteError(RewriteErrc code, const std::string& detail, std::size_t index = 0);

  RewriteErrc code() const noexcept { return code_; }
  /// Step index for scripted_redex_invalid, otherwise 0.
  std::size_t index() const noexcept { return index_; }

 private:
  RewriteErrc code_;
  std::size_t index_;
};

class TermError : public Error {
 public:
  using Error::Error;
};

/// Syntax or semantic error in a .tgr document, with 1-based location.
/// `kind()` is "syntax" for grammar errors, otherwise the name of the
/// validation error code (e.g. "arity_mismatch").
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string kind,
             const std::string& detail);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string kind_;
};

}  // namespace tgr

#endif  // TGR_ERROR_HPP
