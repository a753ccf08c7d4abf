#ifndef TGR_DOT_HPP
#define TGR_DOT_HPP

#include <string>
#include <string_view>

#include "tgr/core.hpp"

namespace tgr {

/// Graphviz digraph of the canonical form of `g`. Edges carry their
/// successor index, so equal canonical graphs give identical text.
std::string export_dot(const TermGraph& g, std::string_view name = "tgr");

}  // namespace tgr

#endif  // TGR_DOT_HPP
