#include "tgr/dot.hpp"

namespace tgr {

namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string export_dot(const TermGraph& g, std::string_view name) {
  CanonicalTermGraph canonical = canonicalize(g);
  const TermGraph& c = canonical;
  std::string out = "digraph " + quoted(name) + " {\n";
  for (NodeId n = 0; n < c.size(); ++n) {
    out += "  n" + std::to_string(n) + " [label=" + quoted(c.label(n)) + "];\n";
  }
  for (NodeId n = 0; n < c.size(); ++n) {
    auto succ = c.successors(n);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      out += "  n" + std::to_string(n) + " -> n" + std::to_string(succ[i]) +
             " [label=\"" + std::to_string(i) + "\"];\n";
    }
  }
  return out + "}\n";
}

}  // namespace tgr
