#include "tgr/document.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <utility>

namespace tgr {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '\'' ||
         c == '.' || c == '@' || c == '+' || c == '*' || c == '-';
}

struct Token {
  enum class Type { word, punct, end };
  Type type = Type::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, column = 1, i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
    } else if (is_word_char(c)) {
      Token t{Token::Type::word, {}, line, column};
      while (i < text.size() && is_word_char(text[i])) {
        t.text += text[i];
        advance();
      }
      out.push_back(std::move(t));
    } else if (std::string_view("{}();:,[]").find(c) != std::string_view::npos) {
      out.push_back(Token{Token::Type::punct, std::string(1, c), line, column});
      advance();
    } else {
      throw ParseError(line, column, "syntax", std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back(Token{Token::Type::end, {}, line, column});
  return out;
}

struct Located {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// A node line together with where it was written.
struct NodeLine {
  RawNode node;
  Located at;
};

struct PendingItem {
  Document::Kind kind;
  std::string name;
  Located at;
  std::string root, lhs, rhs;
  Located root_at, lhs_at, rhs_at;
  std::vector<NodeLine> nodes;
  std::vector<std::pair<std::string, Located>> uses;
  std::vector<std::pair<ScriptStep, Located>> steps;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  std::vector<PendingItem> items() {
    std::vector<PendingItem> out;
    while (peek().type != Token::Type::end) out.push_back(item());
    return out;
  }

 private:
  PendingItem item() {
    const Token& head = peek();
    PendingItem it;
    it.at = {head.line, head.column};
    if (head.text == "termgraph") {
      it.kind = Document::Kind::termgraph;
    } else if (head.text == "rule") {
      it.kind = Document::Kind::rule;
    } else if (head.text == "grs") {
      it.kind = Document::Kind::grs;
    } else if (head.text == "script") {
      it.kind = Document::Kind::script;
    } else {
      fail(head, "expected termgraph, rule, grs or script");
    }
    ++pos_;
    it.name = word("a name");
    expect("{");
    switch (it.kind) {
      case Document::Kind::termgraph:
        keyword("root");
        it.root_at = here();
        it.root = word("a node name");
        expect(";");
        node_lines(it);
        break;
      case Document::Kind::rule:
        keyword("lhs");
        it.lhs_at = here();
        it.lhs = word("a node name");
        expect(";");
        keyword("rhs");
        it.rhs_at = here();
        it.rhs = word("a node name");
        expect(";");
        node_lines(it);
        break;
      case Document::Kind::grs:
        while (peek().text == "use" && peek().type == Token::Type::word) {
          ++pos_;
          Located at = here();
          it.uses.emplace_back(word("a rule name"), at);
          expect(";");
        }
        break;
      case Document::Kind::script:
        while (peek().text == "step" && peek().type == Token::Type::word) {
          ++pos_;
          Located at = here();
          ScriptStep s{word("a rule name"), {}};
          keyword("at");
          s.position = position();
          expect(";");
          it.steps.emplace_back(std::move(s), at);
        }
        break;
    }
    expect("}");
    return it;
  }

  void node_lines(PendingItem& it) {
    while (peek().type == Token::Type::word) {
      NodeLine line;
      line.at = here();
      line.node.name = word("a node name");
      expect(":");
      line.node.label = word("a symbol");
      if (is_punct("(")) {
        ++pos_;
        line.node.successors.push_back(word("a node name"));
        while (is_punct(",")) {
          ++pos_;
          line.node.successors.push_back(word("a node name"));
        }
        expect(")");
      }
      expect(";");
      it.nodes.push_back(std::move(line));
    }
  }

  Position position() {
    expect("[");
    Position p;
    if (!is_punct("]")) {
      p.push_back(natural());
      while (is_punct(",")) {
        ++pos_;
        p.push_back(natural());
      }
    }
    expect("]");
    return p;
  }

  std::size_t natural() {
    const Token& t = peek();
    if (t.type != Token::Type::word || t.text.empty() ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      fail(t, "expected a natural number");
    }
    ++pos_;
    return std::stoul(t.text);
  }

  const Token& peek() const { return tokens_[pos_]; }
  Located here() const { return {peek().line, peek().column}; }
  bool is_punct(std::string_view p) const {
    return peek().type == Token::Type::punct && peek().text == p;
  }

  std::string word(const char* what) {
    const Token& t = peek();
    if (t.type != Token::Type::word) fail(t, std::string("expected ") + what);
    ++pos_;
    return t.text;
  }

  void keyword(std::string_view k) {
    const Token& t = peek();
    if (t.type != Token::Type::word || t.text != k) fail(t, "expected '" + std::string(k) + "'");
    ++pos_;
  }

  void expect(std::string_view p) {
    if (!is_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    ++pos_;
  }

  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    std::string found = t.type == Token::Type::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, "syntax", what + ", found " + found);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Where a validation error about `node` (a node name, or for unknown
/// symbols the symbol) points to.
Located locate(const PendingItem& it, const std::string& node) {
  for (const NodeLine& n : it.nodes) {
    if (n.node.name == node || n.node.label == node) return n.at;
  }
  if (node == it.root) return it.root_at;
  if (node == it.lhs) return it.lhs_at;
  if (node == it.rhs) return it.rhs_at;
  return it.at;
}

template <class F>
auto validated(const PendingItem& it, F&& build) {
  try {
    return build();
  } catch (const GraphError& e) {
    Located at = locate(it, e.node());
    throw ParseError(at.line, at.column, to_string(e.code()), it.name + ": " + e.what());
  } catch (const RewriteError& e) {
    throw ParseError(it.at.line, it.at.column, to_string(e.code()), e.what());
  }
}

std::vector<RawNode> raw_nodes(const PendingItem& it) {
  std::vector<RawNode> out;
  for (const NodeLine& n : it.nodes) out.push_back(n.node);
  return out;
}

void print_node_line(std::string& out, const RawNode& n, bool compact) {
  out += compact ? " " : "  ";
  out += n.name + ": " + n.label;
  if (!n.successors.empty()) {
    out += '(';
    for (std::size_t i = 0; i < n.successors.size(); ++i) {
      if (i) out += ", ";
      out += n.successors[i];
    }
    out += ')';
  }
  out += compact ? ";" : ";\n";
}

}  // namespace

const GraphDef* Document::graph(std::string_view name) const {
  for (const GraphDef& g : graphs) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const RuleDef* Document::rule(std::string_view name) const {
  for (const RuleDef& r : rules) {
    if (r.raw.name == name) return &r;
  }
  return nullptr;
}

const GrsDef* Document::grs(std::string_view name) const {
  for (const GrsDef& g : systems) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

const ScriptDef* Document::script(std::string_view name) const {
  for (const ScriptDef& s : scripts) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Grs Document::make_grs(const GrsDef& def) const {
  std::vector<Rule> out;
  for (const std::string& name : def.rules) out.push_back(rule(name)->rule);
  return Grs(signature, std::move(out));
}

Document parse_document(std::string_view text) {
  std::vector<PendingItem> pending = Parser(text).items();
  Document doc;

  std::map<std::string, Document::Kind> names;
  for (const PendingItem& it : pending) {
    if (!names.emplace(it.name, it.kind).second) {
      throw ParseError(it.at.line, it.at.column, "duplicate_name", it.name + " is defined twice");
    }
    for (const NodeLine& n : it.nodes) {
      try {
        doc.signature.declare(n.node.label, n.node.successors.size());
      } catch (const GraphError& e) {
        throw ParseError(n.at.line, n.at.column, to_string(e.code()),
                         n.node.name + ": " + n.node.label + " used with " +
                             std::to_string(n.node.successors.size()) + " successors, declared " +
                             std::to_string(doc.signature.arity(n.node.label).value_or(0)));
      }
    }
  }

  auto is_rule = [&](const std::string& name) {
    auto found = names.find(name);
    return found != names.end() && found->second == Document::Kind::rule;
  };

  for (const PendingItem& it : pending) {
    switch (it.kind) {
      case Document::Kind::termgraph: {
        for (const NodeLine& n : it.nodes) {
          if (is_variable(n.node.label)) {
            throw ParseError(n.at.line, n.at.column, to_string(GraphErrc::unknown_symbol),
                             n.node.name + ": variable " + n.node.label + " outside a rule");
          }
        }
        RawGraph raw{it.root, raw_nodes(it)};
        TermGraph g = validated(it, [&] { return validate(raw, doc.signature); });
        doc.items.emplace_back(it.kind, doc.graphs.size());
        doc.graphs.push_back(GraphDef{it.name, std::move(raw), std::move(g)});
        break;
      }
      case Document::Kind::rule: {
        RawRule raw{it.name, it.lhs, it.rhs, raw_nodes(it)};
        Rule rule = validated(it, [&] { return validate_rule(raw, doc.signature); });
        doc.items.emplace_back(it.kind, doc.rules.size());
        doc.rules.push_back(RuleDef{std::move(raw), std::move(rule)});
        break;
      }
      case Document::Kind::grs: {
        GrsDef def{it.name, {}};
        for (const auto& [name, at] : it.uses) {
          if (!is_rule(name)) throw ParseError(at.line, at.column, "unknown_name", "no rule " + name);
          for (const std::string& seen : def.rules) {
            if (seen == name) {
              throw ParseError(at.line, at.column, "duplicate_rule", name + " used twice");
            }
          }
          def.rules.push_back(name);
        }
        doc.items.emplace_back(it.kind, doc.systems.size());
        doc.systems.push_back(std::move(def));
        break;
      }
      case Document::Kind::script: {
        ScriptDef def{it.name, {}};
        for (const auto& [step, at] : it.steps) {
          if (!is_rule(step.rule)) {
            throw ParseError(at.line, at.column, "unknown_name", "no rule " + step.rule);
          }
          def.steps.push_back(step);
        }
        doc.items.emplace_back(it.kind, doc.scripts.size());
        doc.scripts.push_back(std::move(def));
        break;
      }
    }
  }
  return doc;
}

std::string print_termgraph(std::string_view name, const TermGraph& g, bool compact) {
  std::string out = "termgraph " + std::string(name) + " {";
  out += compact ? " " : "\n  ";
  out += "root n" + std::to_string(g.root()) + ";";
  if (!compact) out += "\n";
  for (NodeId n = 0; n < g.size(); ++n) {
    RawNode raw{"n" + std::to_string(n), g.label(n), {}};
    for (NodeId s : g.successors(n)) raw.successors.push_back("n" + std::to_string(s));
    print_node_line(out, raw, compact);
  }
  out += compact ? " }" : "}\n";
  return out;
}

std::string print_rule(const RawRule& rule) {
  std::string out = "rule " + rule.name + " {\n  lhs " + rule.lhs + ";\n  rhs " + rule.rhs + ";\n";
  for (const RawNode& n : rule.nodes) print_node_line(out, n, false);
  return out + "}\n";
}

std::string print_position(const Position& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::string print_document(const Document& doc) {
  std::string out;
  for (auto [kind, index] : doc.items) {
    if (!out.empty()) out += "\n";
    switch (kind) {
      case Document::Kind::termgraph: {
        const GraphDef& g = doc.graphs[index];
        out += "termgraph " + g.name + " {\n  root " + g.raw.root + ";\n";
        for (const RawNode& n : g.raw.nodes) print_node_line(out, n, false);
        out += "}\n";
        break;
      }
      case Document::Kind::rule: out += print_rule(doc.rules[index].raw); break;
      case Document::Kind::grs: {
        const GrsDef& g = doc.systems[index];
        out += "grs " + g.name + " {\n";
        for (const std::string& r : g.rules) out += "  use " + r + ";\n";
        out += "}\n";
        break;
      }
      case Document::Kind::script: {
        const ScriptDef& s = doc.scripts[index];
        out += "script " + s.name + " {\n";
        for (const ScriptStep& step : s.steps) {
          out += "  step " + step.rule + " at " + print_position(step.position) + ";\n";
        }
        out += "}\n";
        break;
      }
    }
  }
  return out;
}

}  // namespace tgr
