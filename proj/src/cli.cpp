#include "tgr/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tgr/converge.hpp"
#include "tgr/document.hpp"
#include "tgr/dot.hpp"
#include "tgr/metric.hpp"
#include "tgr/order.hpp"
#include "tgr/report.hpp"
#include "tgr/rewrite.hpp"
#include "tgr/terms.hpp"

namespace tgr {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string path;
  Document doc;

  const GraphDef& graph(const std::string& name) const {
    const GraphDef* g = doc.graph(name);
    if (!g) throw UsageError(path + ": no termgraph named " + name);
    return *g;
  }
};

Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return Loaded{path, parse_document(text.str())};
  } catch (const ParseError& e) {
    throw DataError(path + ":" + e.what());
  }
}

/// Resolves "[GRS] G": the system may be omitted when the file has one.
std::pair<Grs, const GraphDef*> system_and_graph(const Loaded& file,
                                                 const std::vector<std::string>& names) {
  if (names.empty() || names.size() > 2) throw UsageError("expected [GRS] G");
  const GrsDef* def = nullptr;
  if (names.size() == 2) {
    def = file.doc.grs(names[0]);
    if (!def) throw UsageError(file.path + ": no grs named " + names[0]);
  } else if (file.doc.systems.size() == 1) {
    def = &file.doc.systems.front();
  } else {
    throw UsageError(file.path + ": name the grs to use");
  }
  return {file.doc.make_grs(*def), &file.graph(names.back())};
}

Strategy strategy_of(const Loaded& file, const std::string& text) {
  if (text == "lo") return LeftmostOutermost{};
  if (text.rfind("script:", 0) == 0) {
    const ScriptDef* s = file.doc.script(text.substr(7));
    if (!s) throw UsageError(file.path + ": no script named " + text.substr(7));
    return s->steps;
  }
  throw UsageError("unknown strategy " + text);
}

int truth(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << "\n";
  return value ? exit_ok : exit_false;
}

int severity(Verdict v) {
  switch (v) {
    case Verdict::converged_exact:
    case Verdict::converged_to_depth: return exit_ok;
    case Verdict::diverged: return exit_false;
    case Verdict::inconclusive: return exit_inconclusive;
  }
  return exit_inconclusive;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Infinitary term graph rewriting: limits, distances and convergence.", "tgr"};
  app.require_subcommand(1);
  std::function<int()> action;

  std::string file;
  std::vector<std::string> names;
  auto command = [&](const std::string& name, const std::string& help, const std::string& what) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input .tgr document")->required();
    sub->add_option("names", names, what)->required();
    return sub;
  };
  auto expect = [&](std::size_t count) {
    if (names.size() != count) {
      throw UsageError("expected " + std::to_string(count) + " name(s), got " +
                       std::to_string(names.size()));
    }
  };

  command("canon", "Print the canonical form of G", "G")->callback([&] {
    action = [&] {
      expect(1);
      Loaded f = load(file);
      out << print_termgraph(names[0], canonicalize(f.graph(names[0]).graph));
      return exit_ok;
    };
  });

  auto binary = [&](const std::string& name, const std::string& help,
                    std::function<int(const TermGraph&, const TermGraph&)> run) {
    command(name, help, "G H")->callback([&, run] {
      action = [&, run] {
        expect(2);
        Loaded f = load(file);
        return run(f.graph(names[0]).graph, f.graph(names[1]).graph);
      };
    });
  };
  binary("iso", "Are G and H isomorphic?",
         [&](const TermGraph& g, const TermGraph& h) { return truth(out, iso(g, h)); });
  binary("bisim", "Do G and H have the same unravelling?",
         [&](const TermGraph& g, const TermGraph& h) { return truth(out, bisimilar(g, h)); });
  binary("leq", "Is G below H in the partial order?",
         [&](const TermGraph& g, const TermGraph& h) { return truth(out, leq_bot(g, h)); });
  binary("dist", "Distance between G and H", [&](const TermGraph& g, const TermGraph& h) {
    out << dist(g, h).to_string() << "\n";
    return exit_ok;
  });

  command("glb", "Greatest lower bound of G...", "G...")->callback([&] {
    action = [&] {
      Loaded f = load(file);
      std::vector<TermGraph> graphs;
      for (const std::string& n : names) graphs.push_back(f.graph(n).graph);
      out << print_termgraph("glb", glb_set(graphs));
      return exit_ok;
    };
  });

  std::size_t depth_arg = 0;
  CLI::App* trunc = command("truncate", "Cut G at depth D", "G");
  trunc->add_option("-d,--depth", depth_arg, "Depth D")->required();
  trunc->callback([&] {
    action = [&] {
      expect(1);
      Loaded f = load(file);
      out << print_termgraph(names[0], canonicalize(truncate(f.graph(names[0]).graph, depth_arg)));
      return exit_ok;
    };
  });

  std::string node_arg;
  CLI::App* local = command("local-truncate", "Replace node N of G by bot", "G");
  local->add_option("-n,--node", node_arg, "Node name as written in the document")->required();
  local->callback([&] {
    action = [&] {
      expect(1);
      Loaded f = load(file);
      const GraphDef& g = f.graph(names[0]);
      for (NodeId n = 0; n < g.raw.nodes.size(); ++n) {
        if (g.raw.nodes[n].name == node_arg) {
          out << print_termgraph(names[0], canonicalize(local_truncate(g.graph, n)));
          return exit_ok;
        }
      }
      throw UsageError(names[0] + " has no node " + node_arg);
    };
  });

  CLI::App* unrav = command("unravel", "Unravelling of G cut at depth D", "G");
  unrav->add_option("-d,--depth", depth_arg, "Depth D")->required();
  unrav->callback([&] {
    action = [&] {
      expect(1);
      Loaded f = load(file);
      out << to_string(to_term(unravel_to_depth(f.graph(names[0]).graph, depth_arg))) << "\n";
      return exit_ok;
    };
  });

  std::string strategy_arg = "lo";
  std::size_t max_steps = 1000;
  std::string trace_path;
  CLI::App* reduce = command("reduce", "Reduce G with a rewriting system", "[GRS] G");
  reduce->add_option("--strategy", strategy_arg, "lo or script:NAME")->capture_default_str();
  reduce->add_option("--max-steps", max_steps, "Step budget")->capture_default_str();
  reduce->add_option("--trace", trace_path, "Write every graph of the trace to this file");
  reduce->callback([&] {
    action = [&] {
      Loaded f = load(file);
      auto [grs, g] = system_and_graph(f, names);
      Trace trace = run(canonicalize(g->graph), grs, strategy_of(f, strategy_arg), max_steps);
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const Step& s = trace.steps[i];
        out << "step " << i << ": " << s.rule << " at " << print_position(s.redex_position)
            << " depth " << s.redex_depth << "\n";
      }
      out << "termination: " << to_string(trace.termination) << "\n";
      if (trace.cycle) {
        out << "cycle: start=" << trace.cycle->start << " period=" << trace.cycle->period << "\n";
      }
      auto graphs = trace.graphs();
      out << print_termgraph("result", graphs.back());
      if (!trace_path.empty()) {
        std::ofstream t(trace_path, std::ios::binary);
        if (!t) throw UsageError("cannot write " + trace_path);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          if (i) t << "\n";
          t << print_termgraph("t" + std::to_string(i), graphs[i]);
        }
      }
      return exit_ok;
    };
  });

  std::string mode = "all";
  LimitOptions options;
  bool json = false;
  CLI::App* conv = command("converge", "Classify the reduction of G", "[GRS] G");
  conv->add_option("--mode", mode, "weak-m, weak-p, strong-m, strong-p or all")
      ->capture_default_str();
  conv->add_option("-d,--depth", options.depth, "Depth bound")->capture_default_str();
  conv->add_option("-w,--window", options.window, "Stabilisation window")->capture_default_str();
  conv->add_option("--strategy", strategy_arg, "lo or script:NAME")->capture_default_str();
  conv->add_option("--max-steps", max_steps, "Step budget")->capture_default_str();
  conv->add_flag("--json", json, "Print JSON");
  conv->callback([&] {
    action = [&] {
      std::vector<Discipline> modes;
      if (mode == "all") {
        modes.assign(std::begin(all_disciplines), std::end(all_disciplines));
      } else if (auto d = parse_discipline(mode)) {
        modes.push_back(*d);
      } else {
        throw UsageError("unknown mode " + mode);
      }
      if (options.depth == 0 || options.window == 0) throw UsageError("-d and -w must be positive");
      Loaded f = load(file);
      auto [grs, g] = system_and_graph(f, names);
      Trace trace = run(canonicalize(g->graph), grs, strategy_of(f, strategy_arg), max_steps);
      std::vector<ConvergenceReport> reports;
      for (Discipline d : modes) reports.push_back(analyze(trace, d, options));

      if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : reports) j.push_back(report_json(r));
        out << (mode == "all" ? j : j.front()).dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
          if (i) out << "\n";
          out << format_report(reports[i]);
        }
      }
      bool inconclusive = false, diverged = false;
      for (const auto& r : reports) {
        inconclusive |= r.verdict == Verdict::inconclusive;
        diverged |= r.verdict == Verdict::diverged;
      }
      if (reports.size() == 1) return severity(reports.front().verdict);
      return inconclusive ? exit_inconclusive : diverged ? exit_false : exit_ok;
    };
  });

  command("export-dot", "Graphviz rendering of G", "G")->callback([&] {
    action = [&] {
      expect(1);
      Loaded f = load(file);
      out << export_dot(f.graph(names[0]).graph, names[0]);
      return exit_ok;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "tgr: " << e.what() << "\n";
    return exit_usage;
  } catch (const DataError& e) {
    err << "tgr: " << e.what() << "\n";
    return exit_data;
  } catch (const Error& e) {
    err << "tgr: " << e.what() << "\n";
    return exit_data;
  }
}

}  // namespace tgr
