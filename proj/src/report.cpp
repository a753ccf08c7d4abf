#include "tgr/report.hpp"

#include "tgr/document.hpp"

namespace tgr {

namespace {

template <class T, class F>
std::string joined(const std::vector<T>& items, F&& show) {
  std::string out;
  for (const T& item : items) {
    if (!out.empty()) out += ' ';
    out += show(item);
  }
  return out;
}

std::string limit_text(const ConvergenceReport& report) {
  return report.limit ? print_termgraph("limit", *report.limit, true) : std::string("none");
}

}  // namespace

std::string format_report(const ConvergenceReport& report) {
  std::string out;
  auto line = [&](std::string_view key, const std::string& value) {
    out += std::string(key) + ": " + value + "\n";
  };
  line("discipline", std::string(to_string(report.discipline)));
  line("verdict", std::string(to_string(report.verdict)));
  line("depth", std::to_string(report.depth));
  line("limit", limit_text(report));
  if (const auto& c = report.certificate) {
    std::string text = std::string(to_string(c->kind)) + " start=" + std::to_string(c->cycle.start) +
                       " period=" + std::to_string(c->cycle.period);
    if (c->kind == Certificate::Kind::periodic_distance) {
      text += " first=" + std::to_string(c->first) + " second=" + std::to_string(c->second) +
              " distance=" + c->distance.to_string();
    } else {
      text += " max-redex-depth=" + std::to_string(c->max_redex_depth);
    }
    line("certificate", text);
  }
  const Evidence& e = report.evidence;
  line("termination", std::string(to_string(e.termination)));
  line("stabilization-index", std::to_string(e.stabilization_index));
  if (!e.distances.empty()) {
    line("distances", joined(e.distances, [](Distance d) { return d.to_string(); }));
  }
  if (!e.redex_depths.empty()) {
    line("redex-depths", joined(e.redex_depths, [](std::size_t d) { return std::to_string(d); }));
  }
  if (e.context_status) line("context-status", std::string(to_string(*e.context_status)));
  return out;
}

nlohmann::ordered_json report_json(const ConvergenceReport& report) {
  nlohmann::ordered_json j;
  j["discipline"] = std::string(to_string(report.discipline));
  j["verdict"] = std::string(to_string(report.verdict));
  j["depth"] = report.depth;
  j["limit"] = report.limit ? nlohmann::ordered_json(print_termgraph("limit", *report.limit, true))
                            : nlohmann::ordered_json(nullptr);
  if (const auto& c = report.certificate) {
    nlohmann::ordered_json cert;
    cert["kind"] = std::string(to_string(c->kind));
    cert["cycle_start"] = c->cycle.start;
    cert["period"] = c->cycle.period;
    if (c->kind == Certificate::Kind::periodic_distance) {
      cert["first"] = c->first;
      cert["second"] = c->second;
      cert["distance"] = c->distance.to_string();
    } else {
      cert["max_redex_depth"] = c->max_redex_depth;
    }
    j["certificate"] = std::move(cert);
  }
  const Evidence& e = report.evidence;
  nlohmann::ordered_json ev;
  ev["termination"] = std::string(to_string(e.termination));
  ev["stabilization_index"] = e.stabilization_index;
  ev["distances"] = nlohmann::ordered_json::array();
  for (Distance d : e.distances) ev["distances"].push_back(d.to_string());
  ev["redex_depths"] = e.redex_depths;
  ev["context_status"] = e.context_status ? nlohmann::ordered_json(std::string(to_string(*e.context_status)))
                                          : nlohmann::ordered_json(nullptr);
  j["evidence"] = std::move(ev);
  return j;
}

}  // namespace tgr
