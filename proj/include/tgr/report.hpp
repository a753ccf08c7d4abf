#ifndef TGR_REPORT_HPP
#define TGR_REPORT_HPP

#include <string>

#include "json.hpp"
#include "tgr/converge.hpp"

namespace tgr {

/// "key: value" lines.
std::string format_report(const ConvergenceReport& report);

/// {discipline, verdict, depth, limit, certificate?, evidence}; the limit is
/// one-line .tgr text or null.
nlohmann::ordered_json report_json(const ConvergenceReport& report);

}  // namespace tgr

#endif  // TGR_REPORT_HPP
