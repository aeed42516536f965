#ifndef JSTRETCH_REPORT_HPP
#define JSTRETCH_REPORT_HPP

#include <string>

#include <json.hpp>

#include "jstretch/analysis.hpp"
#include "jstretch/registry.hpp"
#include "jstretch/session.hpp"
#include "jstretch/speclab.hpp"

namespace jst::cli {

/// Report fields plus provenance (seed, p, caps, dissent, hypothesis status per verdict).
nlohmann::json to_json(const AnalysisReport& report, const Caps& caps = {});
/// Inverse of to_json; caps.search becomes report.cap.
AnalysisReport report_from_json(const nlohmann::json& j);

std::string emit_report(const AnalysisReport& report, const Caps& caps = {});
AnalysisReport parse_report(const std::string& text);

nlohmann::json to_json(const RegistryResult& result, const Caps& caps = {});
nlohmann::json to_json(const TrialReport& report);

/// One "path: value" line per leaf, in document order; the human rendering.
std::string render_human(const nlohmann::json& j);

}  // namespace jst::cli

#endif
