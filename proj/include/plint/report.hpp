// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_REPORT_HPP
#define PLINT_REPORT_HPP

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "plint/code_model.hpp"
#include "plint/quality.hpp"
#include "plint/rules.hpp"

namespace plint {

struct ReportMeta {
  std::string project;
  std::string config_digest;
  std::optional<std::string> timestamp;  // only with --stamp
};

nlohmann::json location_to_json(const SourceLocation& loc);
nlohmann::json finding_to_json(const Finding& f);
/// Inverse of finding_to_json. Throws SchemaError.
Finding finding_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const QualityReport& report);

/// findings/1 document.
nlohmann::json findings_document(std::span<const Finding> findings, const QualityReport& report,
                                 const ReportMeta& meta);
std::string render_findings_json(std::span<const Finding> findings, const QualityReport& report,
                                 const ReportMeta& meta);

/// SonarQube generic issue import document.
nlohmann::json sonar_document(std::span<const Finding> findings);
std::string render_sonar_issues(std::span<const Finding> findings);

/// package -> class -> findings, then the score table.
std::string render_text_drilldown(std::span<const Finding> findings, const CodeModel& model,
                                  const QualityReport& report, const ReportMeta& meta);

/// Score table only: one row per scored principle, then overall.
std::string render_score_csv(const QualityReport& report, const ScoreConfig& config);

}  // namespace plint

#endif  // PLINT_REPORT_HPP
