// SPDX-License-Identifier: Apache-2.0

#include "plint/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include "plint/error.hpp"

namespace plint {

using nlohmann::json;

namespace {

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string sonar_severity(Severity s) {
  switch (s) {
    case Severity::Major: return "MAJOR";
    case Severity::Minor: return "MINOR";
    case Severity::Info: return "INFO";
  }
  return "INFO";
}

json sonar_location(const SourceLocation& loc, const std::string& message) {
  return json{{"message", message},
              {"filePath", loc.file},
              {"textRange", {{"startLine", loc.start_line}, {"endLine", loc.end_line}}}};
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("/") + key, "missing required field");
  return j.at(key);
}

SourceLocation location_from_json(const json& j) {
  try {
    return SourceLocation{require(j, "file").get<std::string>(), require(j, "start_line").get<int>(),
                          require(j, "end_line").get<int>()};
  } catch (const json::exception& e) {
    throw SchemaError("/location", e.what());
  }
}

}  // namespace

json location_to_json(const SourceLocation& loc) {
  return json{{"file", loc.file}, {"start_line", loc.start_line}, {"end_line", loc.end_line}};
}

json finding_to_json(const Finding& f) {
  json secondary = json::array();
  for (const SourceLocation& s : f.secondary) secondary.push_back(location_to_json(s));
  return json{{"rule_id", f.rule_id},
              {"principle", std::string(to_string(f.principle))},
              {"severity", std::string(to_string(f.severity))},
              {"subject", f.subject.str()},
              {"location", location_to_json(f.location)},
              {"message", f.message},
              {"secondary", std::move(secondary)}};
}

Finding finding_from_json(const json& j) {
  Finding f;
  try {
    f.rule_id = require(j, "rule_id").get<std::string>();
    auto p = principle_from_string(require(j, "principle").get<std::string>());
    auto s = severity_from_string(require(j, "severity").get<std::string>());
    if (!p) throw SchemaError("/principle", "unknown principle");
    if (!s) throw SchemaError("/severity", "unknown severity");
    f.principle = *p;
    f.severity = *s;
    f.subject = EntityId(require(j, "subject").get<std::string>());
    f.location = location_from_json(require(j, "location"));
    f.message = require(j, "message").get<std::string>();
    for (const json& s2 : require(j, "secondary")) f.secondary.push_back(location_from_json(s2));
  } catch (const json::exception& e) {
    throw SchemaError("/", e.what());
  }
  return f;
}

json report_to_json(const QualityReport& report) {
  json per_rule = json::object();
  for (const auto& [id, r] : report.per_rule) {
    per_rule[id] = json{{"principle", std::string(to_string(r.principle))},
                        {"severity", std::string(to_string(r.severity))},
                        {"finding_count", r.finding_count},
                        {"scope_size", r.scope_size},
                        {"density", r.density},
                        {"density_limit", r.density_limit},
                        {"utility", r.utility}};
  }
  json per_principle = json::object();
  for (const auto& [p, s] : report.per_principle) per_principle[std::string(to_string(p))] = s;
  return json{
      {"per_rule", std::move(per_rule)},
      {"per_principle", std::move(per_principle)},
      {"overall", report.overall ? json(report.overall->overall) : json(nullptr)},
      {"grade", report.overall ? json(report.overall->grade) : json(nullptr)},
      {"model",
       {{"utility", "max(0, 1 - density / density_limit)"},
        {"principle_score", "severity-weighted mean of rule utilities"},
        {"overall", "principle-weighted mean of principle scores"},
        {"grade", "1 + 5 * (1 - overall)"},
        {"note", "formulae are this tool's own definitions, not a published calibration"}}},
  };
}

json findings_document(std::span<const Finding> findings, const QualityReport& report,
                       const ReportMeta& meta) {
  json list = json::array();
  for (const Finding& f : findings) list.push_back(finding_to_json(f));
  json doc{{"tool", "principle-lint"},
           {"schema", "findings/1"},
           {"project", meta.project},
           {"config_digest", meta.config_digest},
           {"findings", std::move(list)},
           {"scores", report_to_json(report)}};
  if (meta.timestamp) doc["timestamp"] = *meta.timestamp;
  return doc;
}

std::string render_findings_json(std::span<const Finding> findings, const QualityReport& report,
                                 const ReportMeta& meta) {
  return findings_document(findings, report, meta).dump(2) + "\n";
}

json sonar_document(std::span<const Finding> findings) {
  json issues = json::array();
  for (const Finding& f : findings) {
    json secondary = json::array();
    for (const SourceLocation& s : f.secondary) secondary.push_back(sonar_location(s, f.message));
    issues.push_back(json{{"engineId", "principle-lint"},
                          {"ruleId", f.rule_id},
                          {"severity", sonar_severity(f.severity)},
                          {"type", "CODE_SMELL"},
                          {"primaryLocation", sonar_location(f.location, f.message)},
                          {"secondaryLocations", std::move(secondary)}});
  }
  return json{{"issues", std::move(issues)}};
}

std::string render_sonar_issues(std::span<const Finding> findings) {
  return sonar_document(findings).dump(2) + "\n";
}

std::string render_text_drilldown(std::span<const Finding> findings, const CodeModel& model,
                                  const QualityReport& report, const ReportMeta& meta) {
  // package name -> class name -> findings
  std::map<std::string, std::map<std::string, std::vector<const Finding*>>> tree;
  for (const Finding& f : findings) {
    std::string pkg = "(default)";
    std::string cls = "(package)";
    if (const Entity* subject = model.find(f.subject)) {
      if (subject->kind == EntityKind::Package) {
        if (!subject->qualified_name.empty()) pkg = subject->qualified_name;
      } else {
        const Entity* p = model.package_of(f.subject);
        if (p != nullptr && !p->qualified_name.empty()) pkg = p->qualified_name;
        if (const Entity* t = model.owning_type(f.subject)) cls = t->qualified_name;
      }
    }
    tree[pkg][cls].push_back(&f);
  }

  std::ostringstream out;
  out << "principle-lint report: " << meta.project << "\n";
  if (meta.timestamp) out << "generated: " << *meta.timestamp << "\n";
  out << findings.size() << (findings.size() == 1 ? " finding" : " findings") << "\n";
  for (auto& [pkg, classes] : tree) {
    out << "\npackage " << pkg << "\n";
    for (auto& [cls, list] : classes) {
      out << "  " << cls << "\n";
      std::stable_sort(list.begin(), list.end(), [](const Finding* a, const Finding* b) {
        return std::tie(a->location.start_line, a->rule_id) < std::tie(b->location.start_line, b->rule_id);
      });
      for (const Finding* f : list) {
        out << "    " << f->location.file << ":" << f->location.start_line << "  " << f->rule_id << " ["
            << to_string(f->severity) << "] " << f->message << "\n";
        for (const SourceLocation& s : f->secondary) {
          out << "      also " << s.file << ":" << s.start_line << "-" << s.end_line << "\n";
        }
      }
    }
  }

  out << "\nscores\n";
  for (const auto& [p, s] : report.per_principle) {
    std::string name(to_string(p));
    name.resize(9, ' ');
    out << "  " << name << format_double(s, "%.3f") << "\n";
  }
  if (report.overall) {
    out << "  overall  " << format_double(report.overall->overall, "%.3f") << "\n";
    out << "  grade    " << format_double(report.overall->grade, "%.2f") << "\n";
  } else {
    out << "  overall  n/a\n  grade    n/a\n";
  }
  return out.str();
}

std::string render_score_csv(const QualityReport& report, const ScoreConfig& config) {
  std::ostringstream out;
  out << "principle,weight,score,grade\n";
  for (const auto& [p, s] : report.per_principle) {
    out << to_string(p) << "," << format_double(config.principle_weight(p), "%g") << ","
        << format_double(s, "%.6f") << ",\n";
  }
  if (report.overall) {
    out << "overall,," << format_double(report.overall->overall, "%.6f") << ","
        << format_double(report.overall->grade, "%.6f") << "\n";
  } else {
    out << "overall,,,\n";
  }
  return out.str();
}

}  // namespace plint
