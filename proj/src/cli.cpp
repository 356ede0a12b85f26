// SPDX-License-Identifier: Apache-2.0

#include "plint/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "plint/error.hpp"
#include "plint/facts.hpp"
#include "plint/lowering.hpp"
#include "plint/report.hpp"

namespace plint {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ParamValue param_from_json(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array()) {
    std::vector<std::string> out;
    for (const json& s : v) {
      if (!s.is_string()) throw ConfigError(where + ": expected strings");
      out.push_back(s.get<std::string>());
    }
    return out;
  }
  throw ConfigError(where + ": expected a number or a list of strings");
}

json param_to_json(const ParamValue& v) {
  if (std::holds_alternative<double>(v)) return std::get<double>(v);
  return std::get<std::vector<std::string>>(v);
}

Principle require_principle(const std::string& name) {
  auto p = principle_from_string(name);
  if (!p) throw ConfigError("unknown principle '" + name + "'");
  return *p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string project_name(const AnalysisConfig& config) {
  if (config.project) return *config.project;
  std::vector<std::string> inputs = config.inputs;
  if (config.facts) inputs = {*config.facts};
  if (inputs.empty()) return "";
  const std::string smallest = *std::min_element(inputs.begin(), inputs.end());
  fs::path p = fs::weakly_canonical(fs::absolute(smallest));
  if (p.filename().empty()) p = p.parent_path();
  return p.filename().string();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_output(const std::optional<std::string>& path, const std::string& text, std::ostream& out) {
  if (!path || *path == "-") {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw InputError(*path + ": cannot write file");
  f << text;
}

void print_warnings(const Warnings& warnings, std::ostream& err) {
  for (const Warning& w : warnings) {
    if (w.file.empty()) {
      err << "warning: " << w.message << "\n";
    } else {
      err << w.file << ":" << w.line << ": warning: " << w.message << "\n";
    }
  }
}

struct LoadedModel {
  CodeModel model;
  Warnings warnings;
  std::string project;
};

LoadedModel load_model(const AnalysisConfig& config) {
  LoadedModel loaded;
  if (config.facts) {
    json doc;
    try {
      doc = json::parse(read_file(*config.facts));
    } catch (const json::parse_error& e) {
      throw SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
    FactsImport imported = import_facts(doc);
    loaded.model = std::move(imported.model);
    loaded.warnings = std::move(imported.warnings);
    loaded.project = imported.project;
  } else {
    LoweringResult lowered = analyze_files(collect_source_files(config.inputs));
    loaded.model = std::move(lowered.model);
    loaded.warnings = std::move(lowered.warnings);
  }
  if (config.project || loaded.project.empty()) loaded.project = project_name(config);
  return loaded;
}

AnalysisConfig base_config(const std::optional<std::string>& config_path) {
  AnalysisConfig config;
  std::optional<std::string> path = config_path;
  if (!path) {
    if (const char* env = std::getenv("PRINCIPLE_LINT_CONFIG"); env != nullptr && *env != '\0') path = env;
  }
  if (path) {
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw ConfigError(*path + ": cannot read config file");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError(*path + ": invalid JSON: " + e.what());
    }
    apply_config_document(doc, config);
  }
  return config;
}

std::set<std::string> split_list(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

std::string render_rules(const std::string& format) {
  if (format == "json") {
    json list = json::array();
    for (const RuleDescriptor& r : list_rules()) {
      json params = json::object();
      for (const ParamSpec& p : r.params) {
        params[p.name] = json{{"default", param_to_json(p.default_value)}, {"description", p.description}};
      }
      list.push_back(json{{"rule_id", r.rule_id},
                          {"name", r.name},
                          {"principle", std::string(to_string(r.principle))},
                          {"severity", std::string(to_string(r.severity))},
                          {"scope", std::string(to_string(r.scope_kind))},
                          {"description", r.description},
                          {"params", std::move(params)}});
    }
    return json{{"rules", std::move(list)},
                {"note", "rule-to-principle assignment is this tool's own catalog"}}
               .dump(2) +
           "\n";
  }
  std::ostringstream out;
  for (const RuleDescriptor& r : list_rules()) {
    char head[160];
    std::snprintf(head, sizeof head, "%-10s %-6s %-6s %-8s %s", r.rule_id.c_str(),
                  std::string(to_string(r.principle)).c_str(),
                  std::string(to_string(r.severity)).c_str(),
                  std::string(to_string(r.scope_kind)).c_str(), r.name.c_str());
    out << head << "\n    " << r.description << "\n";
    for (const ParamSpec& p : r.params) {
      out << "    " << p.name << " = ";
      if (std::holds_alternative<double>(p.default_value)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", std::get<double>(p.default_value));
        out << buf;
      } else {
        const auto& list = std::get<std::vector<std::string>>(p.default_value);
        for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "," : "") << list[i];
      }
      out << "  (" << p.description << ")\n";
    }
  }
  return out.str();
}

}  // namespace

void apply_config_document(const json& doc, AnalysisConfig& config) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "enable") {
        config.rules.enabled.clear();
        for (const json& e : value) config.rules.enabled.insert(e.get<std::string>());
      } else if (key == "params") {
        for (const auto& [rule, params] : value.items()) {
          for (const auto& [name, v] : params.items()) {
            config.rules.overrides[rule][name] = param_from_json(v, rule + "." + name);
          }
        }
      } else if (key == "weights") {
        for (const auto& [group, weights] : value.items()) {
          if (group == "principles") {
            for (const auto& [p, w] : weights.items()) {
              config.scores.principle_weights[require_principle(p)] = w.get<double>();
            }
          } else if (group == "severities") {
            for (const auto& [s, w] : weights.items()) {
              auto sev = severity_from_string(s);
              if (!sev) throw ConfigError("unknown severity '" + s + "'");
              config.scores.severity_weights[*sev] = w.get<double>();
            }
          } else {
            throw ConfigError("config: unknown weights group '" + group + "'");
          }
        }
      } else if (key == "density_limits") {
        for (const auto& [rule, v] : value.items()) {
          rule_descriptor(rule);
          config.scores.rule_density_limits[rule] = v.get<double>();
        }
      } else if (key == "format") {
        config.format = value.get<std::string>();
      } else if (key == "output") {
        config.output = value.get<std::string>();
      } else if (key == "fail_grade") {
        config.fail_grade = value.get<double>();
      } else if (key == "project") {
        config.project = value.get<std::string>();
      } else {
        throw ConfigError("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

void apply_param_assignment(const std::string& assignment, AnalysisConfig& config) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.rfind('.', eq);
  if (eq == std::string::npos || dot == std::string::npos || dot == 0) {
    throw ConfigError("--set expects rule.param=value, got '" + assignment + "'");
  }
  const std::string rule = assignment.substr(0, dot);
  const std::string name = assignment.substr(dot + 1, eq - dot - 1);
  const std::string text = assignment.substr(eq + 1);
  char* end = nullptr;
  const double number = std::strtod(text.c_str(), &end);
  if (!text.empty() && end != nullptr && *end == '\0') {
    config.rules.overrides[rule][name] = number;
  } else {
    std::vector<std::string> list;
    for (const std::string& s : split_list(text)) list.push_back(s);
    config.rules.overrides[rule][name] = list;
  }
}

void validate_analysis_config(const AnalysisConfig& config) {
  validate_config(config.rules);
  config.scores.validate();
  if (config.format != "json" && config.format != "sonar" && config.format != "text" &&
      config.format != "csv") {
    throw ConfigError("unknown format '" + config.format + "'");
  }
  if (config.fail_grade && !(*config.fail_grade >= 1.0 && *config.fail_grade <= 6.0)) {
    throw ConfigError("fail_grade must lie in [1, 6]");
  }
  if (config.facts && !config.inputs.empty()) {
    throw ConfigError("give either source paths or --facts, not both");
  }
  if (!config.facts && config.inputs.empty()) throw ConfigError("no input paths given");
}

std::string config_digest(const AnalysisConfig& config) {
  json rules = json::object();
  for (const std::string& id : enabled_rule_ids(config.rules)) {
    const RuleDescriptor& d = rule_descriptor(id);
    const RuleParams params = resolve_params(d, config.rules);
    json p = json::object();
    for (const ParamSpec& spec : d.params) {
      p[spec.name] = spec.type == ParamSpec::Type::StringList ? json(params.strings(spec.name))
                                                              : json(params.number(spec.name));
    }
    rules[id] = json{{"params", std::move(p)}, {"density_limit", config.scores.density_limit(d)}};
  }
  json weights = json::object();
  for (Principle p : kAllPrinciples) weights[std::string(to_string(p))] = config.scores.principle_weight(p);
  json severities = json::object();
  for (Severity s : {Severity::Major, Severity::Minor, Severity::Info}) {
    severities[std::string(to_string(s))] = config.scores.severity_weight(s);
  }
  const json canonical{{"rules", rules}, {"principle_weights", weights}, {"severity_weights", severities}};
  return fnv1a_hex(canonical.dump());
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"principle-lint: design-principle checks for Java sources", "principle-lint"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  std::optional<std::string> facts, config_path, format, output, enable, project;
  std::optional<double> fail_grade;
  std::vector<std::string> assignments;
  bool with_tokens = false;
  bool stamp = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Analyze sources or a facts file");
  analyze->add_option("paths", inputs, "Source files or directories");
  analyze->add_option("--facts", facts, "Facts file (code-model/1) instead of sources");
  analyze->add_option("--config", config_path, "JSON config file");
  analyze->add_option("--enable", enable, "Comma-separated rule ids or principles");
  analyze->add_option("--set", assignments, "Parameter override rule.param=value");
  analyze->add_option("--format", format, "json, sonar, text or csv");
  analyze->add_option("-o,--output", output, "Output path (stdout if absent)");
  analyze->add_option("--fail-grade", fail_grade, "Exit 1 when the grade is worse than this");
  analyze->add_option("--project", project, "Project name used in reports");
  analyze->add_flag("--with-tokens", with_tokens, "Accepted for symmetry; sources always yield tokens");
  analyze->add_flag("--stamp", stamp, "Add a UTC timestamp to the report");

  std::string rules_format = "text";
  CLI::App* rules = app.add_subcommand("rules", "Print the rule catalog");
  rules->add_option("--format", rules_format, "text or json");

  std::vector<std::string> export_inputs;
  std::optional<std::string> export_output, export_project;
  bool export_tokens = false;
  CLI::App* exporter = app.add_subcommand("export-facts", "Write the code model as a facts file");
  exporter->add_option("paths", export_inputs, "Source files or directories")->required();
  exporter->add_option("-o,--output", export_output, "Output path (stdout if absent)");
  exporter->add_option("--project", export_project, "Project name");
  exporter->add_flag("--with-tokens", export_tokens, "Include normalized tokens for clone detection");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "principle-lint: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (rules->parsed()) {
      if (rules_format != "text" && rules_format != "json") {
        throw ConfigError("unknown format '" + rules_format + "'");
      }
      out << render_rules(rules_format);
      return kExitOk;
    }

    if (exporter->parsed()) {
      AnalysisConfig config;
      config.inputs = export_inputs;
      config.project = export_project;
      LoweringResult lowered = analyze_files(collect_source_files(config.inputs));
      print_warnings(lowered.warnings, err);
      const json doc = export_facts(lowered.model, export_tokens, project_name(config));
      write_output(export_output, doc.dump(2) + "\n", out);
      return kExitOk;
    }

    AnalysisConfig config = base_config(config_path);
    if (!inputs.empty()) config.inputs = inputs;
    if (facts) config.facts = facts;
    if (enable) config.rules.enabled = split_list(*enable);
    for (const std::string& a : assignments) apply_param_assignment(a, config);
    if (format) config.format = *format;
    if (output) config.output = output;
    if (fail_grade) config.fail_grade = fail_grade;
    if (project) config.project = project;
    validate_analysis_config(config);

    LoadedModel loaded = load_model(config);
    Evaluation evaluation = evaluate_all(loaded.model, config.rules);
    const std::vector<std::string> enabled = enabled_rule_ids(config.rules);
    const QualityReport report = assess(loaded.model, evaluation.findings, enabled, config.scores);
    print_warnings(loaded.warnings, err);
    print_warnings(evaluation.warnings, err);

    ReportMeta meta{loaded.project, config_digest(config), std::nullopt};
    if (stamp) meta.timestamp = utc_timestamp();
    std::string text;
    if (config.format == "json") {
      text = render_findings_json(evaluation.findings, report, meta);
    } else if (config.format == "sonar") {
      text = render_sonar_issues(evaluation.findings);
    } else if (config.format == "text") {
      text = render_text_drilldown(evaluation.findings, loaded.model, report, meta);
    } else {
      text = render_score_csv(report, config.scores);
    }
    write_output(config.output, text, out);

    if (config.fail_grade && report.overall && report.overall->grade > *config.fail_grade) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "quality gate failed: grade %.2f is worse than %.2f",
                    report.overall->grade, *config.fail_grade);
      err << "principle-lint: " << buf << "\n";
      return kExitGateFailed;
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "principle-lint: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const ScoreError& e) {
    err << "principle-lint: config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const SourceError& e) {
    err << "principle-lint: " << e.what() << "\n";
    return kExitInputError;
  } catch (const SchemaError& e) {
    err << "principle-lint: schema error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "principle-lint: error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace plint
