// SPDX-License-Identifier: Apache-2.0

// Oracles, generators and corpus helpers shared by the unit and acceptance tests.

#ifndef PLINT_TEST_SUPPORT_HPP
#define PLINT_TEST_SUPPORT_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "plint/clones.hpp"
#include "plint/code_model.hpp"
#include "plint/graph.hpp"
#include "plint/lowering.hpp"
#include "plint/parser.hpp"
#include "plint/quality.hpp"
#include "plint/rules.hpp"

namespace plint::testing {

inline std::string corpus_dir() { return PLINT_CORPUS; }

/// Every corpus file, sorted.
inline std::vector<std::string> corpus_files() { return collect_source_files({corpus_dir()}); }

/// Path of a corpus file as it appears in findings.
inline std::string corpus_file(const std::string& relative) {
  return (std::filesystem::path(corpus_dir()) / relative).lexically_normal().generic_string();
}

inline LoweringResult analyze_corpus() { return analyze_files(corpus_files()); }

/// Lowers in-memory (file name, source) pairs.
inline CodeModel model_of(const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<ast::CompilationUnit> units;
  for (const auto& [name, src] : files) units.push_back(parse_source(src, name));
  return lower_to_model(std::move(units)).model;
}

inline CodeModel model_of(const std::string& source) { return model_of({{"T.java", source}}); }

/// Expected finding count of one rule in one corpus file.
struct FixtureExpectation {
  const char* rule_id;
  const char* file;  // relative to the corpus
  std::size_t count;
};

/// Positive fixtures first, then near misses, for every rule.
inline const std::vector<FixtureExpectation>& fixture_expectations() {
  static const std::vector<FixtureExpectation> kTable = {
      {"R-SRP-1", "srp/GodClass.java", 1},
      {"R-SRP-1", "srp/Auditor.java", 0},
      {"R-SRP-2", "srp/Scattered.java", 1},
      {"R-SRP-2", "srp/Counter.java", 0},
      {"R-SOC-1", "soc/cycle/a/Alpha.java", 1},
      {"R-SOC-1", "soc/cycle/b/Beta.java", 1},
      {"R-SOC-1", "soc/chain/up/Upper.java", 0},
      {"R-SOC-1", "soc/chain/down/Lower.java", 0},
      {"R-SOC-2", "soc/hub/Hub.java", 1},
      {"R-SOC-2", "soc/hub/Spoke.java", 0},
      {"R-DRY-1", "dry/Twins.java", 1},
      {"R-DRY-1", "dry/NearTwins.java", 0},
      {"R-IH-1", "ih/Fields.java", 1},
      {"R-IH-1", "ih/Constants.java", 0},
      {"R-IH-2", "ih/Exposed.java", 1},
      {"R-IH-2", "ih/Balanced.java", 0},
      {"R-OCP-1", "ocp/Describer.java", 1},
      {"R-OCP-1", "ocp/TwoChecks.java", 0},
      {"R-OCP-2", "ocp/Palette.java", 1},
      {"R-OCP-2", "ocp/Modes.java", 0},
      {"R-DIP-1", "dip/client/Service.java", 1},
      {"R-DIP-1", "dip/client/StoreFactory.java", 0},
      {"R-DIP-2", "dip/client/Service.java", 1},
      {"R-DIP-2", "dip/client/StoreFactory.java", 0},
      {"R-LSP-1", "lsp/ReadOnlyRepository.java", 1},
      {"R-LSP-1", "lsp/CachedRepository.java", 0},
      {"R-LSP-2", "lsp/ReadOnlyRepository.java", 1},
      {"R-LSP-2", "lsp/CachedRepository.java", 0},
      {"R-KISS-1", "kiss/Branchy.java", 1},
      {"R-KISS-1", "kiss/Almost.java", 0},
      {"R-KISS-2", "kiss/Nested.java", 1},
      {"R-KISS-2", "kiss/Shallow.java", 0},
      {"R-YAGNI-1", "yagni/Legacy.java", 1},
      {"R-YAGNI-1", "yagni/Inventory.java", 0},
      {"R-YAGNI-1", "yagni/App.java", 0},
      {"R-YAGNI-2", "yagni/Legacy.java", 1},
      {"R-YAGNI-2", "yagni/Inventory.java", 0},
  };
  return kTable;
}

// ---------------------------------------------------------------------------
// Clone oracle

/// (length, sorted (method, offset) pairs)
using OracleClone = std::pair<std::size_t, std::vector<std::pair<EntityId, std::size_t>>>;

/// All maximal repeats of length >= min_len over per-method symbol sequences,
/// found by comparing every pair of positions. A repeat is kept when its
/// occurrences span two methods or include two non-overlapping positions.
inline std::vector<OracleClone> clone_oracle(const std::vector<metrics::MethodTokens>& methods,
                                             std::size_t min_len) {
  // All methods laid end to end, separated by sentinels that match nothing.
  std::map<std::string, int> interned;
  std::vector<int> flat;
  std::vector<std::pair<std::size_t, std::size_t>> where;  // (method, offset) per flat index
  for (std::size_t m = 0; m < methods.size(); ++m) {
    for (std::size_t o = 0; o < methods[m].tokens.size(); ++o) {
      const auto& t = methods[m].tokens[o];
      flat.push_back(interned.emplace(metrics::normalized_symbol(t), static_cast<int>(interned.size())).first->second);
      where.emplace_back(m, o);
    }
    flat.push_back(-1 - static_cast<int>(m));
    where.emplace_back(methods.size(), 0);
  }
  const std::size_t n = flat.size();
  auto real = [&](std::size_t g) { return where[g].first < methods.size(); };

  // lce[g * n + h]: length of the longest common extension starting at g and h.
  std::vector<std::uint16_t> lce((n + 1) * (n + 1), 0);
  for (std::size_t g = n; g-- > 0;) {
    for (std::size_t h = n; h-- > 0;) {
      if (flat[g] == flat[h] && g != h) lce[g * (n + 1) + h] = static_cast<std::uint16_t>(lce[(g + 1) * (n + 1) + h + 1] + 1);
    }
  }
  auto ext = [&](std::size_t g, std::size_t h) -> std::size_t { return lce[g * (n + 1) + h]; };

  // Every repeated string is taken at its first occurrence only: (i, len) is
  // skipped when some earlier start already spells the same string.
  std::set<std::pair<std::size_t, std::size_t>> candidates;  // (flat start, length)
  for (std::size_t i = 0; i < n; ++i) {
    if (!real(i)) continue;
    std::size_t earlier = 0;
    for (std::size_t g = 0; g < i; ++g) earlier = std::max(earlier, ext(g, i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (real(j) && ext(i, j) >= min_len && ext(i, j) > earlier) candidates.emplace(i, ext(i, j));
    }
  }

  std::vector<OracleClone> out;
  for (const auto& [start, len] : candidates) {
    std::vector<std::size_t> occ_flat;
    for (std::size_t g = 0; g < n; ++g) {
      if (g == start || (real(g) && ext(start, g) >= len)) occ_flat.push_back(g);
    }
    std::vector<std::pair<std::size_t, std::size_t>> occ;
    for (std::size_t g : occ_flat) occ.push_back(where[g]);
    // One-token extension on the right / left succeeds for every occurrence?
    auto extends = [&](bool right) {
      std::optional<int> common;
      for (std::size_t g : occ_flat) {
        if (!right && (g == 0 || !real(g - 1))) return false;
        const int sym = right ? flat[g + len] : flat[g - 1];
        if (sym < 0) return false;
        if (!common) {
          common = sym;
        } else if (*common != sym) {
          return false;
        }
      }
      return true;
    };
    if (occ.size() < 2 || extends(true) || extends(false)) continue;
    bool keep = false;
    for (std::size_t a = 0; a < occ.size() && !keep; ++a) {
      for (std::size_t b = a + 1; b < occ.size() && !keep; ++b) {
        keep = occ[a].first != occ[b].first || occ[b].second >= occ[a].second + len;
      }
    }
    if (!keep) continue;
    std::vector<std::pair<EntityId, std::size_t>> inst;
    for (const auto& [m, o] : occ) inst.emplace_back(methods[m].method, o);
    std::sort(inst.begin(), inst.end());
    out.emplace_back(len, std::move(inst));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<OracleClone> as_oracle_form(const std::vector<metrics::CloneClass>& classes) {
  std::vector<OracleClone> out;
  for (const auto& c : classes) {
    std::vector<std::pair<EntityId, std::size_t>> inst;
    for (const auto& i : c.instances) inst.emplace_back(i.method, i.offset);
    std::sort(inst.begin(), inst.end());
    out.emplace_back(c.length, std::move(inst));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// min_len for a random stream: long enough that chance repeats over small
/// alphabets stay rare, short enough that planted copies qualify.
inline std::size_t random_min_len(std::mt19937& rng, std::size_t alphabet) {
  const std::size_t base = alphabet <= 2 ? 24 : alphabet <= 4 ? 12 : 4;
  return base + std::uniform_int_distribution<std::size_t>(0, 8)(rng);
}

/// Random methods over a small symbol alphabet with planted copies, at most
/// `max_total` tokens overall.
inline std::vector<metrics::MethodTokens> random_token_streams(std::mt19937& rng, std::size_t max_total,
                                                               std::size_t* alphabet_used = nullptr) {
  static const std::vector<std::pair<std::string, std::string>> kAlphabet = {
      {"ID", "a"}, {"ID", "b"},     {"LIT", "1"}, {"KW", "if"}, {"KW", "return"},
      {"PUNCT", ";"}, {"PUNCT", "("}, {"OP", "+"}, {"OP", "=="},
  };
  std::uniform_int_distribution<std::size_t> method_count(1, 8);
  std::uniform_int_distribution<std::size_t> alphabet_size(2, kAlphabet.size());
  const std::size_t methods = method_count(rng);
  const std::size_t sigma = alphabet_size(rng);
  if (alphabet_used != nullptr) *alphabet_used = sigma;
  std::uniform_int_distribution<std::size_t> pick(0, sigma - 1);
  std::uniform_int_distribution<std::size_t> len_dist(0, max_total / methods);

  std::vector<std::vector<std::pair<std::string, std::string>>> raw(methods);
  for (auto& m : raw) {
    const std::size_t n = len_dist(rng);
    for (std::size_t i = 0; i < n; ++i) m.push_back(kAlphabet[pick(rng)]);
  }
  // Plant copies of random slices so that long repeats exist.
  std::uniform_int_distribution<int> plants(0, 4);
  for (int p = plants(rng); p > 0; --p) {
    auto& src = raw[std::uniform_int_distribution<std::size_t>(0, methods - 1)(rng)];
    auto& dst = raw[std::uniform_int_distribution<std::size_t>(0, methods - 1)(rng)];
    if (src.size() < 2 || dst.empty()) continue;
    const std::size_t from = std::uniform_int_distribution<std::size_t>(0, src.size() - 2)(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, src.size() - from)(rng);
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, dst.size() - 1)(rng);
    std::vector<std::pair<std::string, std::string>> slice(
        src.begin() + static_cast<std::ptrdiff_t>(from),
        src.begin() + static_cast<std::ptrdiff_t>(from + len));
    // Type-2 copy: rename identifiers.
    for (auto& t : slice) {
      if (t.first == "ID") t.second = "renamed";
    }
    std::size_t total = 0;
    for (const auto& m : raw) total += m.size();
    if (total + slice.size() > max_total) continue;
    dst.insert(dst.begin() + static_cast<std::ptrdiff_t>(at), slice.begin(), slice.end());
  }

  std::vector<metrics::MethodTokens> out;
  for (std::size_t m = 0; m < methods; ++m) {
    metrics::MethodTokens mt{EntityId("method:p.C.m" + std::to_string(m) + "()"), {}};
    int line = 1;
    for (std::size_t i = 0; i < raw[m].size(); ++i) {
      if (i % 5 == 0) ++line;
      mt.tokens.push_back(NormalizedToken{raw[m][i].first, raw[m][i].second, line});
    }
    out.push_back(std::move(mt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SCC oracle

/// Partition by mutual reachability; members sorted, components sorted by
/// their first member.
inline std::vector<std::vector<EntityId>> scc_oracle(const DirectedGraph& g) {
  std::vector<EntityId> nodes;
  for (const auto& [n, _] : g.adjacency()) nodes.push_back(n);
  const std::size_t n = nodes.size();
  std::map<EntityId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[nodes[i]] = i;
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = true;
    for (const EntityId& s : g.successors(nodes[i])) reach[i][index[s]] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::vector<bool> placed(n, false);
  std::vector<std::vector<EntityId>> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (placed[i]) continue;
    std::vector<EntityId> comp;
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j] && reach[j][i]) {
        comp.push_back(nodes[j]);
        placed[j] = true;
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

inline DirectedGraph random_digraph(std::mt19937& rng, std::size_t max_nodes) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_nodes)(rng);
  const double density = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
  std::bernoulli_distribution edge(density);
  DirectedGraph g;
  std::vector<EntityId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    ids.emplace_back("package:n" + std::to_string(i));
    g.add_node(ids.back());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (edge(rng)) g.add_edge(ids[i], ids[j]);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Aggregation properties

inline Finding synthetic_finding(const std::string& rule_id, int n) {
  const RuleDescriptor& d = rule_descriptor(rule_id);
  Finding f;
  f.rule_id = rule_id;
  f.principle = d.principle;
  f.severity = d.severity;
  f.subject = EntityId("package:synthetic");
  f.location = SourceLocation{"Synthetic.java", n + 1, n + 1};
  f.message = "synthetic";
  return f;
}

/// One randomized finding set against `model`. Checks bounds, the grade
/// formula, monotonicity under one injected finding, and the all-clean /
/// all-saturated cases. Returns a description of the first failure, or "".
inline std::string check_aggregation_case(const CodeModel& model, std::mt19937& rng) {
  const ScoreConfig config = ScoreConfig::defaults();
  std::vector<std::string> enabled;
  for (const auto& r : list_rules()) {
    if (std::bernoulli_distribution(0.6)(rng)) enabled.push_back(r.rule_id);
  }
  if (enabled.empty()) enabled.push_back(list_rules().front().rule_id);

  std::vector<Finding> findings;
  int n = 0;
  for (const std::string& id : enabled) {
    const std::size_t scope = scope_size(rule_descriptor(id).scope_kind, model);
    const std::size_t count = std::uniform_int_distribution<std::size_t>(0, scope + 2)(rng);
    for (std::size_t i = 0; i < count; ++i) findings.push_back(synthetic_finding(id, n++));
  }
  std::ostringstream why;
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  auto check_bounds = [&](const QualityReport& r) {
    for (const auto& [id, s] : r.per_rule) {
      if (!in_unit(s.utility)) why << id << " utility " << s.utility << " out of [0,1]; ";
    }
    for (const auto& [p, s] : r.per_principle) {
      if (!in_unit(s)) why << to_string(p) << " score " << s << " out of [0,1]; ";
    }
    if (!r.overall) {
      why << "no overall score; ";
      return;
    }
    if (!in_unit(r.overall->overall)) why << "overall out of [0,1]; ";
    if (r.overall->grade < 1.0 || r.overall->grade > 6.0) why << "grade out of [1,6]; ";
    if (std::abs(r.overall->grade - (1.0 + 5.0 * (1.0 - r.overall->overall))) > 1e-12) why << "grade formula; ";
  };

  const QualityReport before = assess(model, findings, enabled, config);
  check_bounds(before);

  const std::string& target = enabled[std::uniform_int_distribution<std::size_t>(0, enabled.size() - 1)(rng)];
  findings.push_back(synthetic_finding(target, n++));
  const QualityReport after = assess(model, findings, enabled, config);
  check_bounds(after);
  for (const auto& [id, s] : after.per_rule) {
    if (s.utility > before.per_rule.at(id).utility) why << id << " utility rose; ";
  }
  for (const auto& [p, s] : after.per_principle) {
    if (s > before.per_principle.at(p)) why << to_string(p) << " score rose; ";
  }
  if (after.overall && before.overall && after.overall->overall > before.overall->overall) why << "overall rose; ";

  const QualityReport clean = assess(model, {}, enabled, config);
  if (!clean.overall || clean.overall->grade != 1.0) why << "clean grade is not 1.0; ";

  std::vector<Finding> saturated;
  for (const std::string& id : enabled) {
    const RuleDescriptor& d = rule_descriptor(id);
    const auto scope = static_cast<double>(scope_size(d.scope_kind, model));
    const auto count = static_cast<std::size_t>(std::ceil(config.density_limit(d) * scope));
    for (std::size_t i = 0; i < count; ++i) saturated.push_back(synthetic_finding(id, n++));
  }
  const QualityReport full = assess(model, saturated, enabled, config);
  if (!full.overall || full.overall->grade != 6.0) why << "saturated grade is not 6.0; ";
  return why.str();
}

// ---------------------------------------------------------------------------
// Fuzzing

/// Truncates the text or deletes a few whitespace-separated tokens.
inline std::string mutate_source(const std::string& text, std::mt19937& rng) {
  if (text.empty()) return text;
  if (std::bernoulli_distribution(0.4)(rng)) {
    return text.substr(0, std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng));
  }
  std::string out = text;
  const int deletions = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int d = 0; d < deletions && !out.empty(); ++d) {
    std::size_t at = std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng);
    while (at > 0 && !std::isspace(static_cast<unsigned char>(out[at - 1]))) --at;
    std::size_t end = at;
    while (end < out.size() && !std::isspace(static_cast<unsigned char>(out[end]))) ++end;
    if (end == at) end = std::min(out.size(), at + 1);
    out.erase(at, end - at);
  }
  return out;
}

}  // namespace plint::testing

#endif  // PLINT_TEST_SUPPORT_HPP
