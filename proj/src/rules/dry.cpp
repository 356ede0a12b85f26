// SPDX-License-Identifier: Apache-2.0

#include "plint/clones.hpp"
#include "plint/error.hpp"
#include "rule_impl.hpp"

namespace plint::rules_detail {

void check_duplicated_code(const Context& ctx, std::vector<Finding>& out) {
  std::vector<metrics::MethodTokens> sequences;
  try {
    sequences = metrics::method_token_sequences(ctx.model);
  } catch (const TokensUnavailable&) {
    ctx.warnings.push_back(Warning{"", 0, "clone detection unavailable: " + ctx.rule.rule_id + " skipped"});
    return;
  }
  const auto min_len = static_cast<std::size_t>(ctx.params.number("min_tokens"));
  for (const auto& cc : metrics::detect_clones(sequences, min_len)) {
    std::vector<SourceLocation> locs;
    for (const auto& inst : cc.instances) {
      const Entity& m = ctx.model.get(inst.method);
      locs.push_back(SourceLocation{location_of(m).file, inst.start_line, inst.end_line});
    }
    const auto& first = cc.instances.front();
    Finding f = make_finding(ctx, first.method, locs.front(),
                             "Duplicated code: " + std::to_string(cc.length) + " tokens repeated in " +
                                 std::to_string(cc.instances.size()) + " places");
    f.secondary.assign(locs.begin() + 1, locs.end());
    out.push_back(std::move(f));
  }
}

}  // namespace plint::rules_detail
