// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_FACTS_HPP
#define PLINT_FACTS_HPP

#include <string>

#include <json.hpp>

#include "plint/code_model.hpp"
#include "plint/diagnostics.hpp"

namespace plint {

inline constexpr const char* kFactsSchema = "code-model/1";

/// Serializes the model as a code-model/1 document. Object keys are sorted
/// and every array is in id order, so equal models give equal documents.
nlohmann::json export_facts(const CodeModel& model, bool with_tokens,
                            const std::string& project = "");

struct FactsImport {
  CodeModel model;
  Warnings warnings;
  std::string project;
};

/// Validates and loads a code-model/1 document. Throws SchemaError with a
/// JSON pointer to the offending key, or a ModelError when the content is
/// structurally inconsistent. A body without normalized tokens yields the
/// warning "clone detection unavailable" (once).
FactsImport import_facts(const nlohmann::json& document);

}  // namespace plint

#endif  // PLINT_FACTS_HPP
