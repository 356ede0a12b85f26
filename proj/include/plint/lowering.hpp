// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_LOWERING_HPP
#define PLINT_LOWERING_HPP

#include <string>
#include <vector>

#include "plint/ast.hpp"
#include "plint/code_model.hpp"
#include "plint/diagnostics.hpp"

namespace plint {

struct LoweringResult {
  CodeModel model;
  Warnings warnings;  // sorted by (file, line, message)
};

/// Two-pass lowering. Pass 1 declares packages, types and members; pass 2
/// resolves type names, emits relations, summarizes bodies and links
/// overrides. Units are processed in file order, so the input order does
/// not matter. Unresolvable names become ExternalType entities. A type or
/// member declared twice keeps its first declaration and yields a warning.
LoweringResult lower_to_model(std::vector<ast::CompilationUnit> units);

/// Expands files and directories (recursively, *.java only) into a sorted,
/// de-duplicated list of normalized paths. Throws InputError for a missing
/// path.
std::vector<std::string> collect_source_files(const std::vector<std::string>& paths);

/// Reads, tokenizes, parses and lowers the given files.
LoweringResult analyze_files(const std::vector<std::string>& files);

}  // namespace plint

#endif  // PLINT_LOWERING_HPP
