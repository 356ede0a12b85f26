// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_PARSER_HPP
#define PLINT_PARSER_HPP

#include <span>
#include <string>
#include <string_view>

#include "plint/ast.hpp"
#include "plint/lexer.hpp"

namespace plint {

/// Recursive-descent parser for the supported Java subset. Constructs
/// outside the subset (initializer blocks, lambdas, anonymous classes,
/// records, annotation types, deeper type nesting) are skipped with one
/// warning each. Throws ParseError on unbalanced braces or malformed
/// declaration headers.
ast::CompilationUnit parse_compilation_unit(std::span<const Token> tokens,
                                            const std::string& file);

/// tokenize() followed by parse_compilation_unit().
ast::CompilationUnit parse_source(std::string_view source, const std::string& file);

/// Speculatively scans a type starting at `pos` (primitive or dotted name,
/// optional generic arguments, array dimensions). Returns the index just
/// past it, or 0 when no type starts there.
std::size_t scan_type(std::span<const Token> tokens, std::size_t pos);

}  // namespace plint

#endif  // PLINT_PARSER_HPP
