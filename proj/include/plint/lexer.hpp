// SPDX-License-Identifier: Apache-2.0

#ifndef PLINT_LEXER_HPP
#define PLINT_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace plint {

enum class TokenClass {
  Keyword,
  Identifier,
  NumberLiteral,
  StringLiteral,
  CharLiteral,
  Punctuation,
  Operator,
};

std::string_view to_string(TokenClass cls);

struct Token {
  TokenClass cls = TokenClass::Punctuation;
  std::string lexeme;
  int line = 0;
  int column = 0;

  bool is(TokenClass c, std::string_view text) const { return cls == c && lexeme == text; }
  bool is_keyword(std::string_view text) const { return is(TokenClass::Keyword, text); }
  bool is_punct(std::string_view text) const { return is(TokenClass::Punctuation, text); }
  bool is_op(std::string_view text) const { return is(TokenClass::Operator, text); }
  bool is_literal() const {
    return cls == TokenClass::NumberLiteral || cls == TokenClass::StringLiteral ||
           cls == TokenClass::CharLiteral;
  }

  bool operator==(const Token&) const = default;
};

bool is_java_keyword(std::string_view word);
bool is_primitive_type(std::string_view word);

/// Splits Java-like source into tokens. Comments and whitespace are dropped.
/// String and char literal lexemes are the text between the quotes with
/// escapes left verbatim. A '>'
/// is always its own token so nested generic closers need no splitting.
/// Throws LexError on unterminated literals or comments.
std::vector<Token> tokenize(std::string_view source, const std::string& file);

}  // namespace plint

#endif  // PLINT_LEXER_HPP
