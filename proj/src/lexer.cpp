// SPDX-License-Identifier: Apache-2.0

#include "plint/lexer.hpp"

#include <algorithm>
#include <array>

#include "plint/error.hpp"

namespace plint {

namespace {

constexpr std::array<std::string_view, 53> kKeywords{
    "abstract", "assert",     "boolean",   "break",     "byte",     "case",      "catch",
    "char",     "class",      "const",     "continue",  "default",  "do",        "double",
    "else",     "enum",       "extends",   "final",     "finally",  "float",     "for",
    "goto",     "if",         "implements", "import",   "instanceof", "int",     "interface",
    "long",     "native",     "new",       "package",   "private",  "protected", "public",
    "return",   "short",      "static",    "strictfp",  "super",    "switch",    "synchronized",
    "this",     "throw",      "throws",    "transient", "try",      "void",      "volatile",
    "while",    "true",       "false",     "null"};

constexpr std::array<std::string_view, 9> kPrimitives{"boolean", "byte", "char",  "short", "int",
                                                      "long",    "float", "double", "void"};

// Longest first. '>' combinations are deliberately absent.
constexpr std::array<std::string_view, 21> kMultiCharOps{
    "<<=", "->", "==", "<=", ">=", "!=", "&&", "||", "++", "--", "+=",
    "-=",  "*=", "/=", "&=", "|=", "^=", "%=", "<<", "::", "..."};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}
bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const int start = line_;
        advance();
        advance();
        while (!(peek() == '*' && peek(1) == '/')) {
          if (pos_ >= src_.size()) throw LexError(file_, start, "unterminated block comment");
          advance();
        }
        advance();
        advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenClass cls, std::size_t begin, int line, int column) const {
    return Token{cls, std::string(src_.substr(begin, pos_ - begin)), line, column};
  }

  Token next() {
    const int line = line_;
    const int column = static_cast<int>(pos_ - line_start_) + 1;
    const std::size_t begin = pos_;
    const auto c = static_cast<unsigned char>(src_[pos_]);

    if (is_ident_start(c)) {
      while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_]))) advance();
      Token t = make(TokenClass::Identifier, begin, line, column);
      if (is_java_keyword(t.lexeme)) t.cls = TokenClass::Keyword;
      return t;
    }
    if (is_digit(c) || (c == '.' && is_digit(static_cast<unsigned char>(peek(1))))) {
      lex_number();
      return make(TokenClass::NumberLiteral, begin, line, column);
    }
    if (c == '"') {
      if (peek(1) == '"' && peek(2) == '"') return lex_text_block(line, column);
      return lex_quoted('"', TokenClass::StringLiteral, line, column);
    }
    if (c == '\'') return lex_quoted('\'', TokenClass::CharLiteral, line, column);

    for (std::string_view op : kMultiCharOps) {
      if (src_.substr(pos_, op.size()) == op) {
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        const bool punct = op == "::" || op == "...";
        return make(punct ? TokenClass::Punctuation : TokenClass::Operator, begin, line, column);
      }
    }
    static constexpr std::string_view kPunct = "(){}[];,.@";
    static constexpr std::string_view kOps = "=><!~?:+-*/&|^%";
    if (kPunct.find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return make(TokenClass::Punctuation, begin, line, column);
    }
    if (kOps.find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return make(TokenClass::Operator, begin, line, column);
    }
    throw LexError(file_, line, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  void lex_number() {
    while (pos_ < src_.size()) {
      const auto c = static_cast<unsigned char>(src_[pos_]);
      if (is_ident_part(c)) {
        const bool exponent = c == 'e' || c == 'E' || c == 'p' || c == 'P';
        advance();
        if (exponent && (peek() == '+' || peek() == '-') &&
            is_digit(static_cast<unsigned char>(peek(1)))) {
          advance();
        }
      } else if (c == '.' && !is_ident_start(static_cast<unsigned char>(peek(1)))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex_quoted(char quote, TokenClass cls, int line, int column) {
    advance();  // opening quote
    const std::size_t begin = pos_;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') {
        throw LexError(file_, line,
                       cls == TokenClass::StringLiteral ? "unterminated string literal"
                                                        : "unterminated char literal");
      }
      if (src_[pos_] == '\\') {
        advance();
        if (pos_ >= src_.size() || src_[pos_] == '\n') continue;
        advance();
        continue;
      }
      if (src_[pos_] == quote) break;
      advance();
    }
    Token t{cls, std::string(src_.substr(begin, pos_ - begin)), line, column};
    advance();  // closing quote
    return t;
  }

  Token lex_text_block(int line, int column) {
    for (int i = 0; i < 3; ++i) advance();
    const std::size_t begin = pos_;
    while (!(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
      if (pos_ >= src_.size()) throw LexError(file_, line, "unterminated text block");
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
      advance();
    }
    Token t{TokenClass::StringLiteral, std::string(src_.substr(begin, pos_ - begin)), line, column};
    for (int i = 0; i < 3; ++i) advance();
    return t;
  }

  std::string_view src_;
  const std::string& file_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
};

}  // namespace

std::string_view to_string(TokenClass cls) {
  switch (cls) {
    case TokenClass::Keyword: return "keyword";
    case TokenClass::Identifier: return "identifier";
    case TokenClass::NumberLiteral: return "number_literal";
    case TokenClass::StringLiteral: return "string_literal";
    case TokenClass::CharLiteral: return "char_literal";
    case TokenClass::Punctuation: return "punctuation";
    case TokenClass::Operator: return "operator";
  }
  return "?";
}

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_primitive_type(std::string_view word) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), word) != kPrimitives.end();
}

std::vector<Token> tokenize(std::string_view source, const std::string& file) {
  return Lexer(source, file).run();
}

}  // namespace plint
