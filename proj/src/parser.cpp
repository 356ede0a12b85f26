// SPDX-License-Identifier: Apache-2.0

#include "plint/parser.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "plint/error.hpp"

namespace plint {

namespace ast {

std::string_view to_string(StmtKind kind) {
  switch (kind) {
    case StmtKind::Block: return "block";
    case StmtKind::If: return "if";
    case StmtKind::Else: return "else";
    case StmtKind::For: return "for";
    case StmtKind::While: return "while";
    case StmtKind::Do: return "do";
    case StmtKind::Switch: return "switch";
    case StmtKind::Case: return "case";
    case StmtKind::Try: return "try";
    case StmtKind::Catch: return "catch";
    case StmtKind::Finally: return "finally";
    case StmtKind::Throw: return "throw";
    case StmtKind::Return: return "return";
    case StmtKind::LocalDecl: return "local_decl";
    case StmtKind::ExprStmt: return "expr_stmt";
  }
  return "?";
}

bool TypeRef::primitive() const { return is_primitive_type(name); }

}  // namespace ast

namespace {

constexpr std::array<std::string_view, 12> kModifierKeywords{
    "public",   "protected",    "private",   "static",   "final",    "abstract",
    "native",   "synchronized", "transient", "volatile", "strictfp", "default"};

bool is_modifier_keyword(const Token& t) {
  return t.cls == TokenClass::Keyword &&
         std::find(kModifierKeywords.begin(), kModifierKeywords.end(), t.lexeme) !=
             kModifierKeywords.end();
}

bool is_type_keyword(const Token& t) {
  return t.is_keyword("class") || t.is_keyword("interface") || t.is_keyword("enum");
}

bool is_open(const Token& t) { return t.is_punct("(") || t.is_punct("[") || t.is_punct("{"); }
bool is_close(const Token& t) { return t.is_punct(")") || t.is_punct("]") || t.is_punct("}"); }

char closer_for(const Token& open) {
  return open.lexeme[0] == '(' ? ')' : open.lexeme[0] == '[' ? ']' : '}';
}

// Generic argument lists may only contain these; anything else means the
// '<' was a comparison or the input is damaged.
bool allowed_in_type_args(const Token& t) {
  if (t.cls == TokenClass::Identifier) return true;
  if (t.cls == TokenClass::Keyword) {
    return is_primitive_type(t.lexeme) || t.lexeme == "extends" || t.lexeme == "super";
  }
  return t.is_op("?") || t.is_punct(",") || t.is_punct(".") || t.is_op("&") ||
         t.is_punct("[") || t.is_punct("]") || t.is_punct("@") || t.is_op("<") || t.is_op(">");
}

std::size_t scan_type_args(std::span<const Token> toks, std::size_t pos) {
  int depth = 0;
  for (std::size_t p = pos; p < toks.size(); ++p) {
    const Token& t = toks[p];
    if (!allowed_in_type_args(t)) return 0;
    if (t.is_op("<")) ++depth;
    if (t.is_op(">") && --depth == 0) return p + 1;
  }
  return 0;
}

std::string label_text(std::span<const Token> toks) {
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const Token& t = toks[i];
    const bool wordy = t.cls == TokenClass::Identifier || t.cls == TokenClass::Keyword;
    if (i > 0 && wordy) {
      const Token& prev = toks[i - 1];
      if (prev.cls == TokenClass::Identifier || prev.cls == TokenClass::Keyword) out += ' ';
    }
    if (t.cls == TokenClass::StringLiteral) {
      out += '"' + t.lexeme + '"';
    } else if (t.cls == TokenClass::CharLiteral) {
      out += '\'' + t.lexeme + '\'';
    } else {
      out += t.lexeme;
    }
  }
  return out;
}

class Parser {
 public:
  Parser(std::span<const Token> tokens, const std::string& file)
      : toks_(tokens), file_(file) {
    eof_.cls = TokenClass::Punctuation;
    eof_.lexeme = "<eof>";
    eof_.line = tokens.empty() ? 1 : tokens.back().line;
  }

  ast::CompilationUnit run() {
    unit_.file = file_;
    skip_annotations();
    if (peek().is_keyword("package")) {
      advance();
      unit_.package = parse_dotted_name();
      expect_punct(";", "after package declaration");
    }
    while (peek().is_keyword("import")) {
      advance();
      bool is_static = false;
      if (peek().is_keyword("static")) {
        advance();
        is_static = true;
      }
      std::string name = parse_dotted_name();
      if (peek().is_punct(".") && peek(1).is_op("*")) {
        advance();
        advance();
        name += ".*";
      }
      expect_punct(";", "after import");
      if (!is_static) unit_.imports.push_back(std::move(name));
    }
    while (!at_end()) {
      if (accept_punct(";")) continue;
      skip_annotations();
      if (skip_unsupported_type_decl()) continue;
      auto modifiers = parse_modifiers();
      if (!is_type_keyword(peek())) fail("expected class, interface or enum declaration");
      unit_.types.push_back(parse_type_decl(0, std::move(modifiers)));
    }
    return std::move(unit_);
  }

 private:
  // -- token access ---------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof_;
  }
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& advance() {
    const Token& t = peek();
    if (!at_end()) ++pos_;
    return t;
  }
  int prev_line() const { return pos_ == 0 ? 1 : toks_[pos_ - 1].line; }

  bool accept_punct(std::string_view p) {
    if (!peek().is_punct(p)) return false;
    advance();
    return true;
  }

  const Token& expect_punct(std::string_view p, std::string_view context) {
    if (!peek().is_punct(p)) {
      fail("expected '" + std::string(p) + "' " + std::string(context) + ", found '" +
           peek().lexeme + "'");
    }
    return advance();
  }

  std::string expect_identifier(std::string_view what) {
    if (peek().cls != TokenClass::Identifier) {
      fail("expected " + std::string(what) + ", found '" + peek().lexeme + "'");
    }
    return advance().lexeme;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(file_, peek().line, message);
  }

  void warn(int line, std::string message) {
    unit_.warnings.push_back(Warning{file_, line, std::move(message)});
  }

  // -- shared pieces ----------------------------------------------------------

  /// At an opening bracket: skips through its matching closer.
  void skip_balanced() {
    std::vector<char> stack;
    do {
      if (at_end()) fail("unbalanced '" + std::string(1, stack.empty() ? '?' : stack.back()) + "'");
      const Token& t = advance();
      if (is_open(t)) {
        stack.push_back(closer_for(t));
      } else if (is_close(t)) {
        if (stack.empty() || stack.back() != t.lexeme[0]) {
          throw ParseError(file_, t.line, "mismatched '" + t.lexeme + "'");
        }
        stack.pop_back();
      }
    } while (!stack.empty());
  }

  void skip_annotation() {
    advance();  // '@'
    parse_dotted_name();
    if (peek().is_punct("(")) skip_balanced();
  }

  void skip_annotations() {
    while (peek().is_punct("@") && !peek(1).is_keyword("interface")) skip_annotation();
  }

  std::vector<std::string> parse_modifiers() {
    std::vector<std::string> mods;
    while (true) {
      skip_annotations();
      const Token& t = peek();
      if (is_modifier_keyword(t)) {
        mods.push_back(advance().lexeme);
      } else if (t.cls == TokenClass::Identifier && t.lexeme == "sealed" &&
                 (is_type_keyword(peek(1)) || is_modifier_keyword(peek(1)))) {
        advance();
      } else if (t.cls == TokenClass::Identifier && t.lexeme == "non" && peek(1).is_op("-") &&
                 peek(2).lexeme == "sealed") {
        advance();
        advance();
        advance();
      } else {
        return mods;
      }
    }
  }

  std::string parse_dotted_name() {
    std::string name = expect_identifier("name");
    while (peek().is_punct(".") && peek(1).cls == TokenClass::Identifier) {
      advance();
      name += '.';
      name += advance().lexeme;
    }
    return name;
  }

  void skip_type_args() {
    const std::size_t end = scan_type_args(toks_, pos_);
    if (end == 0) fail("malformed type arguments");
    pos_ = end;
  }

  ast::TypeRef parse_type() {
    skip_annotations();
    ast::TypeRef ref;
    ref.line = peek().line;
    if (peek().cls == TokenClass::Keyword && is_primitive_type(peek().lexeme)) {
      ref.name = advance().lexeme;
    } else if (peek().cls == TokenClass::Identifier) {
      ref.name = advance().lexeme;
      while (true) {
        if (peek().is_op("<")) {
          skip_type_args();
        } else if (peek().is_punct(".") && peek(1).cls == TokenClass::Identifier) {
          advance();
          ref.name += '.';
          ref.name += advance().lexeme;
        } else {
          break;
        }
      }
    } else {
      fail("expected type, found '" + peek().lexeme + "'");
    }
    skip_dims();
    return ref;
  }

  void skip_dims() {
    while (peek().is_punct("[") && peek(1).is_punct("]")) {
      advance();
      advance();
    }
  }

  std::vector<ast::TypeRef> parse_type_list() {
    std::vector<ast::TypeRef> out;
    do {
      out.push_back(parse_type());
    } while (accept_punct(","));
    return out;
  }

  /// Annotation types and records are outside the subset: warn and skip.
  bool skip_unsupported_type_decl() {
    const bool annotation_type = peek().is_punct("@") && peek(1).is_keyword("interface");
    // "record" only counts when it reads as a declaration header.
    std::size_t p = 0;
    while (is_modifier_keyword(peek(p))) ++p;
    const bool record = peek(p).cls == TokenClass::Identifier && peek(p).lexeme == "record" &&
                        peek(p + 1).cls == TokenClass::Identifier;
    if (!annotation_type && !record) return false;
    warn(peek(p).line, annotation_type ? "annotation type declaration skipped"
                                       : "record declaration skipped");
    skip_to_body_and_over();
    return true;
  }

  void skip_to_body_and_over() {
    while (!peek().is_punct("{")) {
      if (at_end()) fail("missing declaration body");
      if (peek().is_punct(";") || peek().is_punct("}")) fail("malformed declaration header");
      advance();
    }
    skip_balanced();
  }

  // -- declarations -----------------------------------------------------------

  ast::TypeDecl parse_type_decl(int nesting, std::vector<std::string> modifiers) {
    ast::TypeDecl decl;
    decl.modifiers = std::move(modifiers);
    const Token& kw = advance();
    decl.line = kw.line;
    decl.kind = kw.lexeme == "class"       ? ast::TypeKind::Class
                : kw.lexeme == "interface" ? ast::TypeKind::Interface
                                           : ast::TypeKind::Enum;
    decl.name = expect_identifier("type name");
    if (peek().is_op("<")) skip_type_args();
    while (true) {
      if (peek().is_keyword("extends")) {
        advance();
        auto types = parse_type_list();
        decl.extends.insert(decl.extends.end(), types.begin(), types.end());
      } else if (peek().is_keyword("implements")) {
        advance();
        auto types = parse_type_list();
        decl.implements.insert(decl.implements.end(), types.begin(), types.end());
      } else if (peek().cls == TokenClass::Identifier && peek().lexeme == "permits") {
        advance();
        parse_type_list();
      } else {
        break;
      }
    }
    expect_punct("{", "to open type body");
    if (decl.kind == ast::TypeKind::Enum) parse_enum_constants(decl);
    while (!peek().is_punct("}")) {
      if (at_end()) fail("missing closing brace for type '" + decl.name + "'");
      parse_member(decl, nesting);
    }
    decl.end_line = advance().line;
    return decl;
  }

  void parse_enum_constants(ast::TypeDecl& decl) {
    while (true) {
      skip_annotations();
      if (accept_punct(";") || peek().is_punct("}")) return;
      ast::EnumConstant constant;
      constant.line = peek().line;
      constant.name = expect_identifier("enum constant");
      if (peek().is_punct("(")) skip_balanced();
      if (peek().is_punct("{")) {
        warn(peek().line, "enum constant body skipped");
        skip_balanced();
      }
      decl.enum_constants.push_back(std::move(constant));
      if (accept_punct(",")) continue;
      if (accept_punct(";") || peek().is_punct("}")) return;
      fail("malformed enum constant list");
    }
  }

  void parse_member(ast::TypeDecl& decl, int nesting) {
    if (accept_punct(";")) return;
    if (peek().is_punct("{") || (peek().is_keyword("static") && peek(1).is_punct("{"))) {
      warn(peek().line, "initializer block skipped");
      if (peek().is_keyword("static")) advance();
      skip_balanced();
      return;
    }
    skip_annotations();
    if (skip_unsupported_type_decl()) return;
    const int start_line = peek().line;
    auto modifiers = parse_modifiers();

    if (is_type_keyword(peek())) {
      if (nesting >= 1) {
        warn(peek().line, "nested type declaration skipped (one nesting level supported)");
        skip_to_body_and_over();
      } else {
        decl.nested.push_back(parse_type_decl(nesting + 1, std::move(modifiers)));
      }
      return;
    }
    if (peek().is_op("<")) skip_type_args();

    if (peek().cls == TokenClass::Identifier && peek().lexeme == decl.name &&
        peek(1).is_punct("(")) {
      ast::MethodDecl ctor;
      ctor.is_constructor = true;
      ctor.name = advance().lexeme;
      ctor.modifiers = std::move(modifiers);
      ctor.line = start_line;
      parse_method_rest(ctor);
      decl.methods.push_back(std::move(ctor));
      return;
    }

    std::optional<ast::TypeRef> type;
    if (peek().is_keyword("void")) {
      advance();
    } else {
      type = parse_type();
    }
    std::string name = expect_identifier("member name");
    if (peek().is_punct("(")) {
      ast::MethodDecl method;
      method.name = std::move(name);
      method.modifiers = std::move(modifiers);
      method.return_type = std::move(type);
      method.line = start_line;
      parse_method_rest(method);
      decl.methods.push_back(std::move(method));
      return;
    }
    if (!type) fail("field cannot have type void");
    while (true) {
      ast::FieldDecl field;
      field.name = name;
      field.modifiers = modifiers;
      field.type = *type;
      field.line = start_line;
      skip_dims();
      if (peek().is_op("=")) {
        advance();
        collect_initializer();
      }
      field.end_line = prev_line();
      decl.fields.push_back(std::move(field));
      if (!accept_punct(",")) break;
      name = expect_identifier("field name");
    }
    expect_punct(";", "after field declaration");
    decl.fields.back().end_line = prev_line();
  }

  void parse_method_rest(ast::MethodDecl& m) {
    expect_punct("(", "to open parameter list");
    if (!accept_punct(")")) {
      while (true) {
        parse_modifiers();
        ast::Param param;
        param.type = parse_type();
        accept_punct("...");
        if (peek().is_keyword("this")) {
          advance();
          param.name = "this";
        } else {
          param.name = expect_identifier("parameter name");
        }
        skip_dims();
        if (param.name != "this") m.params.push_back(std::move(param));
        if (accept_punct(",")) continue;
        expect_punct(")", "to close parameter list");
        break;
      }
    }
    skip_dims();
    if (peek().is_keyword("throws")) {
      advance();
      m.throws = parse_type_list();
    }
    if (peek().is_punct("{")) {
      const std::size_t open = pos_;
      m.body = parse_block();
      m.body_tokens.assign(toks_.begin() + static_cast<std::ptrdiff_t>(open + 1),
                           toks_.begin() + static_cast<std::ptrdiff_t>(pos_ - 1));
    } else if (peek().is_keyword("default")) {
      advance();
      collect_expression({";"});
      expect_punct(";", "after annotation default");
    } else {
      expect_punct(";", "or method body");
    }
    m.end_line = prev_line();
  }

  // -- statements -------------------------------------------------------------

  ast::Statement node(ast::StmtKind kind, int line) {
    ast::Statement s;
    s.kind = kind;
    s.line = line;
    return s;
  }

  ast::Statement parse_block() {
    ast::Statement block = node(ast::StmtKind::Block, peek().line);
    expect_punct("{", "to open block");
    while (!peek().is_punct("}")) {
      if (at_end()) fail("missing closing brace");
      if (auto s = parse_statement()) block.children.push_back(std::move(*s));
    }
    block.end_line = advance().line;
    return block;
  }

  /// A statement in a structural slot; an empty statement becomes an empty
  /// block so the slot is never vacant.
  ast::Statement parse_body_statement() {
    const int line = peek().line;
    if (auto s = parse_statement()) return std::move(*s);
    ast::Statement empty = node(ast::StmtKind::Block, line);
    empty.end_line = line;
    return empty;
  }

  std::optional<ast::Statement> parse_statement() {
    if (at_end()) fail("unexpected end of file in method body");
    const Token& t = peek();
    if (t.is_punct("{")) return parse_block();
    if (t.is_punct(";")) {
      advance();
      return std::nullopt;
    }
    if (t.cls == TokenClass::Keyword) {
      const std::string& k = t.lexeme;
      if (k == "if") return parse_if();
      if (k == "for") return parse_for();
      if (k == "while") return parse_while();
      if (k == "do") return parse_do();
      if (k == "switch") return parse_switch();
      if (k == "try") return parse_try();
      if (k == "throw") return parse_simple(ast::StmtKind::Throw, true);
      if (k == "return") return parse_simple(ast::StmtKind::Return, true);
      if (k == "break" || k == "continue" || k == "assert") {
        return parse_simple(ast::StmtKind::ExprStmt, false);
      }
      if (k == "synchronized" && peek(1).is_punct("(")) {
        const int line = advance().line;
        auto lock = parenthesized();
        ast::Statement block = parse_block();
        block.line = line;
        block.expr = std::move(lock);
        return block;
      }
      if (k == "case" || k == "default" || k == "else" || k == "catch" || k == "finally") {
        fail("unexpected '" + k + "'");
      }
      if (local_type_ahead()) {
        warn(t.line, "local type declaration skipped");
        parse_modifiers();
        skip_to_body_and_over();
        return std::nullopt;
      }
    }
    if (t.cls == TokenClass::Identifier && peek(1).is_op(":")) {
      advance();
      advance();
      return parse_statement();
    }
    if (local_decl_ahead()) return parse_local_decl();
    ast::Statement s = node(ast::StmtKind::ExprStmt, t.line);
    s.expr = collect_expression({";"});
    expect_punct(";", "after expression statement");
    s.end_line = prev_line();
    return s;
  }

  bool local_type_ahead() const {
    std::size_t p = 0;
    while (is_modifier_keyword(peek(p))) ++p;
    return is_type_keyword(peek(p));
  }

  bool local_decl_ahead() const {
    std::size_t p = pos_;
    while (p < toks_.size()) {
      if (toks_[p].is_keyword("final")) {
        ++p;
      } else if (toks_[p].is_punct("@")) {
        // annotation on a local: '@' name ('.' name)* ['(' ... ')']
        ++p;
        while (p < toks_.size() && (toks_[p].cls == TokenClass::Identifier || toks_[p].is_punct("."))) ++p;
        if (p < toks_.size() && toks_[p].is_punct("(")) {
          int depth = 0;
          for (; p < toks_.size(); ++p) {
            if (toks_[p].is_punct("(")) ++depth;
            if (toks_[p].is_punct(")") && --depth == 0) {
              ++p;
              break;
            }
          }
        }
      } else {
        break;
      }
    }
    const std::size_t after = scan_type(toks_, p);
    if (after == 0 || after >= toks_.size() || toks_[after].cls != TokenClass::Identifier) {
      return false;
    }
    const Token& next = after + 1 < toks_.size() ? toks_[after + 1] : eof_;
    return next.is_op("=") || next.is_punct(";") || next.is_punct(",") || next.is_punct("[") ||
           next.is_op(":");
  }

  ast::Statement parse_local_decl() {
    ast::Statement s = node(ast::StmtKind::LocalDecl, peek().line);
    parse_modifiers();
    ast::TypeRef type = parse_type();
    while (true) {
      ast::LocalVar var;
      var.type = type;
      var.line = peek().line;
      var.name = expect_identifier("variable name");
      skip_dims();
      s.locals.push_back(std::move(var));
      if (peek().is_op("=")) {
        advance();
        auto init = collect_initializer();
        if (!s.expr.empty()) s.expr.push_back(Token{TokenClass::Punctuation, ",", prev_line(), 0});
        s.expr.insert(s.expr.end(), init.begin(), init.end());
      }
      if (!accept_punct(",")) break;
    }
    expect_punct(";", "after local variable declaration");
    s.end_line = prev_line();
    return s;
  }

  ast::Statement parse_simple(ast::StmtKind kind, bool keep_expr) {
    ast::Statement s = node(kind, advance().line);
    auto expr = collect_expression({";"});
    if (keep_expr) s.expr = std::move(expr);
    expect_punct(";", "to end statement");
    s.end_line = prev_line();
    return s;
  }

  std::vector<Token> parenthesized() {
    expect_punct("(", "to open condition");
    auto expr = collect_expression({")"});
    expect_punct(")", "to close condition");
    return expr;
  }

  ast::Statement parse_if() {
    ast::Statement s = node(ast::StmtKind::If, advance().line);
    s.expr = parenthesized();
    s.children.push_back(parse_body_statement());
    if (peek().is_keyword("else")) {
      ast::Statement e = node(ast::StmtKind::Else, advance().line);
      e.children.push_back(parse_body_statement());
      e.end_line = prev_line();
      s.children.push_back(std::move(e));
    }
    s.end_line = prev_line();
    return s;
  }

  ast::Statement parse_for() {
    ast::Statement s = node(ast::StmtKind::For, advance().line);
    expect_punct("(", "after 'for'");
    if (local_decl_ahead()) {
      parse_modifiers();
      ast::TypeRef type = parse_type();
      s.expr = collect_expression({")"});
      declare_leading_locals(s, type);
    } else {
      s.expr = collect_expression({")"});
    }
    expect_punct(")", "to close for header");
    s.children.push_back(parse_body_statement());
    s.end_line = prev_line();
    return s;
  }

  /// For headers and resources: names directly after the type or after a
  /// top-level comma, up to the first ';' or ':'.
  static void declare_leading_locals(ast::Statement& s, const ast::TypeRef& type) {
    int depth = 0;
    bool expect_name = true;
    for (std::size_t i = 0; i < s.expr.size(); ++i) {
      const Token& t = s.expr[i];
      if (is_open(t)) ++depth;
      if (is_close(t)) --depth;
      if (depth != 0) continue;
      if (t.is_punct(";") || t.is_op(":")) break;
      if (expect_name && t.cls == TokenClass::Identifier) {
        s.locals.push_back(ast::LocalVar{type, t.lexeme, t.line});
        expect_name = false;
      } else if (t.is_punct(",")) {
        expect_name = true;
      }
    }
  }

  ast::Statement parse_while() {
    ast::Statement s = node(ast::StmtKind::While, advance().line);
    s.expr = parenthesized();
    s.children.push_back(parse_body_statement());
    s.end_line = prev_line();
    return s;
  }

  ast::Statement parse_do() {
    ast::Statement s = node(ast::StmtKind::Do, advance().line);
    s.children.push_back(parse_body_statement());
    if (!peek().is_keyword("while")) fail("expected 'while' after do body");
    advance();
    s.expr = parenthesized();
    expect_punct(";", "after do-while");
    s.end_line = prev_line();
    return s;
  }

  ast::Statement parse_switch() {
    ast::Statement s = node(ast::StmtKind::Switch, advance().line);
    s.expr = parenthesized();
    expect_punct("{", "to open switch body");
    while (!peek().is_punct("}")) {
      if (at_end()) fail("missing closing brace for switch");
      ast::Statement c = node(ast::StmtKind::Case, peek().line);
      if (peek().is_keyword("default")) {
        advance();
        c.is_default = true;
      } else if (peek().is_keyword("case")) {
        advance();
        auto label_tokens = collect_expression({":", "->"});
        std::vector<Token> current;
        int depth = 0;
        for (const Token& t : label_tokens) {
          if (is_open(t)) ++depth;
          if (is_close(t)) --depth;
          if (depth == 0 && t.is_punct(",")) {
            c.case_labels.push_back(label_text(current));
            current.clear();
          } else {
            current.push_back(t);
          }
        }
        if (current.empty()) fail("empty case label");
        c.case_labels.push_back(label_text(current));
      } else {
        fail("expected 'case' or 'default' in switch, found '" + peek().lexeme + "'");
      }

      if (peek().is_op("->")) {
        advance();
        if (peek().is_punct("{")) {
          c.children.push_back(parse_block());
        } else if (peek().is_keyword("throw")) {
          c.children.push_back(parse_simple(ast::StmtKind::Throw, true));
        } else {
          ast::Statement e = node(ast::StmtKind::ExprStmt, peek().line);
          e.expr = collect_expression({";"});
          expect_punct(";", "after case expression");
          e.end_line = prev_line();
          c.children.push_back(std::move(e));
        }
      } else if (peek().is_op(":")) {
        advance();
        while (!peek().is_keyword("case") && !peek().is_keyword("default") &&
               !peek().is_punct("}")) {
          if (auto stmt = parse_statement()) c.children.push_back(std::move(*stmt));
        }
      } else {
        fail("expected ':' or '->' after case label");
      }
      c.end_line = prev_line();
      s.children.push_back(std::move(c));
    }
    s.end_line = advance().line;
    return s;
  }

  ast::Statement parse_try() {
    ast::Statement s = node(ast::StmtKind::Try, advance().line);
    if (peek().is_punct("(")) {
      advance();
      s.expr = collect_expression({")"});
      expect_punct(")", "to close resource list");
      declare_resources(s);
    }
    s.children.push_back(parse_block());
    while (peek().is_keyword("catch")) {
      ast::Statement c = node(ast::StmtKind::Catch, advance().line);
      expect_punct("(", "after 'catch'");
      parse_modifiers();
      c.caught.push_back(parse_type());
      while (peek().is_op("|")) {
        advance();
        c.caught.push_back(parse_type());
      }
      ast::LocalVar var;
      var.type = c.caught.front();
      var.line = peek().line;
      var.name = expect_identifier("exception variable");
      c.locals.push_back(std::move(var));
      expect_punct(")", "to close catch parameter");
      c.children.push_back(parse_block());
      c.end_line = prev_line();
      s.children.push_back(std::move(c));
    }
    if (peek().is_keyword("finally")) {
      ast::Statement f = node(ast::StmtKind::Finally, advance().line);
      f.children.push_back(parse_block());
      f.end_line = prev_line();
      s.children.push_back(std::move(f));
    }
    s.end_line = prev_line();
    return s;
  }

  /// "Type name = expr; Type2 name2 = expr2" inside try(...).
  static void declare_resources(ast::Statement& s) {
    std::vector<Token> kept;
    std::size_t seg = 0;
    const auto& e = s.expr;
    while (seg < e.size()) {
      std::size_t p = seg;
      while (p < e.size() && e[p].is_keyword("final")) ++p;
      const std::size_t after = scan_type(e, p);
      if (after != 0 && after + 1 < e.size() && e[after].cls == TokenClass::Identifier &&
          e[after + 1].is_op("=")) {
        ast::TypeRef type;
        for (std::size_t i = p; i < after; ++i) {
          if (e[i].is_op("<")) break;
          if (e[i].cls == TokenClass::Identifier || e[i].is_punct(".")) type.name += e[i].lexeme;
        }
        type.line = e[p].line;
        s.locals.push_back(ast::LocalVar{type, e[after].lexeme, e[after].line});
        seg = after;
      }
      int depth = 0;
      for (; seg < e.size(); ++seg) {
        if (is_open(e[seg])) ++depth;
        if (is_close(e[seg])) --depth;
        kept.push_back(e[seg]);
        if (depth == 0 && e[seg].is_punct(";")) {
          ++seg;
          break;
        }
      }
    }
    s.expr = std::move(kept);
  }

  // -- expressions ------------------------------------------------------------

  /// Initializer of a field or local: commas only end it when a new
  /// declarator follows, so "new HashMap<A, B>()" stays whole.
  std::vector<Token> collect_initializer() {
    std::vector<Token> out;
    while (true) {
      auto part = collect_expression({",", ";"});
      out.insert(out.end(), part.begin(), part.end());
      if (!peek().is_punct(",")) return out;
      const Token& n1 = peek(1);
      const Token& n2 = peek(2);
      if (n1.cls == TokenClass::Identifier &&
          (n2.is_op("=") || n2.is_punct(",") || n2.is_punct(";") || n2.is_punct("["))) {
        return out;
      }
      out.push_back(advance());
    }
  }

  static bool is_stop(const Token& t, std::initializer_list<std::string_view> stops) {
    if (t.cls != TokenClass::Punctuation && t.cls != TokenClass::Operator) return false;
    return std::find(stops.begin(), stops.end(), t.lexeme) != stops.end();
  }

  /// Collects tokens up to (not including) the first stop token at nesting
  /// depth zero. Lambdas, anonymous class bodies and switch expressions are
  /// removed and reported.
  std::vector<Token> collect_expression(std::initializer_list<std::string_view> stops) {
    std::vector<Token> out;
    std::vector<char> closers;
    while (true) {
      if (at_end()) fail("unexpected end of file in expression");
      const Token& t = peek();
      if (closers.empty() && is_stop(t, stops)) return out;

      if (t.is_op("->")) {
        skip_lambda(out);
        continue;
      }
      if (t.is_punct("{")) {
        if (!out.empty() && out.back().is_punct(")")) {
          const bool is_switch = opener_preceded_by(out, "switch");
          warn(t.line, is_switch ? "switch expression treated as opaque"
                                 : "anonymous class treated as opaque");
          skip_balanced();
          continue;
        }
        closers.push_back('}');
        out.push_back(advance());
        continue;
      }
      if (t.is_punct("(") || t.is_punct("[")) {
        closers.push_back(closer_for(t));
        out.push_back(advance());
        continue;
      }
      if (is_close(t)) {
        if (closers.empty()) fail("unbalanced '" + t.lexeme + "'");
        if (closers.back() != t.lexeme[0]) fail("mismatched '" + t.lexeme + "'");
        closers.pop_back();
        out.push_back(advance());
        continue;
      }
      if (t.is_punct(";") && !closers.empty() && closers.back() != ')') {
        // ';' can only legitimately nest inside for-style parentheses.
        fail("unexpected ';' in expression");
      }
      out.push_back(advance());
    }
  }

  static bool opener_preceded_by(const std::vector<Token>& out, std::string_view keyword) {
    int depth = 0;
    for (std::size_t i = out.size(); i-- > 0;) {
      if (out[i].is_punct(")")) ++depth;
      if (out[i].is_punct("(") && --depth == 0) return i > 0 && out[i - 1].is_keyword(keyword);
    }
    return false;
  }

  /// At '->': drops the lambda parameters already collected, skips the
  /// body, and leaves a single placeholder operand.
  void skip_lambda(std::vector<Token>& out) {
    const Token arrow = advance();
    warn(arrow.line, "lambda expression treated as opaque");
    if (!out.empty() && out.back().cls == TokenClass::Identifier) {
      out.pop_back();
    } else if (!out.empty() && out.back().is_punct(")")) {
      int depth = 0;
      while (!out.empty()) {
        const bool close = out.back().is_punct(")");
        const bool open = out.back().is_punct("(");
        out.pop_back();
        if (close) ++depth;
        if (open && --depth == 0) break;
      }
    }
    if (peek().is_punct("{")) {
      skip_balanced();
    } else {
      int depth = 0;
      while (true) {
        if (at_end()) fail("unexpected end of file in lambda");
        const Token& t = peek();
        if (depth == 0 && (is_close(t) || t.is_punct(",") || t.is_punct(";"))) break;
        if (is_open(t)) ++depth;
        if (is_close(t)) --depth;
        advance();
      }
    }
    out.push_back(Token{TokenClass::Identifier, "<lambda>", arrow.line, arrow.column});
  }

  std::span<const Token> toks_;
  const std::string& file_;
  std::size_t pos_ = 0;
  Token eof_;
  ast::CompilationUnit unit_;
};

}  // namespace

std::size_t scan_type(std::span<const Token> tokens, std::size_t pos) {
  if (pos >= tokens.size()) return 0;
  std::size_t p = pos;
  const Token& first = tokens[p];
  if (first.cls == TokenClass::Keyword && is_primitive_type(first.lexeme) &&
      first.lexeme != "void") {
    ++p;
  } else if (first.cls == TokenClass::Identifier) {
    ++p;
    while (p < tokens.size()) {
      if (tokens[p].is_op("<")) {
        p = scan_type_args(tokens, p);
        if (p == 0) return 0;
      } else if (tokens[p].is_punct(".") && p + 1 < tokens.size() &&
                 tokens[p + 1].cls == TokenClass::Identifier) {
        p += 2;
      } else {
        break;
      }
    }
  } else {
    return 0;
  }
  while (p + 1 < tokens.size() && tokens[p].is_punct("[") && tokens[p + 1].is_punct("]")) p += 2;
  return p;
}

ast::CompilationUnit parse_compilation_unit(std::span<const Token> tokens,
                                            const std::string& file) {
  return Parser(tokens, file).run();
}

ast::CompilationUnit parse_source(std::string_view source, const std::string& file) {
  const auto tokens = tokenize(source, file);
  return parse_compilation_unit(tokens, file);
}

}  // namespace plint
