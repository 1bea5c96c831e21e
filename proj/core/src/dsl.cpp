// Copyright 2026 The hlsdse Authors
// SPDX-License-Identifier: Apache-2.0

#include "hlsdse/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "hlsdse/errors.hpp"

namespace hlsdse {
namespace {

enum class Tok : std::uint8_t { kIdent, kInt, kString, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(tok);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.kind = Tok::kIdent;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          tok.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tok.kind = Tok::kInt;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) tok.text += advance();
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
          throw SyntaxError("malformed number", tok.line, tok.column);
        }
      } else if (c == '\'' || c == '"') {
        tok.kind = Tok::kString;
        advance();
        while (pos_ < text_.size() && text_[pos_] != c && text_[pos_] != '\n') tok.text += advance();
        if (pos_ >= text_.size() || text_[pos_] != c) throw SyntaxError("unterminated string", tok.line, tok.column);
        advance();
      } else {
        tok.kind = Tok::kPunct;
        static constexpr std::string_view kTwoChar[] = {"==", "!=", "<=", ">=", "//"};
        const auto rest = text_.substr(pos_);
        bool matched = false;
        for (auto op : kTwoChar) {
          if (rest.substr(0, 2) == op) {
            tok.text += advance();
            tok.text += advance();
            matched = true;
            break;
          }
        }
        if (!matched) {
          static constexpr std::string_view kSingle = "[](){},;:=<>+-*%#";
          if (kSingle.find(c) == std::string_view::npos) {
            throw SyntaxError(std::string("unexpected character '") + c + "'", tok.line, tok.column);
          }
          tok.text += advance();
        }
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
      at_line_start_ = true;
    } else {
      ++column_;
      if (!std::isspace(static_cast<unsigned char>(c))) at_line_start_ = false;
    }
    return c;
  }

  // Whitespace, plus `//` comments that start a line. Elsewhere `//` is
  // floor division.
  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (at_line_start_ && text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  bool at_line_start_ = true;
};

bool is_keyword(std::string_view s) { return s == "for" || s == "in" || s == "if" || s == "and" || s == "or"; }

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  std::vector<ParamSpec> file() {
    std::vector<ParamSpec> params;
    std::set<std::string> names;
    std::string loop;
    while (peek().kind != Tok::kEnd) {
      if (peek().kind == Tok::kIdent && peek().text == "loop") {
        next();
        expect_punct(":");
        loop = expect_name("loop id").text;
      } else if (is_punct("#")) {
        if (loop.empty()) fail(peek(), "pragma is not preceded by a 'loop:' line");
        Token name_tok;
        ParamSpec p = pragma(name_tok);
        p.scope = loop;
        if (!names.insert(p.name).second) {
          throw SyntaxError("duplicate parameter name '" + p.name + "'", name_tok.line, name_tok.column);
        }
        params.push_back(std::move(p));
      } else {
        fail(peek(), "expected 'loop:' or '#pragma'");
      }
    }
    return params;
  }

 private:
  ParamSpec pragma(Token& name_out) {
    expect_punct("#");
    expect_word("pragma");
    expect_word("ACCEL");
    const Token kind_tok = next();
    const auto kind = kind_tok.kind == Tok::kIdent ? parse_pragma_kind(kind_tok.text) : std::nullopt;
    if (!kind) fail(kind_tok, "expected PIPELINE, PARALLEL or TILING");

    if (peek().kind == Tok::kIdent && !iequals(peek().text, "auto")) {
      const Token attr = next();
      const bool ok = *kind == PragmaKind::kPipeline ? iequals(attr.text, "mode") : iequals(attr.text, "factor");
      if (!ok) fail(attr, "attribute '" + attr.text + "' does not apply to " + std::string(to_string(*kind)));
      expect_punct("=");
    }
    expect_word("auto");
    expect_punct("{");
    expect_word("options");
    expect_punct(":");

    ParamSpec p;
    p.kind = *kind;
    name_out = expect_name("parameter name");
    p.name = name_out.text;
    expect_punct("=");
    p.options = comprehension(p.kind);
    expect_punct(";");
    expect_word("default");
    expect_punct(":");
    p.default_value = value(p.kind);
    if (is_punct(";")) next();
    expect_punct("}");
    return p;
  }

  dsl::Comprehension comprehension(PragmaKind kind) {
    dsl::Comprehension c;
    expect_punct("[");
    c.element = expr();
    expect_word("for");
    c.variable = expect_name("comprehension variable").text;
    expect_word("in");
    expect_punct("[");
    c.items.push_back(value(kind));
    while (is_punct(",")) {
      next();
      c.items.push_back(value(kind));
    }
    expect_punct("]");
    if (peek().kind == Tok::kIdent && peek().text == "if") {
      next();
      c.condition = expr();
    }
    expect_punct("]");
    return c;
  }

  OptionValue value(PragmaKind kind) {
    const Token tok = next();
    std::optional<OptionValue> v;
    if (tok.kind == Tok::kInt || tok.kind == Tok::kIdent || tok.kind == Tok::kString) v = OptionValue::parse(tok.text);
    if (!v) fail(tok, "expected an integer factor or one of off, cg, fg");
    if (v->is_factor() && v->factor() < 1) fail(tok, "factor must be at least 1");
    if ((kind == PragmaKind::kPipeline) != v->is_mode()) {
      fail(tok, "value '" + v->to_string() + "' does not fit a " + std::string(to_string(kind)) + " pragma");
    }
    return *v;
  }

  // expr := and ('or' and)*
  dsl::Expr expr() {
    auto lhs = conjunction();
    while (peek().kind == Tok::kIdent && peek().text == "or") {
      next();
      lhs = dsl::Expr::binary(dsl::BinaryOp::kOr, lhs, conjunction());
    }
    return lhs;
  }

  dsl::Expr conjunction() {
    auto lhs = comparison();
    while (peek().kind == Tok::kIdent && peek().text == "and") {
      next();
      lhs = dsl::Expr::binary(dsl::BinaryOp::kAnd, lhs, comparison());
    }
    return lhs;
  }

  dsl::Expr comparison() {
    auto lhs = additive();
    if (auto op = comparison_op()) {
      next();
      lhs = dsl::Expr::binary(*op, lhs, additive());
      if (comparison_op()) fail(peek(), "chained comparisons are not supported");
    }
    return lhs;
  }

  std::optional<dsl::BinaryOp> comparison_op() const {
    if (peek().kind != Tok::kPunct) return std::nullopt;
    const auto& t = peek().text;
    if (t == "==") return dsl::BinaryOp::kEq;
    if (t == "!=") return dsl::BinaryOp::kNe;
    if (t == "<") return dsl::BinaryOp::kLt;
    if (t == "<=") return dsl::BinaryOp::kLe;
    if (t == ">") return dsl::BinaryOp::kGt;
    if (t == ">=") return dsl::BinaryOp::kGe;
    return std::nullopt;
  }

  dsl::Expr additive() {
    auto lhs = multiplicative();
    while (is_punct("+") || is_punct("-")) {
      const auto op = next().text == "+" ? dsl::BinaryOp::kAdd : dsl::BinaryOp::kSub;
      lhs = dsl::Expr::binary(op, lhs, multiplicative());
    }
    return lhs;
  }

  dsl::Expr multiplicative() {
    auto lhs = primary();
    while (is_punct("*") || is_punct("//") || is_punct("%")) {
      const auto t = next().text;
      const auto op = t == "*" ? dsl::BinaryOp::kMul : t == "//" ? dsl::BinaryOp::kFloorDiv : dsl::BinaryOp::kMod;
      lhs = dsl::Expr::binary(op, lhs, primary());
    }
    return lhs;
  }

  dsl::Expr primary() {
    const Token tok = next();
    switch (tok.kind) {
      case Tok::kInt: {
        auto v = OptionValue::parse(tok.text);
        if (!v) fail(tok, "integer literal out of range");
        return dsl::Expr::literal(*v);
      }
      case Tok::kString: {
        auto v = OptionValue::parse(tok.text);
        if (!v || !v->is_mode()) fail(tok, "string literal must be off, cg or fg");
        return dsl::Expr::literal(*v);
      }
      case Tok::kIdent:
        if (auto mode = parse_pipeline_mode(tok.text)) return dsl::Expr::literal(OptionValue(*mode));
        if (is_keyword(tok.text)) fail(tok, "unexpected keyword '" + tok.text + "'");
        return dsl::Expr::identifier(tok.text);
      case Tok::kPunct:
        if (tok.text == "(") {
          if (++depth_ > kMaxNesting) fail(tok, "parentheses nested too deeply");
          auto inner = expr();
          expect_punct(")");
          --depth_;
          return inner;
        }
        break;
      case Tok::kEnd:
        break;
    }
    fail(tok, "expected an expression");
  }

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token next() {
    Token t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is_punct(std::string_view p) const { return peek().kind == Tok::kPunct && peek().text == p; }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) fail(peek(), "expected '" + std::string(p) + "'");
    next();
  }
  void expect_word(std::string_view w) {
    if (peek().kind != Tok::kIdent || !iequals(peek().text, w)) fail(peek(), "expected '" + std::string(w) + "'");
    next();
  }
  Token expect_name(std::string_view what) {
    const Token& t = peek();
    if (t.kind != Tok::kIdent || is_keyword(t.text) || parse_pipeline_mode(t.text)) {
      fail(t, "expected " + std::string(what));
    }
    return next();
  }

  [[noreturn]] static void fail(const Token& at, const std::string& msg) {
    std::string found = at.kind == Tok::kEnd ? "end of input" : "'" + at.text + "'";
    throw SyntaxError(msg + ", found " + found, at.line, at.column);
  }

  static constexpr int kMaxNesting = 200;

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

DesignSpace parse_design_space(std::string_view text) {
  Parser parser(Lexer(text).run());
  return DesignSpace::build(parser.file());
}

std::string serialize_param(const ParamSpec& p) {
  std::string out = "#pragma ACCEL ";
  out += to_string(p.kind);
  out += p.kind == PragmaKind::kPipeline ? " mode=auto{ options: " : " factor=auto{ options: ";
  out += p.name + "=[" + p.options.element.to_string() + " for " + p.options.variable + " in [";
  for (std::size_t i = 0; i < p.options.items.size(); ++i) {
    if (i != 0) out += ',';
    out += p.options.items[i].to_string();
  }
  out += ']';
  if (p.options.condition) out += " if " + p.options.condition->to_string();
  out += "]; default: " + p.default_value.to_string() + " }";
  return out;
}

std::string serialize_design_space(const DesignSpace& ds) {
  std::string out(kDesignSpaceHeader);
  out += '\n';
  for (const auto& p : ds.params()) {
    out += "loop: " + p.scope + "\n";
    out += serialize_param(p) + "\n";
  }
  return out;
}

}  // namespace hlsdse
