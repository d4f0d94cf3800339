// Copyright 2026 The Datadiff Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "datadiff/render.hpp"

#include <cctype>
#include <sstream>

namespace datadiff {

std::string render_rat_sql(const Rat& r) {
  if (r.is_integer()) return r.to_string();
  return "(" + std::to_string(r.num()) + "/" + std::to_string(r.den()) + ")";
}

namespace {

std::string render_clause(const Clause& clause) {
  switch (clause.kind) {
    case ClauseKind::Eq:
      return clause.attr + " = " + render_rat_sql(clause.value);
    case ClauseKind::AtMost:
      return clause.attr + " <= " + render_rat_sql(clause.value);
    case ClauseKind::AtLeast:
      return clause.attr + " >= " + render_rat_sql(clause.value);
    case ClauseKind::Range:
      return clause.attr + " BETWEEN " + render_rat_sql(clause.lo) + " AND " +
             render_rat_sql(clause.hi);
    case ClauseKind::RangeUnion: {
      std::string out = "(";
      for (size_t i = 0; i < clause.intervals.size(); ++i) {
        if (i) out += " OR ";
        out += clause.attr + " BETWEEN " + render_rat_sql(clause.intervals[i].lo) + " AND " +
               render_rat_sql(clause.intervals[i].hi);
      }
      out += ")";
      return out;
    }
  }
  return "";
}

}  // namespace

std::string render_condition(const Condition& cond) {
  std::string out;
  for (size_t i = 0; i < cond.clauses.size(); ++i) {
    if (i) out += " AND ";
    out += render_clause(cond.clauses[i]);
  }
  return out;
}

std::string render_modifier(const Modifier& mod) {
  switch (mod.kind) {
    case ModKind::Assign:
      return mod.attr + " = " + render_rat_sql(mod.value);
    case ModKind::Increment:
      if (mod.value < Rat(0)) return mod.attr + " = " + mod.attr + " - " + render_rat_sql(-mod.value);
      return mod.attr + " = " + mod.attr + " + " + render_rat_sql(mod.value);
    case ModKind::Affine: {
      std::string out = mod.attr + " = " + render_rat_sql(mod.slope) + " * " + mod.attr;
      if (mod.intercept < Rat(0)) return out + " - " + render_rat_sql(-mod.intercept);
      return out + " + " + render_rat_sql(mod.intercept);
    }
  }
  return "";
}

std::string render_operation(const Operation& op, const std::string& relation_name) {
  return "UPDATE " + relation_name + " SET " + render_modifier(op.modifier) + " WHERE " +
         render_condition(op.condition) + ";";
}

std::string render_sql(const Diff& diff, const std::string& relation_name) {
  std::string out;
  for (const auto& op : diff.ops) {
    out += render_operation(op, relation_name);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Script parsing.

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  long long number = 0;
  int line = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    if (pos_ >= text_.size()) return;

    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::Int;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.number = std::stoll(tok_.text);
      return;
    }
    if (c == '<' || c == '>') {
      if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != '=') {
        throw ParseError(line_, std::string("expected '=' after '") + c + "'");
      }
      tok_.kind = Token::Kind::Punct;
      tok_.text = text_.substr(pos_, 2);
      pos_ += 2;
      return;
    }
    tok_.kind = Token::Kind::Punct;
    tok_.text = std::string(1, c);
    ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  Token tok_;
};

class ScriptParser {
 public:
  explicit ScriptParser(const std::string& text) : lex_(text) {}

  Diff parse() {
    Diff diff;
    while (lex_.peek().kind != Token::Kind::End) {
      diff.ops.push_back(statement());
    }
    return diff;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(lex_.peek().line, msg); }

  void expect_ident(const std::string& kw) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident || t.text != kw) {
      throw ParseError(t.line, "expected " + kw);
    }
  }

  void expect_punct(const std::string& p) {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Punct || t.text != p) {
      throw ParseError(t.line, "expected '" + p + "'");
    }
  }

  std::string ident() {
    Token t = lex_.take();
    if (t.kind != Token::Kind::Ident) throw ParseError(t.line, "expected identifier");
    return t.text;
  }

  bool peek_ident(const std::string& kw) {
    return lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == kw;
  }

  bool peek_punct(const std::string& p) {
    return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == p;
  }

  // INT or (p/q).
  Rat rat() {
    if (lex_.peek().kind == Token::Kind::Int) return Rat(lex_.take().number);
    if (peek_punct("(")) {
      lex_.take();
      Token num = lex_.take();
      if (num.kind != Token::Kind::Int) throw ParseError(num.line, "expected numerator");
      expect_punct("/");
      Token den = lex_.take();
      if (den.kind != Token::Kind::Int) throw ParseError(den.line, "expected denominator");
      expect_punct(")");
      return Rat(num.number, den.number);
    }
    fail("expected number");
  }

  Modifier set_clause() {
    std::string attr = ident();
    expect_punct("=");
    if (lex_.peek().kind == Token::Kind::Ident) {
      // B = B + v | B = B - v
      std::string again = ident();
      if (again != attr) fail("modifier must reference the SET attribute");
      bool minus = peek_punct("-");
      if (!minus && !peek_punct("+")) fail("expected '+' or '-'");
      lex_.take();
      Rat v = rat();
      return Modifier::increment(attr, minus ? -v : v);
    }
    Rat first = rat();
    if (peek_punct("*")) {
      // B = s * B + c
      lex_.take();
      std::string again = ident();
      if (again != attr) fail("modifier must reference the SET attribute");
      bool minus = peek_punct("-");
      if (!minus && !peek_punct("+")) fail("expected '+' or '-'");
      lex_.take();
      Rat c = rat();
      return Modifier::affine(attr, first, minus ? -c : c);
    }
    return Modifier::assign(attr, first);
  }

  Interval between_tail() {
    expect_ident("BETWEEN");
    Rat lo = rat();
    expect_ident("AND");
    Rat hi = rat();
    return Interval{lo, hi};
  }

  Clause clause() {
    if (peek_punct("(")) {
      lex_.take();
      std::string attr = ident();
      std::vector<Interval> intervals;
      intervals.push_back(between_tail());
      while (peek_ident("OR")) {
        lex_.take();
        std::string again = ident();
        if (again != attr) fail("union clause must stay on one attribute");
        intervals.push_back(between_tail());
      }
      expect_punct(")");
      return Clause::range_union(attr, std::move(intervals));
    }
    std::string attr = ident();
    if (peek_ident("BETWEEN")) {
      Interval iv = between_tail();
      return Clause::range(attr, iv.lo, iv.hi);
    }
    Token t = lex_.take();
    if (t.kind != Token::Kind::Punct) throw ParseError(t.line, "expected comparison");
    if (t.text == "=") return Clause::eq(attr, rat());
    if (t.text == "<=") return Clause::at_most(attr, rat());
    if (t.text == ">=") return Clause::at_least(attr, rat());
    throw ParseError(t.line, "unknown comparison '" + t.text + "'");
  }

  Operation statement() {
    expect_ident("UPDATE");
    ident();  // relation name; not significant for verification
    expect_ident("SET");
    Modifier mod = set_clause();
    expect_ident("WHERE");
    Condition cond;
    cond.clauses.push_back(clause());
    while (peek_ident("AND")) {
      lex_.take();
      cond.clauses.push_back(clause());
    }
    expect_punct(";");
    return Operation{std::move(cond), std::move(mod)};
  }

  Lexer lex_;
};

}  // namespace

Diff parse_script(const std::string& text) { return ScriptParser(text).parse(); }

}  // namespace datadiff
