// Copyright 2026 The typecorpus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "typecorpus/pyparse.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace typecorpus::py {
namespace {

struct ParseError {
  std::string message;
  std::size_t line;
};

[[noreturn]] void raise(std::string message, std::size_t line) {
  throw ParseError{std::move(message), line};
}

constexpr std::array<std::string_view, 13> kAugOps = {
    "+=", "-=", "*=", "/=", "//=", "%=", "@=",
    "**=", ">>=", "<<=", "&=", "|=", "^="};

bool is_aug_op(const Token& t) {
  if (t.kind != TokenKind::Op) return false;
  for (auto op : kAugOps) {
    if (t.text == op) return true;
  }
  return false;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    skip_comments();
  }

  std::unique_ptr<Module> parse_module() {
    auto mod = std::make_unique<Module>();
    while (!at_kind(TokenKind::EndOfFile)) {
      if (at_kind(TokenKind::Newline)) {
        advance();
        continue;
      }
      parse_statement(mod->body);
    }
    return mod;
  }

 private:
  // --- token cursor -------------------------------------------------------

  const Token& cur() const { return toks_[i_]; }
  const Token& peek(std::size_t n = 1) const {
    std::size_t j = i_;
    for (std::size_t step = 0; step < n && j + 1 < toks_.size(); ++step) {
      ++j;
      while (j + 1 < toks_.size() && toks_[j].kind == TokenKind::Comment) ++j;
    }
    return toks_[j];
  }

  void skip_comments() {
    while (i_ < toks_.size() && toks_[i_].kind == TokenKind::Comment) ++i_;
  }

  void advance() {
    last_ = i_;
    if (i_ + 1 < toks_.size()) ++i_;
    skip_comments();
  }

  bool at_kind(TokenKind k) const { return cur().kind == k; }
  bool at_op(std::string_view text) const { return cur().is_op(text); }
  bool at_kw(std::string_view text) const { return cur().is_keyword(text); }
  bool at_name(std::string_view text) const {
    return cur().kind == TokenKind::Name && cur().text == text;
  }

  void expect_op(std::string_view text) {
    if (!at_op(text)) {
      raise("expected '" + std::string(text) + "' but found '" + cur().text +
                "'",
            cur().line);
    }
    advance();
  }

  void expect_kw(std::string_view text) {
    if (!at_kw(text)) {
      raise("expected '" + std::string(text) + "'", cur().line);
    }
    advance();
  }

  std::string expect_name() {
    if (!at_kind(TokenKind::Name)) {
      raise("expected an identifier but found '" + cur().text + "'",
            cur().line);
    }
    std::string name = cur().text;
    advance();
    return name;
  }

  void expect_newline() {
    if (at_kind(TokenKind::EndOfFile)) return;
    if (!at_kind(TokenKind::Newline)) {
      raise("expected end of statement but found '" + cur().text + "'",
            cur().line);
    }
    advance();
  }

  std::size_t mark() const { return i_; }
  std::size_t end_mark() const { return last_ + 1; }

  template <typename NodeT>
  void close(NodeT& node, std::size_t begin) {
    node.tok_begin = begin;
    node.tok_end = end_mark();
  }

  // --- statements ---------------------------------------------------------

  void parse_statement(StmtList& out) {
    const Token& t = cur();
    if (t.kind == TokenKind::Keyword) {
      if (t.text == "if") return out.push_back(parse_if());
      if (t.text == "while") return out.push_back(parse_while());
      if (t.text == "for") return out.push_back(parse_for(false, mark()));
      if (t.text == "try") return out.push_back(parse_try());
      if (t.text == "with") return out.push_back(parse_with(false, mark()));
      if (t.text == "def") return out.push_back(parse_function_def(false, {}, mark()));
      if (t.text == "class") return out.push_back(parse_class_def({}, mark()));
      if (t.text == "async") return out.push_back(parse_async());
    }
    if (t.is_op("@")) return out.push_back(parse_decorated());
    if (t.kind == TokenKind::Name && t.text == "match") {
      if (try_parse_match(out)) return;
    }
    parse_simple_line(out);
  }

  void parse_simple_line(StmtList& out) {
    out.push_back(parse_simple_stmt());
    while (at_op(";")) {
      advance();
      if (at_kind(TokenKind::Newline) || at_kind(TokenKind::EndOfFile)) break;
      out.push_back(parse_simple_stmt());
    }
    expect_newline();
  }

  StmtPtr parse_simple_stmt() {
    const Token& t = cur();
    if (t.kind == TokenKind::Keyword) {
      if (t.text == "return") return parse_return();
      if (t.text == "import") return parse_import();
      if (t.text == "from") return parse_import_from();
      if (t.text == "raise") return parse_raise();
      if (t.text == "del") return parse_delete();
      if (t.text == "assert") return parse_assert();
      if (t.text == "global") return parse_scope_decl(true);
      if (t.text == "nonlocal") return parse_scope_decl(false);
      if (t.text == "pass") return parse_trivial(StmtKind::Pass);
      if (t.text == "break") return parse_trivial(StmtKind::Break);
      if (t.text == "continue") return parse_trivial(StmtKind::Continue);
      if (t.text == "yield") {
        auto stmt = std::make_unique<ExprStmtNode>();
        std::size_t begin = mark();
        stmt->value = parse_yield();
        close(*stmt, begin);
        return stmt;
      }
    }
    return parse_expr_statement();
  }

  StmtPtr parse_trivial(StmtKind kind) {
    auto stmt = std::make_unique<SimpleStmt>(kind);
    std::size_t begin = mark();
    advance();
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_return() {
    auto stmt = std::make_unique<ReturnStmt>();
    std::size_t begin = mark();
    advance();
    if (starts_expression(cur())) stmt->value = parse_star_expressions();
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_raise() {
    auto stmt = std::make_unique<RaiseStmt>();
    std::size_t begin = mark();
    advance();
    if (starts_expression(cur())) {
      stmt->exc = parse_expression(false);
      if (at_kw("from")) {
        advance();
        stmt->cause = parse_expression(false);
      }
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_delete() {
    auto stmt = std::make_unique<DeleteStmt>();
    std::size_t begin = mark();
    advance();
    stmt->targets.push_back(parse_target_element());
    while (at_op(",")) {
      advance();
      if (!starts_expression(cur())) break;
      stmt->targets.push_back(parse_target_element());
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_assert() {
    auto stmt = std::make_unique<AssertStmt>();
    std::size_t begin = mark();
    advance();
    stmt->test = parse_expression(false);
    if (at_op(",")) {
      advance();
      stmt->message = parse_expression(false);
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_scope_decl(bool global) {
    std::size_t begin = mark();
    advance();
    std::vector<std::string> names;
    names.push_back(expect_name());
    while (at_op(",")) {
      advance();
      names.push_back(expect_name());
    }
    if (global) {
      auto stmt = std::make_unique<GlobalStmt>();
      stmt->names = std::move(names);
      close(*stmt, begin);
      return stmt;
    }
    auto stmt = std::make_unique<NonlocalStmt>();
    stmt->names = std::move(names);
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_import() {
    auto stmt = std::make_unique<ImportStmt>();
    std::size_t begin = mark();
    advance();
    while (true) {
      ImportAlias alias;
      alias.name = parse_dotted_name();
      if (at_kw("as")) {
        advance();
        alias.asname = expect_name();
      }
      stmt->names.push_back(std::move(alias));
      if (!at_op(",")) break;
      advance();
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_import_from() {
    auto stmt = std::make_unique<ImportFromStmt>();
    std::size_t begin = mark();
    advance();
    while (at_op(".") || at_op("...")) {
      stmt->level += at_op(".") ? 1 : 3;
      advance();
    }
    if (at_kind(TokenKind::Name)) {
      stmt->module = parse_dotted_name();
    } else if (stmt->level == 0) {
      raise("expected a module name after 'from'", cur().line);
    }
    expect_kw("import");
    if (at_op("*")) {
      advance();
      stmt->names.push_back({"*", ""});
      close(*stmt, begin);
      return stmt;
    }
    bool parens = at_op("(");
    if (parens) advance();
    while (true) {
      ImportAlias alias;
      alias.name = expect_name();
      if (at_kw("as")) {
        advance();
        alias.asname = expect_name();
      }
      stmt->names.push_back(std::move(alias));
      if (!at_op(",")) break;
      advance();
      if (parens && at_op(")")) break;
    }
    if (parens) expect_op(")");
    close(*stmt, begin);
    return stmt;
  }

  std::string parse_dotted_name() {
    std::string name = expect_name();
    while (at_op(".")) {
      advance();
      name += '.';
      name += expect_name();
    }
    return name;
  }

  StmtPtr parse_expr_statement() {
    std::size_t begin = mark();
    ExprPtr first = parse_star_expressions();
    if (at_op(":")) {
      if (first->kind != ExprKind::Name &&
          first->kind != ExprKind::Attribute &&
          first->kind != ExprKind::Subscript) {
        raise("illegal target for annotation", cur().line);
      }
      auto stmt = std::make_unique<AnnAssignStmt>();
      stmt->target = std::move(first);
      advance();
      stmt->annotation = parse_expression(false);
      if (at_op("=")) {
        advance();
        stmt->value = parse_assign_rhs();
      }
      close(*stmt, begin);
      return stmt;
    }
    if (at_op("=")) {
      auto stmt = std::make_unique<AssignStmt>();
      validate_target(*first);
      stmt->targets.push_back(std::move(first));
      ExprPtr value;
      while (at_op("=")) {
        advance();
        value = parse_assign_rhs();
        if (at_op("=")) {
          validate_target(*value);
          stmt->targets.push_back(std::move(value));
        }
      }
      stmt->value = std::move(value);
      close(*stmt, begin);
      return stmt;
    }
    if (is_aug_op(cur())) {
      if (first->kind != ExprKind::Name &&
          first->kind != ExprKind::Attribute &&
          first->kind != ExprKind::Subscript) {
        raise("illegal target for augmented assignment", cur().line);
      }
      auto stmt = std::make_unique<AugAssignStmt>();
      stmt->target = std::move(first);
      stmt->op = cur().text;
      advance();
      stmt->value = parse_assign_rhs();
      close(*stmt, begin);
      return stmt;
    }
    auto stmt = std::make_unique<ExprStmtNode>();
    stmt->value = std::move(first);
    close(*stmt, begin);
    return stmt;
  }

  ExprPtr parse_assign_rhs() {
    if (at_kw("yield")) return parse_yield();
    return parse_star_expressions();
  }

  // --- compound statements ------------------------------------------------

  void parse_block(StmtList& out) {
    expect_op(":");
    if (!at_kind(TokenKind::Newline)) {
      parse_simple_line(out);
      return;
    }
    advance();
    if (!at_kind(TokenKind::Indent)) {
      raise("expected an indented block", cur().line);
    }
    advance();
    while (!at_kind(TokenKind::Dedent)) {
      if (at_kind(TokenKind::EndOfFile)) {
        raise("unexpected end of file inside block", cur().line);
      }
      if (at_kind(TokenKind::Newline)) {
        advance();
        continue;
      }
      parse_statement(out);
    }
    advance();  // Dedent
    if (out.empty()) raise("expected at least one statement in block", cur().line);
  }

  StmtPtr parse_if() {
    auto stmt = std::make_unique<IfStmt>();
    std::size_t begin = mark();
    advance();
    stmt->test = parse_namedexpr(false);
    parse_block(stmt->body);
    if (at_kw("elif")) {
      std::size_t elif_begin = mark();
      auto chained = parse_if_from_elif(elif_begin);
      stmt->orelse.push_back(std::move(chained));
    } else if (at_kw("else")) {
      advance();
      parse_block(stmt->orelse);
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_if_from_elif(std::size_t begin) {
    auto stmt = std::make_unique<IfStmt>();
    advance();  // elif
    stmt->test = parse_namedexpr(false);
    parse_block(stmt->body);
    if (at_kw("elif")) {
      stmt->orelse.push_back(parse_if_from_elif(mark()));
    } else if (at_kw("else")) {
      advance();
      parse_block(stmt->orelse);
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_while() {
    auto stmt = std::make_unique<WhileStmt>();
    std::size_t begin = mark();
    advance();
    stmt->test = parse_namedexpr(false);
    parse_block(stmt->body);
    if (at_kw("else")) {
      advance();
      parse_block(stmt->orelse);
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_for(bool is_async, std::size_t begin) {
    auto stmt = std::make_unique<ForStmt>();
    stmt->is_async = is_async;
    advance();  // for
    stmt->target = parse_target_list("in");
    expect_kw("in");
    stmt->iter = parse_star_expressions();
    parse_block(stmt->body);
    if (at_kw("else")) {
      advance();
      parse_block(stmt->orelse);
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_with(bool is_async, std::size_t begin) {
    auto stmt = std::make_unique<WithStmt>();
    stmt->is_async = is_async;
    advance();  // with
    if (at_op("(") && try_parse_paren_with_items(stmt->items)) {
      // parenthesized item list consumed
    } else {
      parse_with_item(stmt->items);
      while (at_op(",")) {
        advance();
        parse_with_item(stmt->items);
      }
    }
    parse_block(stmt->body);
    close(*stmt, begin);
    return stmt;
  }

  void parse_with_item(std::vector<WithItem>& items) {
    WithItem item;
    item.context = parse_expression(false);
    if (at_kw("as")) {
      advance();
      item.target = parse_target_element();
    }
    items.push_back(std::move(item));
  }

  // Parenthesized with-item lists only commit when an 'as' clause appears
  // inside the parentheses; otherwise '(' starts an ordinary expression.
  bool try_parse_paren_with_items(std::vector<WithItem>& items) {
    std::size_t save_i = i_;
    std::size_t save_last = last_;
    std::vector<WithItem> parsed;
    bool saw_as = false;
    try {
      advance();  // (
      while (!at_op(")")) {
        WithItem item;
        item.context = parse_expression(false);
        if (at_kw("as")) {
          saw_as = true;
          advance();
          item.target = parse_target_element();
        }
        parsed.push_back(std::move(item));
        if (at_op(",")) {
          advance();
        } else {
          break;
        }
      }
      expect_op(")");
      if (!saw_as || !at_op(":")) throw ParseError{"", cur().line};
    } catch (const ParseError&) {
      i_ = save_i;
      last_ = save_last;
      return false;
    }
    items = std::move(parsed);
    return true;
  }

  StmtPtr parse_try() {
    auto stmt = std::make_unique<TryStmt>();
    std::size_t begin = mark();
    advance();
    parse_block(stmt->body);
    while (at_kw("except")) {
      ExceptHandler handler;
      std::size_t h_begin = mark();
      advance();
      if (at_op("*")) {
        handler.is_star = true;
        advance();
      }
      if (!at_op(":")) {
        handler.type = parse_expression(false);
        if (at_op(",")) {
          raise("legacy except clause: expected 'as' before the binding name",
                cur().line);
        }
        if (at_kw("as")) {
          advance();
          handler.name_tok = mark();
          handler.name = expect_name();
        }
      }
      parse_block(handler.body);
      handler.tok_begin = h_begin;
      handler.tok_end = end_mark();
      stmt->handlers.push_back(std::move(handler));
    }
    if (at_kw("else")) {
      if (stmt->handlers.empty()) {
        raise("'else' clause requires a preceding 'except'", cur().line);
      }
      advance();
      parse_block(stmt->orelse);
    }
    if (at_kw("finally")) {
      advance();
      parse_block(stmt->finalbody);
    }
    if (stmt->handlers.empty() && stmt->finalbody.empty()) {
      raise("'try' statement needs an 'except' or 'finally' clause",
            cur().line);
    }
    close(*stmt, begin);
    return stmt;
  }

  StmtPtr parse_async() {
    std::size_t begin = mark();
    advance();  // async
    if (at_kw("def")) return parse_function_def(true, {}, begin);
    if (at_kw("for")) return parse_for(true, begin);
    if (at_kw("with")) return parse_with(true, begin);
    raise("expected 'def', 'for', or 'with' after 'async'", cur().line);
  }

  StmtPtr parse_decorated() {
    std::vector<ExprPtr> decorators;
    while (at_op("@")) {
      std::size_t d_begin = mark();
      advance();
      ExprPtr deco = parse_namedexpr(false);
      deco->tok_begin = d_begin;
      decorators.push_back(std::move(deco));
      expect_newline();
    }
    std::size_t begin = mark();
    if (at_kw("def")) return parse_function_def(false, std::move(decorators), begin);
    if (at_kw("class")) return parse_class_def(std::move(decorators), begin);
    if (at_kw("async")) {
      advance();
      if (at_kw("def")) return parse_function_def(true, std::move(decorators), begin);
    }
    raise("expected a function or class definition after decorators",
          cur().line);
  }

  StmtPtr parse_function_def(bool is_async, std::vector<ExprPtr> decorators,
                             std::size_t begin) {
    auto stmt = std::make_unique<FunctionDefStmt>();
    stmt->is_async = is_async;
    stmt->decorators = std::move(decorators);
    advance();  // def
    stmt->name_tok = mark();
    stmt->name = expect_name();
    expect_op("(");
    parse_params(stmt->params, true);
    expect_op(")");
    if (at_op("->")) {
      advance();
      stmt->returns = parse_expression(false);
    }
    parse_block(stmt->body);
    close(*stmt, begin);
    return stmt;
  }

  void parse_params(std::vector<Param>& params, bool allow_annotations) {
    bool keyword_only = false;
    while (!at_op(")") && !at_op(":")) {
      if (at_op("/")) {
        advance();
        for (Param& p : params) {
          if (p.kind == ParamKind::Normal) p.kind = ParamKind::PosOnly;
        }
      } else if (at_op("*")) {
        advance();
        keyword_only = true;
        if (at_kind(TokenKind::Name)) {
          Param p;
          p.kind = ParamKind::VarArg;
          p.name_tok = mark();
          p.name = expect_name();
          if (allow_annotations && at_op(":")) {
            advance();
            p.annotation = parse_expression(false);
          }
          params.push_back(std::move(p));
        }
      } else if (at_op("**")) {
        advance();
        Param p;
        p.kind = ParamKind::KwArg;
        p.name_tok = mark();
        p.name = expect_name();
        if (allow_annotations && at_op(":")) {
          advance();
          p.annotation = parse_expression(false);
        }
        params.push_back(std::move(p));
      } else {
        Param p;
        p.kind = keyword_only ? ParamKind::KeywordOnly : ParamKind::Normal;
        p.name_tok = mark();
        p.name = expect_name();
        if (allow_annotations && at_op(":")) {
          advance();
          p.annotation = parse_expression(false);
        }
        if (at_op("=")) {
          advance();
          p.default_value = parse_expression(false);
        }
        params.push_back(std::move(p));
      }
      if (at_op(",")) {
        advance();
      } else {
        break;
      }
    }
  }

  StmtPtr parse_class_def(std::vector<ExprPtr> decorators, std::size_t begin) {
    auto stmt = std::make_unique<ClassDefStmt>();
    stmt->decorators = std::move(decorators);
    advance();  // class
    stmt->name_tok = mark();
    stmt->name = expect_name();
    if (at_op("(")) {
      advance();
      parse_call_args(stmt->bases);
      expect_op(")");
    }
    parse_block(stmt->body);
    close(*stmt, begin);
    return stmt;
  }

  // --- match statement (soft keyword, speculative) --------------------------

  bool try_parse_match(StmtList& out) {
    std::size_t save_i = i_;
    std::size_t save_last = last_;
    try {
      auto stmt = std::make_unique<MatchStmt>();
      std::size_t begin = mark();
      advance();  // match
      if (!starts_expression(cur()) || at_op("=")) {
        throw ParseError{"", cur().line};
      }
      stmt->subject = parse_star_expressions();
      expect_op(":");
      if (!at_kind(TokenKind::Newline)) throw ParseError{"", cur().line};
      advance();
      if (!at_kind(TokenKind::Indent)) throw ParseError{"", cur().line};
      advance();
      if (!at_name("case")) throw ParseError{"", cur().line};
      while (at_name("case")) {
        MatchCase mc;
        advance();
        mc.pattern = parse_match_pattern();
        if (at_kw("if")) {
          advance();
          mc.guard = parse_namedexpr(false);
        }
        parse_block(mc.body);
        stmt->cases.push_back(std::move(mc));
        while (at_kind(TokenKind::Newline)) advance();
      }
      if (!at_kind(TokenKind::Dedent)) throw ParseError{"", cur().line};
      advance();
      close(*stmt, begin);
      out.push_back(std::move(stmt));
      return true;
    } catch (const ParseError&) {
      i_ = save_i;
      last_ = save_last;
      return false;
    }
  }

  // Patterns share enough surface syntax with expressions that the
  // expression grammar covers them; 'as' captures get their own node.
  ExprPtr parse_match_pattern() {
    std::size_t begin = mark();
    ExprPtr first = parse_match_as_pattern();
    if (!at_op(",")) return first;
    auto tuple = std::make_unique<Expr>(ExprKind::Tuple);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (!starts_expression(cur())) break;
      tuple->children.push_back(parse_match_as_pattern());
    }
    close(*tuple, begin);
    return tuple;
  }

  ExprPtr parse_match_as_pattern() {
    std::size_t begin = mark();
    ExprPtr pattern = at_op("*") ? parse_star_item() : parse_or(false);
    if (at_kw("as")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::MatchAs);
      node->str = expect_name();
      node->children.push_back(std::move(pattern));
      close(*node, begin);
      return node;
    }
    return pattern;
  }

  // --- expressions ----------------------------------------------------------

  bool starts_expression(const Token& t) const {
    switch (t.kind) {
      case TokenKind::Name:
      case TokenKind::Number:
      case TokenKind::String:
        return true;
      case TokenKind::Keyword:
        return t.text == "None" || t.text == "True" || t.text == "False" ||
               t.text == "not" || t.text == "lambda" || t.text == "await" ||
               t.text == "yield";
      case TokenKind::Op:
        return t.text == "(" || t.text == "[" || t.text == "{" ||
               t.text == "+" || t.text == "-" || t.text == "~" ||
               t.text == "*" || t.text == "**" || t.text == "...";
      default:
        return false;
    }
  }

  ExprPtr parse_star_expressions() {
    std::size_t begin = mark();
    ExprPtr first = parse_star_item();
    if (!at_op(",")) return first;
    auto tuple = std::make_unique<Expr>(ExprKind::Tuple);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (!starts_expression(cur())) break;
      tuple->children.push_back(parse_star_item());
    }
    close(*tuple, begin);
    return tuple;
  }

  ExprPtr parse_star_item() {
    if (at_op("*")) {
      std::size_t begin = mark();
      advance();
      auto node = std::make_unique<Expr>(ExprKind::Starred);
      node->children.push_back(parse_bit_or(false));
      close(*node, begin);
      return node;
    }
    return parse_namedexpr(false);
  }

  ExprPtr parse_namedexpr(bool no_cond) {
    std::size_t begin = mark();
    ExprPtr expr = parse_expression(no_cond);
    if (at_op(":=")) {
      if (expr->kind != ExprKind::Name) {
        raise("illegal target for ':='", cur().line);
      }
      advance();
      auto node = std::make_unique<Expr>(ExprKind::NamedExpr);
      node->children.push_back(std::move(expr));
      node->children.push_back(parse_expression(no_cond));
      close(*node, begin);
      return node;
    }
    return expr;
  }

  ExprPtr parse_expression(bool no_cond) {
    if (at_kw("lambda")) return parse_lambda(no_cond);
    if (at_kw("yield")) return parse_yield();
    std::size_t begin = mark();
    ExprPtr expr = parse_or(no_cond);
    if (!no_cond && at_kw("if")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::IfExp);
      node->children.push_back(std::move(expr));
      node->children.push_back(parse_or(false));
      expect_kw("else");
      node->children.push_back(parse_expression(false));
      close(*node, begin);
      return node;
    }
    return expr;
  }

  ExprPtr parse_lambda(bool no_cond) {
    std::size_t begin = mark();
    auto node = std::make_unique<Expr>(ExprKind::Lambda);
    advance();  // lambda
    std::vector<Param> params;
    parse_params(params, false);
    for (Param& p : params) {
      auto name = std::make_unique<Expr>(ExprKind::Name);
      name->str = p.name;
      name->tok_begin = p.name_tok;
      name->tok_end = p.name_tok + 1;
      if (p.default_value) name->children.push_back(std::move(p.default_value));
      node->children.push_back(std::move(name));
    }
    expect_op(":");
    node->children.push_back(parse_expression(no_cond));
    close(*node, begin);
    return node;
  }

  ExprPtr parse_yield() {
    std::size_t begin = mark();
    advance();  // yield
    if (at_kw("from")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::YieldFrom);
      node->children.push_back(parse_expression(false));
      close(*node, begin);
      return node;
    }
    auto node = std::make_unique<Expr>(ExprKind::Yield);
    if (starts_expression(cur()) && !at_op("*")) {
      node->children.push_back(parse_star_expressions());
    }
    close(*node, begin);
    return node;
  }

  ExprPtr parse_or(bool no_cond) {
    std::size_t begin = mark();
    ExprPtr expr = parse_and(no_cond);
    while (at_kw("or")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::BoolOp);
      node->str = "or";
      node->children.push_back(std::move(expr));
      node->children.push_back(parse_and(no_cond));
      close(*node, begin);
      expr = std::move(node);
    }
    return expr;
  }

  ExprPtr parse_and(bool no_cond) {
    std::size_t begin = mark();
    ExprPtr expr = parse_not(no_cond);
    while (at_kw("and")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::BoolOp);
      node->str = "and";
      node->children.push_back(std::move(expr));
      node->children.push_back(parse_not(no_cond));
      close(*node, begin);
      expr = std::move(node);
    }
    return expr;
  }

  ExprPtr parse_not(bool no_cond) {
    if (at_kw("not")) {
      std::size_t begin = mark();
      advance();
      auto node = std::make_unique<Expr>(ExprKind::UnaryOp);
      node->str = "not";
      node->children.push_back(parse_not(no_cond));
      close(*node, begin);
      return node;
    }
    return parse_comparison(no_cond);
  }

  bool at_comparison_op() const {
    if (at_kw("in") || at_kw("is")) return true;
    if (cur().kind != TokenKind::Op) return false;
    const std::string& t = cur().text;
    return t == "<" || t == ">" || t == "<=" || t == ">=" || t == "==" ||
           t == "!=";
  }

  ExprPtr parse_comparison(bool no_cond) {
    std::size_t begin = mark();
    ExprPtr expr = parse_bit_or(no_cond);
    if (!at_comparison_op() && !at_kw("not")) return expr;
    auto node = std::make_unique<Expr>(ExprKind::Compare);
    node->children.push_back(std::move(expr));
    while (at_comparison_op() || at_kw("not")) {
      if (at_kw("not")) {
        advance();
        expect_kw("in");
      } else if (at_kw("is")) {
        advance();
        if (at_kw("not")) advance();
      } else {
        advance();
      }
      node->children.push_back(parse_bit_or(no_cond));
    }
    close(*node, begin);
    return node;
  }

  using BinParser = ExprPtr (Parser::*)(bool);

  ExprPtr parse_bin_level(bool no_cond, BinParser next,
                          std::initializer_list<std::string_view> ops) {
    std::size_t begin = mark();
    ExprPtr expr = (this->*next)(no_cond);
    while (true) {
      bool matched = false;
      for (auto op : ops) {
        if (at_op(op)) {
          matched = true;
          break;
        }
      }
      if (!matched) return expr;
      auto node = std::make_unique<Expr>(ExprKind::BinOp);
      node->str = cur().text;
      advance();
      node->children.push_back(std::move(expr));
      node->children.push_back((this->*next)(no_cond));
      close(*node, begin);
      expr = std::move(node);
    }
  }

  ExprPtr parse_bit_or(bool nc) {
    return parse_bin_level(nc, &Parser::parse_bit_xor, {"|"});
  }
  ExprPtr parse_bit_xor(bool nc) {
    return parse_bin_level(nc, &Parser::parse_bit_and, {"^"});
  }
  ExprPtr parse_bit_and(bool nc) {
    return parse_bin_level(nc, &Parser::parse_shift, {"&"});
  }
  ExprPtr parse_shift(bool nc) {
    return parse_bin_level(nc, &Parser::parse_arith, {"<<", ">>"});
  }
  ExprPtr parse_arith(bool nc) {
    return parse_bin_level(nc, &Parser::parse_term, {"+", "-"});
  }
  ExprPtr parse_term(bool nc) {
    return parse_bin_level(nc, &Parser::parse_factor,
                           {"*", "/", "//", "%", "@"});
  }

  ExprPtr parse_factor(bool no_cond) {
    if (at_op("+") || at_op("-") || at_op("~")) {
      std::size_t begin = mark();
      auto node = std::make_unique<Expr>(ExprKind::UnaryOp);
      node->str = cur().text;
      advance();
      node->children.push_back(parse_factor(no_cond));
      close(*node, begin);
      return node;
    }
    return parse_power(no_cond);
  }

  ExprPtr parse_power(bool no_cond) {
    std::size_t begin = mark();
    ExprPtr expr = parse_await_primary(no_cond);
    if (at_op("**")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::BinOp);
      node->str = "**";
      node->children.push_back(std::move(expr));
      node->children.push_back(parse_factor(no_cond));
      close(*node, begin);
      return node;
    }
    return expr;
  }

  ExprPtr parse_await_primary(bool no_cond) {
    if (at_kw("await")) {
      std::size_t begin = mark();
      advance();
      auto node = std::make_unique<Expr>(ExprKind::Await);
      node->children.push_back(parse_await_primary(no_cond));
      close(*node, begin);
      return node;
    }
    return parse_primary(no_cond);
  }

  ExprPtr parse_primary(bool no_cond) {
    std::size_t begin = mark();
    ExprPtr expr = parse_atom(no_cond);
    while (true) {
      if (at_op(".")) {
        advance();
        auto node = std::make_unique<Expr>(ExprKind::Attribute);
        node->str = expect_name();
        node->children.push_back(std::move(expr));
        close(*node, begin);
        expr = std::move(node);
      } else if (at_op("(")) {
        advance();
        auto node = std::make_unique<Expr>(ExprKind::Call);
        node->children.push_back(std::move(expr));
        parse_call_args(node->children);
        expect_op(")");
        close(*node, begin);
        expr = std::move(node);
      } else if (at_op("[")) {
        advance();
        auto node = std::make_unique<Expr>(ExprKind::Subscript);
        node->children.push_back(std::move(expr));
        node->children.push_back(parse_subscript_list());
        expect_op("]");
        close(*node, begin);
        expr = std::move(node);
      } else {
        return expr;
      }
    }
  }

  void parse_call_args(std::vector<ExprPtr>& out) {
    bool first = true;
    while (!at_op(")")) {
      if (at_op("*")) {
        std::size_t begin = mark();
        advance();
        auto node = std::make_unique<Expr>(ExprKind::Starred);
        node->children.push_back(parse_expression(false));
        close(*node, begin);
        out.push_back(std::move(node));
      } else if (at_op("**")) {
        std::size_t begin = mark();
        advance();
        auto node = std::make_unique<Expr>(ExprKind::DoubleStarred);
        node->children.push_back(parse_expression(false));
        close(*node, begin);
        out.push_back(std::move(node));
      } else if (cur().kind == TokenKind::Name && peek().is_op("=")) {
        std::size_t begin = mark();
        auto node = std::make_unique<Expr>(ExprKind::Keyword);
        node->str = expect_name();
        advance();  // =
        node->children.push_back(parse_expression(false));
        close(*node, begin);
        out.push_back(std::move(node));
      } else {
        std::size_t begin = mark();
        ExprPtr arg = parse_namedexpr(false);
        if (first && (at_kw("for") || (at_kw("async") && peek().is_keyword("for")))) {
          auto gen = std::make_unique<Expr>(ExprKind::GeneratorExp);
          gen->children.push_back(std::move(arg));
          parse_comprehension_clauses(gen->children);
          close(*gen, begin);
          arg = std::move(gen);
        }
        out.push_back(std::move(arg));
      }
      first = false;
      if (at_op(",")) {
        advance();
      } else {
        break;
      }
    }
  }

  ExprPtr parse_subscript_list() {
    std::size_t begin = mark();
    ExprPtr first = parse_subscript_item();
    if (!at_op(",")) return first;
    auto tuple = std::make_unique<Expr>(ExprKind::Tuple);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_op("]")) break;
      tuple->children.push_back(parse_subscript_item());
    }
    close(*tuple, begin);
    return tuple;
  }

  ExprPtr parse_subscript_item() {
    std::size_t begin = mark();
    ExprPtr lower;
    if (!at_op(":")) {
      if (at_op("*")) return parse_star_item();
      lower = parse_namedexpr(false);
      if (!at_op(":")) return lower;
    }
    auto node = std::make_unique<Expr>(ExprKind::Slice);
    if (lower) node->children.push_back(std::move(lower));
    advance();  // first ':'
    if (!at_op(":") && !at_op("]") && !at_op(",")) {
      node->children.push_back(parse_expression(false));
    }
    if (at_op(":")) {
      advance();
      if (!at_op("]") && !at_op(",")) {
        node->children.push_back(parse_expression(false));
      }
    }
    close(*node, begin);
    return node;
  }

  void parse_comprehension_clauses(std::vector<ExprPtr>& out) {
    while (at_kw("for") || (at_kw("async") && peek().is_keyword("for"))) {
      std::size_t begin = mark();
      auto clause = std::make_unique<Expr>(ExprKind::Comprehension);
      if (at_kw("async")) {
        clause->is_async = true;
        advance();
      }
      advance();  // for
      clause->children.push_back(parse_target_list("in"));
      expect_kw("in");
      clause->children.push_back(parse_or(true));
      while (at_kw("if")) {
        advance();
        clause->children.push_back(parse_expression(true));
      }
      close(*clause, begin);
      out.push_back(std::move(clause));
    }
  }

  ExprPtr parse_atom(bool no_cond) {
    const Token& t = cur();
    std::size_t begin = mark();
    switch (t.kind) {
      case TokenKind::Name: {
        auto node = std::make_unique<Expr>(ExprKind::Name);
        node->str = t.text;
        advance();
        close(*node, begin);
        return node;
      }
      case TokenKind::Number: {
        auto node = std::make_unique<Expr>(ExprKind::Constant);
        node->const_kind = ConstKind::Number;
        node->str = t.text;
        advance();
        close(*node, begin);
        return node;
      }
      case TokenKind::String: {
        auto node = std::make_unique<Expr>(ExprKind::Constant);
        node->const_kind = ConstKind::String;
        node->str = t.text;
        advance();
        while (at_kind(TokenKind::String)) advance();  // implicit concat
        close(*node, begin);
        return node;
      }
      case TokenKind::Keyword: {
        if (t.text == "None" || t.text == "True" || t.text == "False") {
          auto node = std::make_unique<Expr>(ExprKind::Constant);
          node->const_kind = ConstKind::NameConst;
          node->str = t.text;
          advance();
          close(*node, begin);
          return node;
        }
        if (t.text == "lambda") return parse_lambda(no_cond);
        break;
      }
      case TokenKind::Op: {
        if (t.text == "...") {
          auto node = std::make_unique<Expr>(ExprKind::Constant);
          node->const_kind = ConstKind::Ellipsis;
          node->str = "...";
          advance();
          close(*node, begin);
          return node;
        }
        if (t.text == "(") return parse_paren_atom(begin);
        if (t.text == "[") return parse_list_atom(begin);
        if (t.text == "{") return parse_brace_atom(begin);
        break;
      }
      default:
        break;
    }
    raise("unexpected token '" + t.text + "'", t.line);
  }

  ExprPtr parse_paren_atom(std::size_t begin) {
    advance();  // (
    if (at_op(")")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::Tuple);
      close(*node, begin);
      return node;
    }
    if (at_kw("yield")) {
      ExprPtr node = parse_yield();
      expect_op(")");
      node->tok_begin = begin;
      node->tok_end = end_mark();
      return node;
    }
    ExprPtr first = at_op("*") ? parse_star_item() : parse_namedexpr(false);
    if (at_kw("for") || (at_kw("async") && peek().is_keyword("for"))) {
      auto node = std::make_unique<Expr>(ExprKind::GeneratorExp);
      node->children.push_back(std::move(first));
      parse_comprehension_clauses(node->children);
      expect_op(")");
      close(*node, begin);
      return node;
    }
    if (at_op(",")) {
      auto node = std::make_unique<Expr>(ExprKind::Tuple);
      node->children.push_back(std::move(first));
      while (at_op(",")) {
        advance();
        if (at_op(")")) break;
        node->children.push_back(at_op("*") ? parse_star_item()
                                            : parse_namedexpr(false));
      }
      expect_op(")");
      close(*node, begin);
      return node;
    }
    expect_op(")");
    // Keep the parenthesized span so verbatim slices reproduce the source.
    first->tok_begin = begin;
    first->tok_end = end_mark();
    return first;
  }

  ExprPtr parse_list_atom(std::size_t begin) {
    advance();  // [
    if (at_op("]")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::List);
      close(*node, begin);
      return node;
    }
    ExprPtr first = at_op("*") ? parse_star_item() : parse_namedexpr(false);
    if (at_kw("for") || (at_kw("async") && peek().is_keyword("for"))) {
      auto node = std::make_unique<Expr>(ExprKind::ListComp);
      node->children.push_back(std::move(first));
      parse_comprehension_clauses(node->children);
      expect_op("]");
      close(*node, begin);
      return node;
    }
    auto node = std::make_unique<Expr>(ExprKind::List);
    node->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_op("]")) break;
      node->children.push_back(at_op("*") ? parse_star_item()
                                          : parse_namedexpr(false));
    }
    expect_op("]");
    close(*node, begin);
    return node;
  }

  ExprPtr parse_brace_atom(std::size_t begin) {
    advance();  // {
    if (at_op("}")) {
      advance();
      auto node = std::make_unique<Expr>(ExprKind::Dict);
      close(*node, begin);
      return node;
    }
    if (at_op("**")) {
      auto node = std::make_unique<Expr>(ExprKind::Dict);
      parse_dict_entries(node->children);
      expect_op("}");
      close(*node, begin);
      return node;
    }
    ExprPtr first = at_op("*") ? parse_star_item() : parse_namedexpr(false);
    if (at_op(":")) {
      advance();
      auto pair = std::make_unique<Expr>(ExprKind::DictPair);
      std::size_t pair_begin = first->tok_begin;
      pair->children.push_back(std::move(first));
      pair->children.push_back(parse_expression(false));
      close(*pair, pair_begin);
      if (at_kw("for") || (at_kw("async") && peek().is_keyword("for"))) {
        auto node = std::make_unique<Expr>(ExprKind::DictComp);
        node->children.push_back(std::move(pair));
        parse_comprehension_clauses(node->children);
        expect_op("}");
        close(*node, begin);
        return node;
      }
      auto node = std::make_unique<Expr>(ExprKind::Dict);
      node->children.push_back(std::move(pair));
      if (at_op(",")) {
        advance();
        parse_dict_entries(node->children);
      }
      expect_op("}");
      close(*node, begin);
      return node;
    }
    if (at_kw("for") || (at_kw("async") && peek().is_keyword("for"))) {
      auto node = std::make_unique<Expr>(ExprKind::SetComp);
      node->children.push_back(std::move(first));
      parse_comprehension_clauses(node->children);
      expect_op("}");
      close(*node, begin);
      return node;
    }
    auto node = std::make_unique<Expr>(ExprKind::Set);
    node->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_op("}")) break;
      node->children.push_back(at_op("*") ? parse_star_item()
                                          : parse_namedexpr(false));
    }
    expect_op("}");
    close(*node, begin);
    return node;
  }

  void parse_dict_entries(std::vector<ExprPtr>& out) {
    while (!at_op("}")) {
      if (at_op("**")) {
        std::size_t begin = mark();
        advance();
        auto node = std::make_unique<Expr>(ExprKind::DoubleStarred);
        node->children.push_back(parse_bit_or(false));
        close(*node, begin);
        out.push_back(std::move(node));
      } else {
        std::size_t begin = mark();
        auto pair = std::make_unique<Expr>(ExprKind::DictPair);
        pair->children.push_back(parse_namedexpr(false));
        expect_op(":");
        pair->children.push_back(parse_expression(false));
        close(*pair, begin);
        out.push_back(std::move(pair));
      }
      if (at_op(",")) {
        advance();
      } else {
        break;
      }
    }
  }

  // --- assignment / loop targets -------------------------------------------

  ExprPtr parse_target_list(std::string_view stop_kw) {
    std::size_t begin = mark();
    ExprPtr first = parse_target_element();
    if (!at_op(",")) return first;
    auto tuple = std::make_unique<Expr>(ExprKind::Tuple);
    tuple->children.push_back(std::move(first));
    while (at_op(",")) {
      advance();
      if (at_kw(stop_kw) || !starts_expression(cur())) break;
      tuple->children.push_back(parse_target_element());
    }
    close(*tuple, begin);
    return tuple;
  }

  ExprPtr parse_target_element() {
    if (at_op("*")) {
      std::size_t begin = mark();
      advance();
      auto node = std::make_unique<Expr>(ExprKind::Starred);
      node->children.push_back(parse_target_element());
      close(*node, begin);
      return node;
    }
    ExprPtr expr = parse_primary(false);
    validate_target(*expr);
    return expr;
  }

  void validate_target(const Expr& expr) {
    switch (expr.kind) {
      case ExprKind::Name:
      case ExprKind::Attribute:
      case ExprKind::Subscript:
        return;
      case ExprKind::Starred:
      case ExprKind::Tuple:
      case ExprKind::List:
        for (const auto& child : expr.children) validate_target(*child);
        return;
      default:
        raise("cannot assign to this expression", toks_[expr.tok_begin].line);
    }
  }

  const std::vector<Token>& toks_;
  std::size_t i_ = 0;
  std::size_t last_ = 0;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens) {
  ParseResult result;
  if (tokens.empty() || tokens.back().kind != TokenKind::EndOfFile) {
    result.error = "token stream is missing its end marker";
    return result;
  }
  try {
    Parser parser(tokens);
    result.module = parser.parse_module();
    result.ok = true;
  } catch (const ParseError& e) {
    result.error = e.message.empty() ? "invalid syntax" : e.message;
    result.error_line = e.line;
  }
  return result;
}

}  // namespace typecorpus::py
