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

#ifndef TYPECORPUS_PYAST_HPP_
#define TYPECORPUS_PYAST_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace typecorpus::py {

// Token-span base for every node. [tok_begin, tok_end) indexes into the
// token stream the parser consumed; structural tokens (NEWLINE, INDENT,
// DEDENT) that merely terminate a statement are excluded from the span.
struct Span {
  std::size_t tok_begin = 0;
  std::size_t tok_end = 0;
};

// ---------------------------------------------------------------------------
// Expressions: one generic node with a kind tag. Extraction only needs to
// distinguish binding shapes (Name/Tuple/List/Starred/Attribute/Subscript),
// constants, and scope-creating forms (Lambda, comprehensions).
// ---------------------------------------------------------------------------

enum class ExprKind {
  Name,
  Attribute,      // children: {value}; str = attribute name
  Subscript,      // children: {value, index...}
  Call,           // children: {func, arg...}; Keyword/Starred wrap fancy args
  Keyword,        // children: {value}; str = keyword name
  Tuple,          // children: elements
  List,
  Set,
  Dict,           // children: DictPair / DoubleStarred
  DictPair,       // children: {key, value}
  Starred,        // children: {value}
  DoubleStarred,  // children: {value}
  Constant,       // str = token text of the first literal token
  BoolOp,         // str = "and"/"or"
  BinOp,          // str = operator text
  UnaryOp,        // str = operator text; children: {operand}
  Compare,        // children: {left, right...}
  IfExp,          // children: {body, test, orelse}
  Lambda,         // children: params then body (body is always last)
  NamedExpr,      // children: {target, value}
  Await,          // children: {value}
  Yield,          // children: {value?}
  YieldFrom,      // children: {value}
  ListComp,       // children: {element, Comprehension...}
  SetComp,
  DictComp,       // children: {DictPair, Comprehension...}
  GeneratorExp,
  Comprehension,  // children: {target, iter, if-condition...}
  Slice,          // children: any present bounds, structure not retained
  MatchAs,        // children: {pattern}; str = capture name
};

enum class ConstKind { String, Number, NameConst, Ellipsis };

struct Expr : Span {
  ExprKind kind;
  std::string str;
  ConstKind const_kind = ConstKind::String;
  bool is_async = false;  // Comprehension only
  std::vector<std::unique_ptr<Expr>> children;

  explicit Expr(ExprKind k) : kind(k) {}
};

using ExprPtr = std::unique_ptr<Expr>;

// ---------------------------------------------------------------------------
// Statements.
// ---------------------------------------------------------------------------

enum class StmtKind {
  FunctionDef,
  ClassDef,
  Return,
  Delete,
  Assign,
  AugAssign,
  AnnAssign,
  For,
  While,
  If,
  With,
  Match,
  Raise,
  Try,
  Assert,
  Import,
  ImportFrom,
  Global,
  Nonlocal,
  ExprStmt,
  Pass,
  Break,
  Continue,
};

struct Stmt : Span {
  StmtKind kind;
  explicit Stmt(StmtKind k) : kind(k) {}
  virtual ~Stmt() = default;
};

using StmtPtr = std::unique_ptr<Stmt>;
using StmtList = std::vector<StmtPtr>;

enum class ParamKind { Normal, PosOnly, KeywordOnly, VarArg, KwArg };

struct Param {
  std::string name;
  std::size_t name_tok = 0;
  ParamKind kind = ParamKind::Normal;
  ExprPtr annotation;     // null when unannotated
  ExprPtr default_value;  // null when required
};

struct FunctionDefStmt : Stmt {
  FunctionDefStmt() : Stmt(StmtKind::FunctionDef) {}
  bool is_async = false;
  std::string name;
  std::size_t name_tok = 0;
  std::vector<ExprPtr> decorators;  // spans precede tok_begin
  std::vector<Param> params;
  ExprPtr returns;  // null when unannotated
  StmtList body;
};

struct ClassDefStmt : Stmt {
  ClassDefStmt() : Stmt(StmtKind::ClassDef) {}
  std::string name;
  std::size_t name_tok = 0;
  std::vector<ExprPtr> decorators;
  std::vector<ExprPtr> bases;  // includes keyword arguments (metaclass=...)
  StmtList body;
};

struct ReturnStmt : Stmt {
  ReturnStmt() : Stmt(StmtKind::Return) {}
  ExprPtr value;  // null for bare return
};

struct DeleteStmt : Stmt {
  DeleteStmt() : Stmt(StmtKind::Delete) {}
  std::vector<ExprPtr> targets;
};

struct AssignStmt : Stmt {
  AssignStmt() : Stmt(StmtKind::Assign) {}
  std::vector<ExprPtr> targets;  // a = b = value has two targets
  ExprPtr value;
};

struct AugAssignStmt : Stmt {
  AugAssignStmt() : Stmt(StmtKind::AugAssign) {}
  ExprPtr target;
  std::string op;
  ExprPtr value;
};

struct AnnAssignStmt : Stmt {
  AnnAssignStmt() : Stmt(StmtKind::AnnAssign) {}
  ExprPtr target;
  ExprPtr annotation;
  ExprPtr value;  // null for a bare declaration
};

struct ForStmt : Stmt {
  ForStmt() : Stmt(StmtKind::For) {}
  bool is_async = false;
  ExprPtr target;
  ExprPtr iter;
  StmtList body;
  StmtList orelse;
};

struct WhileStmt : Stmt {
  WhileStmt() : Stmt(StmtKind::While) {}
  ExprPtr test;
  StmtList body;
  StmtList orelse;
};

struct IfStmt : Stmt {
  IfStmt() : Stmt(StmtKind::If) {}
  ExprPtr test;
  StmtList body;
  StmtList orelse;  // an elif chain nests another IfStmt here
};

struct WithItem {
  ExprPtr context;
  ExprPtr target;  // null without 'as'
};

struct WithStmt : Stmt {
  WithStmt() : Stmt(StmtKind::With) {}
  bool is_async = false;
  std::vector<WithItem> items;
  StmtList body;
};

struct MatchCase {
  ExprPtr pattern;
  ExprPtr guard;  // null without 'if'
  StmtList body;
};

struct MatchStmt : Stmt {
  MatchStmt() : Stmt(StmtKind::Match) {}
  ExprPtr subject;
  std::vector<MatchCase> cases;
};

struct RaiseStmt : Stmt {
  RaiseStmt() : Stmt(StmtKind::Raise) {}
  ExprPtr exc;    // null for bare raise
  ExprPtr cause;  // null without 'from'
};

struct ExceptHandler : Span {
  ExprPtr type;  // null for bare except
  std::string name;
  std::size_t name_tok = 0;
  bool is_star = false;
  StmtList body;
};

struct TryStmt : Stmt {
  TryStmt() : Stmt(StmtKind::Try) {}
  StmtList body;
  std::vector<ExceptHandler> handlers;
  StmtList orelse;
  StmtList finalbody;
};

struct AssertStmt : Stmt {
  AssertStmt() : Stmt(StmtKind::Assert) {}
  ExprPtr test;
  ExprPtr message;
};

struct ImportAlias {
  std::string name;    // dotted path, or "*" for a star import
  std::string asname;  // empty without 'as'
};

struct ImportStmt : Stmt {
  ImportStmt() : Stmt(StmtKind::Import) {}
  std::vector<ImportAlias> names;
};

struct ImportFromStmt : Stmt {
  ImportFromStmt() : Stmt(StmtKind::ImportFrom) {}
  std::string module;  // empty for purely relative imports
  int level = 0;       // number of leading dots
  std::vector<ImportAlias> names;
};

struct GlobalStmt : Stmt {
  GlobalStmt() : Stmt(StmtKind::Global) {}
  std::vector<std::string> names;
};

struct NonlocalStmt : Stmt {
  NonlocalStmt() : Stmt(StmtKind::Nonlocal) {}
  std::vector<std::string> names;
};

struct ExprStmtNode : Stmt {
  ExprStmtNode() : Stmt(StmtKind::ExprStmt) {}
  ExprPtr value;
};

struct SimpleStmt : Stmt {  // pass / break / continue
  explicit SimpleStmt(StmtKind k) : Stmt(k) {}
};

struct Module {
  StmtList body;
};

template <typename T>
const T& as(const Stmt& s) {
  return static_cast<const T&>(s);
}

}  // namespace typecorpus::py

#endif  // TYPECORPUS_PYAST_HPP_
