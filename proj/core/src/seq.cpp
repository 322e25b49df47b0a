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

#include "typecorpus/seq.hpp"

#include <map>
#include <memory>
#include <set>

#include "typecorpus/extract.hpp"

namespace typecorpus {
namespace {

using py::Expr;
using py::ExprKind;
using py::StmtKind;
using py::StmtList;
using py::Token;
using py::TokenKind;

enum class ScopeKind { Module, Function, Lambda, Comprehension, Class };

struct Scope {
  ScopeKind kind;
  std::size_t begin = 0;
  std::size_t end = 0;  // token interval [begin, end)
  Scope* parent = nullptr;
  std::map<std::string, std::string> bindings;  // name -> type or ""
  std::set<std::string> globals;
  std::set<std::string> nonlocals;
  std::vector<std::unique_ptr<Scope>> children;

  bool contains(std::size_t idx) const { return idx >= begin && idx < end; }
};

// Inserts a binding; a later non-empty type refines an earlier untyped one.
void bind(Scope& scope, const std::string& name, const std::string& type) {
  auto [it, inserted] = scope.bindings.emplace(name, type);
  if (!inserted && !type.empty()) it->second = type;
}

void bind_target_names(Scope& scope, const Expr& target) {
  switch (target.kind) {
    case ExprKind::Name:
      bind(scope, target.str, "");
      return;
    case ExprKind::Tuple:
    case ExprKind::List:
      for (const auto& child : target.children) bind_target_names(scope, *child);
      return;
    case ExprKind::Starred:
      if (!target.children.empty()) bind_target_names(scope, *target.children[0]);
      return;
    default:
      return;
  }
}

void bind_pattern_names(Scope& scope, const Expr& pattern) {
  switch (pattern.kind) {
    case ExprKind::Name:
      if (pattern.str != "_") bind(scope, pattern.str, "");
      return;
    case ExprKind::MatchAs:
      if (!pattern.str.empty() && pattern.str != "_") {
        bind(scope, pattern.str, "");
      }
      for (const auto& child : pattern.children) bind_pattern_names(scope, *child);
      return;
    case ExprKind::Tuple:
    case ExprKind::List:
    case ExprKind::Starred:
    case ExprKind::Dict:
    case ExprKind::DictPair:
      for (const auto& child : pattern.children) bind_pattern_names(scope, *child);
      return;
    case ExprKind::Call:
      for (std::size_t i = 1; i < pattern.children.size(); ++i) {
        bind_pattern_names(scope, *pattern.children[i]);
      }
      return;
    case ExprKind::Keyword:
      for (const auto& child : pattern.children) bind_pattern_names(scope, *child);
      return;
    default:
      return;
  }
}

class ScopeBuilder {
 public:
  explicit ScopeBuilder(const std::vector<Token>& tokens) : tokens_(tokens) {}

  std::unique_ptr<Scope> build(const py::Module& module) {
    auto root = std::make_unique<Scope>();
    root->kind = ScopeKind::Module;
    root->begin = 0;
    root->end = tokens_.size();
    walk_block(module.body, *root);
    return root;
  }

  // Token index of each function name at its definition site -> ret_type.
  // Recorded directly because a method's name binds in the class scope,
  // which is invisible from inside the def itself.
  const std::map<std::size_t, std::string>& def_site_types() const {
    return def_site_types_;
  }

 private:
  Scope& child_scope(Scope& parent, ScopeKind kind, std::size_t begin,
                     std::size_t end) {
    auto node = std::make_unique<Scope>();
    node->kind = kind;
    node->begin = begin;
    node->end = end;
    node->parent = &parent;
    parent.children.push_back(std::move(node));
    return *parent.children.back();
  }

  // The nearest scope a walrus assignment may bind in.
  Scope& binding_home(Scope& scope) {
    Scope* home = &scope;
    while (home->kind == ScopeKind::Comprehension && home->parent) {
      home = home->parent;
    }
    return *home;
  }

  void walk_expr(const Expr& expr, Scope& scope) {
    switch (expr.kind) {
      case ExprKind::NamedExpr: {
        if (!expr.children.empty() && expr.children[0]->kind == ExprKind::Name) {
          bind(binding_home(scope), expr.children[0]->str, "");
        }
        if (expr.children.size() > 1) walk_expr(*expr.children[1], scope);
        return;
      }
      case ExprKind::Lambda: {
        Scope& inner =
            child_scope(scope, ScopeKind::Lambda, expr.tok_begin, expr.tok_end);
        for (std::size_t i = 0; i + 1 < expr.children.size(); ++i) {
          const Expr& param = *expr.children[i];
          bind(inner, param.str, "");
          for (const auto& def : param.children) walk_expr(*def, scope);
        }
        if (!expr.children.empty()) {
          walk_expr(*expr.children.back(), inner);
        }
        return;
      }
      case ExprKind::ListComp:
      case ExprKind::SetComp:
      case ExprKind::DictComp:
      case ExprKind::GeneratorExp: {
        Scope& inner = child_scope(scope, ScopeKind::Comprehension,
                                   expr.tok_begin, expr.tok_end);
        for (const auto& child : expr.children) {
          if (child->kind == ExprKind::Comprehension) {
            if (!child->children.empty()) {
              bind_target_names(inner, *child->children[0]);
            }
            for (std::size_t i = 1; i < child->children.size(); ++i) {
              walk_expr(*child->children[i], inner);
            }
          } else {
            walk_expr(*child, inner);
          }
        }
        return;
      }
      default:
        for (const auto& child : expr.children) walk_expr(*child, scope);
        return;
    }
  }

  void walk_optional(const py::ExprPtr& expr, Scope& scope) {
    if (expr) walk_expr(*expr, scope);
  }

  void walk_block(const StmtList& body, Scope& scope) {
    for (const auto& stmt : body) walk_stmt(*stmt, scope);
  }

  void walk_stmt(const py::Stmt& stmt, Scope& scope) {
    switch (stmt.kind) {
      case StmtKind::FunctionDef: {
        const auto& def = py::as<py::FunctionDefStmt>(stmt);
        const std::string ret_type =
            def.returns ? annotation_text(tokens_, *def.returns) : "";
        bind(scope, def.name, ret_type);
        if (!ret_type.empty()) def_site_types_[def.name_tok] = ret_type;
        for (const auto& decorator : def.decorators) {
          walk_expr(*decorator, scope);
        }
        Scope& inner = child_scope(scope, ScopeKind::Function, stmt.tok_begin,
                                   stmt.tok_end);
        for (const auto& param : def.params) {
          bind(inner, param.name,
               param.annotation ? annotation_text(tokens_, *param.annotation)
                                : "");
          walk_optional(param.default_value, inner);
        }
        walk_block(def.body, inner);
        return;
      }
      case StmtKind::ClassDef: {
        const auto& def = py::as<py::ClassDefStmt>(stmt);
        bind(scope, def.name, "");
        for (const auto& decorator : def.decorators) {
          walk_expr(*decorator, scope);
        }
        Scope& inner =
            child_scope(scope, ScopeKind::Class, stmt.tok_begin, stmt.tok_end);
        for (const auto& base : def.bases) walk_expr(*base, inner);
        walk_block(def.body, inner);
        return;
      }
      case StmtKind::Return:
        walk_optional(py::as<py::ReturnStmt>(stmt).value, scope);
        return;
      case StmtKind::Delete:
        for (const auto& target : py::as<py::DeleteStmt>(stmt).targets) {
          walk_expr(*target, scope);
        }
        return;
      case StmtKind::Assign: {
        const auto& assign = py::as<py::AssignStmt>(stmt);
        for (const auto& target : assign.targets) {
          bind_target_names(scope, *target);
          walk_expr(*target, scope);
        }
        walk_optional(assign.value, scope);
        return;
      }
      case StmtKind::AugAssign: {
        const auto& assign = py::as<py::AugAssignStmt>(stmt);
        if (assign.target && assign.target->kind == ExprKind::Name) {
          bind(scope, assign.target->str, "");
        }
        walk_optional(assign.target, scope);
        walk_optional(assign.value, scope);
        return;
      }
      case StmtKind::AnnAssign: {
        const auto& assign = py::as<py::AnnAssignStmt>(stmt);
        if (assign.target && assign.target->kind == ExprKind::Name) {
          bind(scope, assign.target->str,
               annotation_text(tokens_, *assign.annotation));
        } else {
          walk_optional(assign.target, scope);
        }
        walk_optional(assign.value, scope);
        return;
      }
      case StmtKind::For: {
        const auto& loop = py::as<py::ForStmt>(stmt);
        bind_target_names(scope, *loop.target);
        walk_optional(loop.iter, scope);
        walk_block(loop.body, scope);
        walk_block(loop.orelse, scope);
        return;
      }
      case StmtKind::While: {
        const auto& loop = py::as<py::WhileStmt>(stmt);
        walk_optional(loop.test, scope);
        walk_block(loop.body, scope);
        walk_block(loop.orelse, scope);
        return;
      }
      case StmtKind::If: {
        const auto& branch = py::as<py::IfStmt>(stmt);
        walk_optional(branch.test, scope);
        walk_block(branch.body, scope);
        walk_block(branch.orelse, scope);
        return;
      }
      case StmtKind::With: {
        const auto& with = py::as<py::WithStmt>(stmt);
        for (const auto& item : with.items) {
          walk_optional(item.context, scope);
          if (item.target) bind_target_names(scope, *item.target);
        }
        walk_block(with.body, scope);
        return;
      }
      case StmtKind::Match: {
        const auto& match = py::as<py::MatchStmt>(stmt);
        walk_optional(match.subject, scope);
        for (const auto& match_case : match.cases) {
          if (match_case.pattern) bind_pattern_names(scope, *match_case.pattern);
          walk_optional(match_case.guard, scope);
          walk_block(match_case.body, scope);
        }
        return;
      }
      case StmtKind::Raise: {
        const auto& raise = py::as<py::RaiseStmt>(stmt);
        walk_optional(raise.exc, scope);
        walk_optional(raise.cause, scope);
        return;
      }
      case StmtKind::Try: {
        const auto& trial = py::as<py::TryStmt>(stmt);
        walk_block(trial.body, scope);
        for (const auto& handler : trial.handlers) {
          walk_optional(handler.type, scope);
          if (!handler.name.empty()) bind(scope, handler.name, "");
          walk_block(handler.body, scope);
        }
        walk_block(trial.orelse, scope);
        walk_block(trial.finalbody, scope);
        return;
      }
      case StmtKind::Assert: {
        const auto& check = py::as<py::AssertStmt>(stmt);
        walk_optional(check.test, scope);
        walk_optional(check.message, scope);
        return;
      }
      case StmtKind::Import: {
        for (const auto& alias : py::as<py::ImportStmt>(stmt).names) {
          std::string name = alias.asname;
          if (name.empty()) {
            const auto dot = alias.name.find('.');
            name = dot == std::string::npos ? alias.name
                                            : alias.name.substr(0, dot);
          }
          bind(scope, name, "");
        }
        return;
      }
      case StmtKind::ImportFrom: {
        for (const auto& alias : py::as<py::ImportFromStmt>(stmt).names) {
          if (alias.name == "*") continue;
          bind(scope, alias.asname.empty() ? alias.name : alias.asname, "");
        }
        return;
      }
      case StmtKind::Global:
        for (const auto& name : py::as<py::GlobalStmt>(stmt).names) {
          scope.globals.insert(name);
        }
        return;
      case StmtKind::Nonlocal:
        for (const auto& name : py::as<py::NonlocalStmt>(stmt).names) {
          scope.nonlocals.insert(name);
        }
        return;
      case StmtKind::ExprStmt:
        walk_optional(py::as<py::ExprStmtNode>(stmt).value, scope);
        return;
      default:
        return;
    }
  }

  const std::vector<Token>& tokens_;
  std::map<std::size_t, std::string> def_site_types_;
};

const Scope* innermost_scope(const Scope& scope, std::size_t idx) {
  for (const auto& child : scope.children) {
    if (child->contains(idx)) return innermost_scope(*child, idx);
  }
  return &scope;
}

const Scope* module_scope_of(const Scope* scope) {
  while (scope->parent) scope = scope->parent;
  return scope;
}

std::string resolve_name(const Scope* innermost, const std::string& name) {
  const Scope* scope = innermost;
  bool at_innermost = true;
  while (scope) {
    // Class scopes are invisible to code nested inside them.
    if (scope->kind == ScopeKind::Class && !at_innermost) {
      scope = scope->parent;
      continue;
    }
    if (scope->globals.count(name)) {
      const Scope* module = module_scope_of(scope);
      auto it = module->bindings.find(name);
      return it != module->bindings.end() ? it->second : "";
    }
    if (scope->nonlocals.count(name)) {
      at_innermost = false;
      scope = scope->parent;
      continue;
    }
    auto it = scope->bindings.find(name);
    if (it != scope->bindings.end()) return it->second;
    at_innermost = false;
    scope = scope->parent;
  }
  return "";
}

std::string strip_spaces(std::string text) {
  std::erase(text, ' ');
  return text;
}

}  // namespace

std::vector<NormalizedToken> normalize_tokens(const std::vector<Token>& tokens) {
  std::vector<NormalizedToken> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    switch (tok.kind) {
      case TokenKind::Comment:
      case TokenKind::Newline:
      case TokenKind::Indent:
      case TokenKind::Dedent:
      case TokenKind::EndOfFile:
        break;
      case TokenKind::String:
        out.push_back({"[string]", i, false});
        break;
      case TokenKind::Number:
        out.push_back({"[number]", i, false});
        break;
      case TokenKind::Name:
        out.push_back({tok.text, i, true});
        break;
      default:
        out.push_back({tok.text, i, false});
        break;
    }
  }
  // Collapse a literal [ string ] / [ number ] triple into one placeholder so
  // normalization is idempotent over its own rendered output.
  std::vector<NormalizedToken> merged;
  merged.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i + 2 < out.size() && out[i].text == "[" &&
        (out[i + 1].text == "string" || out[i + 1].text == "number") &&
        out[i + 1].identifier && out[i + 2].text == "]") {
      merged.push_back({"[" + out[i + 1].text + "]", out[i].token_index, false});
      i += 2;
      continue;
    }
    merged.push_back(out[i]);
  }
  return merged;
}

TokenSequencePair align_types(const py::Module& module,
                              const std::vector<Token>& tokens) {
  const std::vector<NormalizedToken> normalized = normalize_tokens(tokens);
  ScopeBuilder builder(tokens);
  const std::unique_ptr<Scope> root = builder.build(module);
  const std::map<std::size_t, std::string>& def_sites = builder.def_site_types();

  // Identifier tokens directly preceded by '.' are attribute accesses, not
  // scope lookups.
  std::set<std::size_t> attribute_tokens;
  {
    std::size_t prev_meaningful = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      if (tok.kind == TokenKind::Comment || tok.kind == TokenKind::Newline ||
          tok.kind == TokenKind::Indent || tok.kind == TokenKind::Dedent) {
        continue;
      }
      if (tok.kind == TokenKind::Name && prev_meaningful < tokens.size() &&
          tokens[prev_meaningful].is_op(".")) {
        attribute_tokens.insert(i);
      }
      prev_meaningful = i;
    }
  }

  TokenSequencePair pair;
  pair.untyped_seq.reserve(normalized.size());
  pair.typed_seq.reserve(normalized.size());
  for (const NormalizedToken& entry : normalized) {
    pair.untyped_seq.push_back(entry.text);
    std::string type;
    if (entry.identifier && !attribute_tokens.count(entry.token_index)) {
      const auto def_site = def_sites.find(entry.token_index);
      if (def_site != def_sites.end()) {
        type = strip_spaces(def_site->second);
      } else {
        const Scope* scope = innermost_scope(*root, entry.token_index);
        type = strip_spaces(resolve_name(scope, entry.text));
      }
    }
    pair.typed_seq.push_back(type.empty() ? "0" : type);
  }
  return pair;
}

std::string join_sequence(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& tok : tokens) {
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

}  // namespace typecorpus
