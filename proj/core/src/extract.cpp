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

#include "typecorpus/extract.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "typecorpus/docstring.hpp"

namespace typecorpus {
namespace {

using py::ExprKind;
using py::ParamKind;
using py::Span;
using py::StmtKind;
using py::StmtList;
using py::Token;
using py::TokenKind;
using py::decode_string_token;

bool wordlike(char c) {
  const auto u = static_cast<unsigned char>(c);
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') ||
         (u >= '0' && u <= '9') || c == '_' || u >= 0x80;
}

bool structural(const Token& tok) {
  return tok.kind == TokenKind::Newline || tok.kind == TokenKind::Indent ||
         tok.kind == TokenKind::Dedent || tok.kind == TokenKind::Comment;
}

// Collects the plain names bound by an assignment target, descending through
// tuple/list destructuring and starred elements. Attribute and subscript
// targets bind no new name.
void collect_target_names(const py::Expr& target, std::vector<std::string>& out) {
  switch (target.kind) {
    case ExprKind::Name:
      out.push_back(target.str);
      return;
    case ExprKind::Tuple:
    case ExprKind::List:
      for (const auto& child : target.children) collect_target_names(*child, out);
      return;
    case ExprKind::Starred:
      if (!target.children.empty()) collect_target_names(*target.children[0], out);
      return;
    default:
      return;
  }
}

// The name an import statement binds in the module namespace.
std::string bound_import_name(const py::ImportAlias& alias, bool from_import) {
  if (!alias.asname.empty()) return alias.asname;
  if (alias.name == "*") return "*";
  if (from_import) return alias.name;
  const auto dot = alias.name.find('.');
  return dot == std::string::npos ? alias.name : alias.name.substr(0, dot);
}

bool is_window_delimiter(const std::string& op) {
  return op == "(" || op == ")" || op == "[" || op == "]" || op == "{" ||
         op == "}" || op == "," || op == ":" || op == ";";
}

std::string raw_docstring(const StmtList& body, const std::vector<Token>& tokens) {
  if (body.empty() || body[0]->kind != StmtKind::ExprStmt) return "";
  const auto& stmt = py::as<py::ExprStmtNode>(*body[0]);
  if (!stmt.value || stmt.value->kind != ExprKind::Constant ||
      stmt.value->const_kind != py::ConstKind::String) {
    return "";
  }
  std::string out;
  for (std::size_t i = stmt.value->tok_begin;
       i < stmt.value->tok_end && i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::String) {
      out += decode_string_token(tokens[i].text);
    }
  }
  return out;
}

class Extractor {
 public:
  Extractor(const std::vector<Token>& tokens, std::string_view source)
      : tokens_(tokens), source_(source) {}

  ModuleRecord run(const py::Module& module) {
    ModuleRecord record;
    collect_imports(module.body, record.imports);
    walk_block(module.body, /*cls=*/nullptr, &record.variables, record);
    record.classes.assign(std::make_move_iterator(classes_.begin()),
                          std::make_move_iterator(classes_.end()));
    return record;
  }

 private:
  // Walks one statement list. `cls` is the nearest enclosing class record (a
  // method's nested defs still belong to that class); `vars` is the variable
  // map assignments feed (module or class level; null inside functions, whose
  // locals are collected separately).
  void walk_block(const StmtList& body, ClassRecord* cls, OrderedMap* vars,
                  ModuleRecord& record) {
    for (const auto& stmt : body) {
      switch (stmt->kind) {
        case StmtKind::FunctionDef: {
          const auto& def = py::as<py::FunctionDefStmt>(*stmt);
          auto& sink = cls ? cls->funcs : record.funcs;
          sink.push_back(build_function(def));
          walk_block(def.body, cls, nullptr, record);
          break;
        }
        case StmtKind::ClassDef: {
          const auto& def = py::as<py::ClassDefStmt>(*stmt);
          classes_.emplace_back();
          ClassRecord& rec = classes_.back();
          rec.name = def.name;
          walk_block(def.body, &rec, &rec.variables, record);
          break;
        }
        case StmtKind::Assign: {
          if (!vars) break;
          const auto& assign = py::as<py::AssignStmt>(*stmt);
          std::vector<std::string> names;
          for (const auto& target : assign.targets) {
            collect_target_names(*target, names);
          }
          for (const auto& name : names) vars->put(name, "");
          break;
        }
        case StmtKind::AnnAssign: {
          if (!vars) break;
          const auto& assign = py::as<py::AnnAssignStmt>(*stmt);
          if (assign.target && assign.target->kind == ExprKind::Name) {
            vars->put(assign.target->str,
                      annotation_text(tokens_, *assign.annotation));
          }
          break;
        }
        case StmtKind::For: {
          const auto& loop = py::as<py::ForStmt>(*stmt);
          walk_block(loop.body, cls, vars, record);
          walk_block(loop.orelse, cls, vars, record);
          break;
        }
        case StmtKind::While: {
          const auto& loop = py::as<py::WhileStmt>(*stmt);
          walk_block(loop.body, cls, vars, record);
          walk_block(loop.orelse, cls, vars, record);
          break;
        }
        case StmtKind::If: {
          const auto& branch = py::as<py::IfStmt>(*stmt);
          walk_block(branch.body, cls, vars, record);
          walk_block(branch.orelse, cls, vars, record);
          break;
        }
        case StmtKind::With: {
          const auto& with = py::as<py::WithStmt>(*stmt);
          walk_block(with.body, cls, vars, record);
          break;
        }
        case StmtKind::Try: {
          const auto& trial = py::as<py::TryStmt>(*stmt);
          walk_block(trial.body, cls, vars, record);
          for (const auto& handler : trial.handlers) {
            walk_block(handler.body, cls, vars, record);
          }
          walk_block(trial.orelse, cls, vars, record);
          walk_block(trial.finalbody, cls, vars, record);
          break;
        }
        case StmtKind::Match: {
          const auto& match = py::as<py::MatchStmt>(*stmt);
          for (const auto& match_case : match.cases) {
            walk_block(match_case.body, cls, vars, record);
          }
          break;
        }
        default:
          break;
      }
    }
  }

  void collect_imports(const StmtList& body, std::vector<std::string>& out) {
    for (const auto& stmt : body) {
      switch (stmt->kind) {
        case StmtKind::Import: {
          const auto& imp = py::as<py::ImportStmt>(*stmt);
          for (const auto& alias : imp.names) {
            add_import(bound_import_name(alias, false), out);
          }
          break;
        }
        case StmtKind::ImportFrom: {
          const auto& imp = py::as<py::ImportFromStmt>(*stmt);
          for (const auto& alias : imp.names) {
            add_import(bound_import_name(alias, true), out);
          }
          break;
        }
        case StmtKind::FunctionDef:
          collect_imports(py::as<py::FunctionDefStmt>(*stmt).body, out);
          break;
        case StmtKind::ClassDef:
          collect_imports(py::as<py::ClassDefStmt>(*stmt).body, out);
          break;
        case StmtKind::For: {
          const auto& loop = py::as<py::ForStmt>(*stmt);
          collect_imports(loop.body, out);
          collect_imports(loop.orelse, out);
          break;
        }
        case StmtKind::While: {
          const auto& loop = py::as<py::WhileStmt>(*stmt);
          collect_imports(loop.body, out);
          collect_imports(loop.orelse, out);
          break;
        }
        case StmtKind::If: {
          const auto& branch = py::as<py::IfStmt>(*stmt);
          collect_imports(branch.body, out);
          collect_imports(branch.orelse, out);
          break;
        }
        case StmtKind::With:
          collect_imports(py::as<py::WithStmt>(*stmt).body, out);
          break;
        case StmtKind::Try: {
          const auto& trial = py::as<py::TryStmt>(*stmt);
          collect_imports(trial.body, out);
          for (const auto& handler : trial.handlers) {
            collect_imports(handler.body, out);
          }
          collect_imports(trial.orelse, out);
          collect_imports(trial.finalbody, out);
          break;
        }
        case StmtKind::Match: {
          const auto& match = py::as<py::MatchStmt>(*stmt);
          for (const auto& match_case : match.cases) {
            collect_imports(match_case.body, out);
          }
          break;
        }
        default:
          break;
      }
    }
  }

  void add_import(const std::string& name, std::vector<std::string>& out) {
    if (seen_imports_.insert(name).second) out.push_back(name);
  }

  FunctionRecord build_function(const py::FunctionDefStmt& def) {
    FunctionRecord record;
    record.name = def.name;
    for (const auto& param : def.params) {
      record.params.append(
          param.name,
          param.annotation ? annotation_text(tokens_, *param.annotation) : "");
    }
    if (def.returns) record.ret_type = annotation_text(tokens_, *def.returns);

    std::set<std::string> externals;
    collect_external_names(def.body, externals);

    std::vector<Span> windows;
    walk_function_body(def.body, externals, record, windows);

    for (const auto& param : def.params) {
      std::vector<OccurrenceWindow> hits;
      for (const Span& window : windows) {
        if (!mentions_name(window, param.name)) continue;
        hits.push_back(window_tokens(window));
      }
      record.params_occur.emplace_back(param.name, std::move(hits));
    }

    record.docstring = parse_docstring(raw_docstring(def.body, tokens_));
    return record;
  }

  // Gathers names declared global/nonlocal anywhere in the function body
  // (outside nested defs); assignments to them are not locals.
  void collect_external_names(const StmtList& body, std::set<std::string>& out) {
    for (const auto& stmt : body) {
      switch (stmt->kind) {
        case StmtKind::Global:
          for (const auto& name : py::as<py::GlobalStmt>(*stmt).names) {
            out.insert(name);
          }
          break;
        case StmtKind::Nonlocal:
          for (const auto& name : py::as<py::NonlocalStmt>(*stmt).names) {
            out.insert(name);
          }
          break;
        case StmtKind::For: {
          const auto& loop = py::as<py::ForStmt>(*stmt);
          collect_external_names(loop.body, out);
          collect_external_names(loop.orelse, out);
          break;
        }
        case StmtKind::While: {
          const auto& loop = py::as<py::WhileStmt>(*stmt);
          collect_external_names(loop.body, out);
          collect_external_names(loop.orelse, out);
          break;
        }
        case StmtKind::If: {
          const auto& branch = py::as<py::IfStmt>(*stmt);
          collect_external_names(branch.body, out);
          collect_external_names(branch.orelse, out);
          break;
        }
        case StmtKind::With:
          collect_external_names(py::as<py::WithStmt>(*stmt).body, out);
          break;
        case StmtKind::Try: {
          const auto& trial = py::as<py::TryStmt>(*stmt);
          collect_external_names(trial.body, out);
          for (const auto& handler : trial.handlers) {
            collect_external_names(handler.body, out);
          }
          collect_external_names(trial.orelse, out);
          collect_external_names(trial.finalbody, out);
          break;
        }
        case StmtKind::Match: {
          const auto& match = py::as<py::MatchStmt>(*stmt);
          for (const auto& match_case : match.cases) {
            collect_external_names(match_case.body, out);
          }
          break;
        }
        default:
          break;
      }
    }
  }

  // Collects locals, return statements, and simple-statement windows from a
  // function body. Stops at nested def/class boundaries: those produce their
  // own records.
  void walk_function_body(const StmtList& body,
                          const std::set<std::string>& externals,
                          FunctionRecord& record, std::vector<Span>& windows) {
    for (const auto& stmt : body) {
      switch (stmt->kind) {
        case StmtKind::FunctionDef:
        case StmtKind::ClassDef:
          break;
        case StmtKind::Return: {
          const auto& ret = py::as<py::ReturnStmt>(*stmt);
          if (ret.value) {
            record.ret_exprs.push_back(token_slice(source_, tokens_, *stmt));
          }
          windows.push_back(*stmt);
          break;
        }
        case StmtKind::Assign: {
          const auto& assign = py::as<py::AssignStmt>(*stmt);
          std::vector<std::string> names;
          for (const auto& target : assign.targets) {
            collect_target_names(*target, names);
          }
          for (const auto& name : names) {
            if (!externals.count(name)) record.variables.put(name, "");
          }
          windows.push_back(*stmt);
          break;
        }
        case StmtKind::AnnAssign: {
          const auto& assign = py::as<py::AnnAssignStmt>(*stmt);
          if (assign.target && assign.target->kind == ExprKind::Name &&
              !externals.count(assign.target->str)) {
            record.variables.put(assign.target->str,
                                 annotation_text(tokens_, *assign.annotation));
          }
          windows.push_back(*stmt);
          break;
        }
        case StmtKind::For: {
          const auto& loop = py::as<py::ForStmt>(*stmt);
          walk_function_body(loop.body, externals, record, windows);
          walk_function_body(loop.orelse, externals, record, windows);
          break;
        }
        case StmtKind::While: {
          const auto& loop = py::as<py::WhileStmt>(*stmt);
          walk_function_body(loop.body, externals, record, windows);
          walk_function_body(loop.orelse, externals, record, windows);
          break;
        }
        case StmtKind::If: {
          const auto& branch = py::as<py::IfStmt>(*stmt);
          walk_function_body(branch.body, externals, record, windows);
          walk_function_body(branch.orelse, externals, record, windows);
          break;
        }
        case StmtKind::With: {
          const auto& with = py::as<py::WithStmt>(*stmt);
          walk_function_body(with.body, externals, record, windows);
          break;
        }
        case StmtKind::Try: {
          const auto& trial = py::as<py::TryStmt>(*stmt);
          walk_function_body(trial.body, externals, record, windows);
          for (const auto& handler : trial.handlers) {
            walk_function_body(handler.body, externals, record, windows);
          }
          walk_function_body(trial.orelse, externals, record, windows);
          walk_function_body(trial.finalbody, externals, record, windows);
          break;
        }
        case StmtKind::Match: {
          const auto& match = py::as<py::MatchStmt>(*stmt);
          for (const auto& match_case : match.cases) {
            walk_function_body(match_case.body, externals, record, windows);
          }
          break;
        }
        default:
          windows.push_back(*stmt);
          break;
      }
    }
  }

  // True when the statement uses `name` as a plain identifier. A Name after
  // '.' is an attribute of some other value, not a parameter usage.
  bool mentions_name(const Span& span, const std::string& name) const {
    std::size_t prev = tokens_.size();
    for (std::size_t i = span.tok_begin; i < span.tok_end && i < tokens_.size();
         ++i) {
      if (structural(tokens_[i])) continue;
      if (tokens_[i].kind == TokenKind::Name && tokens_[i].text == name &&
          !(prev < tokens_.size() && tokens_[prev].is_op("."))) {
        return true;
      }
      prev = i;
    }
    return false;
  }

  OccurrenceWindow window_tokens(const Span& span) const {
    OccurrenceWindow out;
    for (std::size_t i = span.tok_begin; i < span.tok_end && i < tokens_.size();
         ++i) {
      const Token& tok = tokens_[i];
      if (structural(tok) || tok.kind == TokenKind::String ||
          tok.kind == TokenKind::Number) {
        continue;
      }
      if (tok.kind == TokenKind::Op && is_window_delimiter(tok.text)) continue;
      out.push_back(tok.text);
    }
    return out;
  }

  const std::vector<Token>& tokens_;
  std::string_view source_;
  std::deque<ClassRecord> classes_;
  std::set<std::string> seen_imports_;
};

}  // namespace

std::string annotation_text(const std::vector<py::Token>& tokens, py::Span span) {
  std::string out;
  for (std::size_t i = span.tok_begin; i < span.tok_end && i < tokens.size();
       ++i) {
    const Token& tok = tokens[i];
    if (structural(tok)) continue;
    if (!out.empty() && wordlike(out.back()) && !tok.text.empty() &&
        wordlike(tok.text.front())) {
      out += ' ';
    }
    out += tok.text;
  }
  return out;
}

std::string token_slice(std::string_view source, const std::vector<py::Token>& tokens,
                        py::Span span) {
  if (span.tok_begin >= span.tok_end || span.tok_begin >= tokens.size()) {
    return "";
  }
  const std::size_t last = std::min(span.tok_end, tokens.size()) - 1;
  const std::size_t begin = tokens[span.tok_begin].begin;
  const std::size_t end = std::max(begin, tokens[last].end);
  return std::string(source.substr(begin, end - begin));
}

ModuleRecord extract_module(const py::Module& module,
                            const std::vector<py::Token>& tokens,
                            std::string_view source) {
  return Extractor(tokens, source).run(module);
}

}  // namespace typecorpus
