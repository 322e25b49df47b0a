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

#include <string>
#include <vector>

#include <doctest.h>

#include "support/fixtures.hpp"
#include "typecorpus/pylex.hpp"

namespace typecorpus::py {
namespace {

struct Parsed {
  std::vector<Token> tokens;
  ParseResult result;
};

Parsed parse_ok(std::string_view source) {
  LexResult lexed = lex(source);
  REQUIRE_MESSAGE(lexed.ok, lexed.error);
  Parsed out{std::move(lexed.tokens), {}};
  out.result = parse(out.tokens);
  REQUIRE_MESSAGE(out.result.ok, out.result.error);
  return out;
}

ParseResult parse_of(std::string_view source) {
  LexResult lexed = lex(source);
  if (!lexed.ok) {
    ParseResult fail;
    fail.error = lexed.error;
    fail.error_line = lexed.error_line;
    return fail;
  }
  return parse(lexed.tokens);
}

// Verbatim source slice of a node, reconstructed through its token span.
std::string slice(const Parsed& parsed, const Span& span,
                  std::string_view source) {
  const Token& first = parsed.tokens[span.tok_begin];
  const Token& last = parsed.tokens[span.tok_end - 1];
  return std::string(source.substr(first.begin, last.end - first.begin));
}

TEST_CASE("parse builds a function definition with params and return type") {
  const std::string source =
      "def add(a: int, b: int = 0) -> int:\n    return a + b\n";
  const Parsed parsed = parse_ok(source);
  REQUIRE(parsed.result.module->body.size() == 1);
  const auto& def = as<FunctionDefStmt>(*parsed.result.module->body[0]);
  CHECK(def.name == "add");
  CHECK_FALSE(def.is_async);
  REQUIRE(def.params.size() == 2);
  CHECK(def.params[0].name == "a");
  CHECK(def.params[0].annotation != nullptr);
  CHECK(def.params[1].default_value != nullptr);
  REQUIRE(def.returns != nullptr);
  CHECK(slice(parsed, *def.returns, source) == "int");
  REQUIRE(def.body.size() == 1);
  CHECK(def.body[0]->kind == StmtKind::Return);
}

TEST_CASE("parse records exact token spans for statements") {
  const std::string source = "x = 1\ndef f():\n    pass\ny = 2\n";
  const Parsed parsed = parse_ok(source);
  REQUIRE(parsed.result.module->body.size() == 3);
  CHECK(slice(parsed, *parsed.result.module->body[0], source) == "x = 1");
  // A suite extends through the NEWLINE that closes its last statement, so a
  // block statement's slice carries the trailing newline; a simple statement
  // ends before its own NEWLINE token.
  CHECK(slice(parsed, *parsed.result.module->body[1], source) ==
        "def f():\n    pass\n");
  CHECK(slice(parsed, *parsed.result.module->body[2], source) == "y = 2");
}

TEST_CASE("parse handles classes with bases, decorators, and methods") {
  const std::string source =
      "@register\nclass Loader(Base, metaclass=Meta):\n"
      "    field: int = 0\n"
      "    def load(self):\n        return self.field\n";
  const Parsed parsed = parse_ok(source);
  const auto& cls = as<ClassDefStmt>(*parsed.result.module->body[0]);
  CHECK(cls.name == "Loader");
  CHECK(cls.decorators.size() == 1);
  CHECK(cls.bases.size() == 2);
  REQUIRE(cls.body.size() == 2);
  CHECK(cls.body[0]->kind == StmtKind::AnnAssign);
  CHECK(cls.body[1]->kind == StmtKind::FunctionDef);
}

TEST_CASE("parse distinguishes assignment flavors") {
  const Parsed parsed = parse_ok(
      "a = 1\nb = c = 2\nd += 3\ne: int = 4\nf: str\n(g, h) = (1, 2)\n");
  const auto& body = parsed.result.module->body;
  REQUIRE(body.size() == 6);
  CHECK(body[0]->kind == StmtKind::Assign);
  CHECK(as<AssignStmt>(*body[1]).targets.size() == 2);
  CHECK(body[2]->kind == StmtKind::AugAssign);
  CHECK(body[3]->kind == StmtKind::AnnAssign);
  CHECK(as<AnnAssignStmt>(*body[4]).value == nullptr);
  CHECK(as<AssignStmt>(*body[5]).targets[0]->kind == ExprKind::Tuple);
}

TEST_CASE("parse handles import statement shapes") {
  const Parsed parsed = parse_ok(
      "import os\nimport os.path as osp\nfrom typing import List, Dict as D\n"
      "from . import sibling\nfrom ..pkg import *\n");
  const auto& body = parsed.result.module->body;
  CHECK(as<ImportStmt>(*body[0]).names[0].name == "os");
  CHECK(as<ImportStmt>(*body[1]).names[0].asname == "osp");
  const auto& from1 = as<ImportFromStmt>(*body[2]);
  CHECK(from1.module == "typing");
  REQUIRE(from1.names.size() == 2);
  CHECK(from1.names[1].asname == "D");
  const auto& from2 = as<ImportFromStmt>(*body[3]);
  CHECK(from2.level == 1);
  CHECK(from2.module.empty());
  const auto& from3 = as<ImportFromStmt>(*body[4]);
  CHECK(from3.level == 2);
  CHECK(from3.names[0].name == "*");
}

TEST_CASE("parse handles compound statements") {
  const std::string source =
      "for i in range(3):\n    pass\nelse:\n    pass\n"
      "while x:\n    break\n"
      "if a:\n    pass\nelif b:\n    pass\nelse:\n    pass\n"
      "with open(p) as fh, lock:\n    pass\n"
      "try:\n    pass\nexcept ValueError as exc:\n    pass\n"
      "except Exception:\n    pass\nelse:\n    pass\nfinally:\n    pass\n";
  const Parsed parsed = parse_ok(source);
  const auto& body = parsed.result.module->body;
  REQUIRE(body.size() == 5);
  CHECK_FALSE(as<ForStmt>(*body[0]).orelse.empty());
  CHECK(body[1]->kind == StmtKind::While);
  const auto& branch = as<IfStmt>(*body[2]);
  REQUIRE(branch.orelse.size() == 1);
  CHECK(branch.orelse[0]->kind == StmtKind::If);  // elif nests
  CHECK(as<WithStmt>(*body[3]).items.size() == 2);
  const auto& guarded = as<TryStmt>(*body[4]);
  CHECK(guarded.handlers.size() == 2);
  CHECK(guarded.handlers[0].name == "exc");
  CHECK_FALSE(guarded.orelse.empty());
  CHECK_FALSE(guarded.finalbody.empty());
}

TEST_CASE("parse handles modern syntax") {
  SUBCASE("walrus operator") {
    const Parsed parsed = parse_ok("if (n := len(xs)) > 3:\n    pass\n");
    CHECK(parsed.result.module->body[0]->kind == StmtKind::If);
  }
  SUBCASE("match statement") {
    const Parsed parsed = parse_ok(
        "match command:\n"
        "    case ['go', direction]:\n        pass\n"
        "    case Point(x=0, y=0):\n        pass\n"
        "    case _:\n        pass\n");
    CHECK(as<MatchStmt>(*parsed.result.module->body[0]).cases.size() == 3);
  }
  SUBCASE("async constructs") {
    const Parsed parsed = parse_ok(
        "async def poll(q):\n"
        "    async with q.lock:\n"
        "        async for item in q:\n"
        "            await handle(item)\n");
    const auto& def = as<FunctionDefStmt>(*parsed.result.module->body[0]);
    CHECK(def.is_async);
  }
  SUBCASE("lambda, ternary, comprehensions, star args") {
    parse_ok(
        "f = lambda x, *args, **kw: x if x else 0\n"
        "squares = [i * i for i in range(10) if i % 2 == 0]\n"
        "pairs = {k: v for k, v in items}\n"
        "gen = (c for c in text)\n"
        "result = call(*args, **kwargs, flag=True)\n");
  }
  SUBCASE("decorated async method with complex annotation") {
    parse_ok(
        "class A:\n"
        "    @retry(times=3)\n"
        "    async def pull(self, spec: Dict[str, List[int]]) -> 'A':\n"
        "        return self\n");
  }
  SUBCASE("parameter kind markers") {
    const Parsed parsed =
        parse_ok("def f(a, /, b, *, c, **rest):\n    pass\n");
    const auto& def = as<FunctionDefStmt>(*parsed.result.module->body[0]);
    REQUIRE(def.params.size() == 4);
    CHECK(def.params[0].kind == ParamKind::PosOnly);
    CHECK(def.params[1].kind == ParamKind::Normal);
    CHECK(def.params[2].kind == ParamKind::KeywordOnly);
    CHECK(def.params[3].kind == ParamKind::KwArg);
  }
}

TEST_CASE("parse rejects Python-2 constructs with the offending line") {
  SUBCASE("print statement") {
    const ParseResult result = parse_of("x = 1\nprint \"value:\", x\n");
    CHECK_FALSE(result.ok);
    CHECK(result.error_line == 2);
  }
  SUBCASE("except with comma") {
    const ParseResult result =
        parse_of("try:\n    pass\nexcept ValueError, e:\n    pass\n");
    CHECK_FALSE(result.ok);
    CHECK(result.error_line == 3);
  }
  SUBCASE("exec statement") {
    CHECK_FALSE(parse_of("exec 'code'\n").ok);
  }
  SUBCASE("generated python2 fixtures fail") {
    for (std::uint64_t i = 0; i < 6; ++i) {
      CHECK_FALSE(parse_of(testing::python2_module_source(i)).ok);
    }
  }
}

TEST_CASE("parse rejects plain syntax errors") {
  CHECK_FALSE(parse_of("def f(:\n    pass\n").ok);
  CHECK_FALSE(parse_of("x = = 1\n").ok);
  CHECK_FALSE(parse_of("class :\n    pass\n").ok);
}

TEST_CASE("parse accepts every generated fixture module") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const std::string source = testing::fixture_module_source(i);
    const LexResult lexed = lex(source);
    REQUIRE_MESSAGE(lexed.ok, "fixture " << i << ": " << lexed.error);
    const ParseResult result = parse(lexed.tokens);
    REQUIRE_MESSAGE(result.ok,
                    "fixture " << i << " line " << result.error_line << ": "
                               << result.error);
  }
}

TEST_CASE("parse covers the whole token stream with statement spans") {
  const std::string source = testing::fixture_module_source(7);
  const Parsed parsed = parse_ok(source);
  std::size_t last_end = 0;
  for (const auto& stmt : parsed.result.module->body) {
    CHECK(stmt->tok_begin >= last_end);
    CHECK(stmt->tok_begin < stmt->tok_end);
    last_end = stmt->tok_end;
  }
  CHECK(last_end <= parsed.tokens.size());
}

}  // namespace
}  // namespace typecorpus::py
