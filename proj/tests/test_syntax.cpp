#include <doctest.h>

#include "revcat/generator.hpp"
#include "revcat/parser.hpp"
#include "revcat/syntax.hpp"
#include "revcat/util.hpp"

using namespace revcat::lang;

TEST_CASE("smallest program parses") {
  Program p = parseProgram("enum one = { o }  main = o");
  CHECK(p.enums.size() == 2);  // builtin unit + one
  REQUIRE(p.main.has_value());
  CHECK((*p.main)->kind == Term::Kind::Val);
  CHECK((*p.main)->value->kind == Value::Kind::Const);
  CHECK((*p.main)->value->enumName == "one");
  CHECK((*p.main)->value->constIndex == 0);
}

TEST_CASE("builtin unit is predeclared") {
  Program p = parseProgram("main = tt");
  REQUIRE(p.main.has_value());
  CHECK(valueEqual((*p.main)->value, ttValue()));
}

TEST_CASE("redeclaring unit identically is a no-op") {
  Program p = parseProgram("enum unit = { tt }  main = tt");
  CHECK(p.enums.size() == 1);
  REQUIRE(p.main.has_value());
  CHECK((*p.main)->value->enumName == "unit");
  CHECK((*p.main)->value->constIndex == 0);
}

TEST_CASE("swap iso parses with two clauses") {
  Program p = parseProgram(
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }");
  REQUIRE(p.defs.size() == 1);
  const IsoDef& d = p.defs[0];
  CHECK(d.name == "sw");
  REQUIRE(d.iso.clauses.size() == 2);
  CHECK(d.iso.clauses[0].lhs->kind == Value::Kind::InjL);
  CHECK(d.iso.clauses[0].rhs->kind == Value::Kind::InjR);
  CHECK(typeEqual(d.type.lhs, sumType(unitType(), unitType())));
}

TEST_CASE("unclosed pair is a syntax error at end of input") {
  CHECK_THROWS_AS(parseProgram("main = (tt, "), ParseError);
  try {
    parseProgram("main = (tt, ");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parseProgram("enum a = { c }\nmain = )");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 8);
  }
}

TEST_CASE("type precedence: * binds tighter than +") {
  Program scope = emptyProgram();
  TypePtr t = parseType("unit + unit * unit", scope);
  REQUIRE(t->kind == ValueType::Kind::Sum);
  CHECK(t->right->kind == ValueType::Kind::Prod);
  CHECK(printType(t) == "unit + unit * unit");

  TypePtr u = parseType("(unit + unit) * unit", scope);
  REQUIRE(u->kind == ValueType::Kind::Prod);
  CHECK(printType(u) == "(unit + unit) * unit");
}

TEST_CASE("printTerm renders pairs and injections directly") {
  CHECK(printTerm(valTerm(pairValue(ttValue(), ttValue()))) == "(tt, tt)");
  CHECK(printValue(injl(varValue("x"))) == "inl x");
}

TEST_CASE("freeVars: first-occurrence order, duplicates preserved") {
  ValuePtr v = pairValue(varValue("x"), injl(varValue("y")));
  CHECK(freeVars(v) == std::vector<std::string>{"x", "y"});
  CHECK(freeVars(ttValue()).empty());
  ValuePtr dup = pairValue(varValue("x"), varValue("x"));
  CHECK(freeVars(dup) == std::vector<std::string>{"x", "x"});
}

TEST_CASE("identifiers resolve to enum constants before variables") {
  Program p = parseProgram("enum b = { k0, k1 }  iso f : b <-> b { | k0 <-> k1 | k1 <-> k0 }");
  CHECK(p.defs[0].iso.clauses[0].lhs->kind == Value::Kind::Const);
  Program q = parseProgram("iso f : unit <-> unit { | z <-> z }");
  CHECK(q.defs[0].iso.clauses[0].lhs->kind == Value::Kind::Var);
}

TEST_CASE("named iso application parses; anonymous iso application parses") {
  Program p = parseProgram(
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }\n"
      "main = sw (inl tt)");
  REQUIRE(p.main.has_value());
  CHECK((*p.main)->kind == Term::Kind::App);
  CHECK((*p.main)->isoName == "sw");

  Program q = parseProgram("main = { | x <-> x } tt");
  CHECK((*q.main)->kind == Term::Kind::App);
  CHECK((*q.main)->isoName.empty());
  REQUIRE((*q.main)->iso != nullptr);
}

TEST_CASE("program print/parse round-trip on a handwritten program") {
  Program p = parseProgram(
      "enum b3 = { m0, m1, m2 }\n"
      "iso rot : b3 <-> b3 { | m0 <-> m1 | m1 <-> m2 | m2 <-> m0 }\n"
      "iso sw : unit + b3 <-> b3 + unit { | inl x <-> inr x | inr y <-> inl y }\n"
      "main = sw (inl tt)\n");
  Program q = parseProgram(printProgram(p));
  CHECK(programEqual(p, q));
}

TEST_CASE("round-trip on generated programs") {
  ProgramGenerator gen(7, GenBounds{});
  for (int i = 0; i < 1000; ++i) {
    auto p = gen.next();
    REQUIRE(p.has_value());
    Program q = parseProgram(printProgram(*p));
    CHECK(programEqual(*p, q));
  }
}

TEST_CASE("generator stream is empty for degenerate bounds") {
  ProgramGenerator gen(0, GenBounds{0, 0, 0});
  CHECK(!gen.next().has_value());
}

TEST_CASE("duplicate enum constants are rejected") {
  CHECK_THROWS_AS(parseProgram("enum a = { c, c }"), ParseError);
  CHECK_THROWS_AS(parseProgram("enum a = { c }\nenum b = { c }"), ParseError);
  CHECK_THROWS_AS(parseProgram("enum unit = { u }"), ParseError);
}
