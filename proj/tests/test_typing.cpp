#include <doctest.h>

#include <set>

#include "revcat/eval.hpp"
#include "revcat/parser.hpp"
#include "revcat/typing.hpp"

using namespace revcat::lang;

namespace {

Program scopeWithB2() {
  return parseProgram("enum b2 = { k0, k1 }");
}

bool hasKind(const TypeErrors& errors, TypeError::Kind k) {
  for (const auto& e : errors)
    if (e.kind == k) return true;
  return false;
}

}  // namespace

TEST_CASE("inferPatternContext splits pairs disjointly") {
  Program p = emptyProgram();
  TypePtr ty = prodType(unitType(), sumType(unitType(), unitType()));
  CtxResult r = inferPatternContext(p, pairValue(varValue("x"), varValue("y")), ty);
  REQUIRE(r.ok());
  REQUIRE(r.ctx->size() == 2);
  CHECK(typeEqual(*r.ctx->find("x"), unitType()));
  CHECK(typeEqual(*r.ctx->find("y"), sumType(unitType(), unitType())));
}

TEST_CASE("inferPatternContext: injection rule") {
  Program p = emptyProgram();
  CtxResult r = inferPatternContext(p, injl(varValue("x")), sumType(unitType(), unitType()));
  REQUIRE(r.ok());
  REQUIRE(r.ctx->size() == 1);
  CHECK(typeEqual(*r.ctx->find("x"), unitType()));
}

TEST_CASE("inferPatternContext rejects non-linear patterns") {
  Program p = emptyProgram();
  CtxResult r = inferPatternContext(p, pairValue(varValue("x"), varValue("x")),
                                    prodType(unitType(), unitType()));
  CHECK(!r.ok());
  CHECK(hasKind(r.errors, TypeError::Kind::DuplicateVar));
}

TEST_CASE("inferPatternContext reports shape and constant errors") {
  Program p = scopeWithB2();
  CHECK(hasKind(inferPatternContext(p, injl(varValue("x")), unitType()).errors,
                TypeError::Kind::ShapeMismatch));
  // a constant checked against the wrong enum
  CHECK(hasKind(inferPatternContext(p, constValue("b2", "k0", 0), unitType()).errors,
                TypeError::Kind::ShapeMismatch));
  // a constant that does not exist at all
  CHECK(hasKind(inferPatternContext(p, constValue("nope", "z", 0), enumType("nope")).errors,
                TypeError::Kind::UnknownConstant));
}

TEST_CASE("checkValue consumes the context exactly") {
  Program p = emptyProgram();
  TypingContext ctx;
  ctx.insert("x", unitType());
  CHECK(checkValue(p, ctx, injr(varValue("x")), sumType(unitType(), unitType())).empty());
  // unused variable
  CHECK(hasKind(checkValue(p, ctx, ttValue(), unitType()), TypeError::Kind::ContextMismatch));
  // missing binding
  CHECK(hasKind(checkValue(p, TypingContext{}, varValue("x"), unitType()),
                TypeError::Kind::UnboundVar));
}

TEST_CASE("orthogonality rules") {
  CHECK(checkOrthogonal(injl(varValue("x")), injr(varValue("y"))));
  CHECK(checkOrthogonal(injr(varValue("x")), injl(varValue("y"))));
  CHECK(!checkOrthogonal(varValue("x"), varValue("y")));
  // congruence under matching injections
  CHECK(checkOrthogonal(injl(injl(varValue("x"))), injl(injr(varValue("y")))));
  CHECK(!checkOrthogonal(injl(varValue("x")), injl(varValue("y"))));
  // pair rule on either component
  CHECK(checkOrthogonal(pairValue(varValue("z"), injl(varValue("x"))),
                        pairValue(varValue("w"), injr(varValue("y")))));
  CHECK(checkOrthogonal(pairValue(injl(varValue("x")), varValue("z")),
                        pairValue(injr(varValue("y")), varValue("w"))));
  CHECK(!checkOrthogonal(pairValue(varValue("z"), varValue("x")),
                         pairValue(varValue("w"), varValue("y"))));
  // distinct constants of the same enum
  Program p = scopeWithB2();
  ValuePtr k0 = constValue("b2", "k0", 0), k1 = constValue("b2", "k1", 1);
  CHECK(checkOrthogonal(k0, k1));
  CHECK(!checkOrthogonal(k0, k0));
}

TEST_CASE("orthogonality is symmetric on enumerated pattern pairs") {
  Program p = scopeWithB2();
  for (const TypePtr& ty :
       {sumType(unitType(), enumType("b2")), prodType(enumType("b2"), sumType(unitType(), unitType()))}) {
    auto pats = enumeratePatterns(p, ty, 5);
    for (const auto& a : pats)
      for (const auto& b : pats) CHECK(checkOrthogonal(a, b) == checkOrthogonal(b, a));
  }
}

TEST_CASE("orthogonal patterns have no common matching value") {
  // cross-oracle: the syntactic judgment against the evaluator's matcher,
  // exhaustively over the finite value space
  Program p = scopeWithB2();
  int checkedPairs = 0;
  for (const TypePtr& ty :
       {sumType(unitType(), unitType()), sumType(enumType("b2"), enumType("b2")),
        prodType(enumType("b2"), enumType("b2")),
        prodType(sumType(unitType(), unitType()), enumType("b2"))}) {
    auto pats = enumeratePatterns(p, ty, 5);
    auto values = enumerateClosedValues(p, ty);
    for (const auto& a : pats) {
      for (const auto& b : pats) {
        if (!checkOrthogonal(a, b)) continue;
        ++checkedPairs;
        for (const auto& v : values) {
          bool both = matchValue(a, v).has_value() && matchValue(b, v).has_value();
          CHECK(!both);
        }
      }
    }
  }
  CHECK(checkedPairs > 100);
}

TEST_CASE("converse gap: non-orthogonal pairs with disjoint matchers (recorded)") {
  // Not asserted either way; this documents how tight the syntactic judgment
  // is on small types.
  Program p = scopeWithB2();
  int found = 0;
  std::string example;
  for (const TypePtr& ty :
       {sumType(unitType(), unitType()), prodType(enumType("b2"), enumType("b2"))}) {
    auto pats = enumeratePatterns(p, ty, 5);
    auto values = enumerateClosedValues(p, ty);
    for (const auto& a : pats) {
      for (const auto& b : pats) {
        if (checkOrthogonal(a, b)) continue;
        bool disjoint = true;
        for (const auto& v : values)
          if (matchValue(a, v) && matchValue(b, v)) {
            disjoint = false;
            break;
          }
        if (disjoint) {
          ++found;
          if (example.empty()) example = printValue(a) + "  vs  " + printValue(b);
        }
      }
    }
  }
  MESSAGE("non-orthogonal pairs with disjoint matchers: ", found,
          (example.empty() ? "" : ("; e.g. " + example)));
}

TEST_CASE("checkIso accepts the swap iso") {
  Program p = parseProgram(
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }");
  TypePtr uu = sumType(unitType(), unitType());
  CHECK(checkIso(p, p.defs[0].iso, uu, uu).empty());
}

TEST_CASE("checkIso allows non-exhaustive isos") {
  Program p = parseProgram("iso f : unit + unit <-> unit { | inl x <-> x }");
  CHECK(checkIso(p, p.defs[0].iso, sumType(unitType(), unitType()), unitType()).empty());
}

TEST_CASE("checkIso reports overlapping patterns with indices and side") {
  Program p = emptyProgram();
  Iso iso;
  iso.clauses.push_back(Clause{injl(varValue("x")), ttValue()});
  iso.clauses.push_back(Clause{injl(varValue("y")), ttValue()});
  TypeErrors errors = checkIso(p, iso, sumType(unitType(), unitType()), unitType());
  bool left = false, right = false;
  for (const auto& e : errors) {
    if (e.kind != TypeError::Kind::OverlappingPatterns) continue;
    if (e.side == TypeError::Side::Left && e.clauseI == 0 && e.clauseJ == 1) left = true;
    if (e.side == TypeError::Side::Right && e.clauseI == 0 && e.clauseJ == 1) right = true;
  }
  CHECK(left);
  CHECK(right);
}

TEST_CASE("checkIso uses the same context on both sides") {
  // inl x <-> (x, x) duplicates x on the right
  Program p = emptyProgram();
  Iso iso;
  iso.clauses.push_back(Clause{injl(varValue("x")), pairValue(varValue("x"), varValue("x"))});
  TypeErrors errors =
      checkIso(p, iso, sumType(unitType(), unitType()), prodType(unitType(), unitType()));
  CHECK(hasKind(errors, TypeError::Kind::DuplicateVar));
}

TEST_CASE("checkTerm: application, non-closed, and argument clash") {
  Program p = parseProgram(
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }");
  CheckedProgram cp = checkProgram(p);
  REQUIRE(cp.ok());
  TypePtr uu = sumType(unitType(), unitType());
  const IsoDef* sw = cp.program.findDef("sw");

  TermPtr good = appTerm(std::make_shared<Iso>(sw->iso), "sw", sw->type, valTerm(injl(ttValue())));
  CHECK(checkTerm(cp.program, good, uu).empty());

  CHECK(hasKind(checkTerm(cp.program, valTerm(varValue("x")), unitType()),
                TypeError::Kind::NonClosedTerm));

  TermPtr clash = appTerm(std::make_shared<Iso>(sw->iso), "sw", sw->type, valTerm(ttValue()));
  CHECK(hasKind(checkTerm(cp.program, clash, uu), TypeError::Kind::ShapeMismatch));
}

TEST_CASE("checkProgram typechecks whole files and reports per-def errors") {
  Program good = parseProgram(
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }\n"
      "main = sw (sw (inl tt))");
  CHECK(checkProgram(good).ok());

  Program bad = parseProgram("iso f : unit <-> unit { | x <-> tt }");
  CheckedProgram cp = checkProgram(bad);
  CHECK(!cp.ok());
  CHECK(cp.errors[0].where == "f");
}

TEST_CASE("inferPatternContext is deterministic and canonical") {
  Program p = emptyProgram();
  TypePtr ty = prodType(unitType(), prodType(unitType(), unitType()));
  ValuePtr pat = pairValue(varValue("z"), pairValue(varValue("a"), varValue("m")));
  CtxResult r1 = inferPatternContext(p, pat, ty);
  CtxResult r2 = inferPatternContext(p, pat, ty);
  REQUIRE(r1.ok());
  REQUIRE(r2.ok());
  CHECK(contextEqual(*r1.ctx, *r2.ctx));
  // canonical order is lexicographic
  CHECK(r1.ctx->entries[0].first == "a");
  CHECK(r1.ctx->entries[1].first == "m");
  CHECK(r1.ctx->entries[2].first == "z");
}

TEST_CASE("main with ambiguous type reports CannotInfer") {
  Program p = parseProgram("main = inl tt");
  CheckedProgram cp = checkProgram(p);
  CHECK(!cp.ok());
  CHECK(hasKind(cp.errors, TypeError::Kind::CannotInfer));
}
