#include <doctest.h>

#include "revcat/eval.hpp"
#include "revcat/generator.hpp"
#include "revcat/parser.hpp"
#include "revcat/typing.hpp"

using namespace revcat::lang;

namespace {

Program swapProgram() {
  return parseProgram(
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }");
}

TermPtr swapApp(const Program& p, TermPtr arg) {
  const IsoDef* sw = p.findDef("sw");
  return appTerm(std::make_shared<Iso>(sw->iso), "sw", sw->type, std::move(arg));
}

IsoPtr partialInl() {
  // {| inl x <-> x } : unit + unit <-> unit
  Iso iso;
  iso.clauses.push_back(Clause{injl(varValue("x")), varValue("x")});
  return std::make_shared<Iso>(iso);
}

}  // namespace

TEST_CASE("matchValue: variable, clash, pair") {
  auto sigma = matchValue(varValue("x"), injl(ttValue()));
  REQUIRE(sigma.has_value());
  CHECK(valueEqual(sigma->bind.at("x"), injl(ttValue())));

  CHECK(!matchValue(injl(varValue("x")), injr(ttValue())).has_value());

  auto tau = matchValue(pairValue(varValue("x"), varValue("y")),
                        pairValue(ttValue(), injl(ttValue())));
  REQUIRE(tau.has_value());
  CHECK(valueEqual(tau->bind.at("x"), ttValue()));
  CHECK(valueEqual(tau->bind.at("y"), injl(ttValue())));
}

TEST_CASE("matchValue throws on non-linear patterns") {
  CHECK_THROWS_AS(matchValue(pairValue(varValue("x"), varValue("x")),
                             pairValue(ttValue(), ttValue())),
                  std::logic_error);
}

TEST_CASE("substitute follows the five clauses") {
  Valuation sigma;
  sigma.bind["x"] = ttValue();
  CHECK(valueEqual(substitute(sigma, injr(varValue("x"))), injr(ttValue())));
  CHECK(valueEqual(substitute(Valuation{}, ttValue()), ttValue()));
  Valuation tau;
  tau.bind["x"] = ttValue();
  tau.bind["y"] = injl(ttValue());
  CHECK(valueEqual(substitute(tau, pairValue(varValue("y"), varValue("x"))),
                   pairValue(injl(ttValue()), ttValue())));
}

TEST_CASE("stepTerm reduces a redex by the matching clause") {
  Program p = swapProgram();
  EvalOutcome out = stepTerm(swapApp(p, valTerm(injl(ttValue()))));
  REQUIRE(out.kind == EvalOutcome::Kind::Reduced);
  CHECK(termEqual(out.term, valTerm(injr(ttValue()))));
}

TEST_CASE("stepTerm: values do not reduce; no clause means stuck") {
  EvalOutcome v = stepTerm(valTerm(ttValue()));
  CHECK(v.kind == EvalOutcome::Kind::Value);

  TermPtr stuckTerm = appTerm(partialInl(), valTerm(injr(ttValue())));
  EvalOutcome s = stepTerm(stuckTerm);
  CHECK(s.kind == EvalOutcome::Kind::Stuck);
}

TEST_CASE("evalTerm: swap twice is the identity") {
  Program p = swapProgram();
  EvalResult r = evalTerm(swapApp(p, swapApp(p, valTerm(injl(ttValue())))));
  REQUIRE(!r.stuck);
  CHECK(valueEqual(r.value, injl(ttValue())));
  CHECK(r.steps == 2);
}

TEST_CASE("evalTerm: stuck propagates from the inner application") {
  TermPtr inner = appTerm(partialInl(), valTerm(injr(ttValue())));
  Program p = swapProgram();
  EvalResult r = evalTerm(swapApp(p, inner));
  CHECK(r.stuck);
}

TEST_CASE("invertIso swaps clause sides and is an involution") {
  Program p = swapProgram();
  Iso inv = invertIso(p.defs[0].iso);
  CHECK(valueEqual(inv.clauses[0].lhs, injr(varValue("x"))));
  CHECK(valueEqual(inv.clauses[0].rhs, injl(varValue("x"))));
  CHECK(isoEqual(invertIso(inv), p.defs[0].iso));

  Iso partial;
  partial.clauses.push_back(Clause{injl(varValue("x")), varValue("x")});
  Iso pinv = invertIso(partial);
  CHECK(valueEqual(pinv.clauses[0].lhs, varValue("x")));
  CHECK(valueEqual(pinv.clauses[0].rhs, injl(varValue("x"))));
}

TEST_CASE("inverting a well-typed iso flips its type") {
  Program p = parseProgram("iso f : unit + unit <-> unit { | inl x <-> x }");
  IsoDef inv = invertDef(p.defs[0]);
  CHECK(checkIso(p, inv.iso, inv.type.lhs, inv.type.rhs).empty());
  CHECK(typeEqual(inv.type.lhs, unitType()));
}

TEST_CASE("enumerateClosedValues: counts and canonical order") {
  Program p = parseProgram("enum b3 = { m0, m1, m2 }");
  CHECK(enumerateClosedValues(p, unitType()).size() == 1);

  auto uu = enumerateClosedValues(p, sumType(unitType(), unitType()));
  REQUIRE(uu.size() == 2);
  CHECK(valueEqual(uu[0], injl(ttValue())));
  CHECK(valueEqual(uu[1], injr(ttValue())));

  CHECK(enumerateClosedValues(p, prodType(sumType(unitType(), unitType()), unitType())).size() == 2);
  CHECK(enumerateClosedValues(p, enumType("b3")).size() == 3);
  // |a (+) b| = |a| + |b|, |a (*) b| = |a| * |b|
  CHECK(enumerateClosedValues(p, sumType(enumType("b3"), sumType(unitType(), unitType()))).size() ==
        5);
  CHECK(enumerateClosedValues(p, prodType(enumType("b3"), sumType(unitType(), unitType()))).size() ==
        6);
}

TEST_CASE("generated programs typecheck and their isos have orthogonal patterns") {
  ProgramGenerator gen(11, GenBounds{2, 2, 2});
  for (int i = 0; i < 50; ++i) {
    auto p = gen.next();
    REQUIRE(p.has_value());
    CHECK(checkProgram(*p).ok());
    for (const auto& d : p->defs)
      for (size_t a = 0; a < d.iso.clauses.size(); ++a)
        for (size_t b = a + 1; b < d.iso.clauses.size(); ++b)
          CHECK(checkOrthogonal(d.iso.clauses[a].lhs, d.iso.clauses[b].lhs));
  }
}

TEST_CASE("metatheory on generated programs") {
  // Subject reduction, termination with the #App step bound, determinism of
  // clause selection, and the inversion round-trip, on one seeded stream.
  ProgramGenerator gen(42, GenBounds{});
  int inversionsChecked = 0;
  for (int i = 0; i < 200; ++i) {
    auto p = gen.next();
    REQUIRE(p.has_value());
    CheckedProgram cp = checkProgram(*p);
    REQUIRE(cp.ok());
    REQUIRE(cp.mainType.has_value());
    const TypePtr& a = *cp.mainType;

    // subject reduction along the whole reduction sequence
    TermPtr cur = *cp.program.main;
    int steps = 0;
    const int bound = countApps(cur);
    for (;;) {
      EvalOutcome out = stepTerm(cur);
      if (out.kind != EvalOutcome::Kind::Reduced) break;
      cur = out.term;
      ++steps;
      REQUIRE(steps <= bound);
      CHECK(checkTerm(cp.program, cur, a).empty());
    }

    // determinism: at most one clause of any def matches any closed value
    for (const auto& d : cp.program.defs) {
      for (const auto& v : enumerateClosedValues(cp.program, d.type.lhs)) {
        int matches = 0;
        for (const auto& c : d.iso.clauses)
          if (matchValue(c.lhs, v)) ++matches;
        CHECK(matches <= 1);
      }
    }

    // inversion: w = eval(iso v) a value implies eval(iso^-1 w) = v
    for (const auto& d : cp.program.defs) {
      for (const auto& v : enumerateClosedValues(cp.program, d.type.lhs)) {
        TermPtr app = appTerm(std::make_shared<Iso>(d.iso), d.name, d.type, valTerm(v));
        EvalResult fwd = evalTerm(app);
        if (fwd.stuck) continue;
        IsoDef inv = invertDef(d);
        TermPtr back =
            appTerm(std::make_shared<Iso>(inv.iso), d.name, inv.type, valTerm(fwd.value));
        EvalResult bwd = evalTerm(back);
        REQUIRE(!bwd.stuck);
        CHECK(valueEqual(bwd.value, v));
        ++inversionsChecked;
      }
    }
  }
  CHECK(inversionsChecked >= 500);
}
