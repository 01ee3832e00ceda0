// Acceptance suite: runs every acceptance criterion at its stated bounds and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "revcat/denotation.hpp"
#include "revcat/eval.hpp"
#include "revcat/generator.hpp"
#include "revcat/laws.hpp"
#include "revcat/models.hpp"
#include "revcat/nondecomp.hpp"
#include "revcat/parser.hpp"
#include "revcat/typing.hpp"

using namespace revcat;
using namespace revcat::lang;
using cat::Label;
using cat::Mor;
using cat::Obj;

namespace {

struct Ctx {
  std::ostringstream log;
  bool ok = true;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "    FAILED: " << what << "\n";
    }
  }

  void requireLaws(const cat::LawReport& report, const std::string& what) {
    for (const auto& r : report.laws) {
      if (!r.pass()) {
        ok = false;
        log << "    FAILED: " << what << " / " << r.law;
        if (!r.failures.empty())
          log << " e.g. " << r.failures[0].inputs << " lhs=" << r.failures[0].lhs
              << " rhs=" << r.failures[0].rhs;
        log << "\n";
      }
    }
  }

  void note(const std::string& what) { log << "    " << what << "\n"; }
};

Mor pid(const cat::Category& C, const Obj& obj, const std::vector<std::string>& names) {
  std::vector<std::pair<Label, Label>> g;
  for (const auto& n : names) g.emplace_back(Label::atom(n), Label::atom(n));
  return C.morFromGraph(obj, obj, std::move(g));
}

Mor namedMor(const cat::Category& C, const Obj& obj, const std::string& name) {
  for (const auto& m : C.enumerateHom(obj, obj))
    if (C.morToString(m) == name) return m;
  throw std::runtime_error("no morphism named " + name);
}

// ---- criterion 1 ----

void criterion1(Ctx& ctx) {
  ProgramGenerator gen(2026, GenBounds{4, 3, 3});
  int programs = 0, inversions = 0, steps = 0;
  for (int i = 0; i < 500; ++i) {
    auto p = gen.next();
    ctx.require(p.has_value(), "generator produced a program");
    if (!p) return;
    ++programs;
    CheckedProgram cp = checkProgram(*p);
    ctx.require(cp.ok(), "generated program typechecks");
    if (!cp.ok()) continue;
    const TypePtr& a = *cp.mainType;

    // subject reduction + the termination step bound
    TermPtr cur = *cp.program.main;
    const int bound = countApps(cur);
    int taken = 0;
    for (;;) {
      EvalOutcome out = stepTerm(cur);
      if (out.kind != EvalOutcome::Kind::Reduced) break;
      cur = out.term;
      ++taken;
      ++steps;
      if (taken > bound) {
        ctx.require(false, "step count exceeded the #App bound");
        break;
      }
      if (!checkTerm(cp.program, cur, a).empty()) {
        ctx.require(false, "subject reduction failed at " + printTerm(cur));
        break;
      }
    }

    for (const auto& d : cp.program.defs) {
      auto values = enumerateClosedValues(cp.program, d.type.lhs);
      for (const auto& v : values) {
        // determinism: at most one clause matches
        int matches = 0;
        for (const auto& c : d.iso.clauses)
          if (matchValue(c.lhs, v)) ++matches;
        if (matches > 1) ctx.require(false, "two clauses matched " + printValue(v));

        // inversion round-trip
        TermPtr app = appTerm(std::make_shared<Iso>(d.iso), d.name, d.type, valTerm(v));
        EvalResult fwd = evalTerm(app);
        if (fwd.stuck) continue;
        IsoDef inv = invertDef(d);
        TermPtr back =
            appTerm(std::make_shared<Iso>(inv.iso), d.name, inv.type, valTerm(fwd.value));
        EvalResult bwd = evalTerm(back);
        if (bwd.stuck || !valueEqual(bwd.value, v))
          ctx.require(false, "inversion round-trip failed on " + printValue(v));
        ++inversions;
      }
    }
  }
  ctx.require(programs >= 500, "at least 500 generated programs");
  ctx.note("programs=" + std::to_string(programs) + " reductionSteps=" + std::to_string(steps) +
           " inversionRoundTrips=" + std::to_string(inversions));
}

// ---- criterion 2 ----

void criterion2(Ctx& ctx) {
  for (const std::string name : {"pids", "example56", "example513", "subpid"}) {
    cat::SampleOptions options;
    options.exhaustive = true;
    ctx.requireLaws(cat::checkAllLaws(*cat::modelByName(name), options), name + " (exhaustive)");
  }
  for (const std::string name : {"finpinj", "pids-oplus"}) {
    cat::SampleOptions options;
    options.seed = 0;
    options.cases = 1000;
    options.exhaustive = false;
    ctx.requireLaws(cat::checkAllLaws(*cat::modelByName(name), options), name + " (1000 cases)");
  }
}

// ---- criterion 3 ----

void criterion3(Ctx& ctx) {
  auto C = cat::finPInj();
  Obj abc = Obj::atoms({"a", "b", "c"});

  // compatibility verdicts on overlapping partial identities
  Mor f = pid(*C, abc, {"a", "b"});
  Mor g = pid(*C, abc, {"b", "c"});
  Mor h = C->morFromGraph(abc, abc, {{Label::atom("b"), Label::atom("a")},
                                     {Label::atom("c"), Label::atom("c")}});
  ctx.require(inverseCompatible(*C, f, g), "f and g are inverse compatible");
  ctx.require(!restrictionCompatible(*C, f, h), "f and h are not compatible");

  // pids order: X <= Y iff X subset of Y
  auto P = cat::modelByName("pids");
  Obj S = Obj::atoms({"a", "b", "c"});
  for (const auto& x : P->enumerateHom(S, S))
    for (const auto& y : P->enumerateHom(S, S)) {
      bool subset = std::includes(y.graph.begin(), y.graph.end(), x.graph.begin(), x.graph.end(),
                                  [](const auto& p, const auto& q) { return p < q; });
      if (cat::leq(*P, x, y) != subset)
        ctx.require(false, "pids order characterization failed");
    }

  // pids-oplus order: the componentwise characterization
  auto A = cat::modelByName("pids-oplus");
  for (const Obj& obj : {cat::unitObject(), cat::sumOfObjects(cat::unitObject(), cat::unitObject())}) {
    auto hom = A->enumerateHom(obj, obj);
    for (const auto& x : hom)
      for (const auto& y : hom) {
        bool expected = true;
        for (const auto& [src, dst] : x.graph) {
          auto ydst = y.apply(src);
          if (!ydst || !(*ydst == dst) || (x.ann->at(src) & ~y.ann->at(src)) != 0) {
            expected = false;
            break;
          }
        }
        if (cat::leq(*A, x, y) != expected)
          ctx.require(false, "pids-oplus order characterization failed");
      }
  }

  // joins of partial identities and a three-cycle upper bound
  Mor id = C->identity(abc);
  ctx.require(C->join({f, g}, abc, abc) == id, "f v g = id");
  Mor hh = C->morFromGraph(abc, abc, {{Label::atom("a"), Label::atom("b")}});
  Mor kk = C->morFromGraph(abc, abc, {{Label::atom("b"), Label::atom("c")}});
  Mor ll = C->morFromGraph(abc, abc, {{Label::atom("a"), Label::atom("b")},
                                      {Label::atom("b"), Label::atom("c")},
                                      {Label::atom("c"), Label::atom("a")}});
  Mor hk = C->join({hh, kk}, abc, abc);
  ctx.require(hk == C->morFromGraph(abc, abc, {{Label::atom("a"), Label::atom("b")},
                                               {Label::atom("b"), Label::atom("c")}}),
              "h v k = {a->b, b->c}");
  ctx.require(cat::leq(*C, hk, ll), "h v k <= l");
}

// ---- criterion 4 ----

void criterion4(Ctx& ctx) {
  // disjointness composition laws on 1000 seeded disjoint pairs per sampled
  // instance (the
  // exhaustive instances cover every disjoint pair in criterion 2's run)
  for (const std::string name : {"finpinj", "pids-oplus"}) {
    auto C = cat::modelByName(name);
    cat::SampleOptions options;
    options.seed = 4;
    options.cases = 1000;
    options.exhaustive = false;
    cat::Samples s = cat::buildSamples(*C, options);
    ctx.require(s.disjointPairs.size() >= 1000, name + ": 1000 disjoint pairs sampled");
    ctx.requireLaws(cat::checkDisjointnessLemmas(*C, s), name + " disjointness lemmas");
  }
  for (const std::string name : {"pids", "subpid", "example56", "example513"}) {
    auto C = cat::modelByName(name);
    cat::SampleOptions options;
    options.exhaustive = true;
    cat::Samples s = cat::buildSamples(*C, options);
    ctx.requireLaws(cat::checkDisjointnessLemmas(*C, s), name + " disjointness lemmas");
  }

  // image disjointness, exhaustively over all pattern pairs of types with
  // <= 8 closed values
  Program p = parseProgram("enum b3 = { m0, m1, m2 }");
  auto types = sem::typeUniverse(p, 2, 8);
  long long pairs = 0;
  for (const std::string name : {"finpinj", "subpid"}) {
    auto C = cat::modelByName(name);
    sem::DenotationEnv env = sem::DenotationEnv::canonical(C, p);
    cat::LawReport report = sem::checkOrthogonalityLemma(env, types, 64);
    ctx.requireLaws(report, name + " pattern-image disjointness");
    pairs += report.laws[0].cases;
  }
  ctx.note("types=" + std::to_string(types.size()) +
           " orthogonalPairsChecked=" + std::to_string(pairs));
}

// ---- criterion 5 ----

void criterion5(Ctx& ctx) {
  auto e56 = cat::example56();
  Obj abc = Obj::atoms({"a", "b", "c"});
  ctx.require(cat::isWND(*e56, namedMor(*e56, abc, "id")), "example56: id is wnd");
  ctx.require(!cat::isWND(*e56, namedMor(*e56, abc, "f")), "example56: f is not wnd");

  auto e513 = cat::example513();
  Obj ab = Obj::atoms({"a", "b"});
  Mor id513 = e513->identity(ab);
  ctx.require(cat::isLND(*e513, id513), "example513: id is lnd");
  ctx.require(!cat::isSND(*e513, id513), "example513: id is not snd");
  auto below = cat::belowSet(*e513, id513);
  ctx.require(below.size() == 3, "example513: belowSet(id) = {0, f, id}");
  // a chain: 0 < f < id
  Mor zero = e513->zero(ab, ab);
  Mor mid = namedMor(*e513, ab, "f");
  ctx.require(cat::leq(*e513, zero, mid) && cat::leq(*e513, mid, id513) &&
                  !cat::leq(*e513, mid, zero) && !cat::leq(*e513, id513, mid),
              "example513: 0 < f < id");

  auto oplus = cat::modelByName("pids-oplus");
  ctx.require(!cat::isWND(*oplus, oplus->identity(cat::unitObject())),
              "pids-oplus: id_1 is not wnd");

  auto sub = cat::subPIdSOplus();
  Mor subId1 = sub->identity(cat::unitObject());
  ctx.require(cat::isLND(*sub, subId1), "subpid: id_1 is lnd");
  ctx.require(!cat::isSND(*sub, subId1), "subpid: id_1 is not snd");

  // implication chain for every morphism of every enumerable instance
  long long classified = 0;
  for (const auto& name : cat::modelNames()) {
    auto C = cat::modelByName(name);
    for (const auto& a : C->universeObjects())
      for (const auto& b : C->universeObjects()) {
        if (!C->homEnumerable(a, b)) continue;
        for (const auto& hmor : C->enumerateHom(a, b)) {
          cat::DecompClass cls = cat::classify(*C, hmor);  // asserts the chain internally
          if ((cls.snd && !cls.lnd) || (cls.lnd && !cls.wnd))
            ctx.require(false, "implication chain violated in " + name);
          ++classified;
        }
      }
  }
  ctx.note("morphismsClassified=" + std::to_string(classified));
}

// ---- criterion 6 ----

void criterion6(Ctx& ctx) {
  for (const auto& name : cat::modelNames()) {
    auto C = cat::modelByName(name);
    ctx.require(cat::checkConsistency(*C, cat::Flavor::Strong).verdict,
                name + ": strongly consistent");
    ctx.require(cat::checkConsistency(*C, cat::Flavor::Linear).verdict,
                name + ": linearly consistent");
    ctx.requireLaws(cat::verifyTheoremBridge(*C), name + " consistency/pattern-matching entailments");
  }
  auto e56 = cat::example56();
  cat::ConsistencyReport weak = cat::checkConsistency(*e56, cat::Flavor::Weak);
  ctx.require(!weak.verdict, "example56: not weakly consistent");
  ctx.require(weak.counterexample.has_value() &&
                  e56->morToString(weak.counterexample->h) == "id",
              "example56 counterexample has h = id");

  cat::PatternMatchingReport pm = cat::checkPatternMatchingProperty(*e56, cat::Flavor::Weak);
  ctx.require(!pm.verdict, "example56: not weakly pattern-matching");
  if (pm.counterexample) {
    std::string fj = e56->morToString(pm.counterexample->f);
    std::string gj = e56->morToString(pm.counterexample->g);
    ctx.require(e56->morToString(pm.counterexample->composite) == "f" &&
                    e56->morToString(pm.counterexample->h) == "id" &&
                    ((fj == "g" && gj == "h") || (fj == "h" && gj == "g")),
                "example56 counterexample is (g v h).id = f");
  } else {
    ctx.require(false, "example56 pattern-matching counterexample missing");
  }
}

// ---- criterion 7 ----

void criterion7(Ctx& ctx) {
  auto C = cat::finPInj();
  // corpus isos
  Program corpus = parseProgram(
      "enum b3 = { m0, m1, m2 }\n"
      "iso sw : unit + unit <-> unit + unit { | inl x <-> inr x | inr x <-> inl x }\n"
      "iso rot : b3 <-> b3 { | m0 <-> m1 | m1 <-> m2 | m2 <-> m0 }\n"
      "iso part : unit + unit <-> unit { | inl x <-> x }\n"
      "iso dist : b3 * (unit + unit) <-> b3 * unit + b3 * unit "
      "{ | (x, inl y) <-> inl (x, y) | (x, inr y) <-> inr (x, y) }\n"
      "iso idx : b3 * b3 <-> b3 * b3 { | (x, y) <-> (y, x) }\n");
  CheckedProgram checkedCorpus = checkProgram(corpus);
  ctx.require(checkedCorpus.ok(), "corpus program typechecks");
  sem::DenotationEnv env = sem::DenotationEnv::canonical(C, corpus);
  for (const auto& d : corpus.defs) {
    Mor denoted = sem::denoteIso(env, d.iso, d.type.lhs, d.type.rhs);
    Mor oracle = sem::standardModel(env, d.iso, d.type.lhs, d.type.rhs);
    ctx.require(denoted == oracle, "oracle agreement for corpus iso " + d.name);
    Mor inverted = sem::denoteIso(env, invertIso(d.iso), d.type.rhs, d.type.lhs);
    ctx.require(inverted == C->inverse(denoted), "semantic inversion for corpus iso " + d.name);
  }

  // 200 generated isos
  ProgramGenerator gen(7000, GenBounds{});
  int isos = 0;
  while (isos < 200) {
    auto p = gen.next();
    if (!p) break;
    CheckedProgram cp = checkProgram(*p);
    if (!cp.ok()) continue;
    sem::DenotationEnv genv = sem::DenotationEnv::canonical(C, cp.program);
    for (const auto& d : cp.program.defs) {
      Mor denoted = sem::denoteIso(genv, d.iso, d.type.lhs, d.type.rhs);
      Mor oracle = sem::standardModel(genv, d.iso, d.type.lhs, d.type.rhs);
      if (!(denoted == oracle)) ctx.require(false, "oracle agreement for generated iso " + d.name);
      Mor inverted = sem::denoteIso(genv, invertIso(d.iso), d.type.rhs, d.type.lhs);
      if (!(inverted == C->inverse(denoted)))
        ctx.require(false, "semantic inversion for generated iso " + d.name);
      ++isos;
    }
  }
  ctx.require(isos >= 200, "at least 200 generated isos checked");
  ctx.note("generatedIsosChecked=" + std::to_string(isos));
}

// ---- criterion 8 ----

void criterion8(Ctx& ctx) {
  for (const std::string name : {"finpinj", "subpid"}) {
    cat::LawReport report = sem::checkSoundness(cat::modelByName(name), 9090, 500, GenBounds{});
    ctx.requireLaws(report, name + " soundness/substitution");
    long long stepCases = 0, substCases = 0;
    for (const auto& r : report.laws) {
      if (r.law.rfind("soundness:", 0) == 0) stepCases = r.cases;
      if (r.law.rfind("substitution:", 0) == 0) substCases = r.cases;
    }
    ctx.require(stepCases > 500, name + ": soundness exercised across steps");
    ctx.require(substCases > 100, name + ": substitution instances checked");
    ctx.note(name + " stepChecks=" + std::to_string(stepCases) +
             " substitutionInstances=" + std::to_string(substCases));
  }
}

// ---- criterion 9 ----

void criterion9(Ctx& ctx) {
  sem::AdequacyReport report = sem::checkAdequacy(cat::subPIdSOplus(), 7, 4);
  ctx.require(report.preconditionMet, "subpid: id_1 linearly non-decomposable");
  ctx.require(!report.reportOnly, "subpid adequacy runs in asserting mode");
  ctx.require(report.violations.empty(), "adequacy: equivalence iff equal denotation");
  ctx.require(report.strictExtendedDeviations == report.stuckStuckPairs,
              "strict-vs-extended deviations are exactly the stuck/stuck pairs");
  ctx.require(report.stuckStuckPairs > 0, "stuck/stuck pairs occur at size 7");
  ctx.note("types=" + std::to_string(report.types) + " terms=" + std::to_string(report.terms) +
           " pairs=" + std::to_string(report.pairs) +
           " stuckStuck=" + std::to_string(report.stuckStuckPairs));
}

// ---- criterion 10 ----

void criterion10(Ctx& ctx) {
  Program p = emptyProgram();
  auto types = sem::typeUniverse(p, 2, 4);

  sem::ValueClassReport sub = sem::checkValueNonDecomposability(cat::subPIdSOplus(), types);
  ctx.require(sub.preconditionMet, "subpid: precondition met");
  ctx.require(sub.flavor == "linear", "subpid: id_1 classified linear");
  ctx.require(sub.pass(), "subpid: every closed value denotation is lnd");
  ctx.require(sub.valuesChecked > 20, "subpid: values were checked");

  sem::ValueClassReport oplus =
      sem::checkValueNonDecomposability(cat::modelByName("pids-oplus"), types);
  ctx.require(!oplus.preconditionMet, "pids-oplus: reports precondition unmet");
  ctx.require(oplus.valuesChecked == 0, "pids-oplus: no claim is checked");
  ctx.note("subpid valuesChecked=" + std::to_string(sub.valuesChecked));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Ctx&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "language metatheory on 500 generated programs", criterion1},
      {2, "restriction/inverse/join/zero laws (exhaustive + 1000 seeded)", criterion2},
      {3, "worked compatibility/order/join examples reproduced", criterion3},
      {4, "disjointness composition laws and pattern-image disjointness", criterion4},
      {5, "classifier ground truth and implication chain", criterion5},
      {6, "consistency theorems and entailments", criterion6},
      {7, "denotation oracle agreement in finpinj", criterion7},
      {8, "soundness and substitution over 500 generated terms", criterion8},
      {9, "adequacy over size-7 terms in subpid", criterion9},
      {10, "closed-value non-decomposability transfer", criterion10},
  };
  bool allOk = true;
  for (auto& c : criteria) {
    Ctx ctx;
    try {
      c.run(ctx);
    } catch (const std::exception& e) {
      ctx.ok = false;
      ctx.log << "    exception: " << e.what() << "\n";
    }
    std::cout << (ctx.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "\n";
    std::cout << ctx.log.str();
    allOk = allOk && ctx.ok;
  }
  std::cout << (allOk ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: FAILURES PRESENT") << "\n";
  return allOk ? 0 : 1;
}
