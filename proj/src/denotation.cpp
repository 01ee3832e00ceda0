#include "revcat/denotation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace revcat::sem {

using cat::Label;
using cat::Mor;
using cat::Obj;
using namespace lang;

// ---- environment ----

DenotationEnv DenotationEnv::canonical(cat::CategoryPtr category, const Program& prog) {
  if (!category->hasTensor() || !category->hasSum() || !category->supportsGraphMorphisms())
    throw std::logic_error(category->name() + ": instance cannot interpret the language");
  DenotationEnv env;
  env.category_ = std::move(category);
  env.prog_ = prog;
  const cat::Category& C = *env.category_;
  for (const auto& decl : prog.enums) {
    EnumChoice choice;
    if (decl.builtin) {
      choice.obj = C.unitObj();
      choice.points.push_back(C.identity(choice.obj));
    } else {
      std::vector<Label> labels;
      for (const auto& c : decl.constants) labels.push_back(Label::atom(c));
      choice.obj = Obj(labels);
      for (const auto& c : decl.constants)
        choice.points.push_back(
            C.morFromGraph(C.unitObj(), choice.obj, {{Label::unit(), Label::atom(c)}}));
    }
    // points must be total with pairwise disjoint images
    for (const auto& p : choice.points)
      if (!isTotal(C, p))
        throw std::logic_error("enum choice: point is not total for enum " + decl.name);
    for (size_t i = 0; i < choice.points.size(); ++i)
      for (size_t j = i + 1; j < choice.points.size(); ++j) {
        Mor ri = rangeIdempotent(C, choice.points[i]);
        Mor rj = rangeIdempotent(C, choice.points[j]);
        if (!(C.compose(ri, rj) == C.zero(choice.obj, choice.obj)))
          throw std::logic_error("enum choice: point images overlap for enum " + decl.name);
      }
    env.choices_.emplace(decl.name, std::move(choice));
  }
  return env;
}

const EnumChoice& DenotationEnv::choice(const std::string& enumName) const {
  auto it = choices_.find(enumName);
  if (it == choices_.end()) throw std::logic_error("undeclared enum: " + enumName);
  return it->second;
}

Obj DenotationEnv::denoteType(const TypePtr& a) const {
  switch (a->kind) {
    case ValueType::Kind::Enum:
      return choice(a->enumName).obj;
    case ValueType::Kind::Sum:
      return category_->sumObj(denoteType(a->left), denoteType(a->right));
    case ValueType::Kind::Prod:
      return category_->tensorObj(denoteType(a->left), denoteType(a->right));
  }
  throw std::logic_error("denoteType: bad type");
}

Obj DenotationEnv::denoteContext(const TypingContext& ctx) const {
  return realizeShape(*this, CtxShape::canonical(ctx));
}

// ---- shapes ----

CtxShape CtxShape::unitLeaf() {
  return CtxShape{};
}

CtxShape CtxShape::varLeaf(std::string name, TypePtr type) {
  CtxShape s;
  s.kind = Kind::Var;
  s.var = std::move(name);
  s.type = std::move(type);
  return s;
}

CtxShape CtxShape::node(CtxShape l, CtxShape r) {
  CtxShape s;
  s.kind = Kind::Node;
  s.left = std::make_shared<CtxShape>(std::move(l));
  s.right = std::make_shared<CtxShape>(std::move(r));
  return s;
}

CtxShape CtxShape::canonical(const TypingContext& ctx) {
  if (ctx.entries.empty()) return unitLeaf();
  CtxShape acc = varLeaf(ctx.entries[0].first, ctx.entries[0].second);
  for (size_t i = 1; i < ctx.entries.size(); ++i)
    acc = node(std::move(acc), varLeaf(ctx.entries[i].first, ctx.entries[i].second));
  return acc;
}

Obj realizeShape(const DenotationEnv& env, const CtxShape& shape) {
  switch (shape.kind) {
    case CtxShape::Kind::Unit:
      return env.category().unitObj();
    case CtxShape::Kind::Var:
      return env.denoteType(shape.type);
    case CtxShape::Kind::Node:
      return env.category().tensorObj(realizeShape(env, *shape.left),
                                      realizeShape(env, *shape.right));
  }
  throw std::logic_error("realizeShape: bad shape");
}

namespace {

void collectLeaves(const CtxShape& shape, std::map<std::string, std::string>& out) {
  switch (shape.kind) {
    case CtxShape::Kind::Unit:
      return;
    case CtxShape::Kind::Var:
      if (!out.emplace(shape.var, printType(shape.type)).second)
        throw std::logic_error("shape: duplicate variable " + shape.var);
      return;
    case CtxShape::Kind::Node:
      collectLeaves(*shape.left, out);
      collectLeaves(*shape.right, out);
      return;
  }
}

void decomposeLabel(const CtxShape& shape, const Label& label,
                    std::map<std::string, Label>& out) {
  switch (shape.kind) {
    case CtxShape::Kind::Unit:
      if (!(label == Label::unit())) throw std::logic_error("decompose: expected unit label");
      return;
    case CtxShape::Kind::Var:
      out.emplace(shape.var, label);
      return;
    case CtxShape::Kind::Node:
      if (label.kind() != Label::Kind::Pair)
        throw std::logic_error("decompose: expected pair label");
      decomposeLabel(*shape.left, label.first(), out);
      decomposeLabel(*shape.right, label.second(), out);
      return;
  }
}

Label recomposeLabel(const CtxShape& shape, const std::map<std::string, Label>& bind) {
  switch (shape.kind) {
    case CtxShape::Kind::Unit:
      return Label::unit();
    case CtxShape::Kind::Var:
      return bind.at(shape.var);
    case CtxShape::Kind::Node:
      return Label::pair(recomposeLabel(*shape.left, bind), recomposeLabel(*shape.right, bind));
  }
  throw std::logic_error("recompose: bad shape");
}

}  // namespace

Mor contextPermutation(const DenotationEnv& env, const CtxShape& from, const CtxShape& to) {
  std::map<std::string, std::string> fromVars, toVars;
  collectLeaves(from, fromVars);
  collectLeaves(to, toVars);
  if (fromVars != toVars)
    throw std::logic_error("contextPermutation: shapes bind different variables");
  Obj src = realizeShape(env, from);
  Obj dst = realizeShape(env, to);
  std::vector<std::pair<Label, Label>> graph;
  for (const auto& elem : src.elems()) {
    std::map<std::string, Label> bind;
    decomposeLabel(from, elem, bind);
    graph.emplace_back(elem, recomposeLabel(to, bind));
  }
  return env.category().morFromGraph(src, dst, std::move(graph));
}

Label valueToLabel(const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Const:
      return v->enumName == "unit" ? Label::unit() : Label::atom(v->constName);
    case Value::Kind::Var:
      throw std::logic_error("valueToLabel: open value");
    case Value::Kind::InjL:
      return Label::left(valueToLabel(v->fst));
    case Value::Kind::InjR:
      return Label::right(valueToLabel(v->fst));
    case Value::Kind::Pair:
      return Label::pair(valueToLabel(v->fst), valueToLabel(v->snd));
  }
  throw std::logic_error("valueToLabel: bad value");
}

Mor denoteValue(const DenotationEnv& env, const TypingContext& ctx, const ValuePtr& v,
                const TypePtr& a) {
  const cat::Category& C = env.category();
  switch (v->kind) {
    case Value::Kind::Const: {
      if (!ctx.empty()) throw std::logic_error("denoteValue: constant under nonempty context");
      return env.choice(v->enumName).points.at(static_cast<size_t>(v->constIndex));
    }
    case Value::Kind::Var: {
      if (ctx.size() != 1 || ctx.entries[0].first != v->varName)
        throw std::logic_error("denoteValue: variable context mismatch");
      return C.identity(env.denoteType(a));
    }
    case Value::Kind::InjL: {
      if (a->kind != ValueType::Kind::Sum) throw std::logic_error("denoteValue: inl at non-sum");
      Mor inner = denoteValue(env, ctx, v->fst, a->left);
      return C.compose(C.injLeft(env.denoteType(a->left), env.denoteType(a->right)), inner);
    }
    case Value::Kind::InjR: {
      if (a->kind != ValueType::Kind::Sum) throw std::logic_error("denoteValue: inr at non-sum");
      Mor inner = denoteValue(env, ctx, v->fst, a->right);
      return C.compose(C.injRight(env.denoteType(a->left), env.denoteType(a->right)), inner);
    }
    case Value::Kind::Pair: {
      if (a->kind != ValueType::Kind::Prod) throw std::logic_error("denoteValue: pair at non-product");
      CtxResult c1 = inferPatternContext(env.program(), v->fst, a->left);
      CtxResult c2 = inferPatternContext(env.program(), v->snd, a->right);
      if (!c1.ctx || !c2.ctx) throw std::logic_error("denoteValue: ill-typed pair component");
      Mor f = denoteValue(env, *c1.ctx, v->fst, a->left);
      Mor g = denoteValue(env, *c2.ctx, v->snd, a->right);
      CtxShape from = CtxShape::canonical(ctx);
      CtxShape to = CtxShape::node(CtxShape::canonical(*c1.ctx), CtxShape::canonical(*c2.ctx));
      Mor p = contextPermutation(env, from, to);
      return C.compose(C.tensorMor(f, g), p);
    }
  }
  throw std::logic_error("denoteValue: bad value");
}

Mor denoteIso(const DenotationEnv& env, const Iso& iso, const TypePtr& a, const TypePtr& b) {
  const cat::Category& C = env.category();
  std::vector<Mor> composites;
  for (const auto& clause : iso.clauses) {
    CtxResult cr = inferPatternContext(env.program(), clause.lhs, a);
    if (!cr.ctx) throw std::logic_error("denoteIso: ill-typed clause pattern");
    Mor lhs = denoteValue(env, *cr.ctx, clause.lhs, a);
    Mor rhs = denoteValue(env, *cr.ctx, clause.rhs, b);
    composites.push_back(C.compose(rhs, C.inverse(lhs)));
  }
  // the clause composites must be pairwise inverse compatible
  for (size_t i = 0; i < composites.size(); ++i)
    for (size_t j = i + 1; j < composites.size(); ++j)
      if (!inverseCompatible(C, composites[i], composites[j]))
        throw std::logic_error("denoteIso: clause composites not inverse compatible");
  return C.join(composites, env.denoteType(a), env.denoteType(b));
}

Mor denoteTerm(const DenotationEnv& env, const TermPtr& t, const TypePtr& a) {
  const cat::Category& C = env.category();
  if (t->kind == Term::Kind::Val) return denoteValue(env, TypingContext{}, t->value, a);
  if (!t->iso || !t->isoType) throw std::logic_error("denoteTerm: unannotated application");
  if (!typeEqual(t->isoType->rhs, a)) throw std::logic_error("denoteTerm: type mismatch");
  Mor F = denoteIso(env, *t->iso, t->isoType->lhs, t->isoType->rhs);
  Mor g = denoteTerm(env, t->arg, t->isoType->lhs);
  return C.compose(F, g);
}

Mor standardModel(const DenotationEnv& env, const Iso& iso, const TypePtr& a, const TypePtr& b) {
  const cat::Category& C = env.category();
  std::vector<std::pair<Label, Label>> graph;
  IsoPtr isoPtr = std::make_shared<Iso>(iso);
  for (const auto& v : enumerateClosedValues(env.program(), a)) {
    TermPtr app = appTerm(isoPtr, "", IsoType{a, b}, valTerm(v));
    EvalResult r = evalTerm(app);
    if (r.stuck) continue;
    graph.emplace_back(valueToLabel(v), valueToLabel(r.value));
  }
  return C.morFromGraph(env.denoteType(a), env.denoteType(b), std::move(graph));
}

// ---- type universes ----

std::vector<TypePtr> typeUniverse(const Program& prog, int maxDepth, int maxValues) {
  std::vector<std::vector<TypePtr>> byDepth(static_cast<size_t>(maxDepth) + 1);
  for (const auto& e : prog.enums) byDepth[0].push_back(enumType(e.name));
  for (int d = 1; d <= maxDepth; ++d) {
    std::vector<TypePtr> lower;
    for (int k = 0; k < d; ++k)
      lower.insert(lower.end(), byDepth[k].begin(), byDepth[k].end());
    for (const auto& l : lower)
      for (const auto& r : lower) {
        byDepth[d].push_back(sumType(l, r));
        byDepth[d].push_back(prodType(l, r));
      }
  }
  std::vector<TypePtr> out;
  std::set<std::string> seen;
  for (const auto& level : byDepth)
    for (const auto& t : level) {
      if (static_cast<int>(enumerateClosedValues(prog, t).size()) > maxValues) continue;
      if (seen.insert(printType(t)).second) out.push_back(t);
    }
  return out;
}

// ---- harness: pattern-image disjointness ----

cat::LawReport checkOrthogonalityLemma(const DenotationEnv& env,
                                       const std::vector<TypePtr>& types, int maxPatternNodes) {
  const cat::Category& C = env.category();
  cat::LawReport report;
  report.instance = C.name();
  cat::LawResult result;
  result.law = "orthogonal patterns have disjoint images";
  for (const auto& a : types) {
    auto pats = enumeratePatterns(env.program(), a, maxPatternNodes);
    Obj obj = env.denoteType(a);
    Mor zero = C.zero(obj, obj);
    std::vector<std::optional<Mor>> ranges(pats.size());
    auto rangeOf = [&](size_t i) -> const Mor& {
      if (!ranges[i]) {
        CtxResult cr = inferPatternContext(env.program(), pats[i], a);
        Mor d = denoteValue(env, *cr.ctx, pats[i], a);
        ranges[i] = C.restriction(C.inverse(d));
      }
      return *ranges[i];
    };
    for (size_t i = 0; i < pats.size(); ++i) {
      for (size_t j = i + 1; j < pats.size(); ++j) {
        if (!checkOrthogonal(pats[i], pats[j])) continue;
        ++result.cases;
        Mor composite = C.compose(rangeOf(i), rangeOf(j));
        if (!(composite == zero)) {
          cat::LawFailure f;
          f.inputs = printValue(pats[i]) + " ; " + printValue(pats[j]) + " : " + printType(a);
          f.lhs = C.morToString(composite);
          f.rhs = C.morToString(zero);
          result.failures.push_back(std::move(f));
        }
      }
    }
  }
  report.add(std::move(result));
  return report;
}

// ---- harness: soundness / substitution ----

namespace {

struct RedexInfo {
  IsoPtr iso;
  IsoType type;
  ValuePtr argument;
  size_t clauseIndex;
  Valuation sigma;
};

// the innermost application whose argument is a value and that matches
std::optional<RedexInfo> findRedex(const TermPtr& t) {
  if (t->kind == Term::Kind::Val) return std::nullopt;
  if (t->arg->kind != Term::Kind::Val) return findRedex(t->arg);
  for (size_t i = 0; i < t->iso->clauses.size(); ++i) {
    if (auto sigma = matchValue(t->iso->clauses[i].lhs, t->arg->value))
      return RedexInfo{t->iso, *t->isoType, t->arg->value, i, *sigma};
  }
  return std::nullopt;  // stuck redex
}

struct StepHarness {
  cat::LawResult soundness;
  cat::LawResult substitution;
  cat::LawResult clauseSelection;

  StepHarness() {
    soundness.law = "soundness: reduction preserves denotation";
    substitution.law = "substitution: [[sigma(rhs)]] = [[rhs]] . inv([[lhs]]) . [[w]]";
    clauseSelection.law = "clause selection: the joined iso on a match picks its clause";
  }

  void fail(cat::LawResult& result, const std::string& inputs, const cat::Category& C,
            const Mor& lhs, const Mor& rhs) {
    cat::LawFailure f;
    f.inputs = inputs;
    f.lhs = C.morToString(lhs);
    f.rhs = C.morToString(rhs);
    result.failures.push_back(std::move(f));
  }

  void runProgram(const DenotationEnv& env, const CheckedProgram& cp) {
    const cat::Category& C = env.category();
    const TypePtr& mainType = *cp.mainType;
    TermPtr cur = *cp.program.main;
    Mor first = denoteTerm(env, cur, mainType);
    for (;;) {
      // redex-level checks before stepping
      if (auto redex = findRedex(cur)) {
        const Clause& clause = redex->iso->clauses[redex->clauseIndex];
        Mor w = denoteValue(env, TypingContext{}, redex->argument, redex->type.lhs);
        CtxResult cr = inferPatternContext(env.program(), clause.lhs, redex->type.lhs);
        Mor lhs = denoteValue(env, *cr.ctx, clause.lhs, redex->type.lhs);
        Mor rhs = denoteValue(env, *cr.ctx, clause.rhs, redex->type.rhs);
        Mor composite = C.compose(rhs, C.compose(C.inverse(lhs), w));

        Mor substituted = denoteValue(env, TypingContext{},
                                      substitute(redex->sigma, clause.rhs), redex->type.rhs);
        ++substitution.cases;
        if (!(substituted == composite))
          fail(substitution, printIso(*redex->iso) + " @ " + printValue(redex->argument), C,
               substituted, composite);

        Mor isoDen = denoteIso(env, *redex->iso, redex->type.lhs, redex->type.rhs);
        Mor joined = C.compose(isoDen, w);
        ++clauseSelection.cases;
        if (!(joined == composite))
          fail(clauseSelection, printIso(*redex->iso) + " @ " + printValue(redex->argument), C,
               joined, composite);
      }
      EvalOutcome out = stepTerm(cur);
      if (out.kind != EvalOutcome::Kind::Reduced) break;
      Mor before = denoteTerm(env, cur, mainType);
      Mor after = denoteTerm(env, out.term, mainType);
      ++soundness.cases;
      if (!(before == after)) fail(soundness, printTerm(cur), C, before, after);
      cur = out.term;
    }
    // multi-step corollary
    Mor last = denoteTerm(env, cur, mainType);
    ++soundness.cases;
    if (!(first == last)) fail(soundness, printTerm(*cp.program.main) + " (multi-step)", C, first, last);
  }
};

}  // namespace

cat::LawReport checkSoundness(cat::CategoryPtr category, uint64_t seed, int programCount,
                              const GenBounds& bounds) {
  ProgramGenerator gen(seed, bounds);
  StepHarness harness;
  for (int i = 0; i < programCount; ++i) {
    auto p = gen.next();
    if (!p) break;
    CheckedProgram cp = checkProgram(*p);
    if (!cp.ok()) throw std::logic_error("checkSoundness: generator emitted an ill-typed program");
    DenotationEnv env = DenotationEnv::canonical(category, cp.program);
    harness.runProgram(env, cp);
  }
  cat::LawReport report;
  report.instance = category->name();
  report.add(std::move(harness.soundness));
  report.add(std::move(harness.substitution));
  report.add(std::move(harness.clauseSelection));
  return report;
}

cat::LawReport checkSubstitutionLemma(cat::CategoryPtr category, uint64_t seed, int programCount,
                                      const GenBounds& bounds) {
  cat::LawReport all = checkSoundness(category, seed, programCount, bounds);
  cat::LawReport report;
  report.instance = all.instance;
  for (auto& r : all.laws)
    if (r.law.rfind("substitution:", 0) == 0 || r.law.rfind("clause selection:", 0) == 0)
      report.add(std::move(r));
  return report;
}

// ---- harness: adequacy ----

namespace {

// 1- and 2-clause isos between the types with a total clause-node budget
std::vector<Iso> enumerateIsosBetween(const Program& prog, const TypePtr& a, const TypePtr& b,
                                      int nodeBudget) {
  std::vector<Iso> out;
  if (nodeBudget < 2) return out;
  struct Cand {
    ValuePtr lhs, rhs;
    int nodes;
  };
  std::vector<Cand> clauses;
  auto lhsPats = enumeratePatterns(prog, a, nodeBudget - 1);
  auto rhsPats = enumeratePatterns(prog, b, nodeBudget - 1);
  std::vector<std::pair<ValuePtr, TypingContext>> lhs, rhs;
  for (const auto& p : lhsPats) {
    CtxResult cr = inferPatternContext(prog, p, a);
    if (cr.ctx) lhs.emplace_back(p, *cr.ctx);
  }
  for (const auto& p : rhsPats) {
    CtxResult cr = inferPatternContext(prog, p, b);
    if (cr.ctx) rhs.emplace_back(p, *cr.ctx);
  }
  for (const auto& [lp, lctx] : lhs) {
    for (const auto& [rp, rctx] : rhs) {
      if (nodeCount(lp) + nodeCount(rp) > nodeBudget) continue;
      // contexts must agree as type multisets; rename rhs onto lhs's names
      if (lctx.size() != rctx.size()) continue;
      std::vector<std::pair<std::string, TypePtr>> pool = lctx.entries;
      std::map<std::string, std::string> assigned;
      bool ok = true;
      std::function<ValuePtr(const ValuePtr&)> rename = [&](const ValuePtr& v) -> ValuePtr {
        switch (v->kind) {
          case Value::Kind::Const:
            return v;
          case Value::Kind::Var: {
            const TypePtr* type = rctx.find(v->varName);
            for (auto& [name, t] : pool) {
              if (!name.empty() && typeEqual(t, *type)) {
                std::string picked = name;
                name.clear();
                return varValue(picked);
              }
            }
            ok = false;
            return v;
          }
          case Value::Kind::InjL:
            return injl(rename(v->fst));
          case Value::Kind::InjR:
            return injr(rename(v->fst));
          case Value::Kind::Pair: {
            ValuePtr l = rename(v->fst);
            return pairValue(l, rename(v->snd));
          }
        }
        return v;
      };
      ValuePtr renamed = rename(rp);
      if (!ok) continue;
      clauses.push_back(Cand{lp, renamed, nodeCount(lp) + nodeCount(rp)});
    }
  }
  for (const auto& c : clauses) {
    Iso iso;
    iso.clauses.push_back(Clause{c.lhs, c.rhs});
    out.push_back(std::move(iso));
  }
  for (size_t i = 0; i < clauses.size(); ++i) {
    for (size_t j = i + 1; j < clauses.size(); ++j) {
      if (clauses[i].nodes + clauses[j].nodes > nodeBudget) continue;
      if (!checkOrthogonal(clauses[i].lhs, clauses[j].lhs)) continue;
      if (!checkOrthogonal(clauses[i].rhs, clauses[j].rhs)) continue;
      Iso iso;
      iso.clauses.push_back(Clause{clauses[i].lhs, clauses[i].rhs});
      iso.clauses.push_back(Clause{clauses[j].lhs, clauses[j].rhs});
      out.push_back(std::move(iso));
    }
  }
  return out;
}

struct TermEnumerator {
  const Program& prog;
  const std::vector<TypePtr>& universe;
  std::map<std::string, std::vector<TermPtr>> memo;  // key: type|size

  std::vector<TermPtr> terms(const TypePtr& a, int size) {
    std::string key = printType(a) + "|" + std::to_string(size);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<TermPtr> out;
    for (const auto& v : enumerateClosedValues(prog, a))
      if (nodeCount(v) <= size) out.push_back(valTerm(v));
    for (const auto& b : universe) {
      // App(iso : b <-> a, arg : b); sizes: 1 + iso nodes + arg nodes
      int isoBudget = size - 2;
      if (isoBudget < 2) continue;
      for (const auto& iso : enumerateIsosBetween(prog, b, a, isoBudget)) {
        int isoNodes = nodeCount(iso);
        IsoPtr isoPtr = std::make_shared<Iso>(iso);
        for (const auto& arg : terms(b, size - 1 - isoNodes))
          out.push_back(appTerm(isoPtr, "", IsoType{b, a}, arg));
      }
    }
    memo[key] = out;
    return out;
  }
};

}  // namespace

std::string AdequacyReport::toText() const {
  std::ostringstream out;
  out << "adequacy: precondition (id_1 lnd) " << (preconditionMet ? "met" : "UNMET")
      << (reportOnly ? " -- report-only mode" : "") << "\n"
      << "  types " << types << ", terms " << terms << ", pairs " << pairs << "\n"
      << "  strict/extended deviations " << strictExtendedDeviations << " (both-stuck pairs "
      << stuckStuckPairs << ")\n"
      << "  violations " << violations.size() << "\n";
  for (size_t i = 0; i < violations.size() && i < 5; ++i) out << "    " << violations[i] << "\n";
  return out.str();
}

AdequacyReport checkAdequacy(cat::CategoryPtr category, int maxTermSize, int maxTypeValues) {
  AdequacyReport report;
  Program prog = emptyProgram();  // the minimal language
  DenotationEnv env = DenotationEnv::canonical(category, prog);
  const cat::Category& C = *category;

  // precondition: id_1 linearly non-decomposable
  cat::DecompClass id1 = cat::classify(C, C.identity(C.unitObj()));
  report.preconditionMet = id1.lnd;
  report.reportOnly = !id1.lnd;

  std::vector<TypePtr> universe = typeUniverse(prog, 2, maxTypeValues);
  report.types = static_cast<long long>(universe.size());
  TermEnumerator enumerator{prog, universe, {}};

  for (const auto& a : universe) {
    std::vector<TermPtr> terms = enumerator.terms(a, maxTermSize);
    report.terms += static_cast<long long>(terms.size());
    std::vector<std::optional<ValuePtr>> results;  // nullopt = stuck
    std::vector<Mor> denotations;
    for (const auto& t : terms) {
      EvalResult r = evalTerm(t);
      results.push_back(r.stuck ? std::nullopt : std::make_optional(r.value));
      denotations.push_back(denoteTerm(env, t, a));
    }
    for (size_t i = 0; i < terms.size(); ++i) {
      for (size_t j = i + 1; j < terms.size(); ++j) {
        ++report.pairs;
        bool bothStuck = !results[i] && !results[j];
        bool strict = results[i] && results[j] && valueEqual(*results[i], *results[j]);
        bool extended = strict || bothStuck;
        bool denEq = denotations[i] == denotations[j];
        if (bothStuck) ++report.stuckStuckPairs;
        if (strict != extended) ++report.strictExtendedDeviations;
        if (extended != denEq) {
          std::ostringstream msg;
          msg << printTerm(terms[i]) << "  vs  " << printTerm(terms[j]) << " : " << printType(a)
              << "  opEquiv=" << extended << " denEq=" << denEq;
          report.violations.push_back(msg.str());
        }
      }
    }
  }
  // the strict/extended deviations are exactly the both-stuck pairs
  if (report.strictExtendedDeviations != report.stuckStuckPairs)
    report.violations.push_back("deviation accounting mismatch");
  return report;
}

// ---- harness: closed-value non-decomposability ----

std::string ValueClassReport::toText() const {
  std::ostringstream out;
  out << "value non-decomposability: id_1 classified snd=" << id1.snd << " lnd=" << id1.lnd << " wnd=" << id1.wnd
      << "\n";
  if (!preconditionMet) {
    out << "  precondition unmet (id_1 not even weakly non-decomposable); no claim checked\n";
    return out.str();
  }
  out << "  checked flavor: " << flavor << "; values checked " << valuesChecked << "; violations "
      << violations.size() << "\n";
  for (size_t i = 0; i < violations.size() && i < 5; ++i) out << "    " << violations[i] << "\n";
  return out.str();
}

ValueClassReport checkValueNonDecomposability(cat::CategoryPtr category,
                                              const std::vector<TypePtr>& types) {
  ValueClassReport report;
  Program prog = emptyProgram();
  DenotationEnv env = DenotationEnv::canonical(category, prog);
  const cat::Category& C = *category;
  report.id1 = cat::classify(C, C.identity(C.unitObj()));
  report.preconditionMet = report.id1.wnd;
  if (!report.preconditionMet) return report;
  report.flavor = report.id1.snd ? "strong" : report.id1.lnd ? "linear" : "weak";
  for (const auto& a : types) {
    for (const auto& v : enumerateClosedValues(prog, a)) {
      Mor d = denoteValue(env, TypingContext{}, v, a);
      cat::DecompClass cls = cat::classify(C, d);
      bool ok = report.id1.snd ? cls.snd : report.id1.lnd ? cls.lnd : cls.wnd;
      ++report.valuesChecked;
      if (!ok)
        report.violations.push_back("[[" + printValue(v) + " : " + printType(a) +
                                    "]] is not " + report.flavor + "ly non-decomposable");
    }
  }
  return report;
}

}  // namespace revcat::sem
