#include "revcat/eval.hpp"

#include <stdexcept>

namespace revcat::lang {

namespace {

bool matchRec(const ValuePtr& pattern, const ValuePtr& w, Valuation& sigma) {
  switch (pattern->kind) {
    case Value::Kind::Const:
      return w->kind == Value::Kind::Const && w->enumName == pattern->enumName &&
             w->constIndex == pattern->constIndex;
    case Value::Kind::Var: {
      auto [it, fresh] = sigma.bind.emplace(pattern->varName, w);
      if (!fresh) throw std::logic_error("matchValue: non-linear pattern");
      return true;
    }
    case Value::Kind::InjL:
      return w->kind == Value::Kind::InjL && matchRec(pattern->fst, w->fst, sigma);
    case Value::Kind::InjR:
      return w->kind == Value::Kind::InjR && matchRec(pattern->fst, w->fst, sigma);
    case Value::Kind::Pair:
      return w->kind == Value::Kind::Pair && matchRec(pattern->fst, w->fst, sigma) &&
             matchRec(pattern->snd, w->snd, sigma);
  }
  return false;
}

}  // namespace

std::optional<Valuation> matchValue(const ValuePtr& pattern, const ValuePtr& w) {
  Valuation sigma;
  if (!matchRec(pattern, w, sigma)) return std::nullopt;
  return sigma;
}

ValuePtr substitute(const Valuation& sigma, const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Const:
      return v;
    case Value::Kind::Var: {
      auto it = sigma.bind.find(v->varName);
      if (it == sigma.bind.end())
        throw std::logic_error("substitute: unbound variable " + v->varName);
      return it->second;
    }
    case Value::Kind::InjL:
      return injl(substitute(sigma, v->fst));
    case Value::Kind::InjR:
      return injr(substitute(sigma, v->fst));
    case Value::Kind::Pair:
      return pairValue(substitute(sigma, v->fst), substitute(sigma, v->snd));
  }
  throw std::logic_error("substitute: bad value");
}

EvalOutcome stepTerm(const TermPtr& t) {
  if (t->kind == Term::Kind::Val) return {EvalOutcome::Kind::Value, nullptr, t->value};
  if (!t->iso) throw std::logic_error("stepTerm: unexpanded named iso reference");
  if (t->arg->kind == Term::Kind::Val) {
    const ValuePtr& v = t->arg->value;
    // at most one clause matches (non-overlap); textual order is a strategy only
    for (const auto& clause : t->iso->clauses) {
      if (auto sigma = matchValue(clause.lhs, v))
        return {EvalOutcome::Kind::Reduced, valTerm(substitute(*sigma, clause.rhs)), nullptr};
    }
    return {EvalOutcome::Kind::Stuck, t, nullptr};
  }
  EvalOutcome inner = stepTerm(t->arg);
  switch (inner.kind) {
    case EvalOutcome::Kind::Reduced:
      return {EvalOutcome::Kind::Reduced,
              appTerm(t->iso, t->isoName, t->isoType, inner.term), nullptr};
    case EvalOutcome::Kind::Stuck:
      return inner;
    case EvalOutcome::Kind::Value:
      throw std::logic_error("stepTerm: value outcome from a non-value argument");
  }
  throw std::logic_error("stepTerm: bad outcome");
}

EvalResult evalTerm(const TermPtr& t) {
  EvalResult result;
  const int bound = countApps(t);
  TermPtr cur = t;
  for (;;) {
    EvalOutcome out = stepTerm(cur);
    if (out.kind == EvalOutcome::Kind::Value) {
      result.value = out.value;
      return result;
    }
    if (out.kind == EvalOutcome::Kind::Stuck) {
      result.stuck = true;
      result.stuckAt = out.term;
      return result;
    }
    cur = out.term;
    ++result.steps;
    if (result.steps > bound)
      throw std::logic_error("evalTerm: step count exceeded the #App bound");
  }
}

Iso invertIso(const Iso& iso) {
  Iso out;
  out.clauses.reserve(iso.clauses.size());
  for (const auto& c : iso.clauses) out.clauses.push_back(Clause{c.rhs, c.lhs});
  return out;
}

IsoDef invertDef(const IsoDef& def) {
  return IsoDef{def.name, IsoType{def.type.rhs, def.type.lhs}, invertIso(def.iso)};
}

std::vector<ValuePtr> enumerateClosedValues(const Program& prog, const TypePtr& a) {
  std::vector<ValuePtr> out;
  switch (a->kind) {
    case ValueType::Kind::Enum: {
      const EnumDecl* decl = prog.findEnum(a->enumName);
      if (!decl) throw std::logic_error("enumerateClosedValues: unknown enum " + a->enumName);
      for (size_t i = 0; i < decl->constants.size(); ++i)
        out.push_back(constValue(decl->name, decl->constants[i], static_cast<int>(i)));
      return out;
    }
    case ValueType::Kind::Sum: {
      for (const auto& v : enumerateClosedValues(prog, a->left)) out.push_back(injl(v));
      for (const auto& v : enumerateClosedValues(prog, a->right)) out.push_back(injr(v));
      return out;
    }
    case ValueType::Kind::Prod: {
      auto ls = enumerateClosedValues(prog, a->left);
      auto rs = enumerateClosedValues(prog, a->right);
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(pairValue(l, r));
      return out;
    }
  }
  return out;
}

namespace {

// Patterns with placeholder variables; names are assigned afterwards by
// left-to-right occurrence so each shape yields exactly one pattern.
void genPatterns(const Program& prog, const TypePtr& a, int budget, std::vector<ValuePtr>& out) {
  if (budget < 1) return;
  out.push_back(varValue("?"));
  switch (a->kind) {
    case ValueType::Kind::Enum: {
      const EnumDecl* decl = prog.findEnum(a->enumName);
      if (!decl) throw std::logic_error("enumeratePatterns: unknown enum " + a->enumName);
      for (size_t i = 0; i < decl->constants.size(); ++i)
        out.push_back(constValue(decl->name, decl->constants[i], static_cast<int>(i)));
      return;
    }
    case ValueType::Kind::Sum: {
      std::vector<ValuePtr> sub;
      genPatterns(prog, a->left, budget - 1, sub);
      for (const auto& p : sub) out.push_back(injl(p));
      sub.clear();
      genPatterns(prog, a->right, budget - 1, sub);
      for (const auto& p : sub) out.push_back(injr(p));
      return;
    }
    case ValueType::Kind::Prod: {
      std::vector<ValuePtr> ls;
      genPatterns(prog, a->left, budget - 2, ls);
      for (const auto& l : ls) {
        std::vector<ValuePtr> rs;
        genPatterns(prog, a->right, budget - 1 - nodeCount(l), rs);
        for (const auto& r : rs) out.push_back(pairValue(l, r));
      }
      return;
    }
  }
}

ValuePtr renameVars(const ValuePtr& v, int& counter) {
  switch (v->kind) {
    case Value::Kind::Const:
      return v;
    case Value::Kind::Var:
      return varValue("x" + std::to_string(counter++));
    case Value::Kind::InjL:
      return injl(renameVars(v->fst, counter));
    case Value::Kind::InjR:
      return injr(renameVars(v->fst, counter));
    case Value::Kind::Pair: {
      ValuePtr l = renameVars(v->fst, counter);
      return pairValue(l, renameVars(v->snd, counter));
    }
  }
  throw std::logic_error("renameVars: bad value");
}

}  // namespace

std::vector<ValuePtr> enumeratePatterns(const Program& prog, const TypePtr& a, int maxNodes) {
  std::vector<ValuePtr> raw;
  genPatterns(prog, a, maxNodes, raw);
  std::vector<ValuePtr> out;
  out.reserve(raw.size());
  for (const auto& p : raw) {
    int counter = 0;
    out.push_back(renameVars(p, counter));
  }
  return out;
}

}  // namespace revcat::lang
