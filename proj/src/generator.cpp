#include "revcat/generator.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "revcat/eval.hpp"
#include "revcat/typing.hpp"

namespace revcat::lang {

namespace {

// Multiset of variable types in a pattern, as a sorted key.
std::string ctxTypeKey(const TypingContext& ctx) {
  std::vector<std::string> types;
  for (const auto& [name, type] : ctx.entries) types.push_back(printType(type));
  std::sort(types.begin(), types.end());
  std::ostringstream out;
  for (const auto& t : types) out << t << ";";
  return out.str();
}

// Rewrites the variables of v (typed by `own`) to use the names of `target`,
// matching by type; each target name is consumed once.
ValuePtr renameWhole(const ValuePtr& v, const TypingContext& own, const TypingContext& target) {
  std::vector<std::pair<std::string, TypePtr>> pool = target.entries;
  std::map<std::string, std::string> assigned;
  struct Walk {
    const TypingContext& own;
    std::vector<std::pair<std::string, TypePtr>>& pool;
    std::map<std::string, std::string>& assigned;
    ValuePtr go(const ValuePtr& v) {
      switch (v->kind) {
        case Value::Kind::Const:
          return v;
        case Value::Kind::Var: {
          auto it = assigned.find(v->varName);
          if (it != assigned.end()) return varValue(it->second);
          const TypePtr* type = own.find(v->varName);
          for (auto& [name, t] : pool) {
            if (!name.empty() && typeEqual(t, *type)) {
              assigned[v->varName] = name;
              std::string picked = name;
              name.clear();
              return varValue(picked);
            }
          }
          throw std::logic_error("renameWhole: no matching variable");
        }
        case Value::Kind::InjL:
          return injl(go(v->fst));
        case Value::Kind::InjR:
          return injr(go(v->fst));
        case Value::Kind::Pair: {
          ValuePtr l = go(v->fst);
          return pairValue(l, go(v->snd));
        }
      }
      throw std::logic_error("renameWhole: bad value");
    }
  } walk{own, pool, assigned};
  return walk.go(v);
}

}  // namespace

ProgramGenerator::ProgramGenerator(uint64_t seed, GenBounds bounds)
    : rng_(seed), bounds_(bounds) {}

TypePtr ProgramGenerator::randomType(const Program& prog, int depth) {
  if (depth <= 0 || rng_.chance(0.4)) {
    const EnumDecl& e = prog.enums[rng_.below(prog.enums.size())];
    return enumType(e.name);
  }
  TypePtr l = randomType(prog, depth - 1);
  TypePtr r = randomType(prog, depth - 1);
  return rng_.chance(0.5) ? sumType(l, r) : prodType(l, r);
}

std::optional<Iso> ProgramGenerator::randomIso(const Program& prog, const TypePtr& a,
                                               const TypePtr& b) {
  const int budget = 2 * bounds_.maxPatternDepth + 1;
  std::vector<ValuePtr> lhsPool = enumeratePatterns(prog, a, budget);
  std::vector<ValuePtr> rhsPool = enumeratePatterns(prog, b, budget);
  rng_.shuffle(lhsPool);
  rng_.shuffle(rhsPool);
  if (lhsPool.size() > 400) lhsPool.resize(400);
  if (rhsPool.size() > 400) rhsPool.resize(400);

  // Pre-compute contexts; group rhs candidates by type multiset.
  std::vector<std::pair<ValuePtr, TypingContext>> lhs;
  for (const auto& p : lhsPool) {
    CtxResult cr = inferPatternContext(prog, p, a);
    if (cr.ctx) lhs.emplace_back(p, *cr.ctx);
  }
  std::map<std::string, std::vector<std::pair<ValuePtr, TypingContext>>> rhsByKey;
  for (const auto& p : rhsPool) {
    CtxResult cr = inferPatternContext(prog, p, b);
    if (cr.ctx) rhsByKey[ctxTypeKey(*cr.ctx)].emplace_back(p, *cr.ctx);
  }

  const size_t want = 1 + rng_.below(static_cast<size_t>(bounds_.maxClauses));
  Iso iso;
  std::vector<ValuePtr> chosenL, chosenR;
  for (const auto& [pat, ctx] : lhs) {
    if (iso.clauses.size() >= want) break;
    bool ok = true;
    for (const auto& prev : chosenL)
      if (!checkOrthogonal(prev, pat)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    auto it = rhsByKey.find(ctxTypeKey(ctx));
    if (it == rhsByKey.end()) continue;
    for (const auto& [rpat, rctx] : it->second) {
      bool rOk = true;
      for (const auto& prev : chosenR)
        if (!checkOrthogonal(prev, rpat)) {
          rOk = false;
          break;
        }
      if (!rOk) continue;
      ValuePtr renamed = renameWhole(rpat, rctx, ctx);
      chosenL.push_back(pat);
      chosenR.push_back(rpat);
      iso.clauses.push_back(Clause{pat, renamed});
      break;
    }
  }
  if (iso.clauses.empty()) return std::nullopt;
  return iso;
}

TermPtr ProgramGenerator::randomTerm(Program& prog, const TypePtr& a, int depth,
                                     int& defCounter) {
  if (depth <= 0 || rng_.chance(0.35)) {
    auto values = enumerateClosedValues(prog, a);
    return valTerm(values[rng_.below(values.size())]);
  }
  TypePtr b = randomType(prog, bounds_.maxPatternDepth - 1);
  std::optional<Iso> iso = randomIso(prog, b, a);
  if (!iso) {
    b = a;  // identity fallback
    Iso id;
    id.clauses.push_back(Clause{varValue("x"), varValue("x")});
    iso = id;
  }
  std::string name = "g" + std::to_string(defCounter++);
  prog.defs.push_back(IsoDef{name, IsoType{b, a}, *iso});
  TermPtr arg = randomTerm(prog, b, depth - 1, defCounter);
  return appTerm(name, arg);
}

std::optional<Program> ProgramGenerator::next() {
  if (bounds_.maxClauses < 1 || bounds_.maxPatternDepth < 1 || bounds_.maxTermDepth < 1)
    return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Program prog = emptyProgram();
    if (bounds_.extraEnums) {
      if (rng_.chance(0.5)) prog.enums.push_back(EnumDecl{"b2", {"k0", "k1"}});
      if (rng_.chance(0.25)) prog.enums.push_back(EnumDecl{"b3", {"m0", "m1", "m2"}});
    }
    int defCounter = 0;
    TypePtr mainType = randomType(prog, bounds_.maxPatternDepth);
    TermPtr main = randomTerm(prog, mainType, bounds_.maxTermDepth, defCounter);
    if (main->kind == Term::Kind::Val && !synthTerm(prog, main)) {
      // wrap so main's type stays synthesizable
      Iso id;
      id.clauses.push_back(Clause{varValue("x"), varValue("x")});
      std::string name = "g" + std::to_string(defCounter++);
      prog.defs.push_back(IsoDef{name, IsoType{mainType, mainType}, id});
      main = appTerm(name, main);
    }
    prog.main = main;
    if (checkProgram(prog).ok()) return prog;
  }
  throw std::logic_error("ProgramGenerator: failed to produce a well-typed program");
}

}  // namespace revcat::lang
