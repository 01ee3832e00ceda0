#include "revcat/typing.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace revcat::lang {

const TypePtr* TypingContext::find(const std::string& name) const {
  for (const auto& [n, t] : entries)
    if (n == name) return &t;
  return nullptr;
}

bool TypingContext::insert(const std::string& name, TypePtr type) {
  if (find(name)) return false;
  entries.emplace_back(name, std::move(type));
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return true;
}

bool contextEqual(const TypingContext& a, const TypingContext& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i].first != b.entries[i].first) return false;
    if (!typeEqual(a.entries[i].second, b.entries[i].second)) return false;
  }
  return true;
}

std::string printContext(const TypingContext& ctx) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < ctx.entries.size(); ++i) {
    if (i) out << ", ";
    out << ctx.entries[i].first << ": " << printType(ctx.entries[i].second);
  }
  out << "}";
  return out.str();
}

const char* typeErrorKindName(TypeError::Kind k) {
  switch (k) {
    case TypeError::Kind::UnboundVar: return "unbound variable";
    case TypeError::Kind::DuplicateVar: return "duplicate variable";
    case TypeError::Kind::ContextMismatch: return "context mismatch";
    case TypeError::Kind::ShapeMismatch: return "shape mismatch";
    case TypeError::Kind::OverlappingPatterns: return "overlapping patterns";
    case TypeError::Kind::NonClosedTerm: return "non-closed term";
    case TypeError::Kind::UnknownConstant: return "unknown constant";
    case TypeError::Kind::UnknownIso: return "unknown iso";
    case TypeError::Kind::CannotInfer: return "cannot infer type";
  }
  return "?";
}

std::string TypeError::render() const {
  std::ostringstream out;
  if (!where.empty()) out << where << ": ";
  out << typeErrorKindName(kind);
  if (kind == Kind::OverlappingPatterns)
    out << " (clauses " << clauseI << " and " << clauseJ << ", "
        << (side == Side::Left ? "left" : "right") << " side)";
  else if (clauseI >= 0)
    out << " (clause " << clauseI << (side == Side::Left ? ", left" : side == Side::Right ? ", right" : "")
        << ")";
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

namespace {

TypeError err(TypeError::Kind kind, std::string detail) {
  TypeError e;
  e.kind = kind;
  e.detail = std::move(detail);
  return e;
}

void inferRec(const Program& prog, const ValuePtr& v, const TypePtr& a, TypingContext& ctx,
              TypeErrors& errors) {
  switch (v->kind) {
    case Value::Kind::Const: {
      const EnumDecl* decl = prog.findEnum(v->enumName);
      if (!decl || v->constIndex < 0 || v->constIndex >= static_cast<int>(decl->constants.size())) {
        errors.push_back(err(TypeError::Kind::UnknownConstant, printValue(v)));
        return;
      }
      if (a->kind != ValueType::Kind::Enum || a->enumName != v->enumName)
        errors.push_back(err(TypeError::Kind::ShapeMismatch,
                             printValue(v) + " is not of type " + printType(a)));
      return;
    }
    case Value::Kind::Var:
      if (!ctx.insert(v->varName, a))
        errors.push_back(err(TypeError::Kind::DuplicateVar, v->varName));
      return;
    case Value::Kind::InjL:
      if (a->kind != ValueType::Kind::Sum) {
        errors.push_back(err(TypeError::Kind::ShapeMismatch,
                             "inl pattern against non-sum type " + printType(a)));
        return;
      }
      inferRec(prog, v->fst, a->left, ctx, errors);
      return;
    case Value::Kind::InjR:
      if (a->kind != ValueType::Kind::Sum) {
        errors.push_back(err(TypeError::Kind::ShapeMismatch,
                             "inr pattern against non-sum type " + printType(a)));
        return;
      }
      inferRec(prog, v->fst, a->right, ctx, errors);
      return;
    case Value::Kind::Pair:
      if (a->kind != ValueType::Kind::Prod) {
        errors.push_back(err(TypeError::Kind::ShapeMismatch,
                             "pair pattern against non-product type " + printType(a)));
        return;
      }
      inferRec(prog, v->fst, a->left, ctx, errors);
      inferRec(prog, v->snd, a->right, ctx, errors);
      return;
  }
}

}  // namespace

CtxResult inferPatternContext(const Program& prog, const ValuePtr& v, const TypePtr& a) {
  CtxResult result;
  TypingContext ctx;
  inferRec(prog, v, a, ctx, result.errors);
  if (result.errors.empty()) result.ctx = std::move(ctx);
  return result;
}

namespace {

void checkValueRec(const Program& prog, const TypingContext& ctx, const ValuePtr& v,
                   const TypePtr& a, std::set<std::string>& used, TypeErrors& errors) {
  switch (v->kind) {
    case Value::Kind::Const: {
      const EnumDecl* decl = prog.findEnum(v->enumName);
      if (!decl || v->constIndex < 0 || v->constIndex >= static_cast<int>(decl->constants.size())) {
        errors.push_back(err(TypeError::Kind::UnknownConstant, printValue(v)));
        return;
      }
      if (a->kind != ValueType::Kind::Enum || a->enumName != v->enumName)
        errors.push_back(err(TypeError::Kind::ShapeMismatch,
                             printValue(v) + " is not of type " + printType(a)));
      return;
    }
    case Value::Kind::Var: {
      const TypePtr* bound = ctx.find(v->varName);
      if (!bound) {
        errors.push_back(err(TypeError::Kind::UnboundVar, v->varName));
        return;
      }
      if (!used.insert(v->varName).second) {
        errors.push_back(err(TypeError::Kind::DuplicateVar, v->varName));
        return;
      }
      if (!typeEqual(*bound, a))
        errors.push_back(err(TypeError::Kind::ContextMismatch,
                             v->varName + " has type " + printType(*bound) + ", expected " +
                                 printType(a)));
      return;
    }
    case Value::Kind::InjL:
      if (a->kind != ValueType::Kind::Sum) {
        errors.push_back(
            err(TypeError::Kind::ShapeMismatch, "inl against non-sum type " + printType(a)));
        return;
      }
      checkValueRec(prog, ctx, v->fst, a->left, used, errors);
      return;
    case Value::Kind::InjR:
      if (a->kind != ValueType::Kind::Sum) {
        errors.push_back(
            err(TypeError::Kind::ShapeMismatch, "inr against non-sum type " + printType(a)));
        return;
      }
      checkValueRec(prog, ctx, v->fst, a->right, used, errors);
      return;
    case Value::Kind::Pair:
      if (a->kind != ValueType::Kind::Prod) {
        errors.push_back(
            err(TypeError::Kind::ShapeMismatch, "pair against non-product type " + printType(a)));
        return;
      }
      checkValueRec(prog, ctx, v->fst, a->left, used, errors);
      checkValueRec(prog, ctx, v->snd, a->right, used, errors);
      return;
  }
}

}  // namespace

TypeErrors checkValue(const Program& prog, const TypingContext& ctx, const ValuePtr& v,
                      const TypePtr& a) {
  TypeErrors errors;
  std::set<std::string> used;
  checkValueRec(prog, ctx, v, a, used, errors);
  // linearity: the whole context must be consumed
  for (const auto& [name, type] : ctx.entries)
    if (!used.count(name))
      errors.push_back(err(TypeError::Kind::ContextMismatch, "unused variable " + name));
  return errors;
}

bool checkOrthogonal(const ValuePtr& v1, const ValuePtr& v2) {
  using K = Value::Kind;
  if (v1->kind == K::Const && v2->kind == K::Const)
    return v1->enumName == v2->enumName && v1->constIndex != v2->constIndex;
  if (v1->kind == K::InjL && v2->kind == K::InjR) return true;
  if (v1->kind == K::InjR && v2->kind == K::InjL) return true;
  if (v1->kind == K::InjL && v2->kind == K::InjL) return checkOrthogonal(v1->fst, v2->fst);
  if (v1->kind == K::InjR && v2->kind == K::InjR) return checkOrthogonal(v1->fst, v2->fst);
  if (v1->kind == K::Pair && v2->kind == K::Pair)
    return checkOrthogonal(v1->fst, v2->fst) || checkOrthogonal(v1->snd, v2->snd);
  return false;
}

TypeErrors checkIso(const Program& prog, const Iso& iso, const TypePtr& a, const TypePtr& b) {
  TypeErrors errors;
  if (iso.clauses.empty()) {
    errors.push_back(err(TypeError::Kind::ShapeMismatch, "iso with no clauses"));
    return errors;
  }
  for (size_t i = 0; i < iso.clauses.size(); ++i) {
    CtxResult cr = inferPatternContext(prog, iso.clauses[i].lhs, a);
    for (auto e : cr.errors) {
      e.clauseI = static_cast<int>(i);
      e.side = TypeError::Side::Left;
      errors.push_back(e);
    }
    if (!cr.ctx) continue;
    // the same context types the right-hand side of the clause
    for (auto e : checkValue(prog, *cr.ctx, iso.clauses[i].rhs, b)) {
      e.clauseI = static_cast<int>(i);
      e.side = TypeError::Side::Right;
      errors.push_back(e);
    }
  }
  for (size_t i = 0; i < iso.clauses.size(); ++i) {
    for (size_t j = i + 1; j < iso.clauses.size(); ++j) {
      if (!checkOrthogonal(iso.clauses[i].lhs, iso.clauses[j].lhs)) {
        TypeError e = err(TypeError::Kind::OverlappingPatterns, "");
        e.clauseI = static_cast<int>(i);
        e.clauseJ = static_cast<int>(j);
        e.side = TypeError::Side::Left;
        errors.push_back(e);
      }
      if (!checkOrthogonal(iso.clauses[i].rhs, iso.clauses[j].rhs)) {
        TypeError e = err(TypeError::Kind::OverlappingPatterns, "");
        e.clauseI = static_cast<int>(i);
        e.clauseJ = static_cast<int>(j);
        e.side = TypeError::Side::Right;
        errors.push_back(e);
      }
    }
  }
  return errors;
}

namespace {

std::optional<TypePtr> synthValue(const Program& prog, const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Const:
      return enumType(v->enumName);
    case Value::Kind::Var:
    case Value::Kind::InjL:
    case Value::Kind::InjR:
      return std::nullopt;  // sum types are not inferable
    case Value::Kind::Pair: {
      auto l = synthValue(prog, v->fst);
      auto r = synthValue(prog, v->snd);
      if (!l || !r) return std::nullopt;
      return prodType(*l, *r);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<TypePtr> synthTerm(const Program& prog, const TermPtr& t) {
  if (t->kind == Term::Kind::Val) return synthValue(prog, t->value);
  if (t->isoType) return t->isoType->rhs;
  if (!t->isoName.empty()) {
    const IsoDef* def = prog.findDef(t->isoName);
    if (def) return def->type.rhs;
  }
  return std::nullopt;
}

namespace {

// Checks the term against the expected type and rebuilds it with every App
// node carrying its IsoType annotation.
struct AnnotateResult {
  TermPtr term;
  TypeErrors errors;
};

AnnotateResult annotateTerm(const Program& prog, const TermPtr& t, const TypePtr& a) {
  AnnotateResult out;
  out.term = t;
  if (t->kind == Term::Kind::Val) {
    if (!isClosed(t->value)) {
      out.errors.push_back(err(TypeError::Kind::NonClosedTerm, printValue(t->value)));
      return out;
    }
    for (auto& e : checkValue(prog, TypingContext{}, t->value, a)) out.errors.push_back(e);
    return out;
  }
  if (!t->iso) throw std::logic_error("checkTerm: unexpanded named iso reference");
  IsoType ty;
  if (t->isoType) {
    ty = *t->isoType;
  } else {
    auto argType = synthTerm(prog, t->arg);
    if (!argType) {
      out.errors.push_back(err(TypeError::Kind::CannotInfer,
                               "cannot infer argument type of anonymous iso application"));
      return out;
    }
    ty = IsoType{*argType, a};
  }
  if (!typeEqual(ty.rhs, a)) {
    out.errors.push_back(err(TypeError::Kind::ShapeMismatch,
                             "iso produces " + printType(ty.rhs) + ", expected " + printType(a)));
    return out;
  }
  for (auto& e : checkIso(prog, *t->iso, ty.lhs, ty.rhs)) out.errors.push_back(e);
  AnnotateResult sub = annotateTerm(prog, t->arg, ty.lhs);
  for (auto& e : sub.errors) out.errors.push_back(e);
  out.term = appTerm(t->iso, t->isoName, ty, sub.term);
  return out;
}

// Replace named iso references by their literals.
TermPtr expandTerm(const Program& prog, const TermPtr& t, TypeErrors& errors) {
  if (t->kind == Term::Kind::Val) return t;
  TermPtr arg = expandTerm(prog, t->arg, errors);
  if (!t->isoName.empty() && !t->iso) {
    const IsoDef* def = prog.findDef(t->isoName);
    if (!def) {
      errors.push_back(err(TypeError::Kind::UnknownIso, t->isoName));
      return t;
    }
    return appTerm(std::make_shared<Iso>(def->iso), t->isoName, def->type, arg);
  }
  return appTerm(t->iso, t->isoName, t->isoType, arg);
}

}  // namespace

TypeErrors checkTerm(const Program& prog, const TermPtr& t, const TypePtr& a) {
  return annotateTerm(prog, t, a).errors;
}

CheckedProgram checkProgram(const Program& prog) {
  CheckedProgram out;
  out.program = prog;

  // enum sanity: distinct names, globally distinct constants, arity >= 1
  std::set<std::string> enumNames, constNames;
  for (const auto& e : prog.enums) {
    if (!enumNames.insert(e.name).second)
      out.errors.push_back(err(TypeError::Kind::ShapeMismatch, "duplicate enum " + e.name));
    if (e.constants.empty())
      out.errors.push_back(err(TypeError::Kind::ShapeMismatch, "empty enum " + e.name));
    for (const auto& c : e.constants)
      if (!constNames.insert(c).second)
        out.errors.push_back(err(TypeError::Kind::ShapeMismatch, "duplicate constant " + c));
  }

  std::set<std::string> defNames;
  for (const auto& d : prog.defs) {
    if (!defNames.insert(d.name).second)
      out.errors.push_back(err(TypeError::Kind::ShapeMismatch, "duplicate iso " + d.name));
    for (auto e : checkIso(prog, d.iso, d.type.lhs, d.type.rhs)) {
      e.where = d.name;
      out.errors.push_back(e);
    }
  }

  if (prog.main) {
    TypeErrors expandErrors;
    TermPtr expanded = expandTerm(prog, *prog.main, expandErrors);
    for (auto e : expandErrors) {
      e.where = "main";
      out.errors.push_back(e);
    }
    out.program.main = expanded;
    if (expandErrors.empty()) {
      auto mainType = synthTerm(prog, expanded);
      if (!mainType) {
        TypeError e = err(TypeError::Kind::CannotInfer,
                          "cannot infer the type of main; apply a declared iso or use "
                          "constants at sum-free type");
        e.where = "main";
        out.errors.push_back(e);
      } else {
        out.mainType = mainType;
        AnnotateResult ar = annotateTerm(prog, expanded, *mainType);
        out.program.main = ar.term;
        for (auto e : ar.errors) {
          e.where = "main";
          out.errors.push_back(e);
        }
      }
    }
  }
  return out;
}

}  // namespace revcat::lang
