#include "revcat/syntax.hpp"

#include <sstream>
#include <stdexcept>

namespace revcat::lang {

// ---- types ----

TypePtr enumType(std::string name) {
  auto t = std::make_shared<ValueType>();
  t->kind = ValueType::Kind::Enum;
  t->enumName = std::move(name);
  return t;
}

TypePtr sumType(TypePtr l, TypePtr r) {
  auto t = std::make_shared<ValueType>();
  t->kind = ValueType::Kind::Sum;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TypePtr prodType(TypePtr l, TypePtr r) {
  auto t = std::make_shared<ValueType>();
  t->kind = ValueType::Kind::Prod;
  t->left = std::move(l);
  t->right = std::move(r);
  return t;
}

TypePtr unitType() {
  static TypePtr u = enumType("unit");
  return u;
}

bool typeEqual(const TypePtr& a, const TypePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ValueType::Kind::Enum:
      return a->enumName == b->enumName;
    case ValueType::Kind::Sum:
    case ValueType::Kind::Prod:
      return typeEqual(a->left, b->left) && typeEqual(a->right, b->right);
  }
  return false;
}

namespace {

// `*` binds tighter than `+`; both associate to the left.
void printTypeRec(std::ostringstream& out, const TypePtr& t, int parentPrec, bool rightChild) {
  int prec = t->kind == ValueType::Kind::Enum ? 2 : (t->kind == ValueType::Kind::Prod ? 1 : 0);
  bool parens = prec < parentPrec || (prec == parentPrec && rightChild && prec < 2);
  if (parens) out << "(";
  switch (t->kind) {
    case ValueType::Kind::Enum:
      out << t->enumName;
      break;
    case ValueType::Kind::Sum:
      printTypeRec(out, t->left, 0, false);
      out << " + ";
      printTypeRec(out, t->right, 0, true);
      break;
    case ValueType::Kind::Prod:
      printTypeRec(out, t->left, 1, false);
      out << " * ";
      printTypeRec(out, t->right, 1, true);
      break;
  }
  if (parens) out << ")";
}

}  // namespace

std::string printType(const TypePtr& t) {
  std::ostringstream out;
  printTypeRec(out, t, 0, false);
  return out.str();
}

// ---- values ----

ValuePtr constValue(std::string enumName, std::string constName, int index) {
  auto v = std::make_shared<Value>();
  v->kind = Value::Kind::Const;
  v->enumName = std::move(enumName);
  v->constName = std::move(constName);
  v->constIndex = index;
  return v;
}

ValuePtr varValue(std::string name) {
  auto v = std::make_shared<Value>();
  v->kind = Value::Kind::Var;
  v->varName = std::move(name);
  return v;
}

ValuePtr injl(ValuePtr v) {
  auto r = std::make_shared<Value>();
  r->kind = Value::Kind::InjL;
  r->fst = std::move(v);
  return r;
}

ValuePtr injr(ValuePtr v) {
  auto r = std::make_shared<Value>();
  r->kind = Value::Kind::InjR;
  r->fst = std::move(v);
  return r;
}

ValuePtr pairValue(ValuePtr a, ValuePtr b) {
  auto r = std::make_shared<Value>();
  r->kind = Value::Kind::Pair;
  r->fst = std::move(a);
  r->snd = std::move(b);
  return r;
}

ValuePtr ttValue() {
  static ValuePtr tt = constValue("unit", "tt", 0);
  return tt;
}

bool valueEqual(const ValuePtr& a, const ValuePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Value::Kind::Const:
      return a->enumName == b->enumName && a->constIndex == b->constIndex;
    case Value::Kind::Var:
      return a->varName == b->varName;
    case Value::Kind::InjL:
    case Value::Kind::InjR:
      return valueEqual(a->fst, b->fst);
    case Value::Kind::Pair:
      return valueEqual(a->fst, b->fst) && valueEqual(a->snd, b->snd);
  }
  return false;
}

bool valueLess(const ValuePtr& a, const ValuePtr& b) {
  if (a->kind != b->kind) return a->kind < b->kind;
  switch (a->kind) {
    case Value::Kind::Const:
      if (a->enumName != b->enumName) return a->enumName < b->enumName;
      return a->constIndex < b->constIndex;
    case Value::Kind::Var:
      return a->varName < b->varName;
    case Value::Kind::InjL:
    case Value::Kind::InjR:
      return valueLess(a->fst, b->fst);
    case Value::Kind::Pair:
      if (valueLess(a->fst, b->fst)) return true;
      if (valueLess(b->fst, a->fst)) return false;
      return valueLess(a->snd, b->snd);
  }
  return false;
}

bool isClosed(const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Const:
      return true;
    case Value::Kind::Var:
      return false;
    case Value::Kind::InjL:
    case Value::Kind::InjR:
      return isClosed(v->fst);
    case Value::Kind::Pair:
      return isClosed(v->fst) && isClosed(v->snd);
  }
  return false;
}

int nodeCount(const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Const:
    case Value::Kind::Var:
      return 1;
    case Value::Kind::InjL:
    case Value::Kind::InjR:
      return 1 + nodeCount(v->fst);
    case Value::Kind::Pair:
      return 1 + nodeCount(v->fst) + nodeCount(v->snd);
  }
  return 0;
}

namespace {

void freeVarsRec(const ValuePtr& v, std::vector<std::string>& out) {
  switch (v->kind) {
    case Value::Kind::Const:
      break;
    case Value::Kind::Var:
      out.push_back(v->varName);
      break;
    case Value::Kind::InjL:
    case Value::Kind::InjR:
      freeVarsRec(v->fst, out);
      break;
    case Value::Kind::Pair:
      freeVarsRec(v->fst, out);
      freeVarsRec(v->snd, out);
      break;
  }
}

}  // namespace

std::vector<std::string> freeVars(const ValuePtr& v) {
  std::vector<std::string> out;
  freeVarsRec(v, out);
  return out;
}

namespace {

void printValueRec(std::ostringstream& out, const ValuePtr& v) {
  switch (v->kind) {
    case Value::Kind::Const:
      out << v->constName;
      break;
    case Value::Kind::Var:
      out << v->varName;
      break;
    case Value::Kind::InjL:
      out << "inl ";
      printValueRec(out, v->fst);
      break;
    case Value::Kind::InjR:
      out << "inr ";
      printValueRec(out, v->fst);
      break;
    case Value::Kind::Pair:
      out << "(";
      printValueRec(out, v->fst);
      out << ", ";
      printValueRec(out, v->snd);
      out << ")";
      break;
  }
}

}  // namespace

std::string printValue(const ValuePtr& v) {
  std::ostringstream out;
  printValueRec(out, v);
  return out.str();
}

// ---- isos ----

bool isoEqual(const Iso& a, const Iso& b) {
  if (a.clauses.size() != b.clauses.size()) return false;
  for (size_t i = 0; i < a.clauses.size(); ++i) {
    if (!valueEqual(a.clauses[i].lhs, b.clauses[i].lhs)) return false;
    if (!valueEqual(a.clauses[i].rhs, b.clauses[i].rhs)) return false;
  }
  return true;
}

int nodeCount(const Iso& iso) {
  int n = 0;
  for (const auto& c : iso.clauses) n += nodeCount(c.lhs) + nodeCount(c.rhs);
  return n;
}

std::string printIso(const Iso& iso) {
  std::ostringstream out;
  out << "{";
  for (const auto& c : iso.clauses)
    out << " | " << printValue(c.lhs) << " <-> " << printValue(c.rhs);
  out << " }";
  return out.str();
}

// ---- terms ----

TermPtr valTerm(ValuePtr v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Val;
  t->value = std::move(v);
  return t;
}

TermPtr appTerm(IsoPtr iso, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->iso = std::move(iso);
  t->arg = std::move(arg);
  return t;
}

TermPtr appTerm(std::string name, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->isoName = std::move(name);
  t->arg = std::move(arg);
  return t;
}

TermPtr appTerm(IsoPtr iso, std::string name, std::optional<IsoType> type, TermPtr arg) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->iso = std::move(iso);
  t->isoName = std::move(name);
  t->isoType = std::move(type);
  t->arg = std::move(arg);
  return t;
}

bool termEqual(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Val) return valueEqual(a->value, b->value);
  if (a->isoName != b->isoName) return false;
  if (a->isoName.empty()) {
    if (!a->iso || !b->iso || !isoEqual(*a->iso, *b->iso)) return false;
  }
  return termEqual(a->arg, b->arg);
}

int countApps(const TermPtr& t) {
  return t->kind == Term::Kind::Val ? 0 : 1 + countApps(t->arg);
}

int nodeCount(const TermPtr& t) {
  if (t->kind == Term::Kind::Val) return nodeCount(t->value);
  int iso = t->iso ? nodeCount(*t->iso) : 1;
  return 1 + iso + nodeCount(t->arg);
}

std::string printTerm(const TermPtr& t) {
  if (t->kind == Term::Kind::Val) return printValue(t->value);
  std::string head = t->isoName.empty() ? printIso(*t->iso) : t->isoName;
  std::string arg = printTerm(t->arg);
  if (t->arg->kind == Term::Kind::App) arg = "(" + arg + ")";
  return head + " " + arg;
}

// ---- programs ----

const EnumDecl* Program::findEnum(const std::string& name) const {
  for (const auto& e : enums)
    if (e.name == name) return &e;
  return nullptr;
}

const IsoDef* Program::findDef(const std::string& name) const {
  for (const auto& d : defs)
    if (d.name == name) return &d;
  return nullptr;
}

std::optional<std::pair<std::string, int>> Program::findConstant(const std::string& name) const {
  for (const auto& e : enums)
    for (size_t i = 0; i < e.constants.size(); ++i)
      if (e.constants[i] == name) return std::make_pair(e.name, static_cast<int>(i));
  return std::nullopt;
}

Program emptyProgram() {
  Program p;
  p.enums.push_back(EnumDecl{"unit", {"tt"}, true});
  return p;
}

std::string printProgram(const Program& p) {
  std::ostringstream out;
  for (const auto& e : p.enums) {
    if (e.builtin) continue;
    out << "enum " << e.name << " = { ";
    for (size_t i = 0; i < e.constants.size(); ++i) {
      if (i) out << ", ";
      out << e.constants[i];
    }
    out << " }\n";
  }
  for (const auto& d : p.defs) {
    out << "iso " << d.name << " : " << printType(d.type.lhs) << " <-> " << printType(d.type.rhs)
        << " {\n";
    for (const auto& c : d.iso.clauses)
      out << "  | " << printValue(c.lhs) << " <-> " << printValue(c.rhs) << "\n";
    out << "}\n";
  }
  if (p.main) out << "main = " << printTerm(*p.main) << "\n";
  return out.str();
}

bool programEqual(const Program& a, const Program& b) {
  if (a.enums != b.enums) return false;
  if (a.defs.size() != b.defs.size()) return false;
  for (size_t i = 0; i < a.defs.size(); ++i) {
    const auto& da = a.defs[i];
    const auto& db = b.defs[i];
    if (da.name != db.name || !typeEqual(da.type.lhs, db.type.lhs) ||
        !typeEqual(da.type.rhs, db.type.rhs) || !isoEqual(da.iso, db.iso))
      return false;
  }
  if (a.main.has_value() != b.main.has_value()) return false;
  if (a.main && !termEqual(*a.main, *b.main)) return false;
  return true;
}

}  // namespace revcat::lang
