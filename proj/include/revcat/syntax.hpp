#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

// Abstract syntax of the reversible language: enum declarations, value types
// built from + and *, values doubling as patterns, isos (clause lists), and
// closed terms. All nodes are immutable and shared.

namespace revcat::lang {

struct EnumDecl {
  std::string name;
  std::vector<std::string> constants;  // nonempty, pairwise distinct
  bool builtin = false;                // the predeclared `unit` enum
  bool operator==(const EnumDecl&) const = default;
};

// ---- value types ----

struct ValueType;
using TypePtr = std::shared_ptr<const ValueType>;

struct ValueType {
  enum class Kind { Enum, Sum, Prod };
  Kind kind;
  std::string enumName;  // Kind::Enum
  TypePtr left, right;   // Sum / Prod
};

TypePtr enumType(std::string name);
TypePtr sumType(TypePtr l, TypePtr r);
TypePtr prodType(TypePtr l, TypePtr r);
TypePtr unitType();  // enumType("unit")

bool typeEqual(const TypePtr& a, const TypePtr& b);
std::string printType(const TypePtr& t);

struct IsoType {
  TypePtr lhs, rhs;
};

// ---- values / patterns ----

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

struct Value {
  enum class Kind { Const, Var, InjL, InjR, Pair };
  Kind kind;
  std::string enumName;   // Const
  std::string constName;  // Const
  int constIndex = -1;    // Const, 0-based
  std::string varName;    // Var
  ValuePtr fst, snd;      // InjL/InjR use fst; Pair uses both
};

ValuePtr constValue(std::string enumName, std::string constName, int index);
ValuePtr varValue(std::string name);
ValuePtr injl(ValuePtr v);
ValuePtr injr(ValuePtr v);
ValuePtr pairValue(ValuePtr a, ValuePtr b);
ValuePtr ttValue();  // the unit constant

bool valueEqual(const ValuePtr& a, const ValuePtr& b);
bool valueLess(const ValuePtr& a, const ValuePtr& b);  // structural order
bool isClosed(const ValuePtr& v);
int nodeCount(const ValuePtr& v);

// Variable occurrences in first-occurrence order; duplicates preserved so
// linearity violations stay visible.
std::vector<std::string> freeVars(const ValuePtr& v);

std::string printValue(const ValuePtr& v);

// ---- isos ----

struct Clause {
  ValuePtr lhs, rhs;
};

struct Iso {
  std::vector<Clause> clauses;  // nonempty
};
using IsoPtr = std::shared_ptr<const Iso>;

bool isoEqual(const Iso& a, const Iso& b);
int nodeCount(const Iso& iso);
std::string printIso(const Iso& iso);

// ---- terms ----

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Val, App };
  Kind kind;
  ValuePtr value;                  // Val
  IsoPtr iso;                      // App: literal (null before named-def expansion)
  std::string isoName;             // App: def name ("" when anonymous)
  std::optional<IsoType> isoType;  // App: annotation when known
  TermPtr arg;                     // App
};

TermPtr valTerm(ValuePtr v);
TermPtr appTerm(IsoPtr iso, TermPtr arg);         // anonymous literal
TermPtr appTerm(std::string name, TermPtr arg);   // named reference
TermPtr appTerm(IsoPtr iso, std::string name, std::optional<IsoType> type, TermPtr arg);

bool termEqual(const TermPtr& a, const TermPtr& b);
int countApps(const TermPtr& t);
int nodeCount(const TermPtr& t);  // value nodes + 1 per App + clause nodes of literal isos
std::string printTerm(const TermPtr& t);

// ---- programs ----

struct IsoDef {
  std::string name;
  IsoType type;
  Iso iso;
};

struct Program {
  std::vector<EnumDecl> enums;  // builtin unit first
  std::vector<IsoDef> defs;
  std::optional<TermPtr> main;

  const EnumDecl* findEnum(const std::string& name) const;
  const IsoDef* findDef(const std::string& name) const;
  // constant name -> (enum name, index); constant names are unique program-wide
  std::optional<std::pair<std::string, int>> findConstant(const std::string& name) const;
};

Program emptyProgram();  // just the builtin unit enum
std::string printProgram(const Program& p);
bool programEqual(const Program& a, const Program& b);

}  // namespace revcat::lang
