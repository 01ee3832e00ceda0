#pragma once

#include <optional>
#include <string>
#include <vector>

#include "revcat/syntax.hpp"

// Linear type checking: pattern context inference, value checking with exact
// context consumption, the orthogonality judgment, iso rule checking, and
// closed-term checking. Patterns in a clause are checked against the same
// context on both sides; exhaustivity is deliberately not required.

namespace revcat::lang {

// Ordered association var -> type, kept sorted by variable name.
struct TypingContext {
  std::vector<std::pair<std::string, TypePtr>> entries;

  const TypePtr* find(const std::string& name) const;
  // false if the name is already bound
  bool insert(const std::string& name, TypePtr type);
  bool empty() const { return entries.empty(); }
  size_t size() const { return entries.size(); }
};

bool contextEqual(const TypingContext& a, const TypingContext& b);
std::string printContext(const TypingContext& ctx);

struct TypeError {
  enum class Kind {
    UnboundVar,
    DuplicateVar,
    ContextMismatch,
    ShapeMismatch,
    OverlappingPatterns,
    NonClosedTerm,
    UnknownConstant,
    UnknownIso,
    CannotInfer,
  };
  enum class Side { None, Left, Right };

  Kind kind;
  std::string detail;
  std::string where;  // def name or "main"
  int clauseI = -1, clauseJ = -1;
  Side side = Side::None;

  std::string render() const;
};

using TypeErrors = std::vector<TypeError>;
const char* typeErrorKindName(TypeError::Kind k);

// The unique context Delta with Delta |-v v : a, if any.
struct CtxResult {
  std::optional<TypingContext> ctx;
  TypeErrors errors;
  bool ok() const { return errors.empty(); }
};
CtxResult inferPatternContext(const Program& prog, const ValuePtr& v, const TypePtr& a);

// ok iff Delta |-v v : a with every variable of Delta used exactly once.
TypeErrors checkValue(const Program& prog, const TypingContext& ctx, const ValuePtr& v,
                      const TypePtr& a);

// The seven syntactic orthogonality rules; false means "not derivable".
bool checkOrthogonal(const ValuePtr& v1, const ValuePtr& v2);

TypeErrors checkIso(const Program& prog, const Iso& iso, const TypePtr& a, const TypePtr& b);

// Bottom-up type synthesis for closed terms; nullopt when ambiguous
// (injections or variables at the top of a value).
std::optional<TypePtr> synthTerm(const Program& prog, const TermPtr& t);

TypeErrors checkTerm(const Program& prog, const TermPtr& t, const TypePtr& a);

// Whole-program checking. Named iso references in main are expanded to
// literals (defs are non-recursive sugar) and App nodes get type annotations.
struct CheckedProgram {
  Program program;  // expanded & annotated
  TypeErrors errors;
  std::optional<TypePtr> mainType;
  bool ok() const { return errors.empty(); }
};
CheckedProgram checkProgram(const Program& prog);

}  // namespace revcat::lang
