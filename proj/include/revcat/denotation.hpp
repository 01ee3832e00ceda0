#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revcat/category.hpp"
#include "revcat/eval.hpp"
#include "revcat/generator.hpp"
#include "revcat/laws.hpp"
#include "revcat/nondecomp.hpp"
#include "revcat/syntax.hpp"
#include "revcat/typing.hpp"

// Denotational semantics of the language in a chosen category instance:
// types as objects, values-in-context as morphisms out of the context
// object, isos as joins of clause composites, terms as points. The standard
// model (the evaluator-induced partial injection over closed values) serves
// as an independent oracle in FinPInj, and the harness functions check the
// orthogonality, substitution, soundness, and adequacy statements.

namespace revcat::sem {

struct EnumChoice {
  cat::Obj obj;                  // [[alpha]]
  std::vector<cat::Mor> points;  // one total point 1 -> [[alpha]] per constant
};

class DenotationEnv {
 public:
  // Canonical choices: the builtin unit maps to the tensor unit 1 with point
  // id_1; an n-constant enum maps to n atom labels with single-pair points
  // (annotated instances carry the full carrier, so points are total).
  // Validates totality and pairwise disjointness of images.
  static DenotationEnv canonical(cat::CategoryPtr category, const lang::Program& prog);

  const cat::Category& category() const { return *category_; }
  cat::CategoryPtr categoryPtr() const { return category_; }
  const lang::Program& program() const { return prog_; }
  const EnumChoice& choice(const std::string& enumName) const;

  cat::Obj denoteType(const lang::TypePtr& a) const;
  cat::Obj denoteContext(const lang::TypingContext& ctx) const;  // left-nested, sorted

 private:
  cat::CategoryPtr category_;
  lang::Program prog_;
  std::map<std::string, EnumChoice> choices_;
};

// Context realization shapes: binary trees whose leaves are typed variables
// or the tensor unit. The canonical shape of a context is the left-nested
// tree over its (lexicographically sorted) variables.
struct CtxShape {
  enum class Kind { Unit, Var, Node };
  Kind kind = Kind::Unit;
  std::string var;
  lang::TypePtr type;
  std::shared_ptr<const CtxShape> left, right;

  static CtxShape unitLeaf();
  static CtxShape varLeaf(std::string name, lang::TypePtr type);
  static CtxShape node(CtxShape l, CtxShape r);
  static CtxShape canonical(const lang::TypingContext& ctx);
};

cat::Obj realizeShape(const DenotationEnv& env, const CtxShape& shape);

// The total isomorphism between two realizations of the same typed-variable
// set, computed as the evident relabeling (it equals the composite of
// symmetries, associators, and unitors realizing the reordering).
cat::Mor contextPermutation(const DenotationEnv& env, const CtxShape& from, const CtxShape& to);

cat::Label valueToLabel(const lang::ValuePtr& v);

cat::Mor denoteValue(const DenotationEnv& env, const lang::TypingContext& ctx,
                     const lang::ValuePtr& v, const lang::TypePtr& a);

// join over clauses of [[rhs]] . inv([[lhs]]); asserts pairwise inverse
// compatibility of the clause composites before joining.
cat::Mor denoteIso(const DenotationEnv& env, const lang::Iso& iso, const lang::TypePtr& a,
                   const lang::TypePtr& b);

cat::Mor denoteTerm(const DenotationEnv& env, const lang::TermPtr& t, const lang::TypePtr& a);

// The evaluator-induced partial injection over enumerated closed values,
// expressed in the env's instance under the canonical value<->label
// bijection. Independent of denoteIso's composition path.
cat::Mor standardModel(const DenotationEnv& env, const lang::Iso& iso, const lang::TypePtr& a,
                       const lang::TypePtr& b);

// ---- type universes for the exhaustive harnesses ----

// All types over the declared enums of syntactic depth <= maxDepth whose
// closed-value space has at most maxValues elements (deduplicated).
std::vector<lang::TypePtr> typeUniverse(const lang::Program& prog, int maxDepth, int maxValues);

// ---- harness checks ----

// Orthogonal patterns denote morphisms with disjoint image idempotents;
// checked exhaustively over the pattern pairs of the given types.
cat::LawReport checkOrthogonalityLemma(const DenotationEnv& env,
                                       const std::vector<lang::TypePtr>& types,
                                       int maxPatternNodes);

// Soundness, the substitution decomposition, and clause selection along
// every reduction step of generated programs in the given instance.
cat::LawReport checkSoundness(cat::CategoryPtr category, uint64_t seed, int programCount,
                              const lang::GenBounds& bounds);

// Substitution and clause selection only, on the match instances arising
// in the runs.
cat::LawReport checkSubstitutionLemma(cat::CategoryPtr category, uint64_t seed, int programCount,
                                      const lang::GenBounds& bounds);

struct AdequacyReport {
  bool preconditionMet = false;  // id_1 linearly non-decomposable
  bool reportOnly = false;       // precondition unmet: record, do not gate
  long long types = 0;
  long long terms = 0;
  long long pairs = 0;
  long long stuckStuckPairs = 0;  // the strict/extended deviations
  long long strictExtendedDeviations = 0;
  std::vector<std::string> violations;  // extended-equivalence vs denotation
  bool pass() const { return reportOnly || violations.empty(); }
  std::string toText() const;
};

// Adequacy on the minimal language: operational equivalence (extended so
// two stuck terms are equivalent) coincides with denotational equality,
// exhaustively over closed terms of size <= maxTermSize per type.
AdequacyReport checkAdequacy(cat::CategoryPtr category, int maxTermSize, int maxTypeValues);

struct ValueClassReport {
  cat::DecompClass id1;
  bool preconditionMet = false;  // id_1 at least weakly non-decomposable
  std::string flavor;            // strongest flavor of id_1 that was checked
  long long valuesChecked = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
  std::string toText() const;
};

// If id_1 is weakly/linearly/strongly non-decomposable, every
// closed minimal-language value denotation is non-decomposable at the same
// flavor (over the given types).
ValueClassReport checkValueNonDecomposability(cat::CategoryPtr category,
                                              const std::vector<lang::TypePtr>& types);

}  // namespace revcat::sem
