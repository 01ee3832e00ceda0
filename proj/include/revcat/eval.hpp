#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "revcat/syntax.hpp"

// Call-by-value operational semantics: matching, substitution, deterministic
// small-step reduction, syntactic inversion, and exhaustive enumeration of
// the (finite) closed-value space per type. Getting stuck is a normal
// outcome: the language is deliberately partial.

namespace revcat::lang {

struct Valuation {
  std::map<std::string, ValuePtr> bind;  // support = key set; values closed
};

// The unique valuation sigma with sigma[pattern] = w, or nullopt (NoMatch).
// Throws std::logic_error on a non-linear pattern (unreachable after typing).
std::optional<Valuation> matchValue(const ValuePtr& pattern, const ValuePtr& w);

// Homomorphic replacement; throws std::logic_error on an unbound variable.
ValuePtr substitute(const Valuation& sigma, const ValuePtr& v);

struct EvalOutcome {
  enum class Kind { Reduced, Value, Stuck };
  Kind kind;
  TermPtr term;    // Reduced: the next term; Stuck: the stuck application
  ValuePtr value;  // Value
};

EvalOutcome stepTerm(const TermPtr& t);

struct EvalResult {
  bool stuck = false;
  ValuePtr value;    // set when !stuck
  TermPtr stuckAt;   // set when stuck
  int steps = 0;
};

// Iterates stepTerm to a fixed outcome; asserts steps <= #App nodes.
EvalResult evalTerm(const TermPtr& t);

// Clause sides swapped; invertIso(invertIso(w)) == w.
Iso invertIso(const Iso& iso);
IsoDef invertDef(const IsoDef& def);

// All closed values of the type in canonical order: enum index order, inl
// before inr, pairs lexicographic left-major.
std::vector<ValuePtr> enumerateClosedValues(const Program& prog, const TypePtr& a);

// All linear patterns of the type with at most maxNodes value nodes,
// variables named x0, x1, ... in left-to-right order.
std::vector<ValuePtr> enumeratePatterns(const Program& prog, const TypePtr& a, int maxNodes);

}  // namespace revcat::lang
