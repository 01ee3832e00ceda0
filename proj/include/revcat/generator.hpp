#pragma once

#include <cstdint>
#include <optional>

#include "revcat/syntax.hpp"
#include "revcat/util.hpp"

// Seeded stream of well-typed programs for the metatheory and semantics
// suites. Isos draw their clause patterns from enumerated pattern pools and
// keep only pairwise-orthogonal picks; every emitted program is post-checked
// by the type checker.

namespace revcat::lang {

struct GenBounds {
  int maxClauses = 4;
  int maxPatternDepth = 3;
  int maxTermDepth = 3;
  bool extraEnums = true;  // allow enums beyond the builtin unit
};

class ProgramGenerator {
 public:
  ProgramGenerator(uint64_t seed, GenBounds bounds);

  // nullopt when the bounds are degenerate (empty stream).
  std::optional<Program> next();

 private:
  TypePtr randomType(const Program& prog, int depth);
  std::optional<Iso> randomIso(const Program& prog, const TypePtr& a, const TypePtr& b);
  TermPtr randomTerm(Program& prog, const TypePtr& a, int depth, int& defCounter);

  util::Rng rng_;
  GenBounds bounds_;
};

}  // namespace revcat::lang
