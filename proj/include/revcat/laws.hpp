#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "revcat/category.hpp"

// Executable axiom suites for restriction structure, partial inverses,
// joins, zero, order composition, rig structure, and the disjointness
// lemmas. Suites run either exhaustively over the instance's probe universe
// or on seeded samples; all comparisons are exact morphism equality.

namespace revcat::cat {

struct LawFailure {
  std::string inputs;
  std::string lhs, rhs;
};

struct LawResult {
  std::string law;
  long long cases = 0;
  std::vector<LawFailure> failures;
  bool informational = false;  // recorded, never gates pass()
  bool pass() const { return informational || failures.empty(); }
};

struct LawReport {
  std::string instance;
  std::vector<LawResult> laws;
  bool pass() const;
  void add(LawResult r) { laws.push_back(std::move(r)); }
  void merge(const LawReport& other);
  nlohmann::ordered_json toJson() const;
  std::string toText() const;
};

struct SampleOptions {
  uint64_t seed = 0;
  int cases = 1000;
  // default: exhaustive for the fully finite instances (pids, subpid, the
  // table categories), seeded otherwise
  std::optional<bool> exhaustive;
};

struct LeqSample {
  Mor f, g;  // f <= g
  std::vector<Mor> post, pre;
};

struct CompatFamilySample {
  std::vector<Mor> family;  // pairwise inverse compatible, parallel
  std::vector<Mor> upperBounds;
  std::vector<Mor> post, pre;
};

struct DisjointSample {
  Mor f, g;  // parallel, disjoint restrictions
  std::vector<Mor> post1, post2, pre;
};

struct Samples {
  bool exhaustive = false;
  std::vector<Mor> morphisms;
  std::vector<std::pair<Mor, Mor>> sameSource;  // shared dom
  std::vector<std::pair<Mor, Mor>> composable;  // (h, f): h after f
  std::vector<LeqSample> leqTriples;
  std::vector<CompatFamilySample> families;
  std::vector<DisjointSample> disjointPairs;
  std::vector<std::pair<Obj, Obj>> homPairs;
};

Samples buildSamples(const Category& C, const SampleOptions& options);

LawReport checkRestrictionAxioms(const Category& C, const Samples& s);
LawReport checkInverseAxioms(const Category& C, const Samples& s);
LawReport checkJoinAxioms(const Category& C, const Samples& s);
LawReport checkZeroLaws(const Category& C, const Samples& s);
LawReport checkOrderComposition(const Category& C, const Samples& s);
LawReport checkRigStructure(const Category& C, const Samples& s);
LawReport checkDisjointnessLemmas(const Category& C, const Samples& s);

LawReport checkAllLaws(const Category& C, const SampleOptions& options);

}  // namespace revcat::cat
