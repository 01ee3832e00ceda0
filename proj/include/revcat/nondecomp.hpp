#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revcat/category.hpp"
#include "revcat/laws.hpp"

// Non-decomposability classifiers on hom-enumerable instances, the
// consistency and pattern-matching-property deciders, and the entailment
// bridge between them. Verdicts are exact: classification refuses to run
// when the hom-set cannot be enumerated.

namespace revcat::cat {

struct DecompClass {
  bool snd = false, lnd = false, wnd = false;
};

// exactly { g in Hom(dom h, cod h) : g <= h }
std::vector<Mor> belowSet(const Category& C, const Mor& h);

// No decomposition h = f v g into two distinct nonzero morphisms;
// equivalently belowSet(h) is contained in {0, h} (cross-checked).
bool isSND(const Category& C, const Mor& h);
// belowSet(h) is totally ordered by <=.
bool isLND(const Category& C, const Mor& h);
// every pair joining to h is comparable.
bool isWND(const Category& C, const Mor& h);

// All three flags; asserts the implication chain snd => lnd => wnd.
DecompClass classify(const Category& C, const Mor& h);

enum class Flavor { Weak, Linear, Strong };
const char* flavorName(Flavor f);
std::optional<Flavor> flavorByName(const std::string& name);

struct ConsistencyCounterexample {
  Mor h, f, composite;  // h non-decomposable, f.h is not
};

struct ConsistencyReport {
  Flavor flavor;
  bool verdict = true;
  std::optional<ConsistencyCounterexample> counterexample;
  long long cases = 0;
  nlohmann::ordered_json toJson(const Category& C) const;
  std::string toText(const Category& C) const;
};

// For every flavor-non-decomposable h : A -> B over the probe universe and
// every f : B -> C, the composite f.h is flavor-non-decomposable.
ConsistencyReport checkConsistency(const Category& C, Flavor flavor);

struct PatternMatchingCounterexample {
  Mor f, g, h, joined, composite;  // (f v g).h differs from both f.h and g.h
};

struct PatternMatchingReport {
  Flavor flavor;
  bool verdict = true;
  std::optional<PatternMatchingCounterexample> counterexample;
  long long cases = 0;
  nlohmann::ordered_json toJson(const Category& C) const;
  std::string toText(const Category& C) const;
};

// For all compatible f, g (whose join exists) and flavor-non-decomposable h:
// (f v g).h equals f.h or g.h.
PatternMatchingReport checkPatternMatchingProperty(const Category& C, Flavor flavor);

// Decides consistency and the pattern-matching property per flavor and
// checks the entailments between them as booleans.
LawReport verifyTheoremBridge(const Category& C);

}  // namespace revcat::cat
