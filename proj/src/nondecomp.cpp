#include "revcat/nondecomp.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace revcat::cat {

std::vector<Mor> belowSet(const Category& C, const Mor& h) {
  if (!C.homEnumerable(h.dom, h.cod))
    throw std::logic_error(C.name() + ": hom-set not enumerable; cannot classify");
  std::vector<Mor> out;
  for (const auto& g : C.enumerateHom(h.dom, h.cod))
    if (leq(C, g, h)) out.push_back(g);
  return out;
}

namespace {

// Decompositions h = f v g range over belowSet(h): join(f, g) = h forces
// f, g <= h by law (6), so the search space is sound.
std::optional<std::pair<Mor, Mor>> findDecomposition(
    const Category& C, const Mor& h,
    const std::function<bool(const Mor&, const Mor&)>& bad) {
  std::vector<Mor> below = belowSet(C, h);
  Mor zero = C.zero(h.dom, h.cod);
  for (size_t i = 0; i < below.size(); ++i) {
    for (size_t j = i; j < below.size(); ++j) {
      const Mor& f = below[i];
      const Mor& g = below[j];
      if (!restrictionCompatible(C, f, g)) continue;
      Mor joined = zero;
      try {
        joined = C.join({f, g}, h.dom, h.cod);
      } catch (const IncompatibleJoinError&) {
        continue;  // the pair has no join; it is not a decomposition
      }
      if (!(joined == h)) continue;
      if (bad(f, g)) return std::make_pair(f, g);
    }
  }
  return std::nullopt;
}

}  // namespace

bool isSND(const Category& C, const Mor& h) {
  Mor zero = C.zero(h.dom, h.cod);
  return !findDecomposition(C, h, [&](const Mor& f, const Mor& g) {
            return !(f == g) && !(f == zero) && !(g == zero);
          }).has_value();
}

bool isLND(const Category& C, const Mor& h) {
  std::vector<Mor> below = belowSet(C, h);
  for (size_t i = 0; i < below.size(); ++i)
    for (size_t j = i + 1; j < below.size(); ++j)
      if (!leq(C, below[i], below[j]) && !leq(C, below[j], below[i])) return false;
  return true;
}

bool isWND(const Category& C, const Mor& h) {
  return !findDecomposition(C, h, [&](const Mor& f, const Mor& g) {
            return !leq(C, f, g) && !leq(C, g, f);
          }).has_value();
}

DecompClass classify(const Category& C, const Mor& h) {
  DecompClass out;
  out.snd = isSND(C, h);
  out.lnd = isLND(C, h);
  out.wnd = isWND(C, h);
  if ((out.snd && !out.lnd) || (out.lnd && !out.wnd))
    throw std::logic_error("classify: snd => lnd => wnd violated (classifier bug)");
  // cross-oracle: snd iff belowSet(h) within {0, h}
  bool belowChar = true;
  Mor zero = C.zero(h.dom, h.cod);
  for (const auto& g : belowSet(C, h))
    if (!(g == zero) && !(g == h)) belowChar = false;
  if (belowChar != out.snd)
    throw std::logic_error("classify: snd disagrees with the below-set characterization");
  return out;
}

const char* flavorName(Flavor f) {
  switch (f) {
    case Flavor::Weak: return "weak";
    case Flavor::Linear: return "linear";
    case Flavor::Strong: return "strong";
  }
  return "?";
}

std::optional<Flavor> flavorByName(const std::string& name) {
  if (name == "weak") return Flavor::Weak;
  if (name == "linear") return Flavor::Linear;
  if (name == "strong") return Flavor::Strong;
  return std::nullopt;
}

namespace {

bool nonDecomposableAt(const Category& C, const Mor& h, Flavor flavor,
                       std::map<Mor, DecompClass>& cache) {
  auto it = cache.find(h);
  if (it == cache.end()) it = cache.emplace(h, classify(C, h)).first;
  switch (flavor) {
    case Flavor::Weak: return it->second.wnd;
    case Flavor::Linear: return it->second.lnd;
    case Flavor::Strong: return it->second.snd;
  }
  return false;
}

}  // namespace

ConsistencyReport checkConsistency(const Category& C, Flavor flavor) {
  ConsistencyReport report;
  report.flavor = flavor;
  std::map<Mor, DecompClass> cache;
  std::vector<Obj> objs = C.universeObjects();
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      for (const auto& h : C.enumerateHom(a, b)) {
        if (!nonDecomposableAt(C, h, flavor, cache)) continue;
        for (const auto& c : objs) {
          for (const auto& f : C.enumerateHom(b, c)) {
            ++report.cases;
            Mor composite = C.compose(f, h);
            if (!nonDecomposableAt(C, composite, flavor, cache)) {
              report.verdict = false;
              if (!report.counterexample)
                report.counterexample = ConsistencyCounterexample{h, f, composite};
            }
          }
        }
      }
    }
  }
  return report;
}

PatternMatchingReport checkPatternMatchingProperty(const Category& C, Flavor flavor) {
  PatternMatchingReport report;
  report.flavor = flavor;
  std::map<Mor, DecompClass> cache;
  std::vector<Obj> objs = C.universeObjects();
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      std::vector<Mor> hom = C.enumerateHom(a, b);
      // compatible pairs whose join exists
      std::vector<std::pair<std::pair<Mor, Mor>, Mor>> joins;
      for (size_t i = 0; i < hom.size(); ++i) {
        for (size_t j = i; j < hom.size(); ++j) {
          if (!restrictionCompatible(C, hom[i], hom[j])) continue;
          try {
            joins.push_back({{hom[i], hom[j]}, C.join({hom[i], hom[j]}, a, b)});
          } catch (const IncompatibleJoinError&) {
          }
        }
      }
      for (const auto& c : objs) {
        for (const auto& h : C.enumerateHom(c, a)) {
          if (!nonDecomposableAt(C, h, flavor, cache)) continue;
          for (const auto& [pair, joined] : joins) {
            ++report.cases;
            Mor lhs = C.compose(joined, h);
            Mor fh = C.compose(pair.first, h);
            Mor gh = C.compose(pair.second, h);
            if (!(lhs == fh) && !(lhs == gh)) {
              report.verdict = false;
              if (!report.counterexample)
                report.counterexample =
                    PatternMatchingCounterexample{pair.first, pair.second, h, joined, lhs};
            }
          }
        }
      }
    }
  }
  return report;
}

nlohmann::ordered_json ConsistencyReport::toJson(const Category& C) const {
  nlohmann::ordered_json j;
  j["instance"] = C.name();
  j["flavor"] = flavorName(flavor);
  j["consistent"] = verdict;
  j["cases"] = cases;
  if (counterexample) {
    nlohmann::ordered_json ce;
    ce["h"] = C.morToString(counterexample->h);
    ce["f"] = C.morToString(counterexample->f);
    ce["f.h"] = C.morToString(counterexample->composite);
    j["counterexample"] = ce;
  }
  return j;
}

std::string ConsistencyReport::toText(const Category& C) const {
  std::ostringstream out;
  out << C.name() << " is " << (verdict ? "" : "not ") << flavorName(flavor) << "ly consistent ("
      << cases << " cases)\n";
  if (counterexample)
    out << "  counterexample: h = " << C.morToString(counterexample->h)
        << ", f = " << C.morToString(counterexample->f)
        << ", f.h = " << C.morToString(counterexample->composite) << " is decomposable\n";
  return out.str();
}

nlohmann::ordered_json PatternMatchingReport::toJson(const Category& C) const {
  nlohmann::ordered_json j;
  j["instance"] = C.name();
  j["flavor"] = flavorName(flavor);
  j["pattern_matching"] = verdict;
  j["cases"] = cases;
  if (counterexample) {
    nlohmann::ordered_json ce;
    ce["f"] = C.morToString(counterexample->f);
    ce["g"] = C.morToString(counterexample->g);
    ce["h"] = C.morToString(counterexample->h);
    ce["f_join_g"] = C.morToString(counterexample->joined);
    ce["(f_join_g).h"] = C.morToString(counterexample->composite);
    j["counterexample"] = ce;
  }
  return j;
}

std::string PatternMatchingReport::toText(const Category& C) const {
  std::ostringstream out;
  out << C.name() << " is " << (verdict ? "" : "not ") << "a " << flavorName(flavor)
      << "ly pattern-matching category (" << cases << " cases)\n";
  if (counterexample)
    out << "  counterexample: (f v g).h = " << C.morToString(counterexample->composite)
        << " with f = " << C.morToString(counterexample->f)
        << ", g = " << C.morToString(counterexample->g)
        << ", h = " << C.morToString(counterexample->h) << "\n";
  return out.str();
}

LawReport verifyTheoremBridge(const Category& C) {
  LawReport report;
  report.instance = C.name();
  for (Flavor flavor : {Flavor::Weak, Flavor::Linear, Flavor::Strong}) {
    bool consistent = checkConsistency(C, flavor).verdict;
    bool pm = checkPatternMatchingProperty(C, flavor).verdict;
    LawResult fwd;
    fwd.law = std::string(flavorName(flavor)) + " consistency implies the pattern-matching property";
    fwd.cases = 1;
    if (consistent && !pm)
      fwd.failures.push_back({std::string("flavor=") + flavorName(flavor),
                              "consistent=true", "pattern-matching=false"});
    report.add(std::move(fwd));
    if (flavor == Flavor::Weak) {
      LawResult bwd;
      bwd.law = "weak pattern-matching implies weak consistency";
      bwd.cases = 1;
      if (pm && !consistent)
        bwd.failures.push_back({"flavor=weak", "pattern-matching=true", "consistent=false"});
      report.add(std::move(bwd));
    }
  }
  return report;
}

}  // namespace revcat::cat
