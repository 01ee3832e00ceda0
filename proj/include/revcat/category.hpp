#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "revcat/label.hpp"
#include "revcat/util.hpp"

// The uniform interface of the join inverse (rig) category instances:
// composition, restriction, partial inverse, joins of compatible families,
// zero, and optional monoidal / disjointness-tensor structure. Morphism
// equality is extensional throughout.

namespace revcat::cat {

// Annotations are subsets of the instance's carrier S, stored as bitmasks.
using AnnMask = uint32_t;
using AnnMap = std::map<Label, AnnMask>;

// One concrete morphism value. Graph-backed instances fill `graph` (and
// `ann` in the PId_S^(+)-family); finite-table instances identify morphisms
// by `tableIndex` alone.
struct Mor {
  Obj dom, cod;
  std::vector<std::pair<Label, Label>> graph;  // sorted by source label
  std::optional<AnnMap> ann;                   // keys == sources of graph
  int tableIndex = -1;

  bool operator==(const Mor& other) const;
  bool operator<(const Mor& other) const;
  std::optional<Label> apply(const Label& src) const;
};

void sortGraph(std::vector<std::pair<Label, Label>>& graph);

struct IncompatibleJoinError : std::runtime_error {
  explicit IncompatibleJoinError(const std::string& what) : std::runtime_error(what) {}
};

class Category {
 public:
  virtual ~Category() = default;
  virtual std::string name() const = 0;

  virtual Mor identity(const Obj& a) const = 0;
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;  // g after f
  virtual Mor restriction(const Mor& f) const = 0;
  virtual Mor inverse(const Mor& f) const = 0;
  virtual Mor zero(const Obj& dom, const Obj& cod) const = 0;
  // Join of a pairwise compatible parallel family; throws
  // IncompatibleJoinError instead of silently unioning. The empty family
  // yields zero(dom, cod).
  virtual Mor join(const std::vector<Mor>& family, const Obj& dom, const Obj& cod) const = 0;

  // hom enumeration (exact classifiers refuse to run without it)
  virtual bool homEnumerable(const Obj& a, const Obj& b) const = 0;
  virtual std::vector<Mor> enumerateHom(const Obj& a, const Obj& b) const = 0;
  // finite probe universe for whole-category checks
  virtual std::vector<Obj> universeObjects() const = 0;

  // monoidal (tensor) structure
  virtual bool hasTensor() const { return false; }
  virtual Obj unitObj() const { throw std::logic_error(name() + ": no tensor"); }
  virtual Obj tensorObj(const Obj&, const Obj&) const { throw std::logic_error(name() + ": no tensor"); }
  virtual Mor tensorMor(const Mor&, const Mor&) const { throw std::logic_error(name() + ": no tensor"); }
  virtual Mor associator(const Obj&, const Obj&, const Obj&) const { throw std::logic_error(name() + ": no tensor"); }
  virtual Mor symmetry(const Obj&, const Obj&) const { throw std::logic_error(name() + ": no tensor"); }
  virtual Mor leftUnitor(const Obj&) const { throw std::logic_error(name() + ": no tensor"); }
  virtual Mor rightUnitor(const Obj&) const { throw std::logic_error(name() + ": no tensor"); }

  // disjointness tensor
  virtual bool hasSum() const { return false; }
  virtual Obj zeroObj() const { throw std::logic_error(name() + ": no sum"); }
  virtual Obj sumObj(const Obj&, const Obj&) const { throw std::logic_error(name() + ": no sum"); }
  virtual Mor sumMor(const Mor&, const Mor&) const { throw std::logic_error(name() + ": no sum"); }
  virtual Mor injLeft(const Obj&, const Obj&) const { throw std::logic_error(name() + ": no sum"); }
  virtual Mor injRight(const Obj&, const Obj&) const { throw std::logic_error(name() + ": no sum"); }
  // delta_{A,B,C} : A (x) (B (+) C) -> (A (x) B) (+) (A (x) C)
  virtual Mor distributor(const Obj&, const Obj&, const Obj&) const { throw std::logic_error(name() + ": no rig"); }

  // graph-backed construction (used by the denotation layer)
  virtual bool supportsGraphMorphisms() const { return false; }
  virtual Mor morFromGraph(const Obj&, const Obj&,
                           std::vector<std::pair<Label, Label>>) const {
    throw std::logic_error(name() + ": no graph morphisms");
  }

  // seeded sampling for the law suites
  virtual Obj randomObj(util::Rng& rng) const = 0;
  virtual Mor randomMor(util::Rng& rng, const Obj& dom, const Obj& cod) const = 0;
  // a random f <= g (sub-graph, shrunk annotations)
  virtual Mor randomSubMor(util::Rng& rng, const Mor& g) const = 0;

  // rendering
  virtual std::string morToString(const Mor& f) const;
  virtual nlohmann::ordered_json morToJson(const Mor& f) const;
  virtual Mor morFromJson(const nlohmann::ordered_json& j) const;
  virtual std::vector<std::string> carrier() const { return {}; }  // annotated families
};

using CategoryPtr = std::shared_ptr<const Category>;

// ---- derived notions ----

// f <= g iff g composed after restriction(f) equals f.
bool leq(const Category& C, const Mor& f, const Mor& g);
// f (smile) g iff f after restriction(g) == g after restriction(f).
bool restrictionCompatible(const Category& C, const Mor& f, const Mor& g);
// f (asymp) g: restriction compatible and so are the partial inverses.
bool inverseCompatible(const Category& C, const Mor& f, const Mor& g);
// disjoint iff restriction(f) after restriction(g) is zero (shared source).
bool disjoint(const Category& C, const Mor& f, const Mor& g);
bool isTotal(const Category& C, const Mor& f);
bool isTotalIso(const Category& C, const Mor& f);
// partial identity on the image: restriction of the partial inverse
Mor rangeIdempotent(const Category& C, const Mor& f);

}  // namespace revcat::cat
