#include <stdexcept>

#include "graph_common.hpp"
#include "revcat/models.hpp"

// PId_S: one object (the carrier S), morphisms the subsets Y of S with
// composition by intersection. Realized as the partial identities on S, its
// image under the evident embedding into FinPInj; the zero is the empty
// subset and join is union.

namespace revcat::cat {

namespace {

using detail::Graph;

class PIdSCategory final : public Category {
 public:
  explicit PIdSCategory(std::vector<std::string> carrier)
      : carrier_(std::move(carrier)), object_(Obj::atoms(carrier_)) {
    if (carrier_.empty()) throw std::invalid_argument("pids: carrier must be nonempty");
  }

  std::string name() const override { return "pids"; }

  Mor identity(const Obj& a) const override {
    requireObject(a);
    return make(detail::identityGraph(object_));
  }

  Mor compose(const Mor& g, const Mor& f) const override {
    return make(detail::composeGraphs(g, f));
  }

  Mor restriction(const Mor& f) const override { return f; }
  Mor inverse(const Mor& f) const override { return f; }

  Mor zero(const Obj& dom, const Obj& cod) const override {
    requireObject(dom);
    requireObject(cod);
    return make({});
  }

  Mor join(const std::vector<Mor>& family, const Obj& dom, const Obj& cod) const override {
    requireObject(dom);
    requireObject(cod);
    std::vector<const Graph*> graphs;
    for (const auto& f : family) graphs.push_back(&f.graph);
    // sub-identities are always pairwise compatible; the union stays one
    return make(detail::unionGraphs(graphs));
  }

  bool homEnumerable(const Obj&, const Obj&) const override {
    return carrier_.size() <= 16;
  }

  std::vector<Mor> enumerateHom(const Obj& a, const Obj& b) const override {
    requireObject(a);
    requireObject(b);
    std::vector<Mor> out;
    size_t n = carrier_.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
      Graph g;
      for (size_t k = 0; k < n; ++k)
        if (mask & (size_t{1} << k)) {
          Label l = Label::atom(carrier_[k]);
          g.emplace_back(l, l);
        }
      sortGraph(g);
      out.push_back(make(std::move(g)));
    }
    return out;
  }

  std::vector<Obj> universeObjects() const override { return {object_}; }

  // intersection is a (strict) monoidal structure with unit the object itself
  bool hasTensor() const override { return true; }
  Obj unitObj() const override { return object_; }
  Obj tensorObj(const Obj& a, const Obj& b) const override {
    requireObject(a);
    requireObject(b);
    return object_;
  }
  Mor tensorMor(const Mor& f, const Mor& g) const override {
    return make(detail::composeGraphs(g, f));
  }
  Mor associator(const Obj&, const Obj&, const Obj&) const override { return identity(object_); }
  Mor symmetry(const Obj&, const Obj&) const override { return identity(object_); }
  Mor leftUnitor(const Obj&) const override { return identity(object_); }
  Mor rightUnitor(const Obj&) const override { return identity(object_); }

  bool supportsGraphMorphisms() const override { return true; }
  Mor morFromGraph(const Obj& dom, const Obj& cod, Graph graph) const override {
    requireObject(dom);
    requireObject(cod);
    sortGraph(graph);
    detail::validateGraph(dom, cod, graph);
    for (const auto& [x, y] : graph)
      if (!(x == y)) throw std::invalid_argument("pids: morphisms are partial identities");
    return make(std::move(graph));
  }

  Obj randomObj(util::Rng&) const override { return object_; }

  Mor randomMor(util::Rng& rng, const Obj& dom, const Obj& cod) const override {
    requireObject(dom);
    requireObject(cod);
    Graph g;
    for (const auto& x : object_.elems())
      if (rng.chance(0.5)) g.emplace_back(x, x);
    return make(std::move(g));
  }

  Mor randomSubMor(util::Rng& rng, const Mor& f) const override {
    Graph g;
    for (const auto& p : f.graph)
      if (rng.chance(0.6)) g.push_back(p);
    return make(std::move(g));
  }

 private:
  void requireObject(const Obj& a) const {
    if (!(a == object_)) throw std::logic_error("pids: unknown object " + a.str());
  }

  Mor make(Graph graph) const {
    Mor f;
    f.dom = object_;
    f.cod = object_;
    f.graph = std::move(graph);
    return f;
  }

  std::vector<std::string> carrier_;
  Obj object_;
};

}  // namespace

CategoryPtr pIdS(std::vector<std::string> carrier) {
  return std::make_shared<PIdSCategory>(std::move(carrier));
}

}  // namespace revcat::cat
