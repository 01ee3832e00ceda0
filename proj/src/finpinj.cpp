#include <algorithm>
#include <set>
#include <stdexcept>

#include "graph_common.hpp"
#include "revcat/models.hpp"

namespace revcat::cat {

namespace detail {

Graph composeGraphs(const Mor& g, const Mor& f) {
  if (!(f.cod == g.dom))
    throw std::logic_error("compose: type mismatch (" + f.cod.str() + " vs " + g.dom.str() + ")");
  Graph out;
  for (const auto& [x, y] : f.graph)
    if (auto z = g.apply(y)) out.emplace_back(x, *z);
  return out;  // source-sorted since f.graph is
}

Graph flipGraph(const Graph& f) {
  Graph out;
  out.reserve(f.size());
  for (const auto& [x, y] : f) out.emplace_back(y, x);
  sortGraph(out);
  return out;
}

Graph restrictionGraph(const Graph& f) {
  Graph out;
  out.reserve(f.size());
  for (const auto& [x, y] : f) out.emplace_back(x, x);
  return out;
}

bool injectiveGraph(const Graph& f) {
  std::set<Label> seen;
  for (const auto& [x, y] : f)
    if (!seen.insert(y).second) return false;
  return true;
}

bool sigmaAgree(const Graph& f, const Graph& g) {
  // both sorted by source; merge walk
  size_t i = 0, j = 0;
  while (i < f.size() && j < g.size()) {
    if (f[i].first < g[j].first) {
      ++i;
    } else if (g[j].first < f[i].first) {
      ++j;
    } else {
      if (!(f[i].second == g[j].second)) return false;
      ++i;
      ++j;
    }
  }
  return true;
}

Graph unionGraphs(std::vector<const Graph*> graphs) {
  Graph out;
  for (const Graph* g : graphs) out.insert(out.end(), g->begin(), g->end());
  sortGraph(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void validateGraph(const Obj& dom, const Obj& cod, const Graph& g) {
  std::set<Label> srcs, dsts;
  for (const auto& [x, y] : g) {
    if (!dom.contains(x)) throw std::invalid_argument("graph source not in dom: " + x.str());
    if (!cod.contains(y)) throw std::invalid_argument("graph target not in cod: " + y.str());
    if (!srcs.insert(x).second) throw std::invalid_argument("graph not functional at " + x.str());
    if (!dsts.insert(y).second) throw std::invalid_argument("graph not injective at " + y.str());
  }
}

Graph identityGraph(const Obj& a) {
  Graph out;
  out.reserve(a.size());
  for (const auto& x : a.elems()) out.emplace_back(x, x);
  return out;
}

unsigned long long countPartialInjections(size_t n, size_t m) {
  // sum_k C(n,k) C(m,k) k!, saturating
  const unsigned long long cap = 1ull << 62;
  unsigned long long total = 0;
  size_t kmax = std::min(n, m);
  for (size_t k = 0; k <= kmax; ++k) {
    long double term = 1.0L;
    for (size_t i = 0; i < k; ++i)
      term *= static_cast<long double>(n - i) * static_cast<long double>(m - i) /
              static_cast<long double>(i + 1);
    // term = C(n,k) * C(m,k) * k!  since C(n,k)C(m,k)k! = prod (n-i)(m-i)/(i+1)
    if (term > static_cast<long double>(cap)) return cap;
    total += static_cast<unsigned long long>(term + 0.5L);
    if (total > cap) return cap;
  }
  return total;
}

namespace {

void enumerateRec(const std::vector<Label>& dom, size_t i, const std::vector<Label>& cod,
                  std::vector<bool>& used, Graph& acc, std::vector<Graph>& out) {
  if (i == dom.size()) {
    Graph g = acc;
    sortGraph(g);
    out.push_back(std::move(g));
    return;
  }
  enumerateRec(dom, i + 1, cod, used, acc, out);  // leave dom[i] unmapped
  for (size_t j = 0; j < cod.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    acc.emplace_back(dom[i], cod[j]);
    enumerateRec(dom, i + 1, cod, used, acc, out);
    acc.pop_back();
    used[j] = false;
  }
}

}  // namespace

std::vector<Graph> enumeratePartialInjections(const Obj& a, const Obj& b) {
  std::vector<Graph> out;
  std::vector<bool> used(b.size(), false);
  Graph acc;
  enumerateRec(a.elems(), 0, b.elems(), used, acc, out);
  return out;
}

Graph randomPartialInjection(util::Rng& rng, const Obj& a, const Obj& b) {
  std::vector<Label> free = b.elems();
  rng.shuffle(free);
  Graph out;
  for (const auto& x : a.elems()) {
    if (free.empty() || !rng.chance(0.55)) continue;
    out.emplace_back(x, free.back());
    free.pop_back();
  }
  sortGraph(out);
  return out;
}

}  // namespace detail

namespace {

using detail::Graph;

class FinPInjCategory final : public Category {
 public:
  std::string name() const override { return "finpinj"; }

  Mor identity(const Obj& a) const override { return make(a, a, detail::identityGraph(a)); }

  Mor compose(const Mor& g, const Mor& f) const override {
    return make(f.dom, g.cod, detail::composeGraphs(g, f));
  }

  Mor restriction(const Mor& f) const override {
    return make(f.dom, f.dom, detail::restrictionGraph(f.graph));
  }

  Mor inverse(const Mor& f) const override {
    return make(f.cod, f.dom, detail::flipGraph(f.graph));
  }

  Mor zero(const Obj& dom, const Obj& cod) const override { return make(dom, cod, {}); }

  Mor join(const std::vector<Mor>& family, const Obj& dom, const Obj& cod) const override {
    std::vector<const Graph*> graphs;
    for (const auto& f : family) {
      if (!(f.dom == dom && f.cod == cod))
        throw std::logic_error("join: family not parallel at the stated type");
      graphs.push_back(&f.graph);
    }
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j)
        if (!detail::sigmaAgree(family[i].graph, family[j].graph))
          throw IncompatibleJoinError("join: family is not restriction compatible");
    Graph u = detail::unionGraphs(graphs);
    if (!detail::injectiveGraph(u))
      throw IncompatibleJoinError("join: union is not injective (family not inverse compatible)");
    return make(dom, cod, std::move(u));
  }

  bool homEnumerable(const Obj& a, const Obj& b) const override {
    return detail::countPartialInjections(a.size(), b.size()) <= 100000;
  }

  std::vector<Mor> enumerateHom(const Obj& a, const Obj& b) const override {
    if (!homEnumerable(a, b)) throw std::logic_error("finpinj: hom-set too large to enumerate");
    std::vector<Mor> out;
    for (auto& g : detail::enumeratePartialInjections(a, b)) out.push_back(make(a, b, std::move(g)));
    return out;
  }

  std::vector<Obj> universeObjects() const override {
    return {Obj{}, Obj::atoms({"a"}), Obj::atoms({"a", "b"}), Obj::atoms({"a", "b", "c"})};
  }

  bool hasTensor() const override { return true; }
  Obj unitObj() const override { return unitObject(); }
  Obj tensorObj(const Obj& a, const Obj& b) const override { return tensorOfObjects(a, b); }

  Mor tensorMor(const Mor& f, const Mor& g) const override {
    Graph out;
    for (const auto& [x, y] : f.graph)
      for (const auto& [u, v] : g.graph)
        out.emplace_back(Label::pair(x, u), Label::pair(y, v));
    sortGraph(out);
    return make(tensorObj(f.dom, g.dom), tensorObj(f.cod, g.cod), std::move(out));
  }

  Mor associator(const Obj& a, const Obj& b, const Obj& c) const override {
    Graph out;
    for (const auto& x : a.elems())
      for (const auto& y : b.elems())
        for (const auto& z : c.elems())
          out.emplace_back(Label::pair(Label::pair(x, y), z), Label::pair(x, Label::pair(y, z)));
    sortGraph(out);
    return make(tensorObj(tensorObj(a, b), c), tensorObj(a, tensorObj(b, c)), std::move(out));
  }

  Mor symmetry(const Obj& a, const Obj& b) const override {
    Graph out;
    for (const auto& x : a.elems())
      for (const auto& y : b.elems()) out.emplace_back(Label::pair(x, y), Label::pair(y, x));
    sortGraph(out);
    return make(tensorObj(a, b), tensorObj(b, a), std::move(out));
  }

  Mor leftUnitor(const Obj& a) const override {
    Graph out;
    for (const auto& x : a.elems()) out.emplace_back(Label::pair(Label::unit(), x), x);
    sortGraph(out);
    return make(tensorObj(unitObj(), a), a, std::move(out));
  }

  Mor rightUnitor(const Obj& a) const override {
    Graph out;
    for (const auto& x : a.elems()) out.emplace_back(Label::pair(x, Label::unit()), x);
    sortGraph(out);
    return make(tensorObj(a, unitObj()), a, std::move(out));
  }

  bool hasSum() const override { return true; }
  Obj zeroObj() const override { return Obj{}; }
  Obj sumObj(const Obj& a, const Obj& b) const override { return sumOfObjects(a, b); }

  Mor sumMor(const Mor& f, const Mor& g) const override {
    Graph out;
    for (const auto& [x, y] : f.graph) out.emplace_back(Label::left(x), Label::left(y));
    for (const auto& [u, v] : g.graph) out.emplace_back(Label::right(u), Label::right(v));
    sortGraph(out);
    return make(sumObj(f.dom, g.dom), sumObj(f.cod, g.cod), std::move(out));
  }

  Mor injLeft(const Obj& a, const Obj& b) const override {
    Graph out;
    for (const auto& x : a.elems()) out.emplace_back(x, Label::left(x));
    sortGraph(out);
    return make(a, sumObj(a, b), std::move(out));
  }

  Mor injRight(const Obj& a, const Obj& b) const override {
    Graph out;
    for (const auto& y : b.elems()) out.emplace_back(y, Label::right(y));
    sortGraph(out);
    return make(b, sumObj(a, b), std::move(out));
  }

  Mor distributor(const Obj& a, const Obj& b, const Obj& c) const override {
    Graph out;
    for (const auto& x : a.elems()) {
      for (const auto& y : b.elems())
        out.emplace_back(Label::pair(x, Label::left(y)), Label::left(Label::pair(x, y)));
      for (const auto& z : c.elems())
        out.emplace_back(Label::pair(x, Label::right(z)), Label::right(Label::pair(x, z)));
    }
    sortGraph(out);
    return make(tensorObj(a, sumObj(b, c)), sumObj(tensorObj(a, b), tensorObj(a, c)),
                std::move(out));
  }

  bool supportsGraphMorphisms() const override { return true; }

  Mor morFromGraph(const Obj& dom, const Obj& cod, Graph graph) const override {
    sortGraph(graph);
    detail::validateGraph(dom, cod, graph);
    return make(dom, cod, std::move(graph));
  }

  Obj randomObj(util::Rng& rng) const override {
    static const std::vector<std::string> pool = {"a", "b", "c", "d", "e"};
    std::vector<std::string> names = pool;
    rng.shuffle(names);
    names.resize(rng.below(5));
    return Obj::atoms(names);
  }

  Mor randomMor(util::Rng& rng, const Obj& dom, const Obj& cod) const override {
    return make(dom, cod, detail::randomPartialInjection(rng, dom, cod));
  }

  Mor randomSubMor(util::Rng& rng, const Mor& g) const override {
    Graph out;
    for (const auto& p : g.graph)
      if (rng.chance(0.6)) out.push_back(p);
    return make(g.dom, g.cod, std::move(out));
  }

 private:
  static Mor make(Obj dom, Obj cod, Graph graph) {
    Mor f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.graph = std::move(graph);
    return f;
  }
};

}  // namespace

CategoryPtr finPInj() {
  static CategoryPtr instance = std::make_shared<FinPInjCategory>();
  return instance;
}

}  // namespace revcat::cat
