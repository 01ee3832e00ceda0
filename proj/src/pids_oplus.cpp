#include <algorithm>
#include <set>
#include <stdexcept>

#include "graph_common.hpp"
#include "revcat/models.hpp"

// PId_S^(+): objects are finite label sets, a morphism is a partial
// injection sigma together with one subset of the carrier S per element of
// dom(sigma). Composition intersects annotations along sigma; identities
// carry S; restriction and inverse act componentwise; join unions sigma and
// the annotations on shared sources. Annotations are never normalized: an
// empty annotation is distinct from removing the element from dom(sigma).
//
// The annotation-restricted subcategory keeps only morphisms whose every
// annotation lies in a fixed family (closed under intersection and union).

namespace revcat::cat {

namespace {

using detail::Graph;

class AnnPIdCategory final : public Category {
 public:
  AnnPIdCategory(std::string name, std::vector<std::string> carrier,
                 std::optional<std::vector<AnnMask>> allowed)
      : name_(std::move(name)), carrier_(std::move(carrier)), allowed_(std::move(allowed)) {
    if (carrier_.empty()) throw std::invalid_argument(name_ + ": carrier must be nonempty");
    if (carrier_.size() > 16) throw std::invalid_argument(name_ + ": carrier too large");
    full_ = static_cast<AnnMask>((AnnMask{1} << carrier_.size()) - 1);
    if (allowed_) {
      std::set<AnnMask> set(allowed_->begin(), allowed_->end());
      if (set.size() != allowed_->size())
        throw std::invalid_argument(name_ + ": duplicate allowed annotation");
      if (!set.count(full_))
        throw std::invalid_argument(name_ + ": allowed annotations must contain S");
      for (AnnMask x : *allowed_)
        for (AnnMask y : *allowed_) {
          if (!set.count(x & y))
            throw std::invalid_argument(name_ + ": allowed annotations not closed under meet");
          if (!set.count(x | y))
            throw std::invalid_argument(name_ + ": allowed annotations not closed under join");
        }
    }
  }

  std::string name() const override { return name_; }
  std::vector<std::string> carrier() const override { return carrier_; }

  Mor identity(const Obj& a) const override {
    AnnMap ann;
    for (const auto& x : a.elems()) ann[x] = full_;
    return make(a, a, detail::identityGraph(a), std::move(ann));
  }

  Mor compose(const Mor& g, const Mor& f) const override {
    Graph sigma = detail::composeGraphs(g, f);
    AnnMap ann;
    for (const auto& [x, z] : sigma) {
      Label mid = *f.apply(x);
      ann[x] = annOf(f, x) & annOf(g, mid);
    }
    return make(f.dom, g.cod, std::move(sigma), std::move(ann));
  }

  Mor restriction(const Mor& f) const override {
    AnnMap ann;
    Graph sigma;
    for (const auto& [x, y] : f.graph) {
      sigma.emplace_back(x, x);
      ann[x] = annOf(f, x);
    }
    return make(f.dom, f.dom, std::move(sigma), std::move(ann));
  }

  Mor inverse(const Mor& f) const override {
    AnnMap ann;
    for (const auto& [x, y] : f.graph) ann[y] = annOf(f, x);
    return make(f.cod, f.dom, detail::flipGraph(f.graph), std::move(ann));
  }

  Mor zero(const Obj& dom, const Obj& cod) const override { return make(dom, cod, {}, {}); }

  Mor join(const std::vector<Mor>& family, const Obj& dom, const Obj& cod) const override {
    for (const auto& f : family)
      if (!(f.dom == dom && f.cod == cod))
        throw std::logic_error("join: family not parallel at the stated type");
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j)
        if (!detail::sigmaAgree(family[i].graph, family[j].graph))
          throw IncompatibleJoinError("join: sigma components disagree on a shared source");
    std::vector<const Graph*> graphs;
    for (const auto& f : family) graphs.push_back(&f.graph);
    Graph u = detail::unionGraphs(graphs);
    if (!detail::injectiveGraph(u))
      throw IncompatibleJoinError("join: union is not injective (family not inverse compatible)");
    AnnMap ann;
    for (const auto& [x, y] : u) {
      AnnMask mask = 0;
      bool first = true;
      for (const auto& f : family) {
        if (!f.apply(x)) continue;
        mask = first ? annOf(f, x) : (mask | annOf(f, x));
        first = false;
      }
      ann[x] = mask;
    }
    return make(dom, cod, std::move(u), std::move(ann));
  }

  bool homEnumerable(const Obj& a, const Obj& b) const override {
    const double perElem = static_cast<double>(annCount());
    double total = 0;
    size_t kmax = std::min(a.size(), b.size());
    double binom = 1;  // running C(|a|,k) C(|b|,k) k!
    for (size_t k = 0; k <= kmax; ++k) {
      if (k > 0)
        binom *= static_cast<double>(a.size() - k + 1) * static_cast<double>(b.size() - k + 1) /
                 static_cast<double>(k);
      double term = binom;
      for (size_t i = 0; i < k; ++i) term *= perElem;
      total += term;
      if (total > 100000) return false;
    }
    return true;
  }

  std::vector<Mor> enumerateHom(const Obj& a, const Obj& b) const override {
    if (!homEnumerable(a, b)) throw std::logic_error(name_ + ": hom-set too large to enumerate");
    std::vector<Mor> out;
    for (auto& sigma : detail::enumeratePartialInjections(a, b)) {
      std::vector<AnnMask> masks = allowedMasks();
      // all assignments of allowed masks to the sources of sigma
      std::vector<size_t> idx(sigma.size(), 0);
      for (;;) {
        AnnMap ann;
        for (size_t i = 0; i < sigma.size(); ++i) ann[sigma[i].first] = masks[idx[i]];
        out.push_back(make(a, b, sigma, std::move(ann)));
        size_t pos = 0;
        while (pos < idx.size()) {
          if (++idx[pos] < masks.size()) break;
          idx[pos] = 0;
          ++pos;
        }
        if (pos == idx.size()) break;
      }
    }
    return out;
  }

  std::vector<Obj> universeObjects() const override {
    return {Obj{}, unitObject(), sumOfObjects(unitObject(), unitObject())};
  }

  bool hasTensor() const override { return true; }
  Obj unitObj() const override { return unitObject(); }
  Obj tensorObj(const Obj& a, const Obj& b) const override { return tensorOfObjects(a, b); }

  Mor tensorMor(const Mor& f, const Mor& g) const override {
    Graph sigma;
    AnnMap ann;
    for (const auto& [x, y] : f.graph)
      for (const auto& [u, v] : g.graph) {
        sigma.emplace_back(Label::pair(x, u), Label::pair(y, v));
        ann[Label::pair(x, u)] = annOf(f, x) & annOf(g, u);
      }
    sortGraph(sigma);
    return make(tensorObj(f.dom, g.dom), tensorObj(f.cod, g.cod), std::move(sigma),
                std::move(ann));
  }

  Mor associator(const Obj& a, const Obj& b, const Obj& c) const override {
    Graph sigma;
    for (const auto& x : a.elems())
      for (const auto& y : b.elems())
        for (const auto& z : c.elems())
          sigma.emplace_back(Label::pair(Label::pair(x, y), z), Label::pair(x, Label::pair(y, z)));
    sortGraph(sigma);
    return makeTotal(tensorObj(tensorObj(a, b), c), tensorObj(a, tensorObj(b, c)),
                     std::move(sigma));
  }

  Mor symmetry(const Obj& a, const Obj& b) const override {
    Graph sigma;
    for (const auto& x : a.elems())
      for (const auto& y : b.elems()) sigma.emplace_back(Label::pair(x, y), Label::pair(y, x));
    sortGraph(sigma);
    return makeTotal(tensorObj(a, b), tensorObj(b, a), std::move(sigma));
  }

  Mor leftUnitor(const Obj& a) const override {
    Graph sigma;
    for (const auto& x : a.elems()) sigma.emplace_back(Label::pair(Label::unit(), x), x);
    sortGraph(sigma);
    return makeTotal(tensorObj(unitObj(), a), a, std::move(sigma));
  }

  Mor rightUnitor(const Obj& a) const override {
    Graph sigma;
    for (const auto& x : a.elems()) sigma.emplace_back(Label::pair(x, Label::unit()), x);
    sortGraph(sigma);
    return makeTotal(tensorObj(a, unitObj()), a, std::move(sigma));
  }

  bool hasSum() const override { return true; }
  Obj zeroObj() const override { return Obj{}; }
  Obj sumObj(const Obj& a, const Obj& b) const override { return sumOfObjects(a, b); }

  Mor sumMor(const Mor& f, const Mor& g) const override {
    Graph sigma;
    AnnMap ann;
    for (const auto& [x, y] : f.graph) {
      sigma.emplace_back(Label::left(x), Label::left(y));
      ann[Label::left(x)] = annOf(f, x);
    }
    for (const auto& [u, v] : g.graph) {
      sigma.emplace_back(Label::right(u), Label::right(v));
      ann[Label::right(u)] = annOf(g, u);
    }
    sortGraph(sigma);
    return make(sumObj(f.dom, g.dom), sumObj(f.cod, g.cod), std::move(sigma), std::move(ann));
  }

  Mor injLeft(const Obj& a, const Obj& b) const override {
    Graph sigma;
    for (const auto& x : a.elems()) sigma.emplace_back(x, Label::left(x));
    sortGraph(sigma);
    return makeTotal(a, sumObj(a, b), std::move(sigma));
  }

  Mor injRight(const Obj& a, const Obj& b) const override {
    Graph sigma;
    for (const auto& y : b.elems()) sigma.emplace_back(y, Label::right(y));
    sortGraph(sigma);
    return makeTotal(b, sumObj(a, b), std::move(sigma));
  }

  Mor distributor(const Obj& a, const Obj& b, const Obj& c) const override {
    Graph sigma;
    for (const auto& x : a.elems()) {
      for (const auto& y : b.elems())
        sigma.emplace_back(Label::pair(x, Label::left(y)), Label::left(Label::pair(x, y)));
      for (const auto& z : c.elems())
        sigma.emplace_back(Label::pair(x, Label::right(z)), Label::right(Label::pair(x, z)));
    }
    sortGraph(sigma);
    return makeTotal(tensorObj(a, sumObj(b, c)), sumObj(tensorObj(a, b), tensorObj(a, c)),
                     std::move(sigma));
  }

  bool supportsGraphMorphisms() const override { return true; }

  // used by the denotation layer for points and coherence isos: total style,
  // every annotation = S
  Mor morFromGraph(const Obj& dom, const Obj& cod, Graph graph) const override {
    sortGraph(graph);
    detail::validateGraph(dom, cod, graph);
    return makeTotal(dom, cod, std::move(graph));
  }

  Obj randomObj(util::Rng& rng) const override {
    static const std::vector<std::string> pool = {"u", "v", "w"};
    std::vector<std::string> names = pool;
    rng.shuffle(names);
    names.resize(rng.below(4));
    return Obj::atoms(names);
  }

  Mor randomMor(util::Rng& rng, const Obj& dom, const Obj& cod) const override {
    Graph sigma = detail::randomPartialInjection(rng, dom, cod);
    std::vector<AnnMask> masks = allowedMasks();
    AnnMap ann;
    for (const auto& [x, y] : sigma) ann[x] = masks[rng.below(masks.size())];
    return make(dom, cod, std::move(sigma), std::move(ann));
  }

  Mor randomSubMor(util::Rng& rng, const Mor& g) const override {
    Graph sigma;
    AnnMap ann;
    for (const auto& [x, y] : g.graph) {
      if (!rng.chance(0.7)) continue;
      AnnMask cur = annOf(g, x);
      std::vector<AnnMask> candidates;
      for (AnnMask m : allowedMasks())
        if ((m & cur) == m) candidates.push_back(m);
      sigma.emplace_back(x, y);
      ann[x] = candidates[rng.below(candidates.size())];
    }
    return make(g.dom, g.cod, std::move(sigma), std::move(ann));
  }

 private:
  static AnnMask annOf(const Mor& f, const Label& src) {
    if (!f.ann) throw std::logic_error("annotated instance got an unannotated morphism");
    return f.ann->at(src);
  }

  size_t annCount() const { return allowed_ ? allowed_->size() : (size_t{1} << carrier_.size()); }

  std::vector<AnnMask> allowedMasks() const {
    if (allowed_) return *allowed_;
    std::vector<AnnMask> all;
    for (AnnMask m = 0; m <= full_; ++m) all.push_back(m);
    return all;
  }

  bool allowedMask(AnnMask m) const {
    if (!allowed_) return true;
    return std::find(allowed_->begin(), allowed_->end(), m) != allowed_->end();
  }

  Mor make(Obj dom, Obj cod, Graph sigma, AnnMap ann) const {
    Mor f;
    f.dom = std::move(dom);
    f.cod = std::move(cod);
    f.graph = std::move(sigma);
    for (const auto& [x, mask] : ann)
      if (!allowedMask(mask))
        throw std::logic_error(name_ + ": annotation outside the allowed family");
    f.ann = std::move(ann);
    return f;
  }

  Mor makeTotal(Obj dom, Obj cod, Graph sigma) const {
    AnnMap ann;
    for (const auto& [x, y] : sigma) ann[x] = full_;
    return make(std::move(dom), std::move(cod), std::move(sigma), std::move(ann));
  }

  std::string name_;
  std::vector<std::string> carrier_;
  std::optional<std::vector<AnnMask>> allowed_;
  AnnMask full_ = 0;
};

}  // namespace

CategoryPtr pIdSOplus(std::vector<std::string> carrier) {
  return std::make_shared<AnnPIdCategory>("pids-oplus", std::move(carrier), std::nullopt);
}

CategoryPtr subPIdSOplus(std::vector<std::string> carrier,
                         std::vector<std::vector<std::string>> allowedAnnotations) {
  std::vector<AnnMask> masks;
  for (const auto& ann : allowedAnnotations) {
    AnnMask m = 0;
    for (const auto& x : ann) {
      auto it = std::find(carrier.begin(), carrier.end(), x);
      if (it == carrier.end())
        throw std::invalid_argument("subpid: annotation element not in carrier: " + x);
      m |= AnnMask{1} << (it - carrier.begin());
    }
    masks.push_back(m);
  }
  return std::make_shared<AnnPIdCategory>("subpid", std::move(carrier), std::move(masks));
}

CategoryPtr subPIdSOplus() {
  static CategoryPtr instance =
      subPIdSOplus({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"a", "b", "c"}});
  return instance;
}

}  // namespace revcat::cat
