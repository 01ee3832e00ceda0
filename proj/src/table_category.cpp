#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "graph_common.hpp"
#include "revcat/models.hpp"

// Finite categories given by explicit composition, restriction, and inverse
// tables. The tables are authoritative; optional per-morphism graphs are
// display data only. Joins are least upper bounds among the listed
// morphisms, validated to exist for every compatible pair at construction.

namespace revcat::cat {

namespace {

class TableCategory final : public Category {
 public:
  explicit TableCategory(TableCategorySpec spec) : spec_(std::move(spec)) {
    buildIndexes();
    validate();
  }

  std::string name() const override { return spec_.name; }

  Mor identity(const Obj& a) const override { return mor(identityOf(objectIndex(a))); }

  Mor compose(const Mor& g, const Mor& f) const override {
    if (!(f.cod == g.dom)) throw std::logic_error(spec_.name + ": compose type mismatch");
    auto it = comp_.find({g.tableIndex, f.tableIndex});
    if (it == comp_.end())
      throw std::logic_error(spec_.name + ": composition table missing " +
                             morName(g.tableIndex) + " . " + morName(f.tableIndex));
    return mor(it->second);
  }

  Mor restriction(const Mor& f) const override { return mor(restr_.at(f.tableIndex)); }
  Mor inverse(const Mor& f) const override { return mor(inv_.at(f.tableIndex)); }

  Mor zero(const Obj& dom, const Obj& cod) const override {
    return mor(least_.at({objectIndex(dom), objectIndex(cod)}));
  }

  Mor join(const std::vector<Mor>& family, const Obj& dom, const Obj& cod) const override {
    if (family.empty()) return zero(dom, cod);
    for (const auto& f : family)
      if (!(f.dom == dom && f.cod == cod))
        throw std::logic_error(spec_.name + ": join family not parallel");
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j)
        if (!restrictionCompatible(*this, family[i], family[j]))
          throw IncompatibleJoinError(spec_.name + ": join of incompatible morphisms");
    std::vector<int> candidates;
    for (int t : homList(objectIndex(dom), objectIndex(cod))) {
      bool upper = true;
      for (const auto& f : family)
        if (!leq(*this, f, mor(t))) {
          upper = false;
          break;
        }
      if (upper) candidates.push_back(t);
    }
    for (int c : candidates) {
      bool isLeast = true;
      for (int t : candidates)
        if (!leq(*this, mor(c), mor(t))) {
          isLeast = false;
          break;
        }
      if (isLeast) return mor(c);
    }
    throw IncompatibleJoinError(spec_.name + ": compatible family has no least upper bound");
  }

  bool homEnumerable(const Obj&, const Obj&) const override { return true; }

  std::vector<Mor> enumerateHom(const Obj& a, const Obj& b) const override {
    std::vector<Mor> out;
    for (int t : homList(objectIndex(a), objectIndex(b))) out.push_back(mor(t));
    return out;
  }

  std::vector<Obj> universeObjects() const override {
    std::vector<Obj> out;
    for (const auto& [name, obj] : spec_.objects) out.push_back(obj);
    return out;
  }

  Obj randomObj(util::Rng& rng) const override {
    return spec_.objects[rng.below(spec_.objects.size())].second;
  }

  Mor randomMor(util::Rng& rng, const Obj& dom, const Obj& cod) const override {
    const auto& hom = homList(objectIndex(dom), objectIndex(cod));
    if (hom.empty()) throw std::logic_error(spec_.name + ": empty hom-set");
    return mor(hom[rng.below(hom.size())]);
  }

  Mor randomSubMor(util::Rng& rng, const Mor& g) const override {
    std::vector<int> below;
    for (int t : homList(objectIndex(g.dom), objectIndex(g.cod)))
      if (leq(*this, mor(t), g)) below.push_back(t);
    return mor(below[rng.below(below.size())]);
  }

  std::string morToString(const Mor& f) const override { return morName(f.tableIndex); }

  nlohmann::ordered_json morToJson(const Mor& f) const override {
    nlohmann::ordered_json j;
    j["model"] = name();
    j["name"] = morName(f.tableIndex);
    j["dom"] = nlohmann::ordered_json::array();
    for (const auto& l : f.dom.elems()) j["dom"].push_back(l.str());
    j["cod"] = nlohmann::ordered_json::array();
    for (const auto& l : f.cod.elems()) j["cod"].push_back(l.str());
    if (spec_.morphisms[f.tableIndex].graph) {
      j["graph"] = nlohmann::ordered_json::array();
      for (const auto& [src, dst] : *spec_.morphisms[f.tableIndex].graph)
        j["graph"].push_back(nlohmann::ordered_json::array({src.str(), dst.str()}));
    }
    return j;
  }

  Mor morFromJson(const nlohmann::ordered_json& j) const override {
    return morByName(j.at("name").get<std::string>());
  }

  Mor morByName(const std::string& name) const {
    for (size_t i = 0; i < spec_.morphisms.size(); ++i)
      if (spec_.morphisms[i].name == name) return mor(static_cast<int>(i));
    throw std::invalid_argument(spec_.name + ": unknown morphism " + name);
  }

 private:
  void buildIndexes() {
    for (size_t i = 0; i < spec_.objects.size(); ++i) {
      if (!objNames_.emplace(spec_.objects[i].first, static_cast<int>(i)).second)
        throw std::invalid_argument(spec_.name + ": duplicate object " + spec_.objects[i].first);
    }
    for (size_t i = 0; i < spec_.morphisms.size(); ++i) {
      const auto& m = spec_.morphisms[i];
      if (!morNames_.emplace(m.name, static_cast<int>(i)).second)
        throw std::invalid_argument(spec_.name + ": duplicate morphism " + m.name);
      if (!objNames_.count(m.dom) || !objNames_.count(m.cod))
        throw std::invalid_argument(spec_.name + ": morphism " + m.name + " has unknown objects");
      homs_[{objNames_.at(m.dom), objNames_.at(m.cod)}].push_back(static_cast<int>(i));
    }
    for (const auto& [objName, morName] : spec_.identities) {
      if (!objNames_.count(objName) || !morNames_.count(morName))
        throw std::invalid_argument(spec_.name + ": bad identity entry " + objName);
      identities_[objNames_.at(objName)] = morNames_.at(morName);
    }
    for (const auto& [pair, result] : spec_.composition) {
      if (!morNames_.count(pair.first) || !morNames_.count(pair.second) || !morNames_.count(result))
        throw std::invalid_argument(spec_.name + ": bad composition entry");
      comp_[{morNames_.at(pair.first), morNames_.at(pair.second)}] = morNames_.at(result);
    }
    restr_.resize(spec_.morphisms.size(), -1);
    inv_.resize(spec_.morphisms.size(), -1);
    for (const auto& [f, r] : spec_.restriction) {
      if (!morNames_.count(f) || !morNames_.count(r))
        throw std::invalid_argument(spec_.name + ": bad restriction entry " + f);
      restr_[morNames_.at(f)] = morNames_.at(r);
    }
    for (const auto& [f, r] : spec_.inverse) {
      if (!morNames_.count(f) || !morNames_.count(r))
        throw std::invalid_argument(spec_.name + ": bad inverse entry " + f);
      inv_[morNames_.at(f)] = morNames_.at(r);
    }
  }

  void validate() {
    const int n = static_cast<int>(spec_.morphisms.size());
    // identities present for every object
    for (size_t o = 0; o < spec_.objects.size(); ++o)
      if (!identities_.count(static_cast<int>(o)))
        throw std::invalid_argument(spec_.name + ": missing identity for object " +
                                    spec_.objects[o].first);
    // tables total and type-consistent
    for (int f = 0; f < n; ++f) {
      if (restr_[f] < 0)
        throw std::invalid_argument(spec_.name + ": restriction missing for " + morName(f));
      if (inv_[f] < 0)
        throw std::invalid_argument(spec_.name + ": inverse missing for " + morName(f));
      const auto& mf = spec_.morphisms[f];
      const auto& mr = spec_.morphisms[restr_[f]];
      if (mr.dom != mf.dom || mr.cod != mf.dom)
        throw std::invalid_argument(spec_.name + ": restriction of " + morName(f) +
                                    " has the wrong type");
      const auto& mi = spec_.morphisms[inv_[f]];
      if (mi.dom != mf.cod || mi.cod != mf.dom)
        throw std::invalid_argument(spec_.name + ": inverse of " + morName(f) +
                                    " has the wrong type");
      for (int g = 0; g < n; ++g) {
        const auto& mg = spec_.morphisms[g];
        if (mg.dom != mf.cod) continue;
        auto it = comp_.find({g, f});
        if (it == comp_.end())
          throw std::invalid_argument(spec_.name + ": composition missing for " + morName(g) +
                                      " . " + morName(f));
        const auto& mc = spec_.morphisms[it->second];
        if (mc.dom != mf.dom || mc.cod != mg.cod)
          throw std::invalid_argument(spec_.name + ": composite " + morName(g) + " . " +
                                      morName(f) + " has the wrong type");
      }
    }
    // every hom-set has a least element (the zero) and joins of compatible pairs
    for (size_t a = 0; a < spec_.objects.size(); ++a) {
      for (size_t b = 0; b < spec_.objects.size(); ++b) {
        const auto& hom = homList(static_cast<int>(a), static_cast<int>(b));
        if (hom.empty())
          throw std::invalid_argument(spec_.name + ": empty hom-set " + spec_.objects[a].first +
                                      " -> " + spec_.objects[b].first + " (no zero)");
        int least = -1;
        for (int c : hom) {
          bool ok = true;
          for (int t : hom)
            if (!leq(*this, mor(c), mor(t))) {
              ok = false;
              break;
            }
          if (ok) {
            least = c;
            break;
          }
        }
        if (least < 0)
          throw std::invalid_argument(spec_.name + ": hom-set " + spec_.objects[a].first +
                                      " -> " + spec_.objects[b].first + " has no least element");
        least_[{static_cast<int>(a), static_cast<int>(b)}] = least;
        for (int f : hom)
          for (int g : hom) {
            if (!restrictionCompatible(*this, mor(f), mor(g))) continue;
            try {
              join({mor(f), mor(g)}, spec_.objects[a].second, spec_.objects[b].second);
            } catch (const IncompatibleJoinError&) {
              throw std::invalid_argument(spec_.name + ": compatible pair " + morName(f) + ", " +
                                          morName(g) + " has no join");
            }
          }
      }
    }
  }

  int objectIndex(const Obj& a) const {
    for (size_t i = 0; i < spec_.objects.size(); ++i)
      if (spec_.objects[i].second == a) return static_cast<int>(i);
    throw std::logic_error(spec_.name + ": unknown object " + a.str());
  }

  int identityOf(int obj) const { return identities_.at(obj); }

  const std::vector<int>& homList(int a, int b) const {
    static const std::vector<int> empty;
    auto it = homs_.find({a, b});
    return it == homs_.end() ? empty : it->second;
  }

  const std::string& morName(int idx) const { return spec_.morphisms[idx].name; }

  Mor mor(int idx) const {
    const auto& m = spec_.morphisms[idx];
    Mor f;
    f.dom = spec_.objects[objNames_.at(m.dom)].second;
    f.cod = spec_.objects[objNames_.at(m.cod)].second;
    f.tableIndex = idx;
    return f;
  }

  TableCategorySpec spec_;
  std::map<std::string, int> objNames_;
  std::map<std::string, int> morNames_;
  std::map<std::pair<int, int>, std::vector<int>> homs_;
  std::map<int, int> identities_;
  std::map<std::pair<int, int>, int> comp_;
  std::vector<int> restr_, inv_;
  std::map<std::pair<int, int>, int> least_;
};

}  // namespace

TableCategorySpec TableCategorySpec::fromJson(const nlohmann::ordered_json& j) {
  TableCategorySpec spec;
  spec.name = j.at("name").get<std::string>();
  for (const auto& [objName, elems] : j.at("objects").items()) {
    std::vector<Label> labels;
    for (const auto& s : elems) {
      auto l = Label::parse(s.get<std::string>());
      if (!l) throw std::invalid_argument("bad label in table spec: " + s.get<std::string>());
      labels.push_back(*l);
    }
    spec.objects.emplace_back(objName, Obj(std::move(labels)));
  }
  for (const auto& m : j.at("morphisms")) {
    TableMorphismSpec ms;
    ms.name = m.at("name").get<std::string>();
    ms.dom = m.at("dom").get<std::string>();
    ms.cod = m.at("cod").get<std::string>();
    if (m.contains("graph")) {
      std::vector<std::pair<Label, Label>> g;
      for (const auto& e : m.at("graph"))
        g.emplace_back(*Label::parse(e.at(0).get<std::string>()),
                       *Label::parse(e.at(1).get<std::string>()));
      sortGraph(g);
      ms.graph = std::move(g);
    }
    spec.morphisms.push_back(std::move(ms));
  }
  for (const auto& [objName, morName] : j.at("identities").items())
    spec.identities.emplace_back(objName, morName.get<std::string>());
  for (const auto& e : j.at("composition"))
    spec.composition.push_back(
        {{e.at(0).get<std::string>(), e.at(1).get<std::string>()}, e.at(2).get<std::string>()});
  for (const auto& [f, r] : j.at("restriction").items())
    spec.restriction.emplace_back(f, r.get<std::string>());
  for (const auto& [f, r] : j.at("inverse").items())
    spec.inverse.emplace_back(f, r.get<std::string>());
  return spec;
}

nlohmann::ordered_json TableCategorySpec::toJson() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  nlohmann::ordered_json objs;
  for (const auto& [objName, obj] : objects) {
    nlohmann::ordered_json elems = nlohmann::ordered_json::array();
    for (const auto& l : obj.elems()) elems.push_back(l.str());
    objs[objName] = elems;
  }
  j["objects"] = objs;
  j["morphisms"] = nlohmann::ordered_json::array();
  for (const auto& m : morphisms) {
    nlohmann::ordered_json jm;
    jm["name"] = m.name;
    jm["dom"] = m.dom;
    jm["cod"] = m.cod;
    if (m.graph) {
      nlohmann::ordered_json g = nlohmann::ordered_json::array();
      for (const auto& [src, dst] : *m.graph)
        g.push_back(nlohmann::ordered_json::array({src.str(), dst.str()}));
      jm["graph"] = g;
    }
    j["morphisms"].push_back(jm);
  }
  nlohmann::ordered_json ids;
  for (const auto& [o, m] : identities) ids[o] = m;
  j["identities"] = ids;
  j["composition"] = nlohmann::ordered_json::array();
  for (const auto& [pair, result] : composition)
    j["composition"].push_back(nlohmann::ordered_json::array({pair.first, pair.second, result}));
  nlohmann::ordered_json restr;
  for (const auto& [f, r] : restriction) restr[f] = r;
  j["restriction"] = restr;
  nlohmann::ordered_json inv;
  for (const auto& [f, r] : inverse) inv[f] = r;
  j["inverse"] = inv;
  return j;
}

TableCategorySpec partialIdentityTableSpec(
    const std::string& name, const Obj& object,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& subsets) {
  TableCategorySpec spec;
  spec.name = name;
  spec.objects.emplace_back("A", object);

  std::vector<std::set<std::string>> domains;
  bool hasIdentity = false;
  for (const auto& [morName, subset] : subsets) {
    std::set<std::string> dom(subset.begin(), subset.end());
    for (const auto& x : dom)
      if (!object.contains(Label::atom(x)))
        throw std::invalid_argument(name + ": subset element not in object: " + x);
    TableMorphismSpec ms;
    ms.name = morName;
    ms.dom = "A";
    ms.cod = "A";
    std::vector<std::pair<Label, Label>> g;
    for (const auto& x : dom) g.emplace_back(Label::atom(x), Label::atom(x));
    sortGraph(g);
    ms.graph = std::move(g);
    spec.morphisms.push_back(std::move(ms));
    if (dom.size() == object.size()) {
      spec.identities.emplace_back("A", morName);
      hasIdentity = true;
    }
    domains.push_back(std::move(dom));
  }
  if (!hasIdentity) throw std::invalid_argument(name + ": no identity (full-domain) morphism");

  auto findByDomain = [&](const std::set<std::string>& dom) -> const std::string& {
    for (size_t i = 0; i < domains.size(); ++i)
      if (domains[i] == dom) return subsets[i].first;
    throw std::invalid_argument(name + ": not closed under composition");
  };

  for (size_t i = 0; i < subsets.size(); ++i) {
    spec.restriction.emplace_back(subsets[i].first, subsets[i].first);
    spec.inverse.emplace_back(subsets[i].first, subsets[i].first);
    for (size_t j = 0; j < subsets.size(); ++j) {
      std::set<std::string> meet;
      std::set_intersection(domains[i].begin(), domains[i].end(), domains[j].begin(),
                            domains[j].end(), std::inserter(meet, meet.begin()));
      spec.composition.push_back({{subsets[i].first, subsets[j].first}, findByDomain(meet)});
    }
  }
  return spec;
}

CategoryPtr tableCategory(TableCategorySpec spec) {
  return std::make_shared<TableCategory>(std::move(spec));
}

TableCategorySpec example56Spec() {
  return partialIdentityTableSpec("example56", Obj::atoms({"a", "b", "c"}),
                                  {{"id", {"a", "b", "c"}},
                                   {"f", {"a", "b"}},
                                   {"g", {"a"}},
                                   {"h", {"b"}},
                                   {"zero", {}}});
}

TableCategorySpec example513Spec() {
  return partialIdentityTableSpec("example513", Obj::atoms({"a", "b"}),
                                  {{"id", {"a", "b"}}, {"f", {"a"}}, {"zero", {}}});
}

CategoryPtr example56() {
  static CategoryPtr instance = tableCategory(example56Spec());
  return instance;
}

CategoryPtr example513() {
  static CategoryPtr instance = tableCategory(example513Spec());
  return instance;
}

}  // namespace revcat::cat
