#include "revcat/category.hpp"

#include <algorithm>
#include <sstream>

namespace revcat::cat {

bool Mor::operator==(const Mor& other) const {
  return tableIndex == other.tableIndex && dom == other.dom && cod == other.cod &&
         graph == other.graph && ann == other.ann;
}

bool Mor::operator<(const Mor& other) const {
  if (tableIndex != other.tableIndex) return tableIndex < other.tableIndex;
  if (dom < other.dom) return true;
  if (other.dom < dom) return false;
  if (cod < other.cod) return true;
  if (other.cod < cod) return false;
  if (graph != other.graph) return graph < other.graph;
  return ann < other.ann;
}

std::optional<Label> Mor::apply(const Label& src) const {
  auto it = std::lower_bound(graph.begin(), graph.end(), src,
                             [](const auto& p, const Label& l) { return p.first < l; });
  if (it == graph.end() || !(it->first == src)) return std::nullopt;
  return it->second;
}

void sortGraph(std::vector<std::pair<Label, Label>>& graph) {
  std::sort(graph.begin(), graph.end(), [](const auto& a, const auto& b) {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second < b.second;
  });
}

std::string Category::morToString(const Mor& f) const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < f.graph.size(); ++i) {
    if (i) out << ", ";
    out << f.graph[i].first.str() << "->" << f.graph[i].second.str();
    if (f.ann) {
      out << "{";
      AnnMask mask = f.ann->at(f.graph[i].first);
      auto names = carrier();
      bool first = true;
      for (size_t k = 0; k < names.size(); ++k) {
        if (!(mask & (AnnMask{1} << k))) continue;
        if (!first) out << ",";
        out << names[k];
        first = false;
      }
      out << "}";
    }
  }
  out << "] : " << f.dom.str() << " -> " << f.cod.str();
  return out.str();
}

nlohmann::ordered_json Category::morToJson(const Mor& f) const {
  nlohmann::ordered_json j;
  j["model"] = name();
  j["dom"] = nlohmann::ordered_json::array();
  for (const auto& l : f.dom.elems()) j["dom"].push_back(l.str());
  j["cod"] = nlohmann::ordered_json::array();
  for (const auto& l : f.cod.elems()) j["cod"].push_back(l.str());
  j["graph"] = nlohmann::ordered_json::array();
  for (const auto& [src, dst] : f.graph)
    j["graph"].push_back(nlohmann::ordered_json::array({src.str(), dst.str()}));
  if (f.ann) {
    nlohmann::ordered_json ann = nlohmann::ordered_json::object();
    auto names = carrier();
    for (const auto& [src, mask] : *f.ann) {
      nlohmann::ordered_json xs = nlohmann::ordered_json::array();
      for (size_t k = 0; k < names.size(); ++k)
        if (mask & (AnnMask{1} << k)) xs.push_back(names[k]);
      ann[src.str()] = xs;
    }
    j["ann"] = ann;
  }
  return j;
}

namespace {

Label parseLabelOrThrow(const std::string& text) {
  auto l = Label::parse(text);
  if (!l) throw std::invalid_argument("bad label: " + text);
  return *l;
}

}  // namespace

Mor Category::morFromJson(const nlohmann::ordered_json& j) const {
  std::vector<Label> dom, cod;
  for (const auto& s : j.at("dom")) dom.push_back(parseLabelOrThrow(s.get<std::string>()));
  for (const auto& s : j.at("cod")) cod.push_back(parseLabelOrThrow(s.get<std::string>()));
  std::vector<std::pair<Label, Label>> graph;
  for (const auto& e : j.at("graph"))
    graph.emplace_back(parseLabelOrThrow(e.at(0).get<std::string>()),
                       parseLabelOrThrow(e.at(1).get<std::string>()));
  sortGraph(graph);
  Mor f;
  f.dom = Obj(std::move(dom));
  f.cod = Obj(std::move(cod));
  f.graph = std::move(graph);
  if (j.contains("ann")) {
    AnnMap ann;
    auto names = carrier();
    for (const auto& [key, xs] : j.at("ann").items()) {
      AnnMask mask = 0;
      for (const auto& x : xs) {
        auto it = std::find(names.begin(), names.end(), x.get<std::string>());
        if (it == names.end()) throw std::invalid_argument("bad carrier label in ann");
        mask |= AnnMask{1} << (it - names.begin());
      }
      ann[parseLabelOrThrow(key)] = mask;
    }
    f.ann = std::move(ann);
  }
  return f;
}

bool leq(const Category& C, const Mor& f, const Mor& g) {
  return C.compose(g, C.restriction(f)) == f;
}

bool restrictionCompatible(const Category& C, const Mor& f, const Mor& g) {
  return C.compose(f, C.restriction(g)) == C.compose(g, C.restriction(f));
}

bool inverseCompatible(const Category& C, const Mor& f, const Mor& g) {
  return restrictionCompatible(C, f, g) &&
         restrictionCompatible(C, C.inverse(f), C.inverse(g));
}

bool disjoint(const Category& C, const Mor& f, const Mor& g) {
  return C.compose(C.restriction(f), C.restriction(g)) == C.zero(f.dom, f.dom);
}

bool isTotal(const Category& C, const Mor& f) {
  return C.restriction(f) == C.identity(f.dom);
}

bool isTotalIso(const Category& C, const Mor& f) {
  Mor inv = C.inverse(f);
  return C.compose(inv, f) == C.identity(f.dom) && C.compose(f, inv) == C.identity(f.cod);
}

Mor rangeIdempotent(const Category& C, const Mor& f) {
  return C.restriction(C.inverse(f));
}

}  // namespace revcat::cat
