#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revcat/category.hpp"

// The shipped category instances: FinPInj (finite sets and partial
// injections), PId_S (subsets of a carrier under intersection, embedded as
// partial identities), PId_S^(+) (annotated partial injections), its
// annotation-restricted subcategory, and finite composition-table categories
// hosting the small counterexample instances.

namespace revcat::cat {

CategoryPtr finPInj();
CategoryPtr pIdS(std::vector<std::string> carrier);
CategoryPtr pIdSOplus(std::vector<std::string> carrier);
// Restricts PId_S^(+) to morphisms whose every annotation lies in
// `allowedAnnotations`; the set must contain the full carrier and be closed
// under pairwise intersection and union (validated, throws otherwise).
CategoryPtr subPIdSOplus(std::vector<std::string> carrier,
                         std::vector<std::vector<std::string>> allowedAnnotations);
CategoryPtr subPIdSOplus();  // S = {a,b,c}, chain {a} < {a,b} < {a,b,c}

// ---- finite composition-table categories ----

struct TableMorphismSpec {
  std::string name;
  std::string dom, cod;  // object names
  // display-only graph (partial identity instances); tables stay authoritative
  std::optional<std::vector<std::pair<Label, Label>>> graph;
};

struct TableCategorySpec {
  std::string name;
  std::vector<std::pair<std::string, Obj>> objects;
  std::vector<TableMorphismSpec> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;            // object -> morphism
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> composition;  // (g,f) -> g.f
  std::vector<std::pair<std::string, std::string>> restriction;
  std::vector<std::pair<std::string, std::string>> inverse;

  static TableCategorySpec fromJson(const nlohmann::ordered_json& j);
  nlohmann::ordered_json toJson() const;
};

// Builds a table spec for a one-object subcategory of FinPInj whose morphisms are
// the named partial identities (tables computed from the subsets).
TableCategorySpec partialIdentityTableSpec(
    const std::string& name, const Obj& object,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& subsets);

// Validates closure (tables total, identities present, compatible pairs have
// least upper bounds, per-hom least element exists); throws
// std::invalid_argument naming the offending composite otherwise.
CategoryPtr tableCategory(TableCategorySpec spec);

TableCategorySpec example56Spec();
TableCategorySpec example513Spec();
CategoryPtr example56();
CategoryPtr example513();

// "finpinj", "pids", "pids-oplus", "subpid", "example56", "example513"
CategoryPtr modelByName(const std::string& name);
std::vector<std::string> modelNames();

}  // namespace revcat::cat
