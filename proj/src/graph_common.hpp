#pragma once

#include <cstdint>

#include "revcat/category.hpp"

// Internal helpers shared by the graph-backed instances.

namespace revcat::cat::detail {

using Graph = std::vector<std::pair<Label, Label>>;

Graph composeGraphs(const Mor& g, const Mor& f);  // relational composition
Graph flipGraph(const Graph& f);
Graph restrictionGraph(const Graph& f);  // partial identity on the sources
bool injectiveGraph(const Graph& f);     // destinations pairwise distinct
// sources agree: no shared source mapped to different destinations
bool sigmaAgree(const Graph& f, const Graph& g);
Graph unionGraphs(std::vector<const Graph*> graphs);  // sorted, deduped
void validateGraph(const Obj& dom, const Obj& cod, const Graph& g);
Graph identityGraph(const Obj& a);

unsigned long long countPartialInjections(size_t n, size_t m);
std::vector<Graph> enumeratePartialInjections(const Obj& a, const Obj& b);
Graph randomPartialInjection(util::Rng& rng, const Obj& a, const Obj& b);

}  // namespace revcat::cat::detail
