#ifndef SPEX_PATTERNS_HPP
#define SPEX_PATTERNS_HPP

#include <optional>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// Injective vertex map from pattern to host when the pattern embeds as a
/// (not necessarily induced) subgraph; absent otherwise.
struct ContainmentWitness {
  std::optional<std::vector<int>> mapping;
  explicit operator bool() const { return mapping.has_value(); }
};

/// Backtracking subgraph search with degree and neighborhood pruning;
/// pattern vertices are tried in descending-degree order (connectivity
/// first within ties).
ContainmentWitness contains_subgraph(const Graph& host, const Graph& pattern);

bool is_F_free(const Graph& host, const Graph& pattern);

/// Exact chromatic number by branch and bound; inputs capped at 16 vertices.
int chromatic_number(const Graph& g);

/// True iff pattern's parts can be packed into host's parts (a part of
/// order m holds any set of parts with total order <= m). Exact
/// backtracking bin-packing.
bool forest_contains(const LinearForest& host, const LinearForest& pattern);

/// True iff candidate is h-free and every merge of two of its parts
/// (the single-edge augmentations that stay linear forests on the same
/// vertex set) contains h.
bool is_H_maximal(const LinearForest& candidate, const LinearForest& h);

bool is_claw_free(const Graph& g);

}  // namespace spex

#endif  // SPEX_PATTERNS_HPP
