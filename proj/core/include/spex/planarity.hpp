#ifndef SPEX_PLANARITY_HPP
#define SPEX_PLANARITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

/// Combinatorial embedding: for each vertex, the cyclic order of its
/// neighbors.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

enum class KuratowskiKind { K5, K33, Invalid };

/// Certified planarity verdict. Planar graphs carry a rotation system;
/// nonplanar graphs carry the edge set of a K5 or K33 subdivision.
struct PlanarityVerdict {
  bool planar = false;
  std::optional<RotationSystem> embedding;
  std::optional<std::vector<std::pair<int, int>>> kuratowski_edges;
};

PlanarityVerdict is_planar(const Graph& g);

/// Verdict only, skipping certificate extraction.
bool is_planar_quick(const Graph& g);

/// Quick reject by edge counts: false iff e > 3n-6, or the graph is
/// bipartite with e > 2n-4. False certainly means nonplanar; true is
/// inconclusive. Requires n >= 3.
bool edge_bound_check(const Graph& g);

/// Checks a verdict against its graph: a planar embedding must be a valid
/// rotation system satisfying Euler's formula on every component; a
/// witness must be an edge subset whose degree-2 suppression is K5 or K33.
bool verify_planarity_certificate(const Graph& g, const PlanarityVerdict& v);

/// Suppresses degree-2 vertices of the witness subgraph and classifies
/// the result.
KuratowskiKind classify_kuratowski(const Graph& g,
                                   const std::vector<std::pair<int, int>>& edges);

bool is_bipartite(const Graph& g);

}  // namespace spex

#endif  // SPEX_PLANARITY_HPP
