#include "spex/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace spex {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.vertex_count());
  int idx = 0;
  for (auto [u, v] : g.edges())
    boost::put(boost::edge_index, bg, boost::add_edge(u, v, bg).first, idx++);
  return bg;
}

}  // namespace

bool is_planar_quick(const Graph& g) {
  int n = g.vertex_count();
  if (n >= 3) {
    if (g.edge_count() > 3 * n - 6) return false;
    if (n <= 4) return true;
  } else {
    return true;
  }
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

PlanarityVerdict is_planar(const Graph& g) {
  int n = g.vertex_count();
  PlanarityVerdict verdict;
  if (n == 0) {
    verdict.planar = true;
    verdict.embedding = RotationSystem{};
    return verdict;
  }
  BoostGraph bg = to_boost(g);
  std::vector<std::vector<BoostEdge>> embedding(n);
  std::vector<BoostEdge> kuratowski;
  verdict.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));
  if (verdict.planar) {
    RotationSystem rot;
    rot.order.resize(n);
    for (int v = 0; v < n; ++v)
      for (const BoostEdge& e : embedding[v]) {
        int s = static_cast<int>(boost::source(e, bg));
        int t = static_cast<int>(boost::target(e, bg));
        rot.order[v].push_back(s == v ? t : s);
      }
    verdict.embedding = std::move(rot);
  } else {
    std::vector<std::pair<int, int>> witness;
    witness.reserve(kuratowski.size());
    for (const BoostEdge& e : kuratowski) {
      int s = static_cast<int>(boost::source(e, bg));
      int t = static_cast<int>(boost::target(e, bg));
      witness.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(witness.begin(), witness.end());
    witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
    verdict.kuratowski_edges = std::move(witness);
  }
  return verdict;
}

bool is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.neighbors(v);
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool edge_bound_check(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3)
    throw std::invalid_argument("edge_bound_check needs n >= 3, got " +
                                std::to_string(n));
  if (g.edge_count() > 3 * n - 6) return false;
  if (is_bipartite(g) && g.edge_count() > 2 * n - 4) return false;
  return true;
}

KuratowskiKind classify_kuratowski(
    const Graph& g, const std::vector<std::pair<int, int>>& edges) {
  // Witness edges must exist in g.
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
        !g.has_edge(u, v))
      return KuratowskiKind::Invalid;

  // Adjacency lists of the witness subgraph; suppression may not create
  // parallel edges in a valid subdivision.
  std::map<int, std::set<int>> adj;
  for (auto [u, v] : edges) {
    if (!adj[u].insert(v).second) return KuratowskiKind::Invalid;
    adj[v].insert(u);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [v, nb] : adj) {
      if (nb.size() != 2) continue;
      int a = *nb.begin(), b = *std::next(nb.begin());
      if (a == b || adj[a].count(b)) return KuratowskiKind::Invalid;
      adj[a].erase(v);
      adj[b].erase(v);
      adj[a].insert(b);
      adj[b].insert(a);
      adj.erase(v);
      changed = true;
      break;
    }
  }
  if (adj.size() == 5) {
    for (auto& [v, nb] : adj)
      if (nb.size() != 4) return KuratowskiKind::Invalid;
    return KuratowskiKind::K5;
  }
  if (adj.size() == 6) {
    for (auto& [v, nb] : adj)
      if (nb.size() != 3) return KuratowskiKind::Invalid;
    // Complete bipartite 3+3: one side is the first vertex's neighborhood,
    // the other is everything whose neighborhood equals it.
    std::set<int> sideB = adj.begin()->second;
    std::set<int> sideA;
    for (auto& [v, nb] : adj)
      if (nb == sideB) sideA.insert(v);
    if (sideA.size() != 3 || sideB.size() != 3) return KuratowskiKind::Invalid;
    for (int b : sideB)
      if (adj[b] != sideA) return KuratowskiKind::Invalid;
    return KuratowskiKind::K33;
  }
  return KuratowskiKind::Invalid;
}

namespace {

// Face count by tracing the rotation system: successor of directed edge
// (u,v) is (v,w) where w follows u in v's rotation.
std::optional<int> trace_faces(const Graph& g, const RotationSystem& rot) {
  int n = g.vertex_count();
  if (static_cast<int>(rot.order.size()) != n) return std::nullopt;
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rot.order[v].size()) != g.degree(v))
      return std::nullopt;
    for (size_t i = 0; i < rot.order[v].size(); ++i) {
      int u = rot.order[v][i];
      if (!g.has_edge(u, v)) return std::nullopt;
      if (!pos[v].emplace(u, static_cast<int>(i)).second) return std::nullopt;
    }
  }
  std::set<std::pair<int, int>> visited;
  int faces = 0;
  for (int u = 0; u < n; ++u) {
    std::uint64_t nb = g.neighbors(u);
    while (nb) {
      int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (visited.count({u, v})) continue;
      ++faces;
      int cu = u, cv = v;
      while (visited.insert({cu, cv}).second) {
        const auto& order = rot.order[cv];
        int i = pos[cv].at(cu);
        int w = order[(i + 1) % order.size()];
        cu = cv;
        cv = w;
      }
    }
  }
  return faces;
}

}  // namespace

bool verify_planarity_certificate(const Graph& g, const PlanarityVerdict& v) {
  if (v.planar) {
    if (!v.embedding) return false;
    if (g.vertex_count() == 0) return true;
    auto faces = trace_faces(g, *v.embedding);
    if (!faces) return false;
    // Euler over all components: n - e + f = 2c, each component
    // contributing its own outer face.
    int c = static_cast<int>(g.components().size());
    return g.vertex_count() - g.edge_count() + *faces == 2 * c;
  }
  if (!v.kuratowski_edges) return false;
  KuratowskiKind kind = classify_kuratowski(g, *v.kuratowski_edges);
  return kind == KuratowskiKind::K5 || kind == KuratowskiKind::K33;
}

}  // namespace spex
