#include "spex/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace spex {

namespace {

void check_size(int n) {
  if (n > kCanonicalMaxVertices)
    throw std::invalid_argument("canonical form capped at " +
                                std::to_string(kCanonicalMaxVertices) +
                                " vertices, got " + std::to_string(n));
}

struct Search {
  int n;
  int total_bits;
  std::array<std::uint64_t, kCanonicalMaxVertices> adj;
  std::array<int, kCanonicalMaxVertices> placed;
  std::uint64_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};

  bool twins(int u, int v) const {
    std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
    return (adj[u] & ~bv) == (adj[v] & ~bu);
  }

  void dfs(int slot, int bits_used, std::uint64_t prefix) {
    if (slot == n) {
      best = std::min(best, prefix << (total_bits - bits_used));
      return;
    }
    // Column bits of each candidate, tried in ascending order.
    struct Cand {
      std::uint64_t col;
      int v;
      bool operator<(const Cand& o) const {
        return col != o.col ? col < o.col : v < o.v;
      }
    };
    std::array<Cand, kCanonicalMaxVertices> cands;
    int count = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1u) continue;
      std::uint64_t col = 0;
      for (int r = 0; r < slot; ++r)
        col = (col << 1) | ((adj[placed[r]] >> v) & 1u);
      cands[count++] = {col, v};
    }
    std::sort(cands.begin(), cands.begin() + count);

    for (int i = 0; i < count; ++i) {
      auto [col, v] = cands[i];
      // Interchangeable with an already-tried candidate of the same column.
      bool dup = false;
      for (int j = 0; j < i && cands[j].col == col; ++j)
        if (twins(cands[j].v, v)) {
          dup = true;
          break;
        }
      if (dup) continue;

      int nb = bits_used + slot;
      std::uint64_t np = (prefix << slot) | col;
      // Lexicographic prune against the incumbent's prefix.
      if (np > (best >> (total_bits - nb))) continue;

      placed[slot] = v;
      used |= std::uint64_t{1} << v;
      dfs(slot + 1, nb, np);
      used &= ~(std::uint64_t{1} << v);
    }
  }
};

}  // namespace

std::uint64_t upper_bits(const Graph& g) {
  check_size(g.vertex_count());
  std::uint64_t bits = 0;
  for (int col = 1; col < g.vertex_count(); ++col)
    for (int row = 0; row < col; ++row)
      bits = (bits << 1) | (g.has_edge(row, col) ? 1 : 0);
  return bits;
}

Graph from_upper_bits(int n, std::uint64_t bits) {
  check_size(n);
  Graph g(n);
  int total = n * (n - 1) / 2;
  int pos = total;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row)
      if ((bits >> --pos) & 1u) g.add_edge(row, col);
  return g;
}

std::uint64_t canonical_bits(const Graph& g) {
  int n = g.vertex_count();
  check_size(n);
  if (n <= 1) return 0;
  Search s;
  s.n = n;
  s.total_bits = n * (n - 1) / 2;
  for (int v = 0; v < n; ++v) s.adj[v] = g.neighbors(v);
  s.dfs(0, 0, 0);
  return s.best;
}

Graph canonical_graph(const Graph& g) {
  return from_upper_bits(g.vertex_count(), canonical_bits(g));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_bits(a) == canonical_bits(b);
}

}  // namespace spex
