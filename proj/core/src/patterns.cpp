#include "spex/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace spex {

namespace {

struct EmbedState {
  const Graph* host;
  int np;
  std::vector<int> order;          // pattern vertices, most-constrained first
  std::vector<std::uint64_t> pre;  // pattern neighbors among earlier order slots
  std::vector<int> pdeg;
  std::vector<int> assign;         // order slot -> host vertex
  std::uint64_t used = 0;

  bool extend(int slot) {
    if (slot == np) return true;
    int pv = order[slot];
    // Candidates must be adjacent to the images of all previously placed
    // pattern neighbors of pv.
    std::uint64_t cand = host->vertex_mask() & ~used;
    std::uint64_t need = pre[slot];
    while (need) {
      int s = std::countr_zero(need);
      need &= need - 1;
      cand &= host->neighbors(assign[s]);
      if (!cand) return false;
    }
    while (cand) {
      int hv = std::countr_zero(cand);
      cand &= cand - 1;
      if (host->degree(hv) < pdeg[pv]) continue;
      assign[slot] = hv;
      used |= std::uint64_t{1} << hv;
      if (extend(slot + 1)) return true;
      used &= ~(std::uint64_t{1} << hv);
    }
    return false;
  }
};

}  // namespace

ContainmentWitness contains_subgraph(const Graph& host, const Graph& pattern) {
  int np = pattern.vertex_count();
  if (np > host.vertex_count()) return {};
  if (pattern.edge_count() > host.edge_count()) return {};
  if (np == 0) return {std::vector<int>{}};

  EmbedState st;
  st.host = &host;
  st.np = np;

  // Descending degree, then keep the search connected where possible:
  // among unplaced vertices prefer one with a placed neighbor.
  std::vector<int> by_degree(np);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
    return pattern.degree(a) > pattern.degree(b);
  });
  std::uint64_t placed = 0;
  st.order.reserve(np);
  for (int k = 0; k < np; ++k) {
    int pick = -1;
    for (int v : by_degree) {
      if ((placed >> v) & 1u) continue;
      if (pick < 0) pick = v;
      if (pattern.neighbors(v) & placed) {
        pick = v;
        break;
      }
    }
    st.order.push_back(pick);
    placed |= std::uint64_t{1} << pick;
  }

  st.pre.assign(np, 0);
  std::vector<int> slot_of(np);
  for (int s = 0; s < np; ++s) slot_of[st.order[s]] = s;
  for (int s = 0; s < np; ++s) {
    std::uint64_t nb = pattern.neighbors(st.order[s]);
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (slot_of[u] < s) st.pre[s] |= std::uint64_t{1} << slot_of[u];
    }
  }
  st.pdeg.resize(np);
  for (int v = 0; v < np; ++v) st.pdeg[v] = pattern.degree(v);
  st.assign.assign(np, -1);

  if (!st.extend(0)) return {};
  std::vector<int> mapping(np);
  for (int s = 0; s < np; ++s) mapping[st.order[s]] = st.assign[s];
  return {std::move(mapping)};
}

bool is_F_free(const Graph& host, const Graph& pattern) {
  return !contains_subgraph(host, pattern);
}

namespace {

bool colorable(const Graph& g, int k) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  // Vertices in descending-degree order; first vertex pinned to color 0
  // and each new color may only be opened once (symmetry breaking).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });

  auto rec = [&](auto&& self, int idx, int used) -> bool {
    if (idx == n) return true;
    int v = order[idx];
    std::uint64_t nb = g.neighbors(v);
    unsigned forbidden = 0;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (color[u] >= 0) forbidden |= 1u << color[u];
    }
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((forbidden >> c) & 1u) continue;
      color[v] = c;
      if (self(self, idx + 1, std::max(used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
  int n = g.vertex_count();
  if (n > 16)
    throw std::invalid_argument("chromatic_number capped at 16 vertices, got " +
                                std::to_string(n));
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  for (int k = 2; k <= n; ++k)
    if (colorable(g, k)) return k;
  return n;
}

namespace {

// Items descending into bins with residual capacities; identical residuals
// are interchangeable, so each recursion level only tries distinct values.
bool pack(std::vector<int>& residual, const std::vector<int>& items,
          size_t idx) {
  if (idx == items.size()) return true;
  int item = items[idx];
  int last = -1;
  for (size_t b = 0; b < residual.size(); ++b) {
    if (residual[b] < item || residual[b] == last) continue;
    last = residual[b];
    residual[b] -= item;
    bool ok = pack(residual, items, idx + 1);
    residual[b] += item;
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool forest_contains(const LinearForest& host, const LinearForest& pattern) {
  if (pattern.vertex_count() > host.vertex_count()) return false;
  if (pattern.part_count() == 0) return true;
  if (pattern.longest_part() > host.longest_part()) return false;
  std::vector<int> residual = host.parts();
  return pack(residual, pattern.parts(), 0);
}

bool is_H_maximal(const LinearForest& candidate, const LinearForest& h) {
  if (forest_contains(candidate, h)) return false;
  const auto& parts = candidate.parts();
  int k = candidate.part_count();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      std::vector<int> merged;
      merged.reserve(k - 1);
      for (int t = 0; t < k; ++t)
        if (t != i && t != j) merged.push_back(parts[t]);
      merged.push_back(parts[i] + parts[j]);
      if (!forest_contains(LinearForest(merged), h)) return false;
      // Equal part sizes give identical merges.
      while (j + 1 < k && parts[j + 1] == parts[j]) ++j;
    }
    while (i + 1 < k && parts[i + 1] == parts[i]) ++i;
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  Graph claw = join(Graph(1), Graph(3));  // K_{1,3}
  return !contains_subgraph(g, claw);
}

}  // namespace spex
