#ifndef SPEX_GRAPH_HPP
#define SPEX_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spex {

/// Hard cap on vertex counts: one 64-bit word per adjacency row.
inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices, stored as one bitset
/// row per vertex. Vertices are labelled 0..n-1. Adjacency is kept
/// symmetric and irreflexive; the edge count is cached.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(check_order(n))) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
    if ((adj_[u] >> v) & 1u) return;
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++m_;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!((adj_[u] >> v) & 1u)) return;
    adj_[u] &= ~(std::uint64_t{1} << v);
    adj_[v] &= ~(std::uint64_t{1} << u);
    --m_;
  }

  /// Removes every edge incident to v; the vertex itself stays.
  void isolate(int v) {
    check_vertex(v);
    std::uint64_t nb = adj_[v];
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      adj_[u] &= ~(std::uint64_t{1} << v);
      --m_;
    }
    adj_[v] = 0;
  }

  /// Neighbor set of v as a bitmask over vertex labels.
  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return std::popcount(neighbors(v)); }

  /// Mask with bits 0..n-1 set.
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::vector<int> degree_sequence() const;  // sorted descending

  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool is_connected() const;

  /// Vertex masks of the connected components (singletons included).
  std::vector<std::uint64_t> components() const;

  /// Induced subgraph on the vertices of `mask`, relabelled 0..k-1 in
  /// increasing label order.
  Graph induced(std::uint64_t mask) const;

  bool operator==(const Graph&) const = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) +
                                  " outside 0.." + std::to_string(kMaxVertices));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside 0.." + std::to_string(n_ - 1));
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Multiset of path orders, stored sorted descending. Represents a
/// linear forest (disjoint paths and isolated vertices) purely by its
/// part sizes; the labelled realization lives in forest_realize().
class LinearForest {
 public:
  LinearForest() = default;
  explicit LinearForest(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int vertex_count() const { return n_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  int edge_count() const { return n_ - part_count(); }
  int longest_part() const { return parts_.empty() ? 0 : parts_.front(); }

  auto operator<=>(const LinearForest&) const = default;

  std::string to_string() const;  // e.g. "{3,2,1}"

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

enum class Family {
  Path,          // P_n
  Cycle,         // C_k, k >= 3
  Empty,         // I_k
  Complete,      // K_n
  Matching,      // p disjoint edges
  Book,          // K_2 + I_p
  TwoApexCycle,  // 2K_1 + C_{n-2}
  JoinK2Forest,  // K_2 + linear forest
};

/// Named graph family plus its integer parameters.
struct GraphFamilyTag {
  Family family;
  int order = 0;            // primary parameter (see construct())
  std::vector<int> parts;   // JoinK2Forest only

  static GraphFamilyTag path(int n) { return {Family::Path, n, {}}; }
  static GraphFamilyTag cycle(int k) { return {Family::Cycle, k, {}}; }
  static GraphFamilyTag empty(int k) { return {Family::Empty, k, {}}; }
  static GraphFamilyTag complete(int n) { return {Family::Complete, n, {}}; }
  static GraphFamilyTag matching(int p) { return {Family::Matching, p, {}}; }
  static GraphFamilyTag book(int p) { return {Family::Book, p, {}}; }
  static GraphFamilyTag two_apex_cycle(int n) { return {Family::TwoApexCycle, n, {}}; }
  static GraphFamilyTag join_k2_forest(std::vector<int> parts) {
    return {Family::JoinK2Forest, 0, std::move(parts)};
  }
};

/// Builds the named graph. Parameter meanings:
///   Path(n), Cycle(k>=3), Empty(k), Complete(n): order as named.
///   Matching(p): p disjoint edges on 2p vertices.
///   Book(p): K_2 + I_p on p+2 vertices.
///   TwoApexCycle(n): 2K_1 + C_{n-2} on n >= 5 vertices.
///   JoinK2Forest(parts): K_2 + the linear forest with those parts.
/// Throws std::invalid_argument naming the offending parameter.
Graph construct(const GraphFamilyTag& tag);

/// Disjoint copies of a and b plus all cross edges. a's vertices keep
/// their labels, b's are shifted by |V(a)|.
Graph join(const Graph& a, const Graph& b);

/// Disjoint copies, no cross edges; same labelling convention as join.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Labelled realization: parts laid out consecutively, largest first.
Graph forest_realize(const LinearForest& f);

/// Recognizes a graph that is a disjoint union of paths and isolated
/// vertices; nullopt iff some vertex has degree >= 3 or a cycle exists.
std::optional<LinearForest> forest_of(const Graph& g);

/// Standard graph6 text encoding (upper triangle, column-major, 6-bit
/// chunks offset by 63). Bit-exact round trip with graph6_decode.
std::string graph6_encode(const Graph& g);

/// Thrown on malformed graph6 input; offset is the first bad byte.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset(offset) {}
  size_t offset;
};

Graph graph6_decode(const std::string& text);

/// Parses a family shorthand like "k5-e", "book:3", "two-apex-cycle:10",
/// "path:7", "k2-forest:2,2,1"; nullopt when the text is not a shorthand.
std::optional<Graph> parse_family_shorthand(const std::string& text);

/// Accepts either a family shorthand or a graph6 string.
Graph parse_graph_argument(const std::string& text);

std::string degree_sequence_string(const Graph& g);

}  // namespace spex

#endif  // SPEX_GRAPH_HPP
