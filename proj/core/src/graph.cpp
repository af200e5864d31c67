#include "spex/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace spex {

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1) << (u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::uint64_t> Graph::components() const {
  std::vector<std::uint64_t> comps;
  std::uint64_t seen = 0;
  for (int s = 0; s < n_; ++s) {
    if ((seen >> s) & 1u) continue;
    std::uint64_t comp = std::uint64_t{1} << s;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= adj_[v] & ~comp;
      }
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    comps.push_back(comp);
  }
  return comps;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  return components().size() == 1;
}

Graph Graph::induced(std::uint64_t mask) const {
  mask &= vertex_mask();
  std::vector<int> label(n_, -1);
  int k = 0;
  for (int v = 0; v < n_; ++v)
    if ((mask >> v) & 1u) label[v] = k++;
  Graph out(k);
  for (int v = 0; v < n_; ++v) {
    if (label[v] < 0) continue;
    std::uint64_t nb = adj_[v] & mask;
    while (nb) {
      int u = std::countr_zero(nb);
      nb &= nb - 1;
      if (u > v) out.add_edge(label[v], label[u]);
    }
  }
  return out;
}

LinearForest::LinearForest(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1)
      throw std::invalid_argument("forest part " + std::to_string(p) +
                                  " must be >= 1");
  std::sort(parts_.rbegin(), parts_.rend());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  if (n_ > kMaxVertices)
    throw std::invalid_argument("forest order " + std::to_string(n_) +
                                " exceeds " + std::to_string(kMaxVertices));
}

std::string LinearForest::to_string() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << '}';
  return os.str();
}

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph construct(const GraphFamilyTag& tag) {
  switch (tag.family) {
    case Family::Path:
      require(tag.order >= 1 && tag.order <= kMaxVertices,
              "Path order " + std::to_string(tag.order) + " outside 1..64");
      return path_graph(tag.order);
    case Family::Cycle:
      require(tag.order >= 3 && tag.order <= kMaxVertices,
              "Cycle order " + std::to_string(tag.order) + " outside 3..64");
      return cycle_graph(tag.order);
    case Family::Empty:
      require(tag.order >= 1 && tag.order <= kMaxVertices,
              "Empty order " + std::to_string(tag.order) + " outside 1..64");
      return Graph(tag.order);
    case Family::Complete: {
      require(tag.order >= 1 && tag.order <= kMaxVertices,
              "Complete order " + std::to_string(tag.order) + " outside 1..64");
      Graph g(tag.order);
      for (int i = 0; i < tag.order; ++i)
        for (int j = i + 1; j < tag.order; ++j) g.add_edge(i, j);
      return g;
    }
    case Family::Matching: {
      require(tag.order >= 1 && 2 * tag.order <= kMaxVertices,
              "Matching size " + std::to_string(tag.order) + " outside 1..32");
      Graph g(2 * tag.order);
      for (int i = 0; i < tag.order; ++i) g.add_edge(2 * i, 2 * i + 1);
      return g;
    }
    case Family::Book:
      require(tag.order >= 1 && tag.order + 2 <= kMaxVertices,
              "Book pages " + std::to_string(tag.order) + " outside 1..62");
      return join(construct(GraphFamilyTag::complete(2)),
                  Graph(tag.order));
    case Family::TwoApexCycle:
      require(tag.order >= 5 && tag.order <= kMaxVertices,
              "TwoApexCycle order " + std::to_string(tag.order) +
                  " outside 5..64");
      return join(Graph(2), cycle_graph(tag.order - 2));
    case Family::JoinK2Forest: {
      LinearForest f(tag.parts);
      require(f.vertex_count() >= 1 && f.vertex_count() + 2 <= kMaxVertices,
              "JoinK2Forest order " + std::to_string(f.vertex_count()) +
                  " outside 1..62");
      return join(construct(GraphFamilyTag::complete(2)), forest_realize(f));
    }
  }
  throw std::invalid_argument("unknown family tag");
}

Graph join(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  if (na + nb > kMaxVertices)
    throw std::invalid_argument("join order " + std::to_string(na + nb) +
                                " exceeds " + std::to_string(kMaxVertices));
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) g.add_edge(u, na + v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  if (na + nb > kMaxVertices)
    throw std::invalid_argument("union order " + std::to_string(na + nb) +
                                " exceeds " + std::to_string(kMaxVertices));
  Graph g(na + nb);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  return g;
}

Graph forest_realize(const LinearForest& f) {
  Graph g(f.vertex_count());
  int base = 0;
  for (int p : f.parts()) {
    for (int i = 0; i + 1 < p; ++i) g.add_edge(base + i, base + i + 1);
    base += p;
  }
  return g;
}

std::optional<LinearForest> forest_of(const Graph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) return std::nullopt;
  std::vector<int> parts;
  for (std::uint64_t comp : g.components()) {
    int size = std::popcount(comp);
    int comp_edges = 0;
    std::uint64_t m = comp;
    while (m) {
      int v = std::countr_zero(m);
      m &= m - 1;
      comp_edges += std::popcount(g.neighbors(v) & comp);
    }
    comp_edges /= 2;
    if (comp_edges != size - 1) return std::nullopt;  // cycle component
    parts.push_back(size);
  }
  return LinearForest(parts);
}

namespace {

// graph6 order header: one byte for n <= 62, '~' + 3 bytes for 63..258047.
void append_g6_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  append_g6_order(out, n);
  int bit = 0;
  char chunk = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      chunk = static_cast<char>((chunk << 1) | (g.has_edge(row, col) ? 1 : 0));
      if (++bit == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        bit = 0;
        chunk = 0;
      }
    }
  }
  if (bit) out.push_back(static_cast<char>((chunk << (6 - bit)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw Graph6Error("truncated graph6", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 byte", pos);
    ++pos;
    return c - 63;
  };
  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  }
  if (n > kMaxVertices)
    throw Graph6Error("order " + std::to_string(n) + " exceeds 64", 0);
  Graph g(n);
  int bit = 0, chunk = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bit == 0) {
        chunk = next();
        bit = 6;
      }
      if ((chunk >> (bit - 1)) & 1) g.add_edge(row, col);
      --bit;
    }
  }
  if (pos != text.size()) throw Graph6Error("trailing graph6 bytes", pos);
  return g;
}

namespace {

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    out.push_back(std::stoi(s.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

}  // namespace

std::optional<Graph> parse_family_shorthand(const std::string& text) {
  std::string name = text;
  std::string arg;
  if (size_t colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  auto single = [&](Family f) {
    return construct({f, std::stoi(arg), {}});
  };
  try {
    if (name == "k5-e" || name == "k5\\e") return construct(GraphFamilyTag::join_k2_forest({3}));
    if (name == "path" || name == "p") return single(Family::Path);
    if (name == "cycle" || name == "c") return single(Family::Cycle);
    if (name == "empty" || name == "i") return single(Family::Empty);
    if (name == "complete" || name == "k") return single(Family::Complete);
    if (name == "matching") return single(Family::Matching);
    if (name == "book" || name == "b") return single(Family::Book);
    if (name == "two-apex-cycle") return single(Family::TwoApexCycle);
    if (name == "k2-forest")
      return construct(GraphFamilyTag::join_k2_forest(parse_int_list(arg)));
    if (name == "k33") {
      Graph g = join(Graph(3), Graph(3));
      return g;
    }
  } catch (const std::invalid_argument&) {
    throw;  // recognized family, bad parameter
  }
  return std::nullopt;
}

Graph parse_graph_argument(const std::string& text) {
  if (auto g = parse_family_shorthand(text)) return *g;
  return graph6_decode(text);
}

std::string degree_sequence_string(const Graph& g) {
  std::ostringstream os;
  os << '(';
  auto d = g.degree_sequence();
  for (size_t i = 0; i < d.size(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  os << ')';
  return os.str();
}

}  // namespace spex
