#ifndef SPEX_CANONICAL_HPP
#define SPEX_CANONICAL_HPP

#include <cstdint>

#include "spex/graph.hpp"

namespace spex {

/// Canonicalization works on graphs of at most this many vertices so the
/// whole upper triangle (n(n-1)/2 <= 55 bits) fits one machine word.
inline constexpr int kCanonicalMaxVertices = 11;

/// Upper-triangle adjacency bits in the labelling given, column-major
/// ((0,1),(0,2),(1,2),(0,3),...), first pair in the most significant
/// position of the n(n-1)/2-bit word.
std::uint64_t upper_bits(const Graph& g);

Graph from_upper_bits(int n, std::uint64_t bits);

/// Minimum of upper_bits over all vertex relabellings: a complete
/// isomorphism invariant. Branch-and-bound with prefix pruning and
/// twin skipping.
std::uint64_t canonical_bits(const Graph& g);

/// The graph relabelled into its canonical form.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace spex

#endif  // SPEX_CANONICAL_HPP
