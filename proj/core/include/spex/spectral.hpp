#ifndef SPEX_SPECTRAL_HPP
#define SPEX_SPECTRAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "spex/graph.hpp"
#include "spex/polynomial.hpp"

namespace spex {

/// Spectral radius estimate with its Perron vector (max-norm 1), the
/// residual max-norm of A v - lambda v, and the iteration count. On a
/// disconnected graph the data belongs to the maximizing component.
struct PerronResult {
  double lambda = 0;
  std::vector<double> vector;  // length n; zero off the reported component
  double residual = 0;
  std::int64_t iterations = 0;
  int component = 0;           // index into Graph::components()
};

struct PerronOptions {
  double tolerance = 1e-12;
  std::int64_t max_iterations = 1'000'000;
};

/// Power iteration on A + I (the shift keeps the dominant eigenvalue
/// simple on bipartite graphs). Throws on non-convergence within the cap.
PerronResult perron(const Graph& g, const PerronOptions& opts = {});

/// v'Av / v'v. Never exceeds the spectral radius (up to rounding).
double rayleigh(const Graph& g, std::span<const double> v);
Rational rayleigh_exact(const Graph& g, std::span<const Rational> v);

/// Certified enclosure of the spectral radius from exact Collatz-Wielandt
/// ratios of a rationalized iterate: lo <= lambda <= hi.
struct RadiusInterval {
  Rational lo, hi;
};
RadiusInterval certified_radius(const Graph& g, const PerronOptions& opts = {});

/// shift + sqrt(radicand), both rational.
struct SqrtAffine {
  Rational shift, radicand;
};

/// Monic integer cubic c0 + c1 x + c2 x^2 + x^3 with an isolated root.
struct CubicRootForm {
  std::array<BigInt, 4> coeffs;
};

/// Exact algebraic description of a spectral radius plus a certified
/// rational enclosure (width <= 2^-40).
struct ClosedFormRadius {
  std::variant<SqrtAffine, CubicRootForm> form;
  Rational lo, hi;

  std::string symbolic() const;    // e.g. "1+sqrt(17)"
  AlgebraicReal algebraic() const;
  double approx() const;
};

enum class ClosedFormFamily {
  TwoApexCycle,        // 2K1 + C_{n-2}:            1 + sqrt(2n-3)
  JoinK2Cycle,         // K2 + C_{n-2}:             3/2 + sqrt(2n-15/4)
  JoinK2Matching,      // K2 + (n-2)/2 K2, n even:  1 + sqrt(2n-4)
  JoinK2NearMatching,  // K2 + ((n-3)/2 K2 u K1), n odd: cubic root
};

/// The eigen-equation closed form for the family at order n. Throws on
/// parity mismatch or out-of-range n.
ClosedFormRadius closed_form(ClosedFormFamily family, int n);

/// The graph the closed form describes (for cross-checking).
Graph closed_form_graph(ClosedFormFamily family, int n);

std::optional<ClosedFormFamily> closed_form_family_from_name(const std::string&);
std::string closed_form_family_name(ClosedFormFamily);

/// Exact ordering of two closed-form radii.
std::strong_ordering compare_radii(const ClosedFormRadius& a,
                                   const ClosedFormRadius& b);

/// Rewires v onto the target set: removes all edges at v, connects v to
/// every vertex of `targets`, and optionally deletes one more edge not
/// incident to v.
Graph transform(const Graph& g, int v, std::uint64_t targets,
                std::optional<std::pair<int, int>> deleted_edge = std::nullopt);

/// v'A(g2)v - v'A(g)v over the edge-set symmetric difference, exact.
Rational quadratic_form_delta(const Graph& g, const Graph& g2,
                              std::span<const Rational> v);

}  // namespace spex

#endif  // SPEX_SPECTRAL_HPP
