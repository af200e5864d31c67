#include "spex/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace spex {

namespace {

struct ComponentIteration {
  double lambda = 0;
  double residual = 0;
  std::int64_t iterations = 0;
};

// Power iteration on (A + I) restricted to the vertices of `mask`,
// writing the normalized vector into v (zero elsewhere).
ComponentIteration iterate_component(const Graph& g, std::uint64_t mask,
                                     std::vector<double>& v,
                                     const PerronOptions& opts) {
  int n = g.vertex_count();
  std::vector<int> verts;
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1u) verts.push_back(i);

  for (int i : verts) v[i] = 1.0;
  if (verts.size() == 1) return {0.0, 0.0, 0};

  std::vector<double> w(n, 0.0);
  ComponentIteration out;
  for (out.iterations = 1; out.iterations <= opts.max_iterations;
       ++out.iterations) {
    double maxw = 0;
    for (int i : verts) {
      double acc = v[i];  // +I shift
      std::uint64_t nb = g.neighbors(i) & mask;
      while (nb) {
        int j = std::countr_zero(nb);
        nb &= nb - 1;
        acc += v[j];
      }
      w[i] = acc;
      maxw = std::max(maxw, acc);
    }
    for (int i : verts) v[i] = w[i] / maxw;

    // Rayleigh estimate and residual on A itself.
    double num = 0, den = 0;
    for (int i : verts) {
      double acc = 0;
      std::uint64_t nb = g.neighbors(i) & mask;
      while (nb) {
        int j = std::countr_zero(nb);
        nb &= nb - 1;
        acc += v[j];
      }
      w[i] = acc;
      num += v[i] * acc;
      den += v[i] * v[i];
    }
    double lambda = num / den;
    double res = 0;
    for (int i : verts) res = std::max(res, std::abs(w[i] - lambda * v[i]));
    out.lambda = lambda;
    out.residual = res;
    if (res <= opts.tolerance) return out;
  }
  throw std::runtime_error("perron iteration did not reach tolerance " +
                           std::to_string(opts.tolerance) + " within " +
                           std::to_string(opts.max_iterations) + " iterations");
}

}  // namespace

PerronResult perron(const Graph& g, const PerronOptions& opts) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("perron of the null graph");
  auto comps = g.components();
  PerronResult best;
  bool have = false;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    std::vector<double> v(n, 0.0);
    ComponentIteration it = iterate_component(g, comps[ci], v, opts);
    if (!have || it.lambda > best.lambda) {
      have = true;
      best.lambda = it.lambda;
      best.vector = std::move(v);
      best.residual = it.residual;
      best.iterations = it.iterations;
      best.component = static_cast<int>(ci);
    }
  }
  return best;
}

double rayleigh(const Graph& g, std::span<const double> v) {
  if (static_cast<int>(v.size()) != g.vertex_count())
    throw std::invalid_argument("rayleigh vector length mismatch");
  double den = 0;
  for (double x : v) den += x * x;
  if (den == 0) throw std::invalid_argument("rayleigh of the zero vector");
  double num = 0;
  for (auto [a, b] : g.edges()) num += 2 * v[a] * v[b];
  return num / den;
}

Rational rayleigh_exact(const Graph& g, std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != g.vertex_count())
    throw std::invalid_argument("rayleigh vector length mismatch");
  Rational den = 0;
  for (const Rational& x : v) den += x * x;
  if (den == 0) throw std::invalid_argument("rayleigh of the zero vector");
  Rational num = 0;
  for (auto [a, b] : g.edges()) num += 2 * v[a] * v[b];
  return num / den;
}

RadiusInterval certified_radius(const Graph& g, const PerronOptions& opts) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("radius of the null graph");
  RadiusInterval out{Rational(0), Rational(0)};
  bool have = false;
  const BigInt scale = BigInt(1) << 48;
  for (std::uint64_t mask : g.components()) {
    Rational lo = 0, hi = 0;
    if (std::popcount(mask) >= 2) {
      std::vector<double> v(n, 0.0);
      iterate_component(g, mask, v, opts);
      // Collatz-Wielandt with an exact rational vector:
      // min_i (Av)_i/v_i <= lambda <= max_i (Av)_i/v_i.
      std::vector<Rational> rv(n, Rational(0));
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1u) {
          BigInt num = static_cast<BigInt>(std::llround(v[i] * (1LL << 48)));
          if (num <= 0) num = 1;
          rv[i] = Rational(num, scale);
        }
      bool first = true;
      for (int i = 0; i < n; ++i) {
        if (!((mask >> i) & 1u)) continue;
        Rational acc = 0;
        std::uint64_t nb = g.neighbors(i) & mask;
        while (nb) {
          int j = std::countr_zero(nb);
          nb &= nb - 1;
          acc += rv[j];
        }
        Rational ratio = acc / rv[i];
        if (first || ratio < lo) lo = ratio;
        if (first || ratio > hi) hi = ratio;
        first = false;
      }
    }
    if (!have) {
      out = {lo, hi};
      have = true;
    } else {
      out.lo = std::max(out.lo, lo);
      out.hi = std::max(out.hi, hi);
    }
  }
  return out;
}

namespace {

Poly defining_poly(const std::variant<SqrtAffine, CubicRootForm>& form) {
  if (auto* s = std::get_if<SqrtAffine>(&form)) {
    // (x - p)^2 - q
    return Poly{s->shift * s->shift - s->radicand, -2 * s->shift, Rational(1)};
  }
  const auto& c = std::get<CubicRootForm>(form).coeffs;
  return Poly{Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3])};
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string ClosedFormRadius::symbolic() const {
  if (auto* s = std::get_if<SqrtAffine>(&form)) {
    std::string root = "sqrt(" + rational_str(s->radicand) + ")";
    if (s->shift == 0) return root;
    return rational_str(s->shift) + "+" + root;
  }
  return "largest root of " + defining_poly(form).to_string();
}

AlgebraicReal ClosedFormRadius::algebraic() const {
  return AlgebraicReal::largest_root(defining_poly(form));
}

double ClosedFormRadius::approx() const { return to_double((lo + hi) / 2); }

ClosedFormRadius closed_form(ClosedFormFamily family, int n) {
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok)
      throw std::invalid_argument(msg + " (n = " + std::to_string(n) + ")");
  };
  std::variant<SqrtAffine, CubicRootForm> form;
  switch (family) {
    case ClosedFormFamily::TwoApexCycle:
      require(n >= 5 && n <= kMaxVertices, "TwoApexCycle needs 5 <= n <= 64");
      form = SqrtAffine{Rational(1), Rational(2 * n - 3)};
      break;
    case ClosedFormFamily::JoinK2Cycle:
      require(n >= 5 && n <= kMaxVertices, "JoinK2Cycle needs 5 <= n <= 64");
      form = SqrtAffine{Rational(3, 2), Rational(8 * n - 15, 4)};
      break;
    case ClosedFormFamily::JoinK2Matching:
      require(n >= 4 && n <= kMaxVertices && n % 2 == 0,
              "JoinK2Matching needs even 4 <= n <= 64");
      form = SqrtAffine{Rational(1), Rational(2 * n - 4)};
      break;
    case ClosedFormFamily::JoinK2NearMatching:
      require(n >= 5 && n <= kMaxVertices - 1 && n % 2 == 1,
              "JoinK2NearMatching needs odd 5 <= n <= 63");
      // mu^3 - 2 mu^2 - (2n-5) mu + 2 = 0: the apex/matched/isolated
      // weight system with both weight unknowns eliminated.
      form = CubicRootForm{{BigInt(2), BigInt(-(2 * n - 5)), BigInt(-2), BigInt(1)}};
      break;
  }
  ClosedFormRadius out;
  out.form = form;
  AlgebraicReal root = AlgebraicReal::largest_root(defining_poly(form));
  root.refine(Rational(1, BigInt(1) << 40));
  out.lo = root.lo();
  out.hi = root.hi();
  return out;
}

Graph closed_form_graph(ClosedFormFamily family, int n) {
  switch (family) {
    case ClosedFormFamily::TwoApexCycle:
      return construct(GraphFamilyTag::two_apex_cycle(n));
    case ClosedFormFamily::JoinK2Cycle:
      return join(construct(GraphFamilyTag::complete(2)),
                  construct(GraphFamilyTag::cycle(n - 2)));
    case ClosedFormFamily::JoinK2Matching: {
      if (n % 2 != 0) throw std::invalid_argument("JoinK2Matching needs even n");
      std::vector<int> parts((n - 2) / 2, 2);
      return construct(GraphFamilyTag::join_k2_forest(parts));
    }
    case ClosedFormFamily::JoinK2NearMatching: {
      if (n % 2 != 1)
        throw std::invalid_argument("JoinK2NearMatching needs odd n");
      std::vector<int> parts((n - 3) / 2, 2);
      parts.push_back(1);
      return construct(GraphFamilyTag::join_k2_forest(parts));
    }
  }
  throw std::invalid_argument("unknown closed-form family");
}

std::optional<ClosedFormFamily> closed_form_family_from_name(
    const std::string& name) {
  if (name == "two-apex-cycle") return ClosedFormFamily::TwoApexCycle;
  if (name == "k2-cycle") return ClosedFormFamily::JoinK2Cycle;
  if (name == "k2-matching") return ClosedFormFamily::JoinK2Matching;
  if (name == "k2-near-matching") return ClosedFormFamily::JoinK2NearMatching;
  return std::nullopt;
}

std::string closed_form_family_name(ClosedFormFamily family) {
  switch (family) {
    case ClosedFormFamily::TwoApexCycle: return "two-apex-cycle";
    case ClosedFormFamily::JoinK2Cycle: return "k2-cycle";
    case ClosedFormFamily::JoinK2Matching: return "k2-matching";
    case ClosedFormFamily::JoinK2NearMatching: return "k2-near-matching";
  }
  return "?";
}

namespace {

std::strong_ordering from_int(int s) {
  return s < 0   ? std::strong_ordering::less
         : s > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

int sign(const Rational& r) { return r > 0 ? 1 : r < 0 ? -1 : 0; }

// sqrt(q1) vs d + sqrt(q2), exact.
int compare_sqrt(const Rational& q1, const Rational& d, const Rational& q2) {
  if (d < 0 && q2 < d * d) return 1;  // rhs negative, lhs >= 0
  // both sides nonnegative; square: q1 vs d^2 + q2 + 2 d sqrt(q2)
  Rational t = q1 - q2 - d * d;
  Rational rhs_sq = 4 * d * d * q2;
  if (d >= 0) {
    if (t < 0) return -1;
    return sign(t * t - rhs_sq);
  }
  if (t > 0) return 1;
  if (t == 0) return q2 == 0 ? 0 : 1;
  return -sign(t * t - rhs_sq);
}

}  // namespace

std::strong_ordering compare_radii(const ClosedFormRadius& a,
                                   const ClosedFormRadius& b) {
  const auto* sa = std::get_if<SqrtAffine>(&a.form);
  const auto* sb = std::get_if<SqrtAffine>(&b.form);
  if (sa && sb)
    return from_int(
        compare_sqrt(sa->radicand, sb->shift - sa->shift, sb->radicand));
  return AlgebraicReal::compare(a.algebraic(), b.algebraic());
}

Graph transform(const Graph& g, int v, std::uint64_t targets,
                std::optional<std::pair<int, int>> deleted_edge) {
  targets &= ~std::uint64_t{0};
  if (targets & ~g.vertex_mask())
    throw std::invalid_argument("transform targets outside vertex range");
  if ((targets >> v) & 1u)
    throw std::invalid_argument("transform vertex " + std::to_string(v) +
                                " is in its own target set");
  if (deleted_edge) {
    auto [a, b] = *deleted_edge;
    if (a == v || b == v)
      throw std::invalid_argument("deleted edge is incident to vertex " +
                                  std::to_string(v));
    if (!g.has_edge(a, b))
      throw std::invalid_argument("deleted edge not present in graph");
  }
  Graph out = g;
  out.isolate(v);
  std::uint64_t t = targets;
  while (t) {
    int u = std::countr_zero(t);
    t &= t - 1;
    out.add_edge(v, u);
  }
  if (deleted_edge) out.remove_edge(deleted_edge->first, deleted_edge->second);
  return out;
}

Rational quadratic_form_delta(const Graph& g, const Graph& g2,
                              std::span<const Rational> v) {
  if (g.vertex_count() != g2.vertex_count())
    throw std::invalid_argument("quadratic_form_delta dimension mismatch");
  if (static_cast<int>(v.size()) != g.vertex_count())
    throw std::invalid_argument("quadratic_form_delta vector length mismatch");
  Rational delta = 0;
  for (auto [a, b] : g2.edges())
    if (!g.has_edge(a, b)) delta += v[a] * v[b];
  for (auto [a, b] : g.edges())
    if (!g2.has_edge(a, b)) delta -= v[a] * v[b];
  return 2 * delta;
}

}  // namespace spex
