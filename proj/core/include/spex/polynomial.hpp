#ifndef SPEX_POLYNOMIAL_HPP
#define SPEX_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal_string(const Rational& r, int digits);
double to_double(const Rational& r);

/// Dense univariate polynomial with rational coefficients, constant term
/// first. Normalized: no trailing zero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  const Rational& operator[](int i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;
  Poly derivative() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly&) const = default;

  /// Remainder of this / d (euclidean division over the rationals).
  Poly rem(const Poly& d) const;

  /// Monic greatest common divisor.
  static Poly gcd(Poly a, Poly b);

  /// this / gcd(this, this'): same roots, all simple.
  Poly squarefree() const;

  /// 1 + max |c_i| / |c_lead|: every real root lies in (-B, B).
  Rational root_bound() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Sturm chain of a squarefree polynomial; counts distinct real roots in
/// half-open intervals (a, b].
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);
  int variations(const Rational& x) const;
  int count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<Poly> seq_;
};

/// A real algebraic number: a squarefree polynomial together with a
/// rational interval (lo, hi] containing exactly one of its roots.
class AlgebraicReal {
 public:
  static AlgebraicReal from_rational(const Rational& r);
  /// Largest real root of p (p must have at least one real root).
  static AlgebraicReal largest_root(const Poly& p);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  const Poly& poly() const { return p_; }

  /// Bisects until hi - lo <= width.
  void refine(const Rational& width);

  double approx() const;

  /// Exact comparison; equal values are detected via a common factor.
  static std::strong_ordering compare(AlgebraicReal a, AlgebraicReal b);

  int compare_to_rational(const Rational& r) const;

 private:
  AlgebraicReal(Poly p, Rational lo, Rational hi);
  void bisect();
  Poly p_;
  SturmChain chain_;
  Rational lo_, hi_;
};

/// det(xI - A(g)): integer coefficients, computed exactly by
/// Faddeev-LeVerrier.
Poly characteristic_polynomial(const Graph& g);

/// Largest adjacency eigenvalue as an exact algebraic number.
AlgebraicReal exact_spectral_radius(const Graph& g);

}  // namespace spex

#endif  // SPEX_POLYNOMIAL_HPP
