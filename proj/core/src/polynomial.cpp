#include "spex/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

namespace spex {

namespace mp = boost::multiprecision;

std::string to_decimal_string(const Rational& r, int digits) {
  BigInt num = mp::numerator(r);
  BigInt den = mp::denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt ip = num / den;
  BigInt rem = num % den;
  std::ostringstream os;
  if (neg && (ip != 0 || rem != 0)) os << '-';
  os << ip;
  if (digits > 0) {
    os << '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      os << rem / den;
      rem %= den;
    }
  }
  return os.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::sign_at(const Rational& x) const {
  Rational v = eval(x);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<int>(i);
  return Poly(std::move(d));
}

Poly Poly::operator-() const {
  std::vector<Rational> d(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
  return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> d(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(d));
}

Poly Poly::rem(const Poly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  const Rational& lead = d.c_.back();
  while (static_cast<int>(r.size()) - 1 >= dd) {
    Rational q = r.back() / lead;
    int shift = static_cast<int>(r.size()) - 1 - dd;
    for (int i = 0; i <= dd; ++i) r[shift + i] -= q * d.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // monic
  std::vector<Rational> d = a.c_;
  Rational lead = d.back();
  for (auto& x : d) x /= lead;
  return Poly(std::move(d));
}

Poly Poly::squarefree() const {
  if (degree() <= 1) return *this;
  Poly g = gcd(*this, derivative());
  if (g.degree() == 0) return *this;
  // exact division by g
  std::vector<Rational> r = c_;
  std::vector<Rational> q(c_.size() - g.c_.size() + 1, Rational(0));
  int dg = g.degree();
  const Rational& lead = g.c_.back();
  while (static_cast<int>(r.size()) - 1 >= dg) {
    Rational f = r.back() / lead;
    int shift = static_cast<int>(r.size()) - 1 - dg;
    q[shift] = f;
    for (int i = 0; i <= dg; ++i) r[shift + i] -= f * g.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) break;
  }
  return Poly(std::move(q));
}

Rational Poly::root_bound() const {
  if (degree() < 1) return 1;
  Rational m = 0;
  for (int i = 0; i < degree(); ++i) m = std::max(m, abs(c_[i]));
  return 1 + m / abs(c_.back());
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rational mag = abs(a);
    bool unit = (mag == 1) && i > 0;
    if (!unit) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

SturmChain::SturmChain(const Poly& p) {
  seq_.push_back(p);
  Poly d = p.derivative();
  if (!d.is_zero()) seq_.push_back(d);
  while (seq_.back().degree() > 0) {
    Poly r = seq_[seq_.size() - 2].rem(seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(-r);
  }
}

int SturmChain::variations(const Rational& x) const {
  int var = 0, prev = 0;
  for (const Poly& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int SturmChain::count_roots(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

AlgebraicReal::AlgebraicReal(Poly p, Rational lo, Rational hi)
    : p_(std::move(p)), chain_(p_), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) {
  Poly p({-r, Rational(1)});
  return AlgebraicReal(p, r - 1, r);
}

AlgebraicReal AlgebraicReal::largest_root(const Poly& p) {
  Poly sf = p.squarefree();
  Rational bound = sf.root_bound();
  SturmChain chain(sf);
  int total = chain.count_roots(-bound, bound);
  if (total < 1)
    throw std::invalid_argument("polynomial has no real roots: " +
                                p.to_string());
  // Shrink (lo, hi] keeping at least one root above lo and none above hi.
  Rational lo = -bound, hi = bound;
  while (chain.count_roots(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (chain.count_roots(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
  return AlgebraicReal(sf, std::move(lo), std::move(hi));
}

void AlgebraicReal::bisect() {
  Rational mid = (lo_ + hi_) / 2;
  if (chain_.count_roots(mid, hi_) >= 1)
    lo_ = mid;
  else
    hi_ = mid;
}

void AlgebraicReal::refine(const Rational& width) {
  while (hi_ - lo_ > width) bisect();
}

double AlgebraicReal::approx() const {
  return to_double((lo_ + hi_) / 2);
}

int AlgebraicReal::compare_to_rational(const Rational& r) const {
  AlgebraicReal b = from_rational(r);
  auto c = compare(*this, b);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::strong_ordering AlgebraicReal::compare(AlgebraicReal a, AlgebraicReal b) {
  // Any root of g = gcd(p_a, p_b) inside both isolating intervals must be
  // the unique p_a-root there (= a) and the unique p_b-root there (= b),
  // so one Sturm count on the intersection decides equality. Otherwise
  // bisection separates the intervals.
  Poly g = Poly::gcd(a.p_, b.p_);
  std::optional<SturmChain> gchain;
  if (g.degree() >= 1) gchain.emplace(g);
  for (;;) {
    if (a.hi_ <= b.lo_) return std::strong_ordering::less;
    if (b.hi_ <= a.lo_) return std::strong_ordering::greater;
    if (gchain) {
      Rational lo = std::max(a.lo_, b.lo_);
      Rational hi = std::min(a.hi_, b.hi_);
      if (lo < hi && gchain->count_roots(lo, hi) >= 1)
        return std::strong_ordering::equal;
    }
    a.bisect();
    b.bisect();
  }
}

Poly characteristic_polynomial(const Graph& g) {
  int n = g.vertex_count();
  // Faddeev-LeVerrier: M_0 = I, c_n = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k.
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, 0));
  std::vector<BigInt> coeff(n + 1, 0);
  coeff[n] = 1;
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto mul_adj = [&](const std::vector<std::vector<BigInt>>& x) {
    std::vector<std::vector<BigInt>> out(n, std::vector<BigInt>(n, 0));
    for (int i = 0; i < n; ++i) {
      std::uint64_t nb = g.neighbors(i);
      while (nb) {
        int k = std::countr_zero(nb);
        nb &= nb - 1;
        for (int j = 0; j < n; ++j) out[i][j] += x[k][j];
      }
    }
    return out;
  };
  for (int k = 1; k <= n; ++k) {
    auto am = mul_adj(m);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += am[i][i];
    BigInt ck = -tr / k;  // exact: trace is divisible by k
    coeff[n - k] = ck;
    for (int i = 0; i < n; ++i) am[i][i] += ck;
    m = std::move(am);
  }
  std::vector<Rational> c(n + 1);
  for (int i = 0; i <= n; ++i) c[i] = Rational(coeff[i]);
  return Poly(std::move(c));
}

AlgebraicReal exact_spectral_radius(const Graph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("spectral radius of the null graph");
  return AlgebraicReal::largest_root(characteristic_polynomial(g));
}

}  // namespace spex
