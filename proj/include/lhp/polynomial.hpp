#pragma once

// Univariate polynomials with exact rational coefficients, plus the
// palindromicity, γ-vector and h*-extraction operations built on them.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lhp/error.hpp"
#include "lhp/exact.hpp"

namespace lhp {

/// Coefficients low degree first; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    normalize();
  }

  static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

  /// c·t^k.
  static Polynomial monomial(const Rational& c, int k) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
  }

  template <typename Int>
  static Polynomial from_counts(std::span<const Int> counts) {
    std::vector<Rational> coeffs;
    coeffs.reserve(counts.size());
    for (const auto& c : counts) coeffs.push_back(to_rational(c));
    return Polynomial(std::move(coeffs));
  }
  template <typename Int>
  static Polynomial from_counts(const std::vector<Int>& counts) {
    return from_counts(std::span<const Int>(counts));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }

  /// Coefficient of t^k; zero outside the stored range.
  Rational operator[](int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
  }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  int sign_at(const Rational& t) const { return sgn((*this)(t)); }

  /// Keeps degrees 0..max_degree.
  Polynomial truncated(int max_degree) const {
    std::vector<Rational> coeffs(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(c_.size(), max_degree + 1));
    return Polynomial(std::move(coeffs));
  }

  Polynomial derivative() const {
    std::vector<Rational> coeffs;
    for (std::size_t k = 1; k < c_.size(); ++k) coeffs.push_back(c_[k] * static_cast<long>(k));
    return Polynomial(std::move(coeffs));
  }

  /// Scaled to leading coefficient 1 (zero stays zero).
  Polynomial monic() const {
    if (is_zero()) return *this;
    Polynomial out = *this;
    const Rational lead = leading();
    for (auto& c : out.c_) c /= lead;
    return out;
  }

  /// g(a·t + b).
  Polynomial compose_linear(const Rational& a, const Rational& b) const {
    Polynomial out;
    const Polynomial inner(std::vector<Rational>{b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * inner + constant(*it);
    return out;
  }

  /// t^n·g(1/t) for n >= degree.
  Polynomial reversed(int n) const {
    if (is_zero()) return *this;
    if (n < degree()) throw invalid_input("reversal degree below polynomial degree");
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= degree(); ++k) coeffs[n - k] = c_[k];
    return Polynomial(std::move(coeffs));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> coeffs(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) coeffs[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(coeffs));
  }
  friend Polynomial operator*(const Rational& k, const Polynomial& a) {
    if (k == 0) return {};
    Polynomial out = a;
    for (auto& c : out.c_) c *= k;
    return out;
  }

  Polynomial pow(int e) const {
    Polynomial out = constant(1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
      if (c_[k] == 0) continue;
      std::string coeff = lhp::to_string(c_[k]);
      if (!out.empty()) {
        if (coeff.front() == '-') {
          out += " - ";
          coeff.erase(0, 1);
        } else {
          out += " + ";
        }
      }
      if (k == 0) {
        out += coeff;
        continue;
      }
      if (coeff == "-1") coeff = "-";
      else if (coeff == "1") coeff.clear();
      out += coeff + (k == 1 ? "t" : "t^" + std::to_string(k));
    }
    return out;
  }

 private:
  static Rational to_rational(const Integer& z) { return Rational(z); }
  static Rational to_rational(const Rational& q) { return q; }
  static Rational to_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }
  static Rational to_rational(int v) { return Rational(v); }

  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    for (auto& c : c_) c.canonicalize();
  }

  std::vector<Rational> c_;
};

/// Euclidean division; divisor must be nonzero.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw invalid_input("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {Polynomial{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1);
  for (int k = da; k >= db; --k) {
    if (rem[k] == 0) continue;
    const Rational factor = rem[k] / b.leading();
    quot[k - db] = factor;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd (zero when both inputs are zero).
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Exact quotient; throws when the division leaves a remainder.
inline Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw internal_error("inexact polynomial division");
  return q;
}

// ---------------------------------------------------------------------------
// Palindromicity and γ-vectors

/// t^N g(1/t) = g(t): coefficient k equals coefficient N-k for every k.
inline bool is_palindromic(const Polynomial& g, int N) {
  if (g.is_zero()) return true;
  if (N < g.degree()) return false;
  for (int k = 0; k <= N; ++k)
    if (g[k] != g[N - k]) return false;
  return true;
}

struct GammaVector {
  std::vector<Rational> gammas;
  int degree = 0;

  bool nonnegative() const {
    return std::all_of(gammas.begin(), gammas.end(), [](const Rational& g) { return g >= 0; });
  }
};

/// Σ_k γ_k t^k (1+t)^{d-2k}.
inline Polynomial reconstruct(const GammaVector& gamma) {
  Polynomial out;
  const Polynomial one_plus_t{1, 1};
  for (std::size_t k = 0; k < gamma.gammas.size(); ++k)
    out += gamma.gammas[k] *
           (Polynomial::monomial(1, static_cast<int>(k)) * one_plus_t.pow(gamma.degree - 2 * static_cast<int>(k)));
  return out;
}

/// The unique γ with g = Σ γ_k t^k (1+t)^{d-2k}; g must satisfy t^d g(1/t) = g.
inline GammaVector gamma_vector(const Polynomial& g, int d) {
  if (d < 0 || !is_palindromic(g, d))
    throw invalid_input("γ-vector requires a palindromic polynomial of degree " + std::to_string(d));
  GammaVector out;
  out.degree = d;
  Polynomial rest = g;
  const Polynomial one_plus_t{1, 1};
  for (int k = 0; k <= d / 2; ++k) {
    const Rational gk = rest[k];
    out.gammas.push_back(gk);
    if (gk != 0) rest -= gk * (Polynomial::monomial(1, k) * one_plus_t.pow(d - 2 * k));
  }
  if (!rest.is_zero()) throw internal_error("γ-vector elimination left a remainder");
  return out;
}

// ---------------------------------------------------------------------------
// Ehrhart series numerators

/// Numerator h(t) = (1-t)^{denominator_power} · Σ_{n<=m} counts[n] t^n,
/// checking that degrees max_degree+1..m vanish.
inline Polynomial series_numerator(std::span<const Integer> counts, int denominator_power, int max_degree) {
  const int m = static_cast<int>(counts.size()) - 1;
  if (m < max_degree)
    throw insufficient_data("need counts up to n = " + std::to_string(max_degree) + ", got n <= " +
                            std::to_string(m));
  std::vector<Integer> binom(static_cast<std::size_t>(denominator_power) + 1);
  binom[0] = 1;
  for (int j = 1; j <= denominator_power; ++j) binom[j] = binom[j - 1] * (denominator_power - j + 1) / j;
  std::vector<Rational> product(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    Integer acc = 0;
    for (int j = 0; j <= std::min(n, denominator_power); ++j) {
      const Integer term = binom[j] * counts[n - j];
      if (j % 2 == 0) acc += term;
      else acc -= term;
    }
    product[n] = Rational(acc);
  }
  for (int n = max_degree + 1; n <= m; ++n)
    if (product[n] != 0)
      throw not_polynomial("coefficient of t^" + std::to_string(n) + " in (1-t)^" +
                           std::to_string(denominator_power) + "·Σ i(n) t^n is " + lhp::to_string(product[n]));
  product.resize(static_cast<std::size_t>(max_degree) + 1);
  return Polynomial(std::move(product));
}

/// A(t) = (1-t)^{p+1} Σ_n i(n) t^n truncated to degree p, with the
/// vanishing of degrees p+1..m verified.
inline Polynomial hstar_from_counts(std::span<const Integer> counts, int p) {
  if (p < 0) throw invalid_input("dimension must be nonnegative");
  return series_numerator(counts, p + 1, p);
}

/// Σ_{n<=m} coefficient_n t^n of A(t)/(1-t)^{p+1}.
inline std::vector<Integer> expand_ehrhart_series(const Polynomial& numerator, int p, int m) {
  std::vector<Integer> out(static_cast<std::size_t>(m) + 1);
  for (int n = 0; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 0; k <= std::min(n, numerator.degree()); ++k) {
      // [t^{n-k}] (1-t)^{-(p+1)} = C(n-k+p, p).
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n - k + p), static_cast<unsigned long>(p));
      acc += numerator[k] * Rational(binom);
    }
    if (acc.get_den() != 1) throw invalid_input("series coefficients are not integral");
    out[n] = acc.get_num();
  }
  return out;
}

/// The interpolating polynomial of degree <= values.size()-1 through
/// (0, values[0]), (1, values[1]), ... (Newton forward differences).
inline Polynomial interpolate_at_naturals(std::span<const Integer> values) {
  const int m = static_cast<int>(values.size());
  std::vector<Rational> diffs;
  for (const auto& v : values) diffs.emplace_back(v);
  std::vector<Rational> leading;
  for (int level = 0; level < m; ++level) {
    leading.push_back(diffs[0]);
    for (int i = 0; i + 1 < static_cast<int>(diffs.size()); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  // Σ Δ^k f(0) · C(t, k).
  Polynomial out;
  Polynomial falling = Polynomial::constant(1);
  Rational factorial = 1;
  for (int k = 0; k < m; ++k) {
    if (k > 0) {
      falling = falling * Polynomial(std::vector<Rational>{Rational(-(k - 1)), Rational(1)});
      factorial *= k;
    }
    out += (leading[k] / factorial) * falling;
  }
  return out;
}

}  // namespace lhp
