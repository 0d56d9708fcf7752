#pragma once

// s-colored linear extensions L(P,s), their descent sets and statistics,
// and the (P,s)-Eulerian polynomials obtained by summing over them.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lhp/error.hpp"
#include "lhp/exact.hpp"
#include "lhp/polynomial.hpp"
#include "lhp/poset.hpp"

namespace lhp {

/// τ = (π, r). `r` is indexed by element: r[x-1] = r(x).
struct ColoredPermutation {
  Permutation pi;
  std::vector<int> r;

  int size() const { return static_cast<int>(pi.size()); }
  /// π_i, 1-based position.
  int letter(int i) const { return pi[static_cast<std::size_t>(i - 1)]; }
  /// r(x), x an element.
  int color(int x) const { return r[static_cast<std::size_t>(x - 1)]; }
  /// r(π_i).
  int color_at(int i) const { return color(letter(i)); }
  std::int64_t color_sum() const {
    std::int64_t total = 0;
    for (int c : r) total += c;
    return total;
  }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
};

inline void validate(const ColoredPermutation& tau, const SMap& s) {
  const int p = tau.size();
  if (s.size() != p || static_cast<int>(tau.r.size()) != p)
    throw invalid_input("colored permutation and s-map sizes differ");
  std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
  for (int x : tau.pi) {
    if (x < 1 || x > p || seen[x]) throw invalid_input("π is not a permutation of [p]");
    seen[x] = true;
  }
  for (int x = 1; x <= p; ++x)
    if (tau.color(x) < 0 || tau.color(x) >= s(x))
      throw invalid_input("color r(" + std::to_string(x) + ") outside [0, s(x))");
}

/// Streams L(P,s): π in lexicographic order, then r lexicographic in
/// (r(1), ..., r(p)). The same ColoredPermutation object is reused between
/// calls; copy it to keep it.
template <typename Visitor>
void for_each_colored_extension(const LabeledPoset& P, const SMap& s, Visitor&& visit,
                                const Limits& limits = {}) {
  if (s.size() != P.size()) throw invalid_input("s-map size does not match the poset");
  const int p = P.size();
  std::uint64_t produced = 0;
  ColoredPermutation tau;
  tau.r.assign(static_cast<std::size_t>(p), 0);
  for_each_linear_extension(
      P,
      [&](const Permutation& word) {
        tau.pi = word;
        std::fill(tau.r.begin(), tau.r.end(), 0);
        while (true) {
          if (++produced > limits.max_colored)
            throw resource_limit("|L(P,s)| exceeds the colored enumeration cap " +
                                 std::to_string(limits.max_colored));
          visit(std::as_const(tau));
          int x = p;
          while (x >= 1 && tau.r[x - 1] + 1 == s(x)) tau.r[--x] = 0;
          if (x < 1) break;
          ++tau.r[x - 1];
        }
      },
      limits);
}

inline std::vector<ColoredPermutation> colored_extensions(const LabeledPoset& P, const SMap& s,
                                                          const Limits& limits = {}) {
  std::vector<ColoredPermutation> out;
  for_each_colored_extension(P, s, [&](const ColoredPermutation& tau) { out.push_back(tau); }, limits);
  return out;
}

// ---------------------------------------------------------------------------
// Descents

namespace detail {

/// Is i (1 <= i < p) a descent of τ when colors are shifted by `shift`
/// (0 for D1, 1 for D3)?
inline bool is_descent(const ColoredPermutation& tau, const SMap& s, int i, int shift) {
  const int a = tau.letter(i);
  const int b = tau.letter(i + 1);
  const int cmp = compare_fractions(tau.color(a) + shift, s(a), tau.color(b) + shift, s(b));
  return a < b ? cmp > 0 : cmp >= 0;
}

}  // namespace detail

/// D1 ⊆ [p-1]; D2 adds 0 when r(π_1) = 0; D adds p when r(π_p) > 0;
/// D4 is D2 with the same rule at p; D3 compares (r+1)/s.
struct DescentProfile {
  std::vector<int> d1;
  std::vector<int> d2;
  std::vector<int> d3;
  std::vector<int> d4;
  std::vector<int> d;
};

inline DescentProfile descent_profile(const ColoredPermutation& tau, const SMap& s) {
  const int p = tau.size();
  DescentProfile out;
  for (int i = 1; i < p; ++i) {
    if (detail::is_descent(tau, s, i, 0)) out.d1.push_back(i);
    if (detail::is_descent(tau, s, i, 1)) out.d3.push_back(i);
  }
  out.d2 = out.d1;
  if (tau.color_at(1) == 0) out.d2.insert(out.d2.begin(), 0);
  out.d = out.d1;
  out.d4 = out.d2;
  if (tau.color_at(p) > 0) {
    out.d.push_back(p);
    out.d4.push_back(p);
  }
  return out;
}

/// |D(τ)| without building the full profile.
inline int des_s(const ColoredPermutation& tau, const SMap& s) {
  const int p = tau.size();
  int count = tau.color_at(p) > 0 ? 1 : 0;
  for (int i = 1; i < p; ++i) count += detail::is_descent(tau, s, i, 0) ? 1 : 0;
  return count;
}

struct Statistics {
  int des_s = 0;
  std::int64_t comaj = 0;
  std::int64_t lhp = 0;
  /// Only defined when s is constant.
  std::optional<std::int64_t> fmaj;
};

/// comaj = Σ_{i∈D} (p - i); lhp = |r| + Σ_{i∈D} (s(π_{i+1}) + ... + s(π_p));
/// fmaj = |r| + k·comaj when s ≡ k.
inline Statistics statistics(const ColoredPermutation& tau, const SMap& s) {
  const int p = tau.size();
  // tail[i] = s(π_{i+1}) + ... + s(π_p), with tail[p] = 0.
  std::vector<std::int64_t> tail(static_cast<std::size_t>(p) + 1, 0);
  for (int i = p - 1; i >= 0; --i) tail[i] = tail[i + 1] + s(tau.letter(i + 1));
  Statistics out;
  const auto profile = descent_profile(tau, s);
  out.des_s = static_cast<int>(profile.d.size());
  out.lhp = tau.color_sum();
  for (int i : profile.d) {
    out.comaj += p - i;
    out.lhp += tail[i];
  }
  if (auto k = s.constant_value()) out.fmaj = tau.color_sum() + static_cast<std::int64_t>(*k) * out.comaj;
  return out;
}

inline std::int64_t fmaj(const ColoredPermutation& tau, const SMap& s) {
  auto value = statistics(tau, s).fmaj;
  if (!value) throw invalid_input("fmaj is defined only for constant s");
  return *value;
}

// ---------------------------------------------------------------------------
// Eulerian polynomials

/// Σ_{τ ∈ L(P,s)} t^{f(τ)} for an integer-valued statistic f.
template <typename Statistic>
Polynomial distribution(const LabeledPoset& P, const SMap& s, Statistic&& statistic, const Limits& limits = {}) {
  std::vector<std::int64_t> counts;
  for_each_colored_extension(
      P, s,
      [&](const ColoredPermutation& tau) {
        const auto k = static_cast<std::size_t>(statistic(tau));
        if (counts.size() <= k) counts.resize(k + 1, 0);
        ++counts[k];
      },
      limits);
  return Polynomial::from_counts(counts);
}

/// A_{(P,s)}(t) = Σ_τ t^{des_s(τ)}.
inline Polynomial eulerian(const LabeledPoset& P, const SMap& s, const Limits& limits = {}) {
  return distribution(P, s, [&](const ColoredPermutation& tau) { return des_s(tau, s); }, limits);
}

inline Polynomial eulerian(const WeightedPoset& Ps, const Limits& limits = {}) {
  return eulerian(Ps.poset, Ps.s, limits);
}

/// An element (k, x) of X(P,s): color k of element x.
struct XElement {
  int color = 0;
  int element = 1;
  friend bool operator==(const XElement&, const XElement&) = default;
};

/// (k,x) < (l,y) iff k/s(x) < l/s(y), or equal fractions and x < y.
inline bool x_less(const XElement& a, const XElement& b, const SMap& s) {
  const int cmp = compare_fractions(a.color, s(a.element), b.color, s(b.element));
  return cmp < 0 || (cmp == 0 && a.element < b.element);
}

/// X(P,s) listed in increasing order.
inline std::vector<XElement> x_order(const SMap& s) {
  std::vector<XElement> out;
  for (int x = 1; x <= s.size(); ++x)
    for (int k = 0; k < s(x); ++k) out.push_back({k, x});
  std::sort(out.begin(), out.end(), [&](const XElement& a, const XElement& b) { return x_less(a, b, s); });
  return out;
}

/// Every A^γ_{(P,s)} in X(P,s) order, from one pass over L(P,s).
inline std::vector<Polynomial> refined_eulerian_family(const LabeledPoset& P, const SMap& s,
                                                       const Limits& limits = {}) {
  const auto order = x_order(s);
  // slot[x][k] = position of (k,x) in the order.
  std::vector<std::vector<std::size_t>> slot(static_cast<std::size_t>(s.size()) + 1);
  for (int x = 1; x <= s.size(); ++x) slot[x].resize(static_cast<std::size_t>(s(x)));
  for (std::size_t i = 0; i < order.size(); ++i) slot[order[i].element][order[i].color] = i;
  const int p = P.size();
  std::vector<std::vector<std::int64_t>> counts(order.size(), std::vector<std::int64_t>(p + 1, 0));
  for_each_colored_extension(
      P, s,
      [&](const ColoredPermutation& tau) {
        const int first = tau.letter(1);
        ++counts[slot[first][tau.color(first)]][des_s(tau, s)];
      },
      limits);
  std::vector<Polynomial> out;
  for (const auto& row : counts) out.push_back(Polynomial::from_counts(row));
  return out;
}

/// A^γ_{(P,s)}(t): the des_s distribution over τ whose first letter and its
/// color equal γ.
inline Polynomial refined_eulerian(const LabeledPoset& P, const SMap& s, const XElement& gamma,
                                   const Limits& limits = {}) {
  if (s.size() != P.size()) throw invalid_input("s-map size does not match the poset");
  if (gamma.element < 1 || gamma.element > s.size() || gamma.color < 0 || gamma.color >= s(gamma.element))
    throw invalid_input("γ = (" + std::to_string(gamma.color) + "," + std::to_string(gamma.element) +
                        ") is not in X(P,s)");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(P.size()) + 1, 0);
  for_each_colored_extension(
      P, s,
      [&](const ColoredPermutation& tau) {
        if (tau.letter(1) == gamma.element && tau.color(gamma.element) == gamma.color) ++counts[des_s(tau, s)];
      },
      limits);
  return Polynomial::from_counts(counts);
}

}  // namespace lhp
