#pragma once

// Exact real-root analysis: square-free (Yun) decomposition, Sturm chains,
// bisection root isolation over the rationals, and the interleaving relation
// f ≪ g decided on isolated roots.

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "lhp/error.hpp"
#include "lhp/exact.hpp"
#include "lhp/polynomial.hpp"

namespace lhp {

/// Factors f_1, f_2, ... with f = c·∏ f_i^i, each f_i monic and square-free
/// (f_i = 1 when no root has multiplicity i).
inline std::vector<Polynomial> yun_decomposition(const Polynomial& f) {
  std::vector<Polynomial> out;
  if (f.degree() < 1) return out;
  const Polynomial g = f.monic();
  const Polynomial dg = g.derivative();
  const Polynomial a0 = gcd(g, dg);
  Polynomial b = exact_quotient(g, a0);
  Polynomial c = exact_quotient(dg, a0);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    const Polynomial a = gcd(b, d);
    out.push_back(a);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

/// f / gcd(f, f'), monic.
inline Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() < 1) return f.is_zero() ? f : Polynomial::constant(1);
  return exact_quotient(f.monic(), gcd(f, f.derivative()));
}

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree) {
    if (squarefree.is_zero()) throw invalid_input("Sturm sequence of the zero polynomial");
    chain_.push_back(positive_scaled(squarefree));
    if (squarefree.degree() < 1) return;
    chain_.push_back(positive_scaled(squarefree.derivative()));
    while (chain_.back().degree() > 0) {
      Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      if (r.is_zero()) break;
      chain_.push_back(positive_scaled(-r));
    }
  }

  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      const int sg = q.sign_at(x);
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  int variations_at_infinity(bool positive) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      int sg = sgn(q.leading());
      if (!positive && q.degree() % 2 == 1) sg = -sg;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  }

  /// Distinct roots in (a, b].
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  /// Distinct real roots.
  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

  const Polynomial& base() const { return chain_.front(); }

 private:
  // Scaling by a positive constant leaves every sign intact.
  static Polynomial positive_scaled(const Polynomial& q) {
    Rational lead = q.leading();
    if (lead < 0) lead = -lead;
    return (1 / lead) * q;
  }

  std::vector<Polynomial> chain_;
};

/// Isolated real roots, ascending. Each interval (lower, upper] contains
/// exactly one distinct root.
struct IsolatingIntervals {
  struct Root {
    Rational lower;
    Rational upper;
    int multiplicity = 1;
  };
  std::vector<Root> roots;

  int total_multiplicity() const {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
  }
};

/// Cauchy bound: every root θ satisfies |θ| < bound.
inline Rational root_bound(const Polynomial& f) {
  Rational best = 0;
  for (int k = 0; k < f.degree(); ++k) {
    Rational ratio = f[k] / f.leading();
    if (ratio < 0) ratio = -ratio;
    best = std::max(best, ratio);
  }
  return best + 1;
}

/// Isolating intervals of a square-free polynomial (multiplicity 1 each).
inline std::vector<IsolatingIntervals::Root> isolate_squarefree(const Polynomial& h) {
  std::vector<IsolatingIntervals::Root> out;
  if (h.degree() < 1) return out;
  const SturmSequence sturm(h);
  const Rational bound = root_bound(h);
  auto split = [&](auto&& self, const Rational& a, const Rational& b, int count) -> void {
    if (count == 0) return;
    if (count == 1) {
      out.push_back({a, b, 1});
      return;
    }
    const Rational mid = (a + b) / 2;
    const int left = sturm.count(a, mid);
    self(self, a, mid, left);
    self(self, mid, b, count - left);
  };
  split(split, -bound, bound, sturm.count(-bound, bound));
  return out;
}

/// Halves (lower, upper] around its root until the width is at most `width`.
inline IsolatingIntervals::Root refine(const SturmSequence& sturm, IsolatingIntervals::Root root,
                                       const Rational& width) {
  while (root.upper - root.lower > width) {
    const Rational mid = (root.lower + root.upper) / 2;
    if (sturm.count(root.lower, mid) == 1) root.upper = mid;
    else root.lower = mid;
  }
  return root;
}

/// Common root isolation for a family of polynomials: the distinct real
/// roots of all members, ascending, and each member's multiplicity at each.
class RootAtlas {
 public:
  explicit RootAtlas(std::span<const Polynomial> family) : family_(family.begin(), family.end()) {
    Polynomial combined = Polynomial::constant(1);
    std::vector<std::vector<Polynomial>> factors;
    for (const auto& f : family_) {
      factors.push_back(yun_decomposition(f));
      const Polynomial part = squarefree_part(f);
      if (part.degree() > 0) combined = exact_quotient(combined * part, gcd(combined, part));
    }
    roots_ = isolate_squarefree(combined);
    multiplicity_.assign(family_.size(), std::vector<int>(roots_.size(), 0));
    for (std::size_t i = 0; i < family_.size(); ++i) {
      for (std::size_t m = 0; m < factors[i].size(); ++m) {
        if (factors[i][m].degree() < 1) continue;
        const SturmSequence sturm(factors[i][m]);
        for (std::size_t j = 0; j < roots_.size(); ++j)
          if (sturm.count(roots_[j].lower, roots_[j].upper) > 0) multiplicity_[i][j] = static_cast<int>(m) + 1;
      }
    }
  }

  std::size_t size() const { return family_.size(); }
  const std::vector<IsolatingIntervals::Root>& roots() const { return roots_; }
  int multiplicity(std::size_t member, std::size_t root) const { return multiplicity_[member][root]; }

  /// Number of real roots of a member, counted with multiplicity.
  int real_root_count(std::size_t member) const {
    int total = 0;
    for (int m : multiplicity_[member]) total += m;
    return total;
  }

  /// Zero and constant polynomials count as real-rooted.
  bool real_rooted(std::size_t member) const {
    const auto& f = family_[member];
    return f.degree() < 1 || real_root_count(member) == f.degree();
  }

  IsolatingIntervals isolation(std::size_t member) const {
    IsolatingIntervals out;
    for (std::size_t j = 0; j < roots_.size(); ++j)
      if (multiplicity_[member][j] > 0)
        out.roots.push_back({roots_[j].lower, roots_[j].upper, multiplicity_[member][j]});
    return out;
  }

  /// f ≪ g for members f, g (both assumed real-rooted with positive leading
  /// coefficients, or zero): with roots α_1 >= α_2 >= ... of f and
  /// β_1 >= β_2 >= ... of g, ... <= α_2 <= β_2 <= α_1 <= β_1.
  bool interleaves(std::size_t f, std::size_t g) const {
    if (family_[f].is_zero() || family_[g].is_zero()) return true;
    const auto alpha = descending_roots(f);
    const auto beta = descending_roots(g);
    const std::size_t n = alpha.size();
    const std::size_t m = beta.size();
    if (m < n || m > n + 1) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha[i] > beta[i]) return false;
      if (i + 1 < m && beta[i + 1] > alpha[i]) return false;
    }
    return true;
  }

 private:
  // Indices into roots_ (so index order is value order), repeated by
  // multiplicity, largest root first.
  std::vector<std::size_t> descending_roots(std::size_t member) const {
    std::vector<std::size_t> out;
    for (std::size_t j = roots_.size(); j-- > 0;)
      for (int k = 0; k < multiplicity_[member][j]; ++k) out.push_back(j);
    return out;
  }

  std::vector<Polynomial> family_;
  std::vector<IsolatingIntervals::Root> roots_;
  std::vector<std::vector<int>> multiplicity_;
};

/// Real roots of g with multiplicities.
inline IsolatingIntervals isolate_real_roots(const Polynomial& g) {
  const Polynomial family[] = {g};
  return RootAtlas(family).isolation(0);
}

/// Every root real, counted with multiplicity; constants and zero qualify.
inline bool is_real_rooted(const Polynomial& g) {
  if (g.degree() < 1) return true;
  const Polynomial family[] = {g};
  return RootAtlas(family).real_rooted(0);
}

namespace detail {

inline void require_interleaving_input(const RootAtlas& atlas, std::span<const Polynomial> family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_zero()) continue;
    if (family[i].leading() < 0)
      throw invalid_input("interleaving needs positive leading coefficients: " + family[i].to_string());
    if (!atlas.real_rooted(i)) throw invalid_input("not real-rooted: " + family[i].to_string());
  }
}

}  // namespace detail

/// f ≪ g: f is an interleaver of g. Zero interleaves everything both ways.
inline bool interleaves(const Polynomial& f, const Polynomial& g) {
  const Polynomial family[] = {f, g};
  const RootAtlas atlas(family);
  detail::require_interleaving_input(atlas, family);
  return atlas.interleaves(0, 1);
}

/// f_i ≪ f_j for all i < j.
inline bool is_interlacing_sequence(std::span<const Polynomial> family) {
  const RootAtlas atlas(family);
  detail::require_interleaving_input(atlas, family);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!atlas.interleaves(i, j)) return false;
  return true;
}

}  // namespace lhp
