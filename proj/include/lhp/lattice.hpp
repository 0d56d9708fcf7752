#pragma once

// Lattice points of the lecture hall cone C(P,s): membership, quotient and
// remainder decompositions, bounded enumeration, Ehrhart counts, and the
// Eulerian polynomial recovered from those counts.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lhp/colored_perms.hpp"
#include "lhp/error.hpp"
#include "lhp/exact.hpp"
#include "lhp/polynomial.hpp"
#include "lhp/poset.hpp"

namespace lhp {

/// f[x-1] = f(x).
using LatticePoint = std::vector<std::int64_t>;

namespace detail {

/// The (P,s)-partition condition on one cover (x, y): f(x)/s(x) <= f(y)/s(y),
/// strict when x > y as labels.
inline bool cover_holds(const SMap& s, int x, int y, std::int64_t fx, std::int64_t fy) {
  const int cmp = compare_fractions(fx, s(x), fy, s(y));
  return x < y ? cmp <= 0 : cmp < 0;
}

}  // namespace detail

/// Is f a (P,s)-partition with f >= 0, i.e. a point of N(P,s)? Checking the
/// covers suffices.
inline bool is_partition(const LabeledPoset& P, const SMap& s, std::span<const std::int64_t> f) {
  if (static_cast<int>(f.size()) != P.size()) return false;
  for (std::int64_t v : f)
    if (v < 0) return false;
  for (const auto& [x, y] : P.covers())
    if (!detail::cover_holds(s, x, y, f[x - 1], f[y - 1])) return false;
  return true;
}

/// f in C(P_π, s) for the chain π_1 ≺ ... ≺ π_p.
inline bool in_chain_cone(std::span<const int> pi, const SMap& s, std::span<const std::int64_t> f) {
  for (std::size_t i = 0; i + 1 < pi.size(); ++i)
    if (!detail::cover_holds(s, pi[i], pi[i + 1], f[pi[i] - 1], f[pi[i + 1] - 1])) return false;
  for (std::int64_t v : f)
    if (v < 0) return false;
  return true;
}

/// f = q·s + r with 0 <= r < s, or in the primed variant 0 < r <= s.
struct QRDecomposition {
  std::vector<std::int64_t> q;
  std::vector<std::int64_t> r;
  bool primed = false;
};

inline QRDecomposition quotient_remainder(std::span<const std::int64_t> f, const SMap& s, bool primed = false) {
  if (static_cast<int>(f.size()) != s.size()) throw invalid_input("point and s-map sizes differ");
  QRDecomposition out;
  out.primed = primed;
  for (int x = 1; x <= s.size(); ++x) {
    const std::int64_t v = f[x - 1];
    if (v < 0 || (primed && v < 1))
      throw invalid_input("f(" + std::to_string(x) + ") = " + std::to_string(v) + " has no " +
                          (primed ? "primed " : "") + "decomposition");
    std::int64_t q = primed ? (v - 1) / s(x) : v / s(x);
    out.q.push_back(q);
    out.r.push_back(v - q * s(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regimes

/// Coordinatewise bounds lo[x-1] <= f(x) <= hi[x-1].
struct Box {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] > hi[i]) return true;
    return false;
  }

  Box intersect(const Box& o) const {
    Box out = *this;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      out.lo[i] = std::max(lo[i], o.lo[i]);
      out.hi[i] = std::min(hi[i], o.hi[i]);
    }
    return out;
  }
};

namespace regime {

inline Box scaled(const SMap& s, std::int64_t lower, std::int64_t mult, std::int64_t offset) {
  Box box;
  for (int x = 1; x <= s.size(); ++x) {
    box.lo.push_back(lower);
    box.hi.push_back(mult * s(x) + offset);
  }
  return box;
}

/// N_{<=n}(P,s): 0 <= f(x) <= n·s(x).
inline Box n_leq(const SMap& s, std::int64_t n) { return scaled(s, 0, n, 0); }
/// N_{<n}(P,s): 0 <= f(x) < n·s(x).
inline Box n_less(const SMap& s, std::int64_t n) { return scaled(s, 0, n, -1); }
/// Z_+(P,s) with f(x)/s(x) <= n.
inline Box zplus_leq(const SMap& s, std::int64_t n) { return scaled(s, 1, n, 0); }
/// Cone points with every q(f)(x) <= qcap.
inline Box cone_bounded(const SMap& s, std::int64_t qcap) { return scaled(s, 0, qcap + 1, -1); }
/// Positive points with every q'(f)(x) <= qcap.
inline Box zplus_primed_bounded(const SMap& s, std::int64_t qcap) { return scaled(s, 1, qcap + 1, 0); }
/// The cube [0, bound]^p.
inline Box cube(int p, std::int64_t bound) {
  return Box{std::vector<std::int64_t>(static_cast<std::size_t>(p), 0),
             std::vector<std::int64_t>(static_cast<std::size_t>(p), bound)};
}

}  // namespace regime

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Depth-first search over coordinates in label order. When x is assigned,
/// the covers joining x to smaller labels are enforced: a lower cover y < x
/// gives the weak bound f(x) >= f(y)s(x)/s(y), an upper cover z < x the
/// strict bound f(x) < f(z)s(x)/s(z). Every cover is met exactly once.
/// With `count_last`, the final coordinate is counted rather than visited.
template <typename Leaf>
void point_search(const LabeledPoset& P, const SMap& s, const Box& box, bool count_last, Leaf&& leaf) {
  const int p = P.size();
  if (s.size() != p || static_cast<int>(box.lo.size()) != p || static_cast<int>(box.hi.size()) != p)
    throw invalid_input("sizes of P, s and box differ");
  LatticePoint f(static_cast<std::size_t>(p), 0);
  auto recurse = [&](auto&& self, int x) -> void {
    std::int64_t lo = std::max<std::int64_t>(box.lo[x - 1], 0);
    std::int64_t hi = box.hi[x - 1];
    for (int y : P.lower_covers(x))
      if (y < x) lo = std::max(lo, ceil_div(f[y - 1] * s(x), s(y)));
    for (int z : P.upper_covers(x))
      if (z < x) hi = std::min(hi, ceil_div(f[z - 1] * s(x), s(z)) - 1);
    if (lo > hi) return;
    if (x == p && count_last) {
      leaf(f, static_cast<std::uint64_t>(hi - lo + 1));
      return;
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      f[x - 1] = v;
      if (x == p) leaf(std::as_const(f), std::uint64_t{1});
      else self(self, x + 1);
    }
    f[x - 1] = 0;
  };
  recurse(recurse, 1);
}

}  // namespace detail

/// Calls visit(const LatticePoint&) for every point of N(P,s) inside `box`,
/// in lexicographic order of (f(1), ..., f(p)).
template <typename Visitor>
void for_each_point(const LabeledPoset& P, const SMap& s, const Box& box, Visitor&& visit, const Limits& limits = {}) {
  std::uint64_t produced = 0;
  detail::point_search(P, s, box, false, [&](const LatticePoint& f, std::uint64_t) {
    if (++produced > limits.max_points)
      throw resource_limit("lattice point enumeration exceeds the cap " + std::to_string(limits.max_points));
    visit(f);
  });
}

inline std::vector<LatticePoint> enumerate_points(const LabeledPoset& P, const SMap& s, const Box& box,
                                                  const Limits& limits = {}) {
  std::vector<LatticePoint> out;
  for_each_point(P, s, box, [&](const LatticePoint& f) { out.push_back(f); }, limits);
  return out;
}

/// |N(P,s) ∩ box|, counting the last coordinate's range in one step.
inline Integer count_points(const LabeledPoset& P, const SMap& s, const Box& box, const Limits& limits = {}) {
  std::uint64_t total = 0;
  std::uint64_t visited = 0;
  detail::point_search(P, s, box, true, [&](const LatticePoint&, std::uint64_t n) {
    if (++visited > limits.max_points)
      throw resource_limit("lattice point search exceeds the cap " + std::to_string(limits.max_points));
    total += n;
  });
  return Integer(std::to_string(total));
}

/// i(O(P,s), n) := |N_{<=n}(P,s)| for n = 0..nmax.
inline std::vector<Integer> ehrhart_counts(const LabeledPoset& P, const SMap& s, int nmax, const Limits& limits = {}) {
  if (nmax < 0) throw invalid_input("nmax must be nonnegative");
  std::vector<Integer> out;
  for (int n = 0; n <= nmax; ++n) out.push_back(count_points(P, s, regime::n_leq(s, n), limits));
  return out;
}

/// A_{(P,s)}(t) from the counts at n = 0..p+2; the vanishing of the degree
/// p+1 and p+2 coefficients is checked.
inline Polynomial eulerian_via_ehrhart(const LabeledPoset& P, const SMap& s, const Limits& limits = {}) {
  const int p = P.size();
  const auto counts = ehrhart_counts(P, s, p + 2, limits);
  return hstar_from_counts(counts, p);
}

/// Smallest n with f(x)/s(x) <= n for all x.
inline std::int64_t dilation_leq(std::span<const std::int64_t> f, const SMap& s) {
  std::int64_t n = 0;
  for (int x = 1; x <= s.size(); ++x) n = std::max(n, ceil_div(f[x - 1], s(x)));
  return n;
}

/// Smallest n with f(x)/s(x) < n for all x.
inline std::int64_t dilation_less(std::span<const std::int64_t> f, const SMap& s) {
  std::int64_t n = 0;
  for (int x = 1; x <= s.size(); ++x) n = std::max(n, floor_div(f[x - 1], s(x)) + 1);
  return n;
}

}  // namespace lhp
