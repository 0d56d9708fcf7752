#pragma once

// Labeled posets on [p] with a color map s : [p] -> Z+, the standard
// constructions (chains, anti-chains, ordinal sums, disjoint unions, duals),
// linear extensions and signed rank functions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lhp/error.hpp"
#include "lhp/exact.hpp"

namespace lhp {

/// (lower, upper): upper covers lower.
using Cover = std::pair<int, int>;
using Permutation = std::vector<int>;

/// Partial order on {1,...,p}, stored as its transitive reduction together
/// with the full strict relation.
class LabeledPoset {
 public:
  LabeledPoset() : LabeledPoset(1, {}) {}

  /// Builds the poset generated by `relations` (any set of pairs x < y whose
  /// transitive closure is antisymmetric). Redundant pairs are reduced away.
  LabeledPoset(int p, std::span<const Cover> relations) : size_(p) {
    if (p < 1) throw invalid_input("poset size must be positive");
    strict_.assign(static_cast<std::size_t>(p) * p, 0);
    for (const auto& [x, y] : relations) {
      if (x < 1 || x > p || y < 1 || y > p)
        throw invalid_input("relation (" + std::to_string(x) + "," + std::to_string(y) +
                            ") outside ground set [" + std::to_string(p) + "]");
      if (x == y) throw invalid_input("relation on a single element " + std::to_string(x));
      at(x, y) = 1;
    }
    for (int k = 1; k <= p; ++k)
      for (int i = 1; i <= p; ++i)
        if (at(i, k))
          for (int j = 1; j <= p; ++j)
            if (at(k, j)) at(i, j) = 1;
    for (int i = 1; i <= p; ++i)
      if (at(i, i)) throw invalid_input("relations contain a cycle through " + std::to_string(i));

    lower_.assign(p + 1, {});
    upper_.assign(p + 1, {});
    for (int x = 1; x <= p; ++x)
      for (int y = 1; y <= p; ++y) {
        if (!at(x, y)) continue;
        bool covering = true;
        for (int z = 1; z <= p && covering; ++z)
          if (at(x, z) && at(z, y)) covering = false;
        if (covering) {
          covers_.emplace_back(x, y);
          upper_[x].push_back(y);
          lower_[y].push_back(x);
        }
      }
  }

  LabeledPoset(int p, std::initializer_list<Cover> relations)
      : LabeledPoset(p, std::span<const Cover>(relations.begin(), relations.size())) {}

  int size() const { return size_; }

  /// Covering pairs sorted lexicographically.
  const std::vector<Cover>& covers() const { return covers_; }

  /// x strictly below y.
  bool less(int x, int y) const { return strict_[index(x, y)] != 0; }
  bool less_equal(int x, int y) const { return x == y || less(x, y); }
  bool comparable(int x, int y) const { return less_equal(x, y) || less(y, x); }

  /// Elements covered by y, ascending.
  const std::vector<int>& lower_covers(int y) const { return lower_[y]; }
  /// Elements covering x, ascending.
  const std::vector<int>& upper_covers(int x) const { return upper_[x]; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int x = 1; x <= size_; ++x)
      if (lower_[x].empty()) out.push_back(x);
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int x = 1; x <= size_; ++x)
      if (upper_[x].empty()) out.push_back(x);
    return out;
  }

  bool is_antichain() const { return covers_.empty(); }

  bool is_chain() const {
    for (int x = 1; x <= size_; ++x)
      for (int y = x + 1; y <= size_; ++y)
        if (!comparable(x, y)) return false;
    return true;
  }

  /// Every x < y as labels whenever x precedes y.
  bool is_naturally_labeled() const {
    return std::all_of(covers_.begin(), covers_.end(), [](const Cover& c) { return c.first < c.second; });
  }

  friend bool operator==(const LabeledPoset& a, const LabeledPoset& b) {
    return a.size_ == b.size_ && a.covers_ == b.covers_;
  }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * size_ + static_cast<std::size_t>(y - 1);
  }
  std::uint8_t& at(int x, int y) { return strict_[index(x, y)]; }

  int size_;
  std::vector<Cover> covers_;
  std::vector<std::uint8_t> strict_;
  std::vector<std::vector<int>> lower_;
  std::vector<std::vector<int>> upper_;
};

/// ε(x,y) = +1 when the cover goes up in label order, -1 otherwise.
inline int epsilon(const Cover& cover) { return cover.first < cover.second ? 1 : -1; }

/// Color map s : [p] -> Z+.
class SMap {
 public:
  SMap() = default;
  explicit SMap(std::vector<int> values) : values_(std::move(values)) {
    for (int v : values_)
      if (v < 1) throw invalid_input("s-values must be positive integers");
  }
  SMap(std::initializer_list<int> values) : SMap(std::vector<int>(values)) {}

  static SMap constant(int p, int k) { return SMap(std::vector<int>(static_cast<std::size_t>(p), k)); }

  int size() const { return static_cast<int>(values_.size()); }
  /// s(x) for x in [p].
  int operator()(int x) const { return values_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& values() const { return values_; }

  std::optional<int> constant_value() const {
    if (values_.empty()) return std::nullopt;
    for (int v : values_)
      if (v != values_.front()) return std::nullopt;
    return values_.front();
  }

  std::int64_t total() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }
  int max() const { return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end()); }

  friend bool operator==(const SMap&, const SMap&) = default;

 private:
  std::vector<int> values_;
};

/// A labeled poset together with its color map.
struct WeightedPoset {
  LabeledPoset poset;
  SMap s;

  WeightedPoset(LabeledPoset p, SMap colors) : poset(std::move(p)), s(std::move(colors)) {
    if (s.size() != poset.size())
      throw invalid_input("s has " + std::to_string(s.size()) + " entries but the poset has " +
                          std::to_string(poset.size()) + " elements");
  }

  int size() const { return poset.size(); }
  friend bool operator==(const WeightedPoset&, const WeightedPoset&) = default;
};

// ---------------------------------------------------------------------------
// Constructions

/// The chain labels[0] < labels[1] < ... ; labels must be a permutation of [p].
inline LabeledPoset make_chain(std::span<const int> labels) {
  const int p = static_cast<int>(labels.size());
  if (p == 0) throw invalid_input("a chain needs at least one element");
  std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
  for (int x : labels) {
    if (x < 1 || x > p) throw invalid_input("chain label " + std::to_string(x) + " outside [" + std::to_string(p) + "]");
    if (seen[x]) throw invalid_input("duplicate chain label " + std::to_string(x));
    seen[x] = true;
  }
  std::vector<Cover> covers;
  for (int i = 0; i + 1 < p; ++i) covers.emplace_back(labels[i], labels[i + 1]);
  return LabeledPoset(p, covers);
}

inline LabeledPoset make_chain(std::initializer_list<int> labels) {
  return make_chain(std::span<const int>(labels.begin(), labels.size()));
}

/// 1 < 2 < ... < p.
inline LabeledPoset natural_chain(int p) {
  std::vector<int> labels(static_cast<std::size_t>(p));
  std::iota(labels.begin(), labels.end(), 1);
  return make_chain(labels);
}

inline LabeledPoset make_antichain(int p) {
  if (p < 1) throw invalid_input("anti-chain size must be positive");
  return LabeledPoset(p, std::span<const Cover>{});
}

/// P ⊕ Q: Q's labels shift by |P| and every element of P lies below every
/// element of Q.
inline WeightedPoset ordinal_sum(const WeightedPoset& lower, const WeightedPoset& upper) {
  const int p = lower.size();
  const int q = upper.size();
  std::vector<Cover> relations = lower.poset.covers();
  for (const auto& [x, y] : upper.poset.covers()) relations.emplace_back(x + p, y + p);
  for (int x : lower.poset.maximal_elements())
    for (int y : upper.poset.minimal_elements()) relations.emplace_back(x, y + p);
  std::vector<int> s = lower.s.values();
  s.insert(s.end(), upper.s.values().begin(), upper.s.values().end());
  return WeightedPoset(LabeledPoset(p + q, relations), SMap(std::move(s)));
}

/// A_{p1} ⊕ A_{p2} ⊕ ... with s constant on each anti-chain block.
inline WeightedPoset ordinal_sum_of_antichains(std::span<const int> block_sizes, std::span<const int> block_s) {
  if (block_sizes.empty() || block_sizes.size() != block_s.size())
    throw invalid_input("need one s-value per anti-chain block");
  std::optional<WeightedPoset> result;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    WeightedPoset block(make_antichain(block_sizes[b]), SMap::constant(block_sizes[b], block_s[b]));
    result = result ? ordinal_sum(*result, block) : block;
  }
  return *result;
}

/// Increasing label sequences u (for P) and v (for Q) partitioning [p+q].
struct Interleaving {
  std::vector<int> u;
  std::vector<int> v;
};

/// P ⊔ Q placed on [p+q] through `interleaving`; defaults to u = [1..p],
/// v = [p+1..p+q].
inline WeightedPoset disjoint_union(const WeightedPoset& P, const WeightedPoset& Q,
                                    std::optional<Interleaving> interleaving = std::nullopt) {
  const int p = P.size();
  const int q = Q.size();
  Interleaving split;
  if (interleaving) {
    split = *interleaving;
  } else {
    for (int i = 1; i <= p; ++i) split.u.push_back(i);
    for (int j = 1; j <= q; ++j) split.v.push_back(p + j);
  }
  if (static_cast<int>(split.u.size()) != p || static_cast<int>(split.v.size()) != q)
    throw invalid_input("interleaving sizes do not match the two posets");
  std::vector<int> all;
  all.insert(all.end(), split.u.begin(), split.u.end());
  all.insert(all.end(), split.v.begin(), split.v.end());
  auto increasing = [](const std::vector<int>& seq) { return std::is_sorted(seq.begin(), seq.end()) &&
                                                             std::adjacent_find(seq.begin(), seq.end()) == seq.end(); };
  std::sort(all.begin(), all.end());
  std::vector<int> expected(static_cast<std::size_t>(p + q));
  std::iota(expected.begin(), expected.end(), 1);
  if (!increasing(split.u) || !increasing(split.v) || all != expected)
    throw invalid_input("interleaving must split [p+q] into two increasing sequences");

  std::vector<Cover> relations;
  std::vector<int> s(static_cast<std::size_t>(p + q));
  for (const auto& [x, y] : P.poset.covers()) relations.emplace_back(split.u[x - 1], split.u[y - 1]);
  for (const auto& [x, y] : Q.poset.covers()) relations.emplace_back(split.v[x - 1], split.v[y - 1]);
  for (int i = 1; i <= p; ++i) s[split.u[i - 1] - 1] = P.s(i);
  for (int j = 1; j <= q; ++j) s[split.v[j - 1] - 1] = Q.s(j);
  return WeightedPoset(LabeledPoset(p + q, relations), SMap(std::move(s)));
}

/// i* = p + 1 - i.
inline int star(int i, int p) { return p + 1 - i; }

/// P*: i ≼ j in P iff i* ≼* j* in P*.
inline LabeledPoset dual(const LabeledPoset& P) {
  const int p = P.size();
  std::vector<Cover> relations;
  for (const auto& [x, y] : P.covers()) relations.emplace_back(star(x, p), star(y, p));
  return LabeledPoset(p, relations);
}

/// (P*, s*) with s*(i*) = s(i).
inline WeightedPoset dual(const WeightedPoset& Ps) {
  std::vector<int> s(Ps.s.values().rbegin(), Ps.s.values().rend());
  return WeightedPoset(dual(Ps.poset), SMap(std::move(s)));
}

// ---------------------------------------------------------------------------
// Linear extensions

/// Calls visit(const Permutation&) for every linear extension, in
/// lexicographic order of one-line notation. Returning false from visit
/// stops the enumeration.
template <typename Visitor>
void for_each_linear_extension(const LabeledPoset& P, Visitor&& visit, const Limits& limits = {}) {
  const int p = P.size();
  if (p > limits.max_poset_size)
    throw resource_limit("poset size " + std::to_string(p) + " exceeds enumeration cap " +
                         std::to_string(limits.max_poset_size));
  std::vector<int> pending(static_cast<std::size_t>(p) + 1);
  for (int x = 1; x <= p; ++x) pending[x] = static_cast<int>(P.lower_covers(x).size());
  std::vector<bool> used(static_cast<std::size_t>(p) + 1, false);
  Permutation word;
  word.reserve(p);
  bool stop = false;

  auto recurse = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == p) {
      if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Permutation&>, bool>) {
        if (!visit(std::as_const(word))) stop = true;
      } else {
        visit(std::as_const(word));
      }
      return;
    }
    for (int x = 1; x <= p && !stop; ++x) {
      if (used[x] || pending[x] != 0) continue;
      used[x] = true;
      word.push_back(x);
      for (int y : P.upper_covers(x)) --pending[y];
      self(self);
      for (int y : P.upper_covers(x)) ++pending[y];
      word.pop_back();
      used[x] = false;
    }
  };
  recurse(recurse);
}

inline std::vector<Permutation> linear_extensions(const LabeledPoset& P, const Limits& limits = {}) {
  std::vector<Permutation> out;
  for_each_linear_extension(P, [&](const Permutation& w) { out.push_back(w); }, limits);
  return out;
}

inline std::uint64_t count_linear_extensions(const LabeledPoset& P, const Limits& limits = {}) {
  std::uint64_t n = 0;
  for_each_linear_extension(P, [&](const Permutation&) { ++n; }, limits);
  return n;
}

/// Does the one-line word list P consistently (π_i ≼ π_j implies i <= j)?
inline bool is_linear_extension(const LabeledPoset& P, std::span<const int> word) {
  const int p = P.size();
  if (static_cast<int>(word.size()) != p) return false;
  std::vector<int> position(static_cast<std::size_t>(p) + 1, 0);
  for (int i = 0; i < p; ++i) {
    const int x = word[i];
    if (x < 1 || x > p || position[x] != 0) return false;
    position[x] = i + 1;
  }
  for (const auto& [x, y] : P.covers())
    if (position[x] > position[y]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Signed rank

struct RankFunction {
  /// rho[x-1] = ρ(x).
  std::vector<int> rho;
  /// All maximal elements share the same rank.
  bool sign_graded = false;
  /// That common rank, when sign_graded.
  std::optional<int> rank;

  int operator()(int x) const { return rho[static_cast<std::size_t>(x - 1)]; }
  bool nonnegative() const {
    return std::all_of(rho.begin(), rho.end(), [](int r) { return r >= 0; });
  }
  int max() const { return *std::max_element(rho.begin(), rho.end()); }
};

/// The rank function of a sign-ranked poset, or nullopt when the system
/// ρ(minimal) = 0, ρ(y) - ρ(x) = ε(x,y) on covers is inconsistent.
inline std::optional<RankFunction> sign_ranked(const LabeledPoset& P, const Limits& limits = {}) {
  const int p = P.size();
  // A topological order: the first linear extension.
  Permutation order;
  for_each_linear_extension(
      P, [&](const Permutation& w) { order = w; return false; },
      Limits{std::max(limits.max_poset_size, p), limits.max_colored, limits.max_points});
  std::vector<std::optional<int>> rho(static_cast<std::size_t>(p) + 1);
  for (int y : order) {
    if (P.lower_covers(y).empty()) {
      rho[y] = 0;
      continue;
    }
    for (int x : P.lower_covers(y)) {
      const int candidate = *rho[x] + epsilon({x, y});
      if (!rho[y]) {
        rho[y] = candidate;
      } else if (*rho[y] != candidate) {
        return std::nullopt;
      }
    }
  }
  RankFunction result;
  for (int x = 1; x <= p; ++x) result.rho.push_back(*rho[x]);
  const auto maximal = P.maximal_elements();
  result.sign_graded = std::all_of(maximal.begin(), maximal.end(),
                                   [&](int x) { return result(x) == result(maximal.front()); });
  if (result.sign_graded) result.rank = result(maximal.front());
  return result;
}

/// s = ρ + 1 for a sign-ranked poset with ρ >= 0.
inline std::optional<SMap> rank_plus_one(const LabeledPoset& P) {
  auto rank = sign_ranked(P);
  if (!rank || !rank->nonnegative()) return std::nullopt;
  std::vector<int> s;
  for (int r : rank->rho) s.push_back(r + 1);
  return SMap(std::move(s));
}

// ---------------------------------------------------------------------------
// Exhaustive generation

/// Every partial order on [p], p <= 6. Built by adjoining element k+1 to each
/// poset on [k] with a chosen down-set D and up-set U (D an order ideal, U a
/// filter, D entirely below U). The output order is deterministic.
inline std::vector<LabeledPoset> all_labeled_posets(int p) {
  if (p < 1 || p > 6) throw resource_limit("labeled poset generation supports 1 <= p <= 6");
  // Relations as bit matrices: below[y] = set of x with x < y.
  struct Raw {
    std::vector<std::uint32_t> below;
  };
  std::vector<Raw> level{Raw{{0u}}};
  for (int k = 1; k < p; ++k) {
    std::vector<Raw> next;
    for (const Raw& raw : level) {
      std::vector<std::uint32_t> above(static_cast<std::size_t>(k), 0);
      for (int y = 0; y < k; ++y)
        for (int x = 0; x < k; ++x)
          if (raw.below[y] >> x & 1u) above[x] |= 1u << y;
      const std::uint32_t full = (1u << k) - 1;
      for (std::uint32_t down = 0; down <= full; ++down) {
        bool ideal = true;
        for (int y = 0; y < k && ideal; ++y)
          if ((down >> y & 1u) && (raw.below[y] & ~down)) ideal = false;
        if (!ideal) continue;
        for (std::uint32_t up = 0; up <= full; ++up) {
          if (up & down) continue;
          bool ok = true;
          for (int x = 0; x < k && ok; ++x)
            if ((up >> x & 1u) && (above[x] & ~up)) ok = false;
          for (int d = 0; d < k && ok; ++d)
            if ((down >> d & 1u) && ((above[d] & up) != up)) ok = false;
          if (!ok) continue;
          Raw extended;
          extended.below = raw.below;
          for (int u = 0; u < k; ++u)
            if (up >> u & 1u) extended.below[u] |= 1u << k;
          extended.below.push_back(down);
          next.push_back(std::move(extended));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<LabeledPoset> out;
  out.reserve(level.size());
  for (const Raw& raw : level) {
    std::vector<Cover> relations;
    for (int y = 0; y < p; ++y)
      for (int x = 0; x < p; ++x)
        if (raw.below[y] >> x & 1u) relations.emplace_back(x + 1, y + 1);
    out.emplace_back(p, relations);
  }
  return out;
}

}  // namespace lhp
