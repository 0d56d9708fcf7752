#pragma once

// Multivariate formal power series with integer coefficients, truncated per
// variable. Every stored exponent lies in [0, cap]; products and geometric
// expansions drop above-cap terms, which is exact for everything kept since
// all exponents are nonnegative.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lhp/error.hpp"
#include "lhp/exact.hpp"

namespace lhp {

using Exponents = std::vector<int>;

/// Named variables with inclusive degree caps.
class VariableSet {
 public:
  VariableSet(std::vector<std::string> names, std::vector<int> caps)
      : names_(std::move(names)), caps_(std::move(caps)) {
    if (names_.size() != caps_.size()) throw invalid_input("one cap per variable is required");
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      if (caps_[i] < 0) throw invalid_input("variable caps must be nonnegative");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == names_[i]) throw invalid_input("duplicate variable " + names_[i]);
      strides_.push_back(stride);
      const auto radix = static_cast<std::uint64_t>(caps_[i]) + 1;
      if (stride > UINT64_MAX / radix) throw resource_limit("series exponent space too large");
      stride *= radix;
    }
  }

  static std::shared_ptr<const VariableSet> make(std::vector<std::string> names, std::vector<int> caps) {
    return std::make_shared<const VariableSet>(std::move(names), std::move(caps));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int cap(std::size_t i) const { return caps_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& caps() const { return caps_; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw invalid_input("unknown series variable " + name);
  }

  bool within_caps(std::span<const int> e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 || e[i] > caps_[i]) return false;
    return true;
  }

  std::uint64_t encode(std::span<const int> e) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < e.size(); ++i) key += strides_[i] * static_cast<std::uint64_t>(e[i]);
    return key;
  }

  void decode(std::uint64_t key, std::span<int> out) const {
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      const auto radix = static_cast<std::uint64_t>(caps_[i]) + 1;
      out[i] = static_cast<int>(key % radix);
      key /= radix;
    }
  }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_ && a.caps_ == b.caps_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> caps_;
  std::vector<std::uint64_t> strides_;
};

/// Image of one variable under substitution: scalar · ∏ target^exponent.
struct Substitution {
  Integer scalar = 1;
  std::vector<std::pair<std::string, int>> monomial;
};

class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::shared_ptr<const VariableSet> vars) : vars_(std::move(vars)) {}

  static TruncatedSeries one(std::shared_ptr<const VariableSet> vars) {
    TruncatedSeries s(std::move(vars));
    s.add_term(Exponents(s.vars_->size(), 0), 1);
    return s;
  }

  static TruncatedSeries monomial(std::shared_ptr<const VariableSet> vars, std::span<const int> e,
                                  const Integer& coeff = 1) {
    TruncatedSeries s(std::move(vars));
    s.add_term(e, coeff);
    return s;
  }

  /// Σ_{j>=0} m^j for a monomial m with at least one positive exponent.
  static TruncatedSeries geometric(std::shared_ptr<const VariableSet> vars, std::span<const int> m) {
    return one(std::move(vars)).times_geometric(m);
  }

  const VariableSet& variables() const { return *vars_; }
  const std::shared_ptr<const VariableSet>& variables_ptr() const { return vars_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff·x^e; terms above a cap are dropped, negative exponents rejected.
  void add_term(std::span<const int> e, const Integer& coeff) {
    check_arity(e.size());
    for (int v : e)
      if (v < 0) throw invalid_input("negative exponent in a truncated power series");
    if (!vars_->within_caps(e) || coeff == 0) return;
    accumulate(vars_->encode(e), coeff);
  }

  Integer coefficient(std::span<const int> e) const {
    check_arity(e.size());
    if (!vars_->within_caps(e)) return 0;
    auto it = terms_.find(vars_->encode(e));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_variables(o);
    for (const auto& [key, c] : o.terms_) accumulate(key, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_variables(o);
    for (const auto& [key, c] : o.terms_) accumulate(key, -c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_variables(b);
    const std::size_t n = a.vars_->size();
    const auto left = a.decoded();
    const auto right = b.decoded();
    TruncatedSeries out(a.vars_);
    Exponents e(n);
    for (const auto& [ea, ca] : left)
      for (const auto& [eb, cb] : right) {
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
          e[i] = ea[i] + eb[i];
          inside = e[i] <= a.vars_->cap(i);
        }
        if (inside) out.accumulate(a.vars_->encode(e), ca * cb);
      }
    return out;
  }

  /// this · Σ_{j>=0} m^j, i.e. division by (1 - m).
  TruncatedSeries times_geometric(std::span<const int> m) const {
    check_arity(m.size());
    if (std::all_of(m.begin(), m.end(), [](int v) { return v == 0; }))
      throw invalid_input("geometric series of a constant monomial does not converge");
    for (int v : m)
      if (v < 0) throw invalid_input("negative exponent in geometric series");
    TruncatedSeries out(vars_);
    const std::size_t n = vars_->size();
    const std::uint64_t step = vars_->encode(m);
    Exponents e(n);
    for (const auto& [key, c] : terms_) {
      vars_->decode(key, e);
      std::uint64_t k = key;
      while (true) {
        out.accumulate(k, c);
        bool inside = true;
        for (std::size_t i = 0; i < n && inside; ++i) {
          e[i] += m[i];
          inside = e[i] <= vars_->cap(i);
        }
        if (!inside) break;
        k += step;
      }
    }
    return out;
  }

  /// Re-expresses the series over `target`. Variables named in `images` map
  /// to the given scalar·monomial; the rest map to the same-named target
  /// variable. Above-cap results are dropped, so callers size target caps
  /// to keep the terms they need.
  TruncatedSeries substitute(std::shared_ptr<const VariableSet> target,
                             const std::map<std::string, Substitution>& images) const {
    const std::size_t n = vars_->size();
    struct Image {
      Integer scalar;
      Exponents shift;
    };
    std::vector<Image> map(n);
    for (std::size_t i = 0; i < n; ++i) {
      Image image{1, Exponents(target->size(), 0)};
      auto it = images.find(vars_->name(i));
      if (it == images.end()) {
        image.shift[target->index_of(vars_->name(i))] = 1;
      } else {
        image.scalar = it->second.scalar;
        for (const auto& [name, power] : it->second.monomial) image.shift[target->index_of(name)] += power;
      }
      map[i] = std::move(image);
    }
    TruncatedSeries out(target);
    Exponents e(n);
    Exponents f(target->size());
    for (const auto& [key, c] : terms_) {
      vars_->decode(key, e);
      std::fill(f.begin(), f.end(), 0);
      Integer coeff = c;
      for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), map[i].scalar.get_mpz_t(), static_cast<unsigned long>(e[i]));
        coeff *= power;
        for (std::size_t j = 0; j < f.size(); ++j) f[j] += map[i].shift[j] * e[i];
      }
      out.add_term(f, coeff);
    }
    return out;
  }

  /// Terms sorted lexicographically by exponent vector.
  std::vector<std::pair<Exponents, Integer>> sorted_terms() const {
    auto out = decoded();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void accumulate(std::uint64_t key, const Integer& c) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
      terms_.erase(it);
    }
  }

  std::vector<std::pair<Exponents, Integer>> decoded() const {
    std::vector<std::pair<Exponents, Integer>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
      Exponents e(vars_->size());
      vars_->decode(key, e);
      out.emplace_back(std::move(e), c);
    }
    return out;
  }

  void check_arity(std::size_t n) const {
    if (n != vars_->size()) throw invalid_input("exponent vector length does not match the variable set");
  }

  void require_same_variables(const TruncatedSeries& o) const {
    if (vars_ != o.vars_ && !(*vars_ == *o.vars_)) throw invalid_input("series over different variable sets");
  }

  std::shared_ptr<const VariableSet> vars_;
  std::unordered_map<std::uint64_t, Integer> terms_;
};

/// First exponent vector (lexicographic) where two series disagree.
struct SeriesMismatch {
  Exponents exponents;
  Integer lhs;
  Integer rhs;
};

struct SeriesComparison {
  std::size_t monomials_compared = 0;
  std::optional<SeriesMismatch> mismatch;
};

inline SeriesComparison compare_series(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (!(lhs.variables() == rhs.variables())) throw invalid_input("series over different variable sets");
  std::map<Exponents, std::pair<Integer, Integer>> merged;
  for (auto& [e, c] : lhs.sorted_terms()) merged[e].first = c;
  for (auto& [e, c] : rhs.sorted_terms()) merged[e].second = c;
  SeriesComparison out;
  out.monomials_compared = merged.size();
  for (const auto& [e, pair] : merged)
    if (pair.first != pair.second) {
      out.mismatch = SeriesMismatch{e, pair.first, pair.second};
      break;
    }
  return out;
}

}  // namespace lhp
