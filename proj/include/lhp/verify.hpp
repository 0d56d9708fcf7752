#pragma once

// Checks of the structural results: the chain-cone decomposition, the
// bijection u between N_{<=n}(P,s) and N_{<n+1}(P*,s*), palindromicity and
// the Ehrhart functional equation, the product law for disjoint unions,
// interlacing for ordinal sums of anti-chains, and the γ-positivity scan.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lhp/colored_perms.hpp"
#include "lhp/error.hpp"
#include "lhp/lattice.hpp"
#include "lhp/polynomial.hpp"
#include "lhp/poset.hpp"
#include "lhp/real_roots.hpp"
#include "lhp/report.hpp"

namespace lhp {

namespace detail {

inline nlohmann::ordered_json coefficients_json(const Polynomial& g) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : g.coefficients()) out.push_back(lhp::to_string(c));
  return out;
}

inline nlohmann::ordered_json integers_json(std::span<const Integer> values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(lhp::to_string(v));
  return out;
}

/// Empty string when (P, s) satisfies: sign-ranked, ρ >= 0, s = ρ + 1.
inline std::string rank_setting_violation(const WeightedPoset& Ps, const std::optional<RankFunction>& rank) {
  if (!rank) return "P is not sign-ranked";
  if (!rank->nonnegative()) return "rank function takes negative values";
  for (int x = 1; x <= Ps.size(); ++x)
    if (Ps.s(x) != (*rank)(x) + 1) return "s differs from rho + 1 at element " + std::to_string(x);
  return {};
}

inline void require_rank_setting(const WeightedPoset& Ps, const RankFunction& rho) {
  if (static_cast<int>(rho.rho.size()) != Ps.size()) throw invalid_input("rank function has the wrong length");
  if (!rho.nonnegative()) throw invalid_input("rank function takes negative values");
  for (int x = 1; x <= Ps.size(); ++x)
    if (Ps.s(x) != rho(x) + 1) throw invalid_input("s must equal rho + 1");
  for (const auto& cover : Ps.poset.covers())
    if (rho(cover.second) - rho(cover.first) != epsilon(cover))
      throw invalid_input("rho is not the rank function of P");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Chain-cone decomposition

/// Every point of [0, bound]^p lies in C(P_π, s) for exactly one π ∈ L(P)
/// when it lies in C(P,s), and for none otherwise.
inline VerificationReport verify_cone_decomposition(const WeightedPoset& Ps, std::int64_t bound,
                                                    const Limits& limits = {}) {
  VerificationReport report;
  report.id = "DECOMP";
  report.caps = {{"bound", static_cast<int>(bound)}};
  const int p = Ps.size();
  const auto extensions = linear_extensions(Ps.poset, limits);
  std::vector<std::uint64_t> per_pi(extensions.size(), 0);
  std::uint64_t members = 0;
  std::uint64_t checked = 0;
  for_each_point(
      make_antichain(p), Ps.s, regime::cube(p, bound),
      [&](const LatticePoint& f) {
        ++checked;
        const bool member = is_partition(Ps.poset, Ps.s, f);
        int hits = 0;
        for (std::size_t k = 0; k < extensions.size(); ++k)
          if (in_chain_cone(extensions[k], Ps.s, f)) {
            ++hits;
            ++per_pi[k];
          }
        members += member ? 1 : 0;
        if (hits != (member ? 1 : 0) && !report.failed()) {
          report.fail(member ? "point of C(P,s) lies in " + std::to_string(hits) + " chain cones"
                             : "point outside C(P,s) lies in a chain cone");
          report.details["witness"] = f;
        }
      },
      limits);
  report.details["points_checked"] = checked;
  report.details["points_in_cone"] = members;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < extensions.size(); ++k) rows.push_back({{"pi", extensions[k]}, {"points", per_pi[k]}});
  report.details["per_extension"] = rows;
  return report;
}

// ---------------------------------------------------------------------------
// The bijection u and its inverse η

/// u(f)(x*) = f(x) + ρ(x), mapping N(P,s) into N(P*,s*).
inline LatticePoint bij_u(std::span<const std::int64_t> f, const WeightedPoset& Ps, const RankFunction& rho) {
  detail::require_rank_setting(Ps, rho);
  if (!is_partition(Ps.poset, Ps.s, f)) throw invalid_input("f is not in N(P,s)");
  const int p = Ps.size();
  LatticePoint g(static_cast<std::size_t>(p));
  for (int x = 1; x <= p; ++x) g[star(x, p) - 1] = f[x - 1] + rho(x);
  const auto target = dual(Ps);
  if (!is_partition(target.poset, target.s, g)) throw internal_error("u(f) is not in N(P*,s*)");
  return g;
}

/// η(g)(x) = g(x*) - ρ(x), mapping N(P*,s*) into N(P,s).
inline LatticePoint bij_eta(std::span<const std::int64_t> g, const WeightedPoset& Ps, const RankFunction& rho) {
  detail::require_rank_setting(Ps, rho);
  const auto source = dual(Ps);
  if (!is_partition(source.poset, source.s, g)) throw invalid_input("g is not in N(P*,s*)");
  const int p = Ps.size();
  LatticePoint f(static_cast<std::size_t>(p));
  for (int x = 1; x <= p; ++x) f[x - 1] = g[star(x, p) - 1] - rho(x);
  if (!is_partition(Ps.poset, Ps.s, f)) throw internal_error("η(g) is not in N(P,s)");
  return f;
}

/// u restricted to N_{<=n}(P,s) is a bijection onto N_{<n+1}(P*,s*) with
/// inverse η, checked point by point.
inline VerificationReport verify_bijection(const WeightedPoset& Ps, int n, const Limits& limits = {}) {
  const auto rank = sign_ranked(Ps.poset, limits);
  if (auto why = detail::rank_setting_violation(Ps, rank); !why.empty()) return VerificationReport::skipped("BIJ", why);
  VerificationReport report;
  report.id = "BIJ";
  report.caps = {{"n", n}};
  const auto target_poset = dual(Ps);
  const auto domain = enumerate_points(Ps.poset, Ps.s, regime::n_leq(Ps.s, n), limits);
  const auto target = enumerate_points(target_poset.poset, target_poset.s, regime::n_less(target_poset.s, n + 1), limits);
  std::vector<LatticePoint> images;
  images.reserve(domain.size());
  for (const auto& f : domain) {
    const auto g = bij_u(f, Ps, *rank);
    if (!std::binary_search(target.begin(), target.end(), g)) {
      report.fail("u(f) lies outside N_{<n+1}(P*,s*)");
      report.details["witness"] = f;
      break;
    }
    if (bij_eta(g, Ps, *rank) != f) {
      report.fail("η(u(f)) differs from f");
      report.details["witness"] = f;
      break;
    }
    images.push_back(g);
  }
  std::sort(images.begin(), images.end());
  const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
  if (!injective) report.fail("u is not injective");
  if (domain.size() != target.size()) report.fail("domain and target sizes differ");
  for (const auto& g : target) {
    const auto f = bij_eta(g, Ps, *rank);
    if (dilation_leq(f, Ps.s) > n) {
      report.fail("η(g) lies outside N_{<=n}(P,s)");
      report.details["witness"] = g;
      break;
    }
  }
  report.details["rho"] = rank->rho;
  report.details["domain_size"] = domain.size();
  report.details["target_size"] = target.size();
  return report;
}

// ---------------------------------------------------------------------------
// Palindromicity and the Ehrhart functional equation

inline VerificationReport verify_recipr(const WeightedPoset& Ps, const Limits& limits = {}) {
  const auto rank = sign_ranked(Ps.poset, limits);
  if (auto why = detail::rank_setting_violation(Ps, rank); !why.empty())
    return VerificationReport::skipped("RECIPR", why);
  VerificationReport report;
  report.id = "RECIPR";
  const int p = Ps.size();
  const auto A = eulerian(Ps, limits);
  if (!is_palindromic(A, p - 1)) report.fail("A(t) is not palindromic with N = p - 1");
  const auto counts = ehrhart_counts(Ps.poset, Ps.s, p + 2, limits);
  if (hstar_from_counts(counts, p) != A) report.fail("Ehrhart numerator differs from A(t)");
  const auto i = interpolate_at_naturals(std::span(counts).first(static_cast<std::size_t>(p) + 1));
  for (int n = 0; n <= p + 2; ++n)
    if (i(Rational(n)) != Rational(counts[n])) report.fail("counts are not a polynomial of degree p");
  const Rational sign = p % 2 == 0 ? 1 : -1;
  const Polynomial lhs = sign * i.compose_linear(-1, 0);
  const Polynomial rhs = i.compose_linear(1, -2);
  if (lhs != rhs) report.fail("(-1)^p i(-t) differs from i(t-2)");
  report.details["rho"] = rank->rho;
  report.details["eulerian"] = detail::coefficients_json(A);
  report.details["ehrhart_polynomial"] = detail::coefficients_json(i);
  report.details["counts"] = detail::integers_json(counts);
  return report;
}

// ---------------------------------------------------------------------------
// Disjoint unions

/// i(P ⊔ Q, n) = i(P, n)·i(Q, n) for n <= nmax.
inline VerificationReport verify_disjoint_union_product(const WeightedPoset& P, const WeightedPoset& Q, int nmax,
                                                        const std::optional<Interleaving>& interleaving = std::nullopt,
                                                        const Limits& limits = {}) {
  VerificationReport report;
  report.id = "UNION";
  report.caps = {{"nmax", nmax}};
  const auto R = disjoint_union(P, Q, interleaving);
  const auto cr = ehrhart_counts(R.poset, R.s, nmax, limits);
  const auto cp = ehrhart_counts(P.poset, P.s, nmax, limits);
  const auto cq = ehrhart_counts(Q.poset, Q.s, nmax, limits);
  for (int n = 0; n <= nmax; ++n)
    if (cr[n] != cp[n] * cq[n]) {
      report.fail("count of the union differs from the product at n = " + std::to_string(n));
      break;
    }
  report.details["union_counts"] = detail::integers_json(cr);
  report.details["left_counts"] = detail::integers_json(cp);
  report.details["right_counts"] = detail::integers_json(cq);
  return report;
}

// ---------------------------------------------------------------------------
// Ordinal sums of anti-chains

/// When P is an ordinal sum of anti-chains, its blocks from bottom to top.
/// Incomparability is then an equivalence relation whose classes are the
/// blocks, and elements of distinct blocks are comparable.
inline std::optional<std::vector<std::vector<int>>> antichain_blocks(const LabeledPoset& P) {
  const int p = P.size();
  std::vector<int> block(static_cast<std::size_t>(p) + 1, -1);
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x <= p; ++x) {
    if (block[x] >= 0) continue;
    block[x] = static_cast<int>(blocks.size());
    blocks.push_back({x});
    for (int y = x + 1; y <= p; ++y)
      if (!P.comparable(x, y)) {
        if (block[y] >= 0) return std::nullopt;
        block[y] = block[x];
        blocks.back().push_back(y);
      }
  }
  for (int x = 1; x <= p; ++x)
    for (int y = x + 1; y <= p; ++y)
      if ((block[x] == block[y]) == P.comparable(x, y)) return std::nullopt;
  std::sort(blocks.begin(), blocks.end(),
            [&](const auto& a, const auto& b) { return P.less(a.front(), b.front()); });
  return blocks;
}

/// {A^γ} over X(P,s) is interlacing and A_{(P,s)} is real-rooted, for P an
/// ordinal sum of anti-chains with s constant on each block.
inline VerificationReport verify_ordinal_interlacing(const WeightedPoset& Ps, const Limits& limits = {}) {
  const auto blocks = antichain_blocks(Ps.poset);
  if (!blocks) return VerificationReport::skipped("ORDINAL", "P is not an ordinal sum of anti-chains");
  for (const auto& b : *blocks)
    for (int x : b)
      if (Ps.s(x) != Ps.s(b.front())) return VerificationReport::skipped("ORDINAL", "s is not constant on a block");
  VerificationReport report;
  report.id = "ORDINAL";
  const auto family = refined_eulerian_family(Ps.poset, Ps.s, limits);
  const auto A = eulerian(Ps, limits);
  Polynomial total;
  for (const auto& g : family) total += g;
  if (total != A) report.fail("refined polynomials do not sum to A(t)");
  if (!is_real_rooted(A)) report.fail("A(t) is not real-rooted");
  bool members_real = true;
  for (const auto& g : family) members_real = members_real && is_real_rooted(g);
  if (!members_real) report.fail("a refined polynomial is not real-rooted");
  else if (!is_interlacing_sequence(family)) report.fail("refined family is not interlacing");
  auto sizes = nlohmann::ordered_json::array();
  for (const auto& b : *blocks) sizes.push_back(b.size());
  report.details["blocks"] = sizes;
  report.details["family_size"] = family.size();
  report.details["eulerian"] = detail::coefficients_json(A);
  return report;
}

inline VerificationReport verify_ordinal_interlacing(std::span<const int> block_sizes, std::span<const int> block_s,
                                                     const Limits& limits = {}) {
  return verify_ordinal_interlacing(ordinal_sum_of_antichains(block_sizes, block_s), limits);
}

// ---------------------------------------------------------------------------
// γ-positivity scan

struct GammaRecord {
  LabeledPoset poset;
  RankFunction rank;
  Polynomial eulerian;
  bool palindromic = false;
  std::optional<GammaVector> gamma;
  bool gamma_nonnegative = false;
  /// ρ takes values in {0, 1} only.
  bool binary_rank = false;
};

/// The record for a sign-ranked P with ρ >= 0, using s = ρ + 1.
inline GammaRecord gamma_record(const LabeledPoset& P, const RankFunction& rank, const Limits& limits = {}) {
  GammaRecord rec{P, rank, {}, false, std::nullopt, false, rank.max() <= 1};
  std::vector<int> s;
  for (int r : rank.rho) s.push_back(r + 1);
  rec.eulerian = eulerian(P, SMap(std::move(s)), limits);
  const int d = P.size() - 1;
  rec.palindromic = is_palindromic(rec.eulerian, d);
  if (rec.palindromic) {
    rec.gamma = gamma_vector(rec.eulerian, d);
    rec.gamma_nonnegative = rec.gamma->nonnegative();
  }
  return rec;
}

struct GammaScan {
  std::vector<GammaRecord> records;
  std::size_t posets_examined = 0;
  std::size_t binary_violations = 0;
  std::size_t general_violations = 0;
  std::size_t non_palindromic = 0;
};

/// Every sign-ranked labeled poset with 1 <= p <= pmax and ρ >= 0.
template <typename OnRecord>
GammaScan scan_gamma(int pmax, OnRecord&& on_record, const Limits& limits = {}) {
  GammaScan scan;
  for (int p = 1; p <= pmax; ++p)
    for (const auto& P : all_labeled_posets(p)) {
      ++scan.posets_examined;
      const auto rank = sign_ranked(P, limits);
      if (!rank || !rank->nonnegative()) continue;
      auto rec = gamma_record(P, *rank, limits);
      if (!rec.palindromic) ++scan.non_palindromic;
      if (!rec.gamma_nonnegative) {
        ++scan.general_violations;
        if (rec.binary_rank) ++scan.binary_violations;
      }
      on_record(rec);
      scan.records.push_back(std::move(rec));
    }
  return scan;
}

inline GammaScan scan_gamma(int pmax, const Limits& limits = {}) {
  return scan_gamma(pmax, [](const GammaRecord&) {}, limits);
}

// ---------------------------------------------------------------------------
// Real-rootedness of Σ q^r t^{des} on Z_k ≀ S_p

/// Σ_{τ∈Z_k≀S_p} q_1^{r_1}⋯q_p^{r_p} t^{des_s(τ)} at the given q values.
inline Polynomial colored_descent_polynomial(int k, std::span<const Rational> q, const Limits& limits = {}) {
  const int p = static_cast<int>(q.size());
  if (k < 1 || p < 1) throw invalid_input("k and p must be positive");
  for (const auto& v : q)
    if (v < 0) throw invalid_input("q values must be nonnegative");
  const SMap s = SMap::constant(p, k);
  std::map<std::pair<std::vector<int>, int>, std::int64_t> grouped;
  for_each_colored_extension(
      make_antichain(p), s, [&](const ColoredPermutation& tau) { ++grouped[{tau.r, des_s(tau, s)}]; }, limits);
  std::vector<Rational> coeffs(static_cast<std::size_t>(p) + 1, Rational(0));
  for (const auto& [key, count] : grouped) {
    Rational weight(static_cast<long>(count));
    for (int i = 0; i < p; ++i)
      for (int e = 0; e < key.first[i]; ++e) weight *= q[i];
    coeffs[key.second] += weight;
  }
  return Polynomial(std::move(coeffs));
}

/// Multiplies by the lcm of the denominators, giving integer coefficients.
inline Polynomial clear_denominators(const Polynomial& g) {
  Integer l = 1;
  for (const auto& c : g.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return Rational(l) * g;
}

/// Samples `samples` tuples of nonnegative rationals (numerators 0..20,
/// denominators 1..10) and checks that each polynomial is real-rooted.
inline VerificationReport verify_sampled_real_rootedness(int k, int p, int samples, std::uint64_t seed,
                                                         const Limits& limits = {}) {
  VerificationReport report;
  report.id = "KN_ROOTS";
  report.caps = {{"k", k}, {"p", p}, {"samples", samples}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(0, 20);
  std::uniform_int_distribution<long> denominator(1, 10);
  int checked = 0;
  for (int n = 0; n < samples; ++n) {
    std::vector<Rational> q;
    for (int i = 0; i < p; ++i) {
      Rational v(numerator(rng), denominator(rng));
      v.canonicalize();
      q.push_back(v);
    }
    const auto g = clear_denominators(colored_descent_polynomial(k, q, limits));
    ++checked;
    if (!is_real_rooted(g)) {
      report.fail("polynomial is not real-rooted");
      auto qs = nlohmann::ordered_json::array();
      for (const auto& v : q) qs.push_back(lhp::to_string(v));
      report.details["witness_q"] = qs;
      report.details["witness_polynomial"] = detail::coefficients_json(g);
      break;
    }
  }
  report.details["seed"] = seed;
  report.details["checked"] = checked;
  return report;
}

}  // namespace lhp
