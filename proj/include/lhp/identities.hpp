#pragma once

// Generating-function identities checked coefficientwise. The left side of
// each identity is built by enumerating lattice points (or from a closed
// product form), the right side by expanding the sum over L(P,s) with the
// truncated series engine; both live on the same variables and caps.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhp/colored_perms.hpp"
#include "lhp/error.hpp"
#include "lhp/lattice.hpp"
#include "lhp/polynomial.hpp"
#include "lhp/poset.hpp"
#include "lhp/report.hpp"
#include "lhp/series.hpp"
#include "lhp/verify.hpp"

namespace lhp {

/// Degree caps for identity checks. `x` bounds every x_i (the quotient
/// exponents) and `t` the dilation variable. `q` and `u` override the caps
/// of the single-variable specializations; each y_i is capped at s(i), which
/// loses nothing since y exponents never exceed s(i).
struct SeriesCaps {
  int x = 3;
  int t = 5;
  std::optional<int> q;
  std::optional<int> u;
};

/// Parses "x=3,t=5" (keys x, t, q, u).
inline SeriesCaps parse_caps(std::string_view text) {
  SeriesCaps caps;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw invalid_input("cap '" + std::string(item) + "' is not key=value");
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(value, &used);
      if (used != value.size()) throw invalid_input("");
    } catch (const std::exception&) {
      throw invalid_input("cap value '" + value + "' is not an integer");
    }
    if (v < 1) throw invalid_input("caps must be positive");
    if (key == "x") caps.x = v;
    else if (key == "t") caps.t = v;
    else if (key == "q") caps.q = v;
    else if (key == "u") caps.u = v;
    else throw invalid_input("unknown cap '" + key + "'");
    pos = comma + 1;
  }
  return caps;
}

/// Identity ids in canonical order.
inline const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = {"F",    "F_PLUS", "G",   "R1",  "R2", "R3",  "R4", "RECI",
                                               "COR6", "EUL2",   "UQ",  "LHP", "QV", "KN1", "KN"};
  return ids;
}

namespace detail {

/// x_1..x_p, y_1..y_p and optionally t.
inline std::shared_ptr<const VariableSet> xy_variables(const SMap& s, const SeriesCaps& caps, bool with_t) {
  std::vector<std::string> names;
  std::vector<int> limits;
  for (int i = 1; i <= s.size(); ++i) {
    names.push_back("x" + std::to_string(i));
    limits.push_back(caps.x);
  }
  for (int i = 1; i <= s.size(); ++i) {
    names.push_back("y" + std::to_string(i));
    limits.push_back(s(i));
  }
  if (with_t) {
    names.push_back("t");
    limits.push_back(caps.t);
  }
  return VariableSet::make(std::move(names), std::move(limits));
}

/// Adds the exponents of X_i = x_{π_i} ⋯ x_{π_p} (X_{p+1} = 1) to e.
inline void add_tail_product(Exponents& e, const Permutation& pi, int i) {
  for (std::size_t j = static_cast<std::size_t>(i); j <= pi.size(); ++j) ++e[pi[j - 1] - 1];
}

/// ∏_{i∈[p]} 1/(1 - X_i·t^{with_t}), times 1/(1-t) when `extra_t`.
inline TruncatedSeries chain_denominator(const std::shared_ptr<const VariableSet>& vars, const Permutation& pi,
                                         bool with_t, bool extra_t) {
  const int p = static_cast<int>(pi.size());
  TruncatedSeries out = TruncatedSeries::one(vars);
  for (int i = 1; i <= p; ++i) {
    Exponents m(vars->size(), 0);
    add_tail_product(m, pi, i);
    if (with_t) m[2 * p] = 1;
    out = out.times_geometric(m);
  }
  if (extra_t) {
    Exponents m(vars->size(), 0);
    m[2 * p] = 1;
    out = out.times_geometric(m);
  }
  return out;
}

/// Σ_τ numerator(τ) / denominator(π), grouping the colorings of each π.
template <typename Numerator, typename Denominator>
TruncatedSeries sum_over_extensions(const WeightedPoset& Ps, const std::shared_ptr<const VariableSet>& vars,
                                    Numerator&& numerator, Denominator&& denominator, const Limits& limits) {
  TruncatedSeries total(vars);
  TruncatedSeries block(vars);
  Permutation current;
  auto flush = [&] {
    if (!current.empty()) total += block * denominator(current);
    block = TruncatedSeries(vars);
  };
  for_each_colored_extension(
      Ps.poset, Ps.s,
      [&](const ColoredPermutation& tau) {
        if (tau.pi != current) {
          flush();
          current = tau.pi;
        }
        numerator(tau, block);
      },
      limits);
  flush();
  return total;
}

enum class YShift { none, plus_one, complement };

/// Adds y^{a}·∏_{i∈D} X_{i+1}·t^{texp} to `block`, where a is r, r+1 or s-r.
inline void add_numerator(TruncatedSeries& block, const ColoredPermutation& tau, const SMap& s,
                          std::span<const int> D, YShift shift, std::optional<int> texp) {
  const int p = tau.size();
  Exponents e(block.variables().size(), 0);
  for (int x = 1; x <= p; ++x) {
    int a = tau.color(x);
    if (shift == YShift::plus_one) a += 1;
    else if (shift == YShift::complement) a = s(x) - a;
    e[p + x - 1] = a;
  }
  for (int i : D) add_tail_product(e, tau.pi, i + 1);
  if (texp) e[2 * p] = *texp;
  block.add_term(e, 1);
}

/// x^{q} y^{r} (optionally t^n) monomial from a decomposition, element x
/// mapped to variable index `relabel(x)`.
inline Exponents qr_monomial(const QRDecomposition& qr, int p, std::size_t nvars, const std::function<int(int)>& relabel) {
  Exponents e(nvars, 0);
  for (int x = 1; x <= p; ++x) {
    const int v = relabel(x);
    e[v - 1] = static_cast<int>(std::min<std::int64_t>(qr.q[x - 1], INT32_MAX));
    e[p + v - 1] = static_cast<int>(qr.r[x - 1]);
  }
  return e;
}

inline std::vector<int> complement_in(std::span<const int> D, int p) {
  std::vector<int> out;
  for (int i = 1; i < p; ++i)
    if (std::find(D.begin(), D.end(), i) == D.end()) out.push_back(i);
  return out;
}

inline VerificationReport compare(std::string id, const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                  std::vector<std::pair<std::string, int>> caps) {
  VerificationReport report;
  report.id = std::move(id);
  report.caps = std::move(caps);
  report.record(compare_series(lhs, rhs), lhs.variables());
  return report;
}

/// 1 + z + ... + z^{n-1} in variable index v, scaled by c.
inline TruncatedSeries q_integer(const std::shared_ptr<const VariableSet>& vars, std::size_t v, int n,
                                 const Integer& c = 1) {
  TruncatedSeries out(vars);
  Exponents e(vars->size(), 0);
  for (int a = 0; a < n; ++a) {
    e[v] = a;
    out.add_term(e, c);
  }
  return out;
}

inline TruncatedSeries monomial_in(const std::shared_ptr<const VariableSet>& vars, std::size_t v, int power) {
  Exponents e(vars->size(), 0);
  e[v] = power;
  return TruncatedSeries::monomial(vars, e);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The multivariate identities in x, y (and t)

/// F, F⁺ and G: sums over lattice points of the cone against sums over
/// L(P,s) divided by ∏(1 - X_i).
inline VerificationReport verify_cone_series(const std::string& id, const WeightedPoset& Ps, const SeriesCaps& caps,
                                             const Limits& limits = {}) {
  const int p = Ps.size();
  const auto& s = Ps.s;
  const auto vars = detail::xy_variables(s, caps, false);
  const bool primed = id == "G";
  Box box = id == "F"        ? regime::cone_bounded(s, caps.x)
            : id == "F_PLUS" ? regime::scaled(s, 1, caps.x + 1, -1)
                             : regime::zplus_primed_bounded(s, caps.x);
  TruncatedSeries lhs(vars);
  const auto identity = [](int x) { return x; };
  for_each_point(
      Ps.poset, s, box,
      [&](const LatticePoint& f) {
        lhs.add_term(detail::qr_monomial(quotient_remainder(f, s, primed), p, vars->size(), identity), 1);
      },
      limits);
  const auto rhs = detail::sum_over_extensions(
      Ps, vars,
      [&](const ColoredPermutation& tau, TruncatedSeries& block) {
        const auto profile = descent_profile(tau, s);
        if (id == "F") detail::add_numerator(block, tau, s, profile.d1, detail::YShift::none, std::nullopt);
        else if (id == "F_PLUS") detail::add_numerator(block, tau, s, profile.d2, detail::YShift::none, std::nullopt);
        else detail::add_numerator(block, tau, s, profile.d3, detail::YShift::plus_one, std::nullopt);
      },
      [&](const Permutation& pi) { return detail::chain_denominator(vars, pi, false, false); }, limits);
  return detail::compare(id, lhs, rhs, {{"x", caps.x}});
}

/// R1-R4: Σ_n t^n over bounded lattice points against the t-refined sums.
inline VerificationReport verify_dilation_series(const std::string& id, const WeightedPoset& Ps,
                                                 const SeriesCaps& caps, const Limits& limits = {}) {
  const int p = Ps.size();
  const auto& s = Ps.s;
  const auto vars = detail::xy_variables(s, caps, true);
  const int T = caps.t;
  const bool primed = id == "R4";
  const bool strict = id == "R2";
  Box box = id == "R1"   ? regime::n_leq(s, T).intersect(regime::cone_bounded(s, caps.x))
            : id == "R2" ? regime::n_less(s, T).intersect(regime::cone_bounded(s, caps.x))
            : id == "R3" ? regime::zplus_leq(s, T).intersect(regime::scaled(s, 1, caps.x + 1, -1))
                         : regime::zplus_leq(s, T).intersect(regime::zplus_primed_bounded(s, caps.x));
  TruncatedSeries lhs(vars);
  const auto identity = [](int x) { return x; };
  for_each_point(
      Ps.poset, s, box,
      [&](const LatticePoint& f) {
        auto e = detail::qr_monomial(quotient_remainder(f, s, primed), p, vars->size(), identity);
        const std::int64_t first = strict ? dilation_less(f, s) : dilation_leq(f, s);
        for (std::int64_t n = first; n <= T; ++n) {
          e[2 * p] = static_cast<int>(n);
          lhs.add_term(e, 1);
        }
      },
      limits);
  const auto rhs = detail::sum_over_extensions(
      Ps, vars,
      [&](const ColoredPermutation& tau, TruncatedSeries& block) {
        const auto profile = descent_profile(tau, s);
        const auto size = [](const std::vector<int>& D) { return static_cast<int>(D.size()); };
        if (id == "R1") detail::add_numerator(block, tau, s, profile.d, detail::YShift::none, size(profile.d));
        else if (id == "R2")
          detail::add_numerator(block, tau, s, profile.d1, detail::YShift::none, size(profile.d1) + 1);
        else if (id == "R3") detail::add_numerator(block, tau, s, profile.d4, detail::YShift::none, size(profile.d4));
        else detail::add_numerator(block, tau, s, profile.d3, detail::YShift::plus_one, size(profile.d3) + 1);
      },
      [&](const Permutation& pi) { return detail::chain_denominator(vars, pi, true, true); }, limits);
  return detail::compare(id, lhs, rhs, {{"x", caps.x}, {"t", T}});
}

/// Reciprocity: G_{(P*,s*)}(x*, y*) against (-1)^p y^s/(x_1⋯x_p)·F(1/x, 1/y).
/// Termwise the right side is y^{s-r}·∏_{i∈[p-1]∖D1(τ)} X_{i+1} / ∏(1 - X_i),
/// obtained by negating each exponent of the F summand and shifting by
/// y^s·X_2⋯X_p.
inline VerificationReport verify_reciprocity_series(const WeightedPoset& Ps, const SeriesCaps& caps,
                                                    const Limits& limits = {}) {
  const int p = Ps.size();
  const auto& s = Ps.s;
  const auto vars = detail::xy_variables(s, caps, false);
  const auto Pd = dual(Ps);
  TruncatedSeries lhs(vars);
  const auto flip = [p](int j) { return star(j, p); };
  for_each_point(
      Pd.poset, Pd.s, regime::zplus_primed_bounded(Pd.s, caps.x),
      [&](const LatticePoint& g) {
        lhs.add_term(detail::qr_monomial(quotient_remainder(g, Pd.s, true), p, vars->size(), flip), 1);
      },
      limits);
  const auto rhs = detail::sum_over_extensions(
      Ps, vars,
      [&](const ColoredPermutation& tau, TruncatedSeries& block) {
        const auto D = detail::complement_in(descent_profile(tau, s).d1, p);
        detail::add_numerator(block, tau, s, D, detail::YShift::complement, std::nullopt);
      },
      [&](const Permutation& pi) { return detail::chain_denominator(vars, pi, false, false); }, limits);
  return detail::compare("RECI", lhs, rhs, {{"x", caps.x}});
}

/// The anti-chain closed form Σ_n ∏(x_i^n + [n]_{x_i}[s(i)]_{y_i}) t^n
/// against the right side of R1.
inline VerificationReport verify_antichain_series(const WeightedPoset& Ps, const SeriesCaps& caps,
                                                  const Limits& limits = {}) {
  if (!Ps.poset.is_antichain()) return VerificationReport::skipped("COR6", "P is not an anti-chain");
  const int p = Ps.size();
  const auto& s = Ps.s;
  const auto vars = detail::xy_variables(s, caps, true);
  TruncatedSeries lhs(vars);
  for (int n = 0; n <= caps.t; ++n) {
    TruncatedSeries term = detail::monomial_in(vars, 2 * p, n);
    for (int i = 1; i <= p; ++i) {
      TruncatedSeries factor = detail::monomial_in(vars, i - 1, n);
      factor += detail::q_integer(vars, i - 1, n) * detail::q_integer(vars, p + i - 1, s(i));
      term = term * factor;
    }
    lhs += term;
  }
  const auto rhs = detail::sum_over_extensions(
      Ps, vars,
      [&](const ColoredPermutation& tau, TruncatedSeries& block) {
        const auto profile = descent_profile(tau, s);
        detail::add_numerator(block, tau, s, profile.d, detail::YShift::none, static_cast<int>(profile.d.size()));
      },
      [&](const Permutation& pi) { return detail::chain_denominator(vars, pi, true, true); }, limits);
  return detail::compare("COR6", lhs, rhs, {{"x", caps.x}, {"t", caps.t}});
}

// ---------------------------------------------------------------------------
// Eulerian-type polynomial identities

/// Σ t^{|D4|} = Σ t^{|D3|+1}, both equal to the numerator of
/// Σ_n |Z_+ ∩ N_{<=n}| t^n over (1-t)^{p+1}; when s(x) = 1 on minimal
/// elements also A = Σ t^{|D|} = Σ t^{|D3|}.
inline VerificationReport verify_eul2(const WeightedPoset& Ps, const Limits& limits = {}) {
  const int p = Ps.size();
  const auto& s = Ps.s;
  VerificationReport report;
  report.id = "EUL2";
  std::vector<std::int64_t> d4(static_cast<std::size_t>(p) + 2, 0);
  std::vector<std::int64_t> d3_shifted(static_cast<std::size_t>(p) + 2, 0);
  std::vector<std::int64_t> d(static_cast<std::size_t>(p) + 2, 0);
  std::vector<std::int64_t> d3(static_cast<std::size_t>(p) + 2, 0);
  for_each_colored_extension(
      Ps.poset, s,
      [&](const ColoredPermutation& tau) {
        const auto profile = descent_profile(tau, s);
        ++d4[profile.d4.size()];
        ++d3_shifted[profile.d3.size() + 1];
        ++d[profile.d.size()];
        ++d3[profile.d3.size()];
      },
      limits);
  const auto D4 = Polynomial::from_counts(d4);
  const auto D3plus = Polynomial::from_counts(d3_shifted);
  if (D4 != D3plus) report.fail("Σ t^|D4| differs from Σ t^(|D3|+1)");
  std::vector<Integer> positive;
  for (int n = 0; n <= p + 3; ++n) positive.push_back(count_points(Ps.poset, s, regime::zplus_leq(s, n), limits));
  const auto numerator = series_numerator(positive, p + 1, p + 1);
  if (numerator != D4) report.fail("Σ t^|D4| differs from the positive-point Ehrhart numerator");
  report.details["d4_polynomial"] = detail::coefficients_json(D4);
  report.details["d3_plus_one_polynomial"] = detail::coefficients_json(D3plus);
  report.details["positive_counts"] = detail::integers_json(positive);
  bool minimal_unit = true;
  for (int x : Ps.poset.minimal_elements()) minimal_unit = minimal_unit && s(x) == 1;
  if (minimal_unit) {
    const auto A = Polynomial::from_counts(d);
    const auto B = Polynomial::from_counts(d3);
    if (A != B) report.fail("Σ t^|D| differs from Σ t^|D3|");
    if (A != eulerian_via_ehrhart(Ps.poset, s, limits)) report.fail("Σ t^|D| differs from the Ehrhart numerator");
    report.details["second_identity"] = "checked";
    report.details["eulerian"] = detail::coefficients_json(A);
  } else {
    report.details["second_identity"] = "skipped: s(x) > 1 for a minimal element";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Specializations in q, u, t

namespace detail {

inline std::int64_t color_total(const SMap& s) { return s.total() - s.size(); }

inline TruncatedSeries uq_right_side(const WeightedPoset& Ps, const std::shared_ptr<const VariableSet>& vars,
                                     const Limits& limits) {
  const int p = Ps.size();
  TruncatedSeries numerator(vars);
  for_each_colored_extension(
      Ps.poset, Ps.s,
      [&](const ColoredPermutation& tau) {
        const auto st = statistics(tau, Ps.s);
        numerator.add_term(Exponents{static_cast<int>(tau.color_sum()), static_cast<int>(st.comaj), st.des_s}, 1);
      },
      limits);
  TruncatedSeries out = numerator;
  for (int i = 0; i <= p; ++i) out = out.times_geometric(Exponents{0, i, 1});
  return out;
}

}  // namespace detail

/// Σ_n Σ_{N_{<=n}} q^{|r|} u^{|q|} t^n = Σ_τ q^{|r|} u^{comaj} t^{des_s} / ∏_{i=0}^p (1 - u^i t).
inline VerificationReport verify_uq(const WeightedPoset& Ps, const SeriesCaps& caps, const Limits& limits = {}) {
  const auto& s = Ps.s;
  const int qcap = caps.q.value_or(static_cast<int>(std::max<std::int64_t>(detail::color_total(s), 1)));
  const int ucap = caps.u.value_or(caps.x * Ps.size());
  const auto vars = VariableSet::make({"q", "u", "t"}, {qcap, ucap, caps.t});
  TruncatedSeries lhs(vars);
  for_each_point(
      Ps.poset, s, regime::n_leq(s, caps.t),
      [&](const LatticePoint& f) {
        const auto qr = quotient_remainder(f, s);
        std::int64_t rs = 0;
        std::int64_t qs = 0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          rs += qr.r[i];
          qs += qr.q[i];
        }
        if (qs > ucap) return;
        for (std::int64_t n = dilation_leq(f, s); n <= caps.t; ++n)
          lhs.add_term(Exponents{static_cast<int>(rs), static_cast<int>(qs), static_cast<int>(n)}, 1);
      },
      limits);
  const auto rhs = detail::uq_right_side(Ps, vars, limits);
  return detail::compare("UQ", lhs, rhs, {{"q", qcap}, {"u", ucap}, {"t", caps.t}});
}

/// Σ_n Σ_{N_{<=n}} q^{|f|} t^n = Σ_τ q^{lhp} t^{des_s} / (∏_i (1 - t q^{s(π_i)+⋯+s(π_p)}) (1 - t)).
inline VerificationReport verify_lhp(const WeightedPoset& Ps, const SeriesCaps& caps, const Limits& limits = {}) {
  const auto& s = Ps.s;
  const int p = Ps.size();
  const int qcap = caps.q.value_or(static_cast<int>(caps.x * s.total()));
  const auto vars = VariableSet::make({"q", "t"}, {qcap, caps.t});
  TruncatedSeries lhs(vars);
  for_each_point(
      Ps.poset, s, regime::n_leq(s, caps.t),
      [&](const LatticePoint& f) {
        std::int64_t weight = 0;
        for (auto v : f) weight += v;
        if (weight > qcap) return;
        for (std::int64_t n = dilation_leq(f, s); n <= caps.t; ++n)
          lhs.add_term(Exponents{static_cast<int>(weight), static_cast<int>(n)}, 1);
      },
      limits);
  const auto rhs = detail::sum_over_extensions(
      Ps, vars,
      [&](const ColoredPermutation& tau, TruncatedSeries& block) {
        const auto st = statistics(tau, s);
        if (st.lhp <= qcap) block.add_term(Exponents{static_cast<int>(st.lhp), st.des_s}, 1);
      },
      [&](const Permutation& pi) {
        TruncatedSeries out = TruncatedSeries::one(vars);
        int tail = 0;
        for (int i = p; i >= 1; --i) {
          tail += s(pi[i - 1]);
          out = out.times_geometric(Exponents{tail, 1});
        }
        return out.times_geometric(Exponents{0, 1});
      },
      limits);
  return detail::compare("LHP", lhs, rhs, {{"q", qcap}, {"t", caps.t}});
}

/// The anti-chain closed form Σ_n ∏(u^n + [n]_u [s(i)]_q) t^n against the
/// right side of UQ.
inline VerificationReport verify_qv(const WeightedPoset& Ps, const SeriesCaps& caps, const Limits& limits = {}) {
  if (!Ps.poset.is_antichain()) return VerificationReport::skipped("QV", "P is not an anti-chain");
  const auto& s = Ps.s;
  const int qcap = caps.q.value_or(static_cast<int>(std::max<std::int64_t>(detail::color_total(s), 1)));
  const int ucap = caps.u.value_or(caps.x * Ps.size());
  const auto vars = VariableSet::make({"q", "u", "t"}, {qcap, ucap, caps.t});
  TruncatedSeries lhs(vars);
  for (int n = 0; n <= caps.t; ++n) {
    TruncatedSeries term = detail::monomial_in(vars, 2, n);
    for (int i = 1; i <= Ps.size(); ++i) {
      TruncatedSeries factor = detail::monomial_in(vars, 1, n);
      factor += detail::q_integer(vars, 1, n) * detail::q_integer(vars, 0, s(i));
      term = term * factor;
    }
    lhs += term;
  }
  const auto rhs = detail::uq_right_side(Ps, vars, limits);
  return detail::compare("QV", lhs, rhs, {{"q", qcap}, {"u", ucap}, {"t", caps.t}});
}

/// Σ_n [kn+1]_q^p t^n = Σ_{Z_k≀S_p} t^{des} q^{fmaj} / ∏_{i=0}^p (1 - t q^{ki}).
/// Also checks that [kn+1]_q^p t^n is fixed by q -> 1/q, t -> t q^{kp}, i.e.
/// that [kn+1]_q^p is palindromic of degree knp.
inline VerificationReport verify_kn1(int k, int p, const SeriesCaps& caps, const Limits& limits = {}) {
  if (k < 1 || p < 1) throw invalid_input("k and p must be positive");
  const int T = caps.t;
  const int qcap = caps.q.value_or(k * T * p);
  const auto vars = VariableSet::make({"q", "t"}, {qcap, T});
  TruncatedSeries lhs(vars);
  bool symmetric = true;
  for (int n = 0; n <= T; ++n) {
    std::vector<std::int64_t> ones(static_cast<std::size_t>(k * n + 1), 1);
    const Polynomial power = Polynomial::from_counts(ones).pow(p);
    symmetric = symmetric && is_palindromic(power, k * n * p);
    for (int a = 0; a <= power.degree(); ++a)
      lhs.add_term(Exponents{a, n}, power[a].get_num());
  }
  const WeightedPoset Ps(make_antichain(p), SMap::constant(p, k));
  TruncatedSeries numerator(vars);
  for_each_colored_extension(
      Ps.poset, Ps.s,
      [&](const ColoredPermutation& tau) {
        const auto st = statistics(tau, Ps.s);
        if (*st.fmaj <= qcap) numerator.add_term(Exponents{static_cast<int>(*st.fmaj), st.des_s}, 1);
      },
      limits);
  TruncatedSeries rhs = numerator;
  for (int i = 0; i <= p; ++i) rhs = rhs.times_geometric(Exponents{k * i, 1});
  auto report = detail::compare("KN1", lhs, rhs, {{"q", qcap}, {"t", T}});
  report.details["k"] = k;
  report.details["p"] = p;
  report.details["change_of_variables_invariant"] = symmetric;
  if (!symmetric) report.fail("[kn+1]_q^p is not palindromic of degree knp");
  return report;
}

/// Σ_n ∏_i (1 + n[k]_{q_i}) t^n = Σ_{Z_k≀S_p} q^r t^{des} / (1-t)^{p+1}.
inline VerificationReport verify_kn(int k, int p, const SeriesCaps& caps, const Limits& limits = {}) {
  if (k < 1 || p < 1) throw invalid_input("k and p must be positive");
  const int T = caps.t;
  std::vector<std::string> names;
  std::vector<int> limits_v;
  for (int i = 1; i <= p; ++i) {
    names.push_back("q" + std::to_string(i));
    limits_v.push_back(k - 1);
  }
  names.push_back("t");
  limits_v.push_back(T);
  const auto vars = VariableSet::make(std::move(names), std::move(limits_v));
  TruncatedSeries lhs(vars);
  for (int n = 0; n <= T; ++n) {
    TruncatedSeries term = detail::monomial_in(vars, static_cast<std::size_t>(p), n);
    for (int i = 0; i < p; ++i) {
      TruncatedSeries factor = TruncatedSeries::one(vars) + detail::q_integer(vars, static_cast<std::size_t>(i), k, n);
      term = term * factor;
    }
    lhs += term;
  }
  const WeightedPoset Ps(make_antichain(p), SMap::constant(p, k));
  TruncatedSeries numerator(vars);
  for_each_colored_extension(
      Ps.poset, Ps.s,
      [&](const ColoredPermutation& tau) {
        Exponents e(tau.r.begin(), tau.r.end());
        e.push_back(des_s(tau, Ps.s));
        numerator.add_term(e, 1);
      },
      limits);
  TruncatedSeries rhs = numerator;
  Exponents t_only(static_cast<std::size_t>(p) + 1, 0);
  t_only[p] = 1;
  for (int i = 0; i <= p; ++i) rhs = rhs.times_geometric(t_only);
  auto report = detail::compare("KN", lhs, rhs, {{"q", k - 1}, {"t", T}});
  report.details["k"] = k;
  report.details["p"] = p;
  return report;
}

// ---------------------------------------------------------------------------
// Dispatch

/// Runs one identity on (P, s). KN1 and KN apply to anti-chains with
/// constant s = k; other inputs are skipped.
inline VerificationReport verify_identity(const std::string& id, const WeightedPoset& Ps, const SeriesCaps& caps = {},
                                          const Limits& limits = {}) {
  if (id == "F" || id == "F_PLUS" || id == "G") return verify_cone_series(id, Ps, caps, limits);
  if (id == "R1" || id == "R2" || id == "R3" || id == "R4") return verify_dilation_series(id, Ps, caps, limits);
  if (id == "RECI") return verify_reciprocity_series(Ps, caps, limits);
  if (id == "COR6") return verify_antichain_series(Ps, caps, limits);
  if (id == "EUL2") return verify_eul2(Ps, limits);
  if (id == "UQ") return verify_uq(Ps, caps, limits);
  if (id == "LHP") return verify_lhp(Ps, caps, limits);
  if (id == "QV") return verify_qv(Ps, caps, limits);
  if (id == "KN1" || id == "KN") {
    const auto k = Ps.s.constant_value();
    if (!Ps.poset.is_antichain() || !k)
      return VerificationReport::skipped(id, "needs an anti-chain with constant s");
    return id == "KN1" ? verify_kn1(*k, Ps.size(), caps, limits) : verify_kn(*k, Ps.size(), caps, limits);
  }
  throw invalid_input("unknown identity '" + id + "'");
}

/// Settings for the structural checks run by verify_all.
struct SuiteOptions {
  SeriesCaps caps;
  std::int64_t cube_bound = 4;
  int bijection_n = 3;
};

/// Every identity, then DECOMP, BIJ, RECIPR and ORDINAL, each exactly once.
inline std::vector<VerificationReport> verify_all(const WeightedPoset& Ps, const SuiteOptions& options = {},
                                                  const Limits& limits = {}) {
  std::vector<VerificationReport> out;
  for (const auto& id : identity_ids()) out.push_back(verify_identity(id, Ps, options.caps, limits));
  out.push_back(verify_cone_decomposition(Ps, options.cube_bound, limits));
  out.push_back(verify_bijection(Ps, options.bijection_n, limits));
  out.push_back(verify_recipr(Ps, limits));
  out.push_back(verify_ordinal_interlacing(Ps, limits));
  return out;
}

}  // namespace lhp
