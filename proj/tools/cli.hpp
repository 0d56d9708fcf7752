#pragma once

// Command-line front end. run() takes the argument vector and writes to the
// given streams so tests can drive it in-process.
//
// Exit codes: 0 success (skips included), 1 a verification failed,
// 2 bad arguments or input, 3 a resource cap or internal error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lhp/lhp.hpp"

namespace lhp::cli {

namespace detail {

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join_strings(const json& array) {
  std::string out;
  for (std::size_t i = 0; i < array.size(); ++i) out += (i ? " " : "") + array[i].get<std::string>();
  return out;
}

std::string set_text(const std::vector<int>& v) { return "{" + join(v) + "}"; }

struct PosetOptions {
  std::string source;
  std::string s;

  void add(CLI::App* app) {
    app->add_option("--poset", source, "poset: chain:2,1,3 | antichain:4 | ordinal:2,3 (optionally ;s=...) | file.json")
        ->required();
    app->add_option("--s", s, "comma-separated s values, overriding the source");
  }

  WeightedPoset load() const {
    auto Ps = parse_poset_source(source);
    if (s.empty()) return Ps;
    return WeightedPoset(Ps.poset, SMap(parse_int_list(s)));
  }
};

int emit_reports(const std::vector<VerificationReport>& reports, std::ostream& out) {
  bool failed = false;
  for (const auto& r : reports) {
    out << to_json(r).dump() << '\n';
    failed = failed || r.failed();
  }
  return failed ? 1 : 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lecture hall (P,s)-partitions: Eulerian polynomials, Ehrhart counts and identity checks", "lhp"};
  app.require_subcommand(1);
  const Limits limits = Limits::from_environment();
  std::function<int()> action;

  detail::PosetOptions eul_opts;
  std::string eul_format = "json";
  auto* eul = app.add_subcommand("eulerian", "A_(P,s)(t) by descents and by Ehrhart counts");
  eul_opts.add(eul);
  eul->add_option("--format", eul_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  eul->callback([&] {
    action = [&] {
      const auto Ps = eul_opts.load();
      const auto by_descents = eulerian(Ps, limits);
      const auto by_counts = eulerian_via_ehrhart(Ps.poset, Ps.s, limits);
      const bool agree = by_descents == by_counts;
      if (eul_format == "text") {
        out << by_descents.to_string() << '\n' << (agree ? "methods agree" : "methods DISAGREE") << '\n';
      } else {
        out << json{{"poset", to_json(Ps)},
                    {"eulerian", to_json(by_descents)},
                    {"via_ehrhart", to_json(by_counts)},
                    {"agree", agree}}
                   .dump()
            << '\n';
      }
      return agree ? 0 : 1;
    };
  });

  detail::PosetOptions ehr_opts;
  int nmax = 5;
  auto* ehr = app.add_subcommand("ehrhart", "counts i(O(P,s), n) = |N_<=n(P,s)| for n = 0..nmax");
  ehr_opts.add(ehr);
  ehr->add_option("--nmax", nmax, "largest dilation")->check(CLI::NonNegativeNumber);
  ehr->callback([&] {
    action = [&] {
      const auto Ps = ehr_opts.load();
      const auto counts = ehrhart_counts(Ps.poset, Ps.s, nmax, limits);
      json values = json::array();
      for (const auto& c : counts) values.push_back(lhp::to_string(c));
      out << json{{"poset", to_json(Ps)}, {"counts", values}}.dump() << '\n';
      return 0;
    };
  });

  detail::PosetOptions ext_opts;
  bool colored = false;
  auto* ext = app.add_subcommand("extensions", "linear extensions L(P), or L(P,s) with --colored");
  ext_opts.add(ext);
  ext->add_flag("--colored", colored, "list s-colored extensions");
  ext->callback([&] {
    action = [&] {
      const auto Ps = ext_opts.load();
      if (colored) {
        for_each_colored_extension(
            Ps.poset, Ps.s,
            [&](const ColoredPermutation& tau) { out << json{{"pi", tau.pi}, {"r", tau.r}}.dump() << '\n'; }, limits);
      } else {
        for_each_linear_extension(Ps.poset, [&](const Permutation& w) { out << json(w).dump() << '\n'; }, limits);
      }
      return 0;
    };
  });

  detail::PosetOptions stats_opts;
  std::string stats_format = "tsv";
  auto* stats = app.add_subcommand("stats", "descent sets and statistics of every colored extension");
  stats_opts.add(stats);
  stats->add_option("--format", stats_format, "tsv, json or text")->check(CLI::IsMember({"tsv", "json", "text"}));
  stats->callback([&] {
    action = [&] {
      const auto Ps = stats_opts.load();
      if (stats_format == "tsv") out << "pi\tr\tD1\tD2\tD3\tD4\tD\tdes_s\tcomaj\tlhp\n";
      for_each_colored_extension(
          Ps.poset, Ps.s,
          [&](const ColoredPermutation& tau) {
            const auto d = descent_profile(tau, Ps.s);
            const auto st = statistics(tau, Ps.s);
            if (stats_format == "json") {
              json row{{"pi", tau.pi}, {"r", tau.r},     {"D1", d.d1},        {"D2", d.d2},     {"D3", d.d3},
                       {"D4", d.d4}, {"D", d.d},         {"des_s", st.des_s}, {"comaj", st.comaj}, {"lhp", st.lhp}};
              if (st.fmaj) row["fmaj"] = *st.fmaj;
              out << row.dump() << '\n';
            } else if (stats_format == "tsv") {
              out << detail::join(tau.pi, "") << '\t' << detail::join(tau.r) << '\t' << detail::set_text(d.d1) << '\t'
                  << detail::set_text(d.d2) << '\t' << detail::set_text(d.d3) << '\t' << detail::set_text(d.d4) << '\t'
                  << detail::set_text(d.d) << '\t' << st.des_s << '\t' << st.comaj << '\t' << st.lhp << '\n';
            } else {
              out << "pi=" << detail::join(tau.pi, "") << " r=" << detail::join(tau.r) << " D=" << detail::set_text(d.d)
                  << " des_s=" << st.des_s << " comaj=" << st.comaj << " lhp=" << st.lhp << '\n';
            }
          },
          limits);
      return 0;
    };
  });

  detail::PosetOptions ver_opts;
  std::string identity;
  std::string caps_text;
  int k = 0;
  int p = 0;
  int tcap = 0;
  std::int64_t bound = 4;
  int bij_n = 3;
  auto* ver = app.add_subcommand("verify", "check one identity or theorem and print a JSON report");
  ver->add_option("--identity", identity, "F F_PLUS G R1 R2 R3 R4 RECI COR6 EUL2 UQ LHP QV KN1 KN DECOMP BIJ RECIPR ORDINAL")
      ->required();
  ver->add_option("--poset", ver_opts.source, "poset source (not needed for KN1/KN with --k --p)");
  ver->add_option("--s", ver_opts.s, "comma-separated s values");
  ver->add_option("--caps", caps_text, "degree caps, e.g. x=3,t=5");
  ver->add_option("--k", k, "KN1/KN: number of colors")->check(CLI::PositiveNumber);
  ver->add_option("--p", p, "KN1/KN: size")->check(CLI::PositiveNumber);
  ver->add_option("--tcap", tcap, "cap on t (same as t= in --caps)")->check(CLI::PositiveNumber);
  ver->add_option("--bound", bound, "DECOMP: cube side")->check(CLI::NonNegativeNumber);
  ver->add_option("--n", bij_n, "BIJ: dilation")->check(CLI::NonNegativeNumber);
  ver->callback([&] {
    action = [&] {
      auto caps = parse_caps(caps_text);
      if (tcap > 0) caps.t = tcap;
      if ((identity == "KN1" || identity == "KN") && k > 0 && p > 0) {
        const auto report = identity == "KN1" ? verify_kn1(k, p, caps, limits) : verify_kn(k, p, caps, limits);
        return detail::emit_reports({report}, out);
      }
      if (ver_opts.source.empty()) throw invalid_input("--poset is required for " + identity);
      const auto Ps = ver_opts.load();
      VerificationReport report;
      if (identity == "DECOMP") report = verify_cone_decomposition(Ps, bound, limits);
      else if (identity == "BIJ") report = verify_bijection(Ps, bij_n, limits);
      else if (identity == "RECIPR") report = verify_recipr(Ps, limits);
      else if (identity == "ORDINAL") report = verify_ordinal_interlacing(Ps, limits);
      else report = verify_identity(identity, Ps, caps, limits);
      return detail::emit_reports({report}, out);
    };
  });

  detail::PosetOptions all_opts;
  std::string all_caps;
  SuiteOptions suite;
  auto* all = app.add_subcommand("verify-all", "every identity and theorem check, one JSON line each");
  all_opts.add(all);
  all->add_option("--caps", all_caps, "degree caps, e.g. x=3,t=5");
  all->add_option("--bound", suite.cube_bound, "DECOMP cube side")->check(CLI::NonNegativeNumber);
  all->add_option("--n", suite.bijection_n, "BIJ dilation")->check(CLI::NonNegativeNumber);
  all->callback([&] {
    action = [&] {
      suite.caps = parse_caps(all_caps);
      return detail::emit_reports(verify_all(all_opts.load(), suite, limits), out);
    };
  });

  detail::PosetOptions bij_opts;
  int n = 2;
  bool points = false;
  auto* bij = app.add_subcommand("bij", "the map u: N_<=n(P,s) -> N_<n+1(P*,s*) for s = rho + 1");
  bij_opts.add(bij);
  bij->add_option("--n", n, "dilation")->check(CLI::NonNegativeNumber);
  bij->add_flag("--points", points, "also print every pair f -> u(f)");
  bij->callback([&] {
    action = [&] {
      auto Ps = bij_opts.load();
      if (bij_opts.s.empty() && bij_opts.source.find(";s=") == std::string::npos)
        if (auto s = rank_plus_one(Ps.poset)) Ps = WeightedPoset(Ps.poset, *s);
      const auto report = verify_bijection(Ps, n, limits);
      if (points && report.status != Status::skip) {
        const auto rank = sign_ranked(Ps.poset, limits);
        for_each_point(
            Ps.poset, Ps.s, regime::n_leq(Ps.s, n),
            [&](const LatticePoint& f) { out << json{{"f", f}, {"u", bij_u(f, Ps, *rank)}}.dump() << '\n'; }, limits);
      }
      return detail::emit_reports({report}, out);
    };
  });

  std::string blocks_text;
  std::string block_s_text;
  auto* ord = app.add_subcommand("ordinal-interlacing", "interlacing of {A^gamma} for an ordinal sum of anti-chains");
  ord->add_option("--blocks", blocks_text, "block sizes, bottom first, e.g. 2,3,1")->required();
  ord->add_option("--s", block_s_text, "one s value per block (default all 1)");
  ord->callback([&] {
    action = [&] {
      const auto sizes = parse_int_list(blocks_text);
      const auto values = block_s_text.empty() ? std::vector<int>(sizes.size(), 1) : parse_int_list(block_s_text);
      const auto Ps = ordinal_sum_of_antichains(sizes, values);
      auto report = verify_ordinal_interlacing(Ps, limits);
      json family = json::array();
      const auto order = x_order(Ps.s);
      const auto polys = refined_eulerian_family(Ps.poset, Ps.s, limits);
      for (std::size_t i = 0; i < order.size(); ++i)
        family.push_back({{"gamma", {order[i].color, order[i].element}}, {"polynomial", to_json(polys[i])}});
      report.details["family"] = family;
      return detail::emit_reports({report}, out);
    };
  });

  int pmax = 4;
  auto* scan = app.add_subcommand("scan-gamma", "gamma-vectors of A_(P,s) for sign-ranked P, rho >= 0, s = rho + 1");
  scan->add_option("--pmax", pmax, "largest poset size (1..6)")->check(CLI::Range(1, 6));
  scan->callback([&] {
    action = [&] {
      const auto result = scan_gamma(
          pmax,
          [&](const GammaRecord& rec) {
            json row{{"p", rec.poset.size()},
                     {"covers", json::array()},
                     {"rho", rec.rank.rho},
                     {"eulerian", to_json(rec.eulerian)},
                     {"palindromic", rec.palindromic}};
            for (const auto& [x, y] : rec.poset.covers()) row["covers"].push_back({x, y});
            if (rec.gamma) {
              json g = json::array();
              for (const auto& c : rec.gamma->gammas) g.push_back(lhp::to_string(c));
              row["gamma"] = g;
            }
            row["gamma_nonnegative"] = rec.gamma_nonnegative;
            row["binary_rank"] = rec.binary_rank;
            out << row.dump() << '\n';
          },
          limits);
      out << json{{"summary",
                   {{"posets_examined", result.posets_examined},
                    {"sign_ranked_candidates", result.records.size()},
                    {"non_palindromic", result.non_palindromic},
                    {"gamma_negative", result.general_violations},
                    {"gamma_negative_binary_rank", result.binary_violations}}}}
                 .dump()
          << '\n';
      return result.binary_violations == 0 ? 0 : 1;
    };
  });

  detail::PosetOptions dual_opts;
  auto* du = app.add_subcommand("dual", "the dual (P*, s*) as a JSON poset document");
  dual_opts.add(du);
  du->callback([&] {
    action = [&] {
      out << to_json(dual(dual_opts.load())).dump() << '\n';
      return 0;
    };
  });

  std::string left;
  std::string right;
  int union_nmax = 4;
  auto* uni = app.add_subcommand("union", "Ehrhart counts of a disjoint union against the product of the parts");
  uni->add_option("--left", left, "poset source")->required();
  uni->add_option("--right", right, "poset source")->required();
  uni->add_option("--nmax", union_nmax, "largest dilation")->check(CLI::NonNegativeNumber);
  uni->callback([&] {
    action = [&] {
      const auto report =
          verify_disjoint_union_product(parse_poset_source(left), parse_poset_source(right), union_nmax, std::nullopt, limits);
      return detail::emit_reports({report}, out);
    };
  });

  int kr_k = 2;
  int kr_p = 2;
  int samples = 50;
  std::uint64_t seed = 1;
  auto* kr = app.add_subcommand("kn-roots", "real-rootedness of sum q^r t^des over Z_k wr S_p at sampled q");
  kr->add_option("--k", kr_k, "number of colors")->check(CLI::PositiveNumber);
  kr->add_option("--p", kr_p, "size")->check(CLI::PositiveNumber);
  kr->add_option("--samples", samples, "number of q tuples")->check(CLI::NonNegativeNumber);
  kr->add_option("--seed", seed, "random seed");
  kr->callback([&] {
    action = [&] { return detail::emit_reports({verify_sampled_real_rootedness(kr_k, kr_p, samples, seed, limits)}, out); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }
  try {
    return action();
  } catch (const invalid_input& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const insufficient_data& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const resource_limit& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace lhp::cli
