// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace lhp;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void failure(const std::string& what) {
    if (ok) note << what;
    ok = false;
  }
};

using Check = std::function<void(Outcome&)>;

bool run_criterion(int number, const std::string& title, double budget_seconds, const Check& check) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    check(outcome);
  } catch (const std::exception& e) {
    outcome.failure(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > budget_seconds) outcome.failure("over time budget");
  std::printf("%s %2d %-44s %8.2fs  %s\n", outcome.ok ? "PASS" : "FAIL", number, title.c_str(), seconds,
              outcome.note.str().c_str());
  std::fflush(stdout);
  return outcome.ok;
}

std::string describe(const WeightedPoset& Ps) { return to_json(Ps).dump(); }

std::vector<WeightedPoset> identity_corpus() {
  const char* sources[] = {
      "antichain:1;s=1",        "antichain:1;s=3",        "antichain:2;s=1,2",      "antichain:2;s=3,2",
      "antichain:3;s=1,2,3",    "antichain:3;s=2,2,1",    "antichain:4;s=1,2,1,3",  "chain:1,2;s=1,2",
      "chain:2,1;s=1,2",        "chain:1,2,3;s=1,2,3",    "chain:3,1,2;s=2,1,3",    "chain:2,3,1;s=1,1,2",
      "chain:1,2,3,4;s=1,2,2,3", "chain:4,2,3,1;s=1,3,2,1", "ordinal:1,2;s=1,2,2",    "ordinal:2,1;s=3,3,1",
      "ordinal:1,1,2;s=1,2,3,3", "ordinal:2,2;s=1,1,2,2",
  };
  std::vector<WeightedPoset> out;
  for (const char* src : sources) out.push_back(parse_poset_source(src));
  // Non-ordinal shapes: a diamond, a zigzag and a V with mixed labels.
  out.emplace_back(LabeledPoset(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), SMap{1, 2, 2, 3});
  out.emplace_back(LabeledPoset(4, {{2, 1}, {2, 4}, {3, 4}}), SMap{1, 1, 1, 2});
  out.emplace_back(LabeledPoset(3, {{3, 1}, {3, 2}}), SMap{2, 1, 3});
  out.emplace_back(LabeledPoset(4, {{4, 1}, {2, 3}}), SMap{3, 1, 2, 2});
  return out;
}

// Every labeled poset with p <= pmax that is sign-ranked with ρ >= 0, paired with s = ρ+1.
std::vector<WeightedPoset> rank_corpus(int pmax) {
  std::vector<WeightedPoset> out;
  for (int p = 1; p <= pmax; ++p)
    for (const auto& P : all_labeled_posets(p))
      if (const auto s = rank_plus_one(P)) out.emplace_back(P, *s);
  return out;
}

void criterion1(Outcome& o) {
  for (int p = 1; p <= 6; ++p) {
    std::vector<int> labels(p), values(p);
    std::iota(labels.begin(), labels.end(), 1);
    values = labels;
    const auto A = eulerian(make_chain(labels), SMap(values));
    const auto expected = oracle::classical_eulerian(p);
    for (int k = 0; k < p; ++k)
      if (A[k] != Rational(static_cast<long>(expected[k]))) o.failure("mismatch at p=" + std::to_string(p));
    if (A.degree() > p - 1) o.failure("degree too high at p=" + std::to_string(p));
  }
}

void criterion2(Outcome& o) {
  std::size_t pairs = 0;
  for (int p = 1; p <= 4; ++p)
    for (const auto& P : all_labeled_posets(p))
      for (const auto& s : oracle::all_s(p, 3)) {
        ++pairs;
        if (eulerian_via_ehrhart(P, s) != eulerian(P, s)) {
          o.failure("disagreement on " + describe(WeightedPoset(P, s)));
          return;
        }
      }
  o.note << pairs << " pairs";
}

void criterion3(Outcome& o) {
  const auto corpus = identity_corpus();
  const auto caps = parse_caps("x=3,q=3,u=3,t=5");
  const std::vector<std::string> general = {"F", "F_PLUS", "G", "R1", "R2", "R3", "R4", "RECI", "EUL2", "UQ", "LHP"};
  std::size_t passes = 0, antichain_passes = 0;
  for (const auto& Ps : corpus) {
    for (const auto& id : general) {
      const auto r = verify_identity(id, Ps, caps);
      if (r.status != Status::pass) o.failure(id + " " + to_string(r.status) + " on " + describe(Ps));
      else ++passes;
    }
    const bool antichain = Ps.poset.covers().empty();
    for (const std::string id : {"COR6", "QV"}) {
      const auto r = verify_identity(id, Ps, caps);
      if (r.status == Status::fail || (antichain && r.status != Status::pass))
        o.failure(id + " " + to_string(r.status) + " on " + describe(Ps));
      else if (r.status == Status::pass) ++antichain_passes;
    }
  }
  o.note << corpus.size() << " pairs, " << passes << " general passes, " << antichain_passes << " antichain passes";
}

void criterion4(Outcome& o) {
  const auto caps = parse_caps("t=6");
  for (int k = 1; k <= 3; ++k)
    for (int p = 1; p <= 3; ++p) {
      for (const auto& r : {verify_kn1(k, p, caps), verify_kn(k, p, caps)})
        if (r.status != Status::pass)
          o.failure(r.id + " k=" + std::to_string(k) + " p=" + std::to_string(p) + ": " + r.reason);
    }
}

void criterion5(Outcome& o) {
  const auto corpus = rank_corpus(5);
  std::size_t points = 0;
  for (const auto& Ps : corpus)
    for (int n = 0; n <= 4; ++n) {
      const auto r = verify_bijection(Ps, n);
      if (r.status != Status::pass) {
        o.failure("n=" + std::to_string(n) + " on " + describe(Ps) + ": " + r.reason);
        return;
      }
      points += r.details["domain_size"].get<std::size_t>();
    }
  o.note << corpus.size() << " posets, " << points << " points";
}

void criterion6(Outcome& o) {
  const auto corpus = rank_corpus(5);
  for (const auto& Ps : corpus) {
    const auto r = verify_recipr(Ps);
    if (r.status != Status::pass) {
      o.failure(describe(Ps) + ": " + r.reason);
      return;
    }
  }
  o.note << corpus.size() << " posets";
}

void criterion7(Outcome& o) {
  std::size_t checked = 0;
  for (int total = 1; total <= 6; ++total)
    for (unsigned mask = 0; mask < (1u << (total - 1)); ++mask) {
      std::vector<int> blocks{1};
      for (int i = 0; i + 1 < total; ++i) {
        if (mask >> i & 1u) blocks.push_back(1);
        else ++blocks.back();
      }
      const int m = static_cast<int>(blocks.size());
      std::vector<int> s(m, 1);
      while (true) {
        const auto r = verify_ordinal_interlacing(blocks, s);
        ++checked;
        if (r.status != Status::pass) {
          o.failure(describe(ordinal_sum_of_antichains(blocks, s)) + ": " + r.reason);
          return;
        }
        int i = 0;
        while (i < m && s[i] == 3) s[i++] = 1;
        if (i == m) break;
        ++s[i];
      }
    }
  o.note << checked << " ordinal sums";
}

void criterion8(Outcome& o) {
  std::size_t pairs = 0;
  for (int p = 1; p <= 4; ++p)
    for (const auto& P : all_labeled_posets(p))
      for (const auto& s : oracle::all_s(p, 2)) {
        ++pairs;
        const auto r = verify_cone_decomposition(WeightedPoset(P, s), 4);
        if (r.status != Status::pass) {
          o.failure(describe(WeightedPoset(P, s)) + ": " + r.reason);
          return;
        }
      }
  o.note << pairs << " pairs";
}

void criterion9(Outcome& o) {
  const auto scan = scan_gamma(4);
  std::size_t binary = 0;
  for (const auto& r : scan.records) binary += r.binary_rank;
  if (scan.binary_violations != 0) o.failure(std::to_string(scan.binary_violations) + " binary-rank violations");
  if (scan.non_palindromic != 0) o.failure(std::to_string(scan.non_palindromic) + " non-palindromic");
  o.note << scan.records.size() << " sign-ranked (" << binary << " binary), general rho: "
         << scan.general_violations << " gamma-negative";
}

void criterion10(Outcome& o) {
  std::size_t checked = 0;
  for (int k = 1; k <= 3; ++k)
    for (int p = 1; p <= 4; ++p) {
      const auto r = verify_sampled_real_rootedness(k, p, 50, static_cast<std::uint64_t>(1000 * k + p));
      checked += r.details["checked"].get<std::size_t>();
      if (r.status != Status::pass) o.failure("k=" + std::to_string(k) + " p=" + std::to_string(p) + ": " + r.reason);
    }
  o.note << checked << " samples";
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "chains with s(i)=i give Eulerian polynomials", 10, criterion1);
  all &= run_criterion(2, "Ehrhart numerator equals descent polynomial", 300, criterion2);
  all &= run_criterion(3, "generating function identities", 600, criterion3);
  all &= run_criterion(4, "colored Carlitz identities", 60, criterion4);
  all &= run_criterion(5, "dilation bijection u with inverse eta", 120, criterion5);
  all &= run_criterion(6, "palindromicity and Ehrhart reciprocity", 60, criterion6);
  all &= run_criterion(7, "ordinal sums of antichains interlace", 300, criterion7);
  all &= run_criterion(8, "chain cones partition the cone", 120, criterion8);
  all &= run_criterion(9, "gamma-positivity scan", 300, criterion9);
  all &= run_criterion(10, "sampled real-rootedness in t", 120, criterion10);
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << "\n";
  return all ? 0 : 1;
}
