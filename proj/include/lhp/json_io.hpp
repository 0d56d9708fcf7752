#pragma once

// JSON and text formats: poset documents {"p", "covers", "s"}, builtin
// poset strings, polynomials as arrays of decimal strings, series records.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lhp/error.hpp"
#include "lhp/polynomial.hpp"
#include "lhp/poset.hpp"
#include "lhp/series.hpp"

namespace lhp {

using json = nlohmann::ordered_json;

inline json to_json(const Polynomial& g) {
  json out = json::array();
  for (const auto& c : g.coefficients()) out.push_back(lhp::to_string(c));
  return out;
}

inline Polynomial polynomial_from_json(const json& doc) {
  if (!doc.is_array()) throw invalid_input("a polynomial is a JSON array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : doc) {
    if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer()) coeffs.emplace_back(c.get<long>());
    else throw invalid_input("polynomial coefficients must be strings or integers");
  }
  return Polynomial(std::move(coeffs));
}

inline json to_json(const TruncatedSeries& series) {
  json out = json::array();
  for (const auto& [e, c] : series.sorted_terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < e.size(); ++i) exps[series.variables().name(i)] = e[i];
    out.push_back({{"exponents", exps}, {"coefficient", lhp::to_string(c)}});
  }
  return out;
}

inline json to_json(const WeightedPoset& Ps) {
  json covers = json::array();
  for (const auto& [x, y] : Ps.poset.covers()) covers.push_back({x, y});
  return {{"p", Ps.size()}, {"covers", covers}, {"s", Ps.s.values()}};
}

/// Reads {"p": 4, "covers": [[1,2],...], "s": [...]}; s defaults to all ones.
/// Covers may be any generating set of relations; they are validated and
/// reduced.
inline WeightedPoset poset_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("p")) throw invalid_input("poset document needs a \"p\" field");
  if (!doc["p"].is_number_integer()) throw invalid_input("\"p\" must be an integer");
  const int p = doc["p"].get<int>();
  if (p < 1) throw invalid_input("\"p\" must be positive");
  std::vector<Cover> relations;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw invalid_input("\"covers\" must be an array");
    for (const auto& pair : doc["covers"]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        throw invalid_input("each cover is a pair [x, y] of integers");
      relations.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  std::vector<int> s(static_cast<std::size_t>(p), 1);
  if (doc.contains("s")) {
    if (!doc["s"].is_array()) throw invalid_input("\"s\" must be an array");
    s.clear();
    for (const auto& v : doc["s"]) {
      if (!v.is_number_integer()) throw invalid_input("s values must be integers");
      s.push_back(v.get<int>());
    }
  }
  return WeightedPoset(LabeledPoset(p, relations), SMap(std::move(s)));
}

/// "1,2,3" -> {1, 2, 3}.
inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  if (text.empty()) throw invalid_input("empty integer list");
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string item(text.substr(pos, comma - pos));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw invalid_input("'" + item + "' is not an integer");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

/// Builtin families: "chain:2,1,3", "antichain:4", "ordinal:2,3,1" (an
/// ordinal sum of anti-chains of those sizes), each optionally followed by
/// ";s=..." listing s element by element. Anything else names a JSON file.
inline WeightedPoset parse_poset_source(std::string_view source) {
  std::string_view body = source;
  std::optional<std::vector<int>> s;
  if (const auto semi = source.find(';'); semi != std::string_view::npos) {
    const auto tail = source.substr(semi + 1);
    if (tail.substr(0, 2) != "s=") throw invalid_input("expected ';s=...' after the poset, got '" + std::string(tail) + "'");
    s = parse_int_list(tail.substr(2));
    body = source.substr(0, semi);
  }
  const auto colon = body.find(':');
  const std::string kind(colon == std::string_view::npos ? body : body.substr(0, colon));
  LabeledPoset P;
  if (kind == "chain" || kind == "antichain" || kind == "ordinal") {
    if (colon == std::string_view::npos) throw invalid_input("'" + kind + "' needs arguments after ':'");
    const auto args = parse_int_list(body.substr(colon + 1));
    if (kind == "chain") {
      P = make_chain(args);
    } else if (kind == "antichain") {
      if (args.size() != 1) throw invalid_input("antichain takes one size");
      P = make_antichain(args[0]);
    } else {
      std::vector<int> ones(args.size(), 1);
      P = ordinal_sum_of_antichains(args, ones).poset;
    }
  } else {
    std::ifstream in{std::string(body)};
    if (!in) throw invalid_input("cannot open poset file '" + std::string(body) + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw invalid_input(std::string("poset file is not valid JSON: ") + e.what());
    }
    auto Ps = poset_from_json(doc);
    if (!s) return Ps;
    P = Ps.poset;
  }
  if (!s) s = std::vector<int>(static_cast<std::size_t>(P.size()), 1);
  return WeightedPoset(std::move(P), SMap(std::move(*s)));
}

}  // namespace lhp
