#pragma once

#include "hecke/carter_payne.hpp"
#include "hecke/homs.hpp"
#include "hecke/reducibility.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace hecke::io {

using json = nlohmann::ordered_json;

inline json to_json(const Tableau& t) { return t.rows; }

inline Tableau tableau_from_json(const json& j) {
  require(j.is_array(), "tableau must be an array of rows");
  Tableau t;
  for (const auto& row : j) {
    require(row.is_array(), "tableau rows must be arrays");
    t.rows.push_back(row.get<std::vector<int>>());
  }
  return t;
}

template <Field F>
json to_json(const F& f, const HomSpec<F>& h) {
  json coeffs = json::array();
  const bool one_node = OneNodeCode::is_one_node_base(h.target) && h.source == OneNodeCode::source_of(h.target);
  for (const auto& [A, c] : h.coefficients) {
    json entry{{"tableau", to_json(A)}, {"scalar", f.format(c)}};
    if (one_node) {
      try {
        entry["code"] = OneNodeCode::encode(A, h.target).code();
      } catch (const DomainError&) {
        // not of one-node form; the tableau alone identifies it
      }
    }
    coeffs.push_back(std::move(entry));
  }
  return json{{"source", h.source}, {"target", h.target}, {"fieldSpec", to_string(f.spec())}, {"coefficients", coeffs}};
}

inline FieldSpec field_spec_of(const json& j) {
  require(j.contains("fieldSpec") && j["fieldSpec"].is_string(), "homomorphism JSON needs a fieldSpec string");
  return parse_field_spec(j["fieldSpec"].get<std::string>());
}

template <Field F>
HomSpec<F> homspec_from_json(const F& f, const json& j) {
  require(j.is_object(), "homomorphism JSON must be an object");
  for (const char* key : {"source", "target", "coefficients"}) require(j.contains(key), std::string("homomorphism JSON lacks '") + key + "'");
  if (j.contains("fieldSpec"))
    require(to_string(field_spec_of(j)) == to_string(f.spec()), "homomorphism JSON was written over a different field");
  HomSpec<F> h;
  h.source = j["source"].get<Partition>();
  h.target = j["target"].get<Composition>();
  for (const auto& entry : j["coefficients"]) {
    require(entry.contains("tableau") && entry.contains("scalar"), "coefficient entries need 'tableau' and 'scalar'");
    h.coefficients.emplace_back(tableau_from_json(entry["tableau"]), f.parse(entry["scalar"].get<std::string>()));
  }
  validate(h);
  return h;
}

template <Field F>
json to_json(const F& f, const ModuleVector<F>& v) {
  json terms = json::array();
  for (const auto& [k, c] : v.terms()) terms.push_back(json{{"rowWord", v.module()->word(k)}, {"scalar", f.format(c)}});
  return json{{"shape", v.shape()}, {"terms", terms}};
}

template <Field F>
ModuleVector<F> module_vector_from_json(const F& f, const json& j) {
  auto m = permutation_module(j.at("shape").get<Composition>());
  std::vector<typename ModuleVector<F>::Term> terms;
  for (const auto& t : j.at("terms"))
    terms.emplace_back(static_cast<std::uint32_t>(m->index_of_word(t.at("rowWord").get<std::vector<int>>())),
                       f.parse(t.at("scalar").get<std::string>()));
  return ModuleVector<F>::from_terms(f, m, std::move(terms));
}

template <Field F>
json to_json(const F& f, const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(f.format(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json to_json(const NodeTriple& t) {
  json out = json::array();
  for (const Node& nd : t) out.push_back(json::array({nd.row, nd.col}));
  return out;
}

inline json to_json(const ReducibilityReport& r) {
  json j{{"partition", r.lambda},
         {"e", *r.profile.e},
         {"p", r.profile.p},
         {"verdict", r.reducible ? "reducible" : "irreducible"},
         {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
  if (!r.criterion_proven()) j["note"] = "criterion proven only for e != 2";
  return j;
}

inline ReducibilityReport report_from_json(const json& j) {
  ReducibilityReport r;
  const auto& part = j.at("partition");
  r.lambda = part.is_string() ? parse_partition(part.get<std::string>()) : part.get<Partition>();
  r.profile.e = j.at("e").get<int>();
  r.profile.p = j.at("p").get<int>();
  const std::string verdict = j.at("verdict").get<std::string>();
  require(verdict == "reducible" || verdict == "irreducible", "verdict must be 'reducible' or 'irreducible'");
  r.reducible = verdict == "reducible";
  if (!j.at("witness").is_null()) {
    json w = j.at("witness");
    if (w.is_string()) {
      // "(1,1),(1,2),(2,1)" as written by to_string(NodeTriple)
      std::string text = w.get<std::string>();
      for (char& c : text)
        if (c == '(') c = '[';
        else if (c == ')') c = ']';
      w = json::parse("[" + text + "]");
    }
    require(w.is_array() && w.size() == 3, "witness must list three nodes");
    NodeTriple t;
    for (std::size_t k = 0; k < 3; ++k) t[k] = Node{w[k].at(0).get<int>(), w[k].at(1).get<int>()};
    r.witness = t;
  }
  return r;
}

inline std::string csv_header() { return "partition,e,p,verdict,witness"; }

inline std::string to_csv(const ReducibilityReport& r) {
  std::ostringstream os;
  os << '"' << to_string(r.lambda) << "\"," << *r.profile.e << ',' << r.profile.p << ','
     << (r.reducible ? "reducible" : "irreducible") << ",\"" << (r.witness ? to_string(*r.witness) : "") << '"';
  return os.str();
}

}  // namespace hecke::io
