#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "preop/algebra.hpp"
#include "preop/checks.hpp"
#include "preop/cohomology.hpp"
#include "preop/error.hpp"
#include "preop/field.hpp"

namespace preop {

using json = nlohmann::json;

struct FieldChoice {
  bool rational = true;
  std::uint64_t p = 0;

  std::string describe() const { return rational ? "rational" : "prime p=" + std::to_string(p); }
};

/// Field block of an algebra document: {"type":"rational"} or
/// {"type":"prime","p":N}.
inline FieldChoice parse_field_choice(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw load_error("field block must carry a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "rational") return {};
  if (type == "prime") {
    if (!j.contains("p") || !j.at("p").is_number_integer())
      throw load_error("prime field block needs an integer p");
    return FieldChoice{false, j.at("p").get<std::uint64_t>()};
  }
  throw load_error("unknown field type '" + type + "'");
}

/// Command-line override: "rational" or "prime:N".
inline FieldChoice parse_field_override(const std::string& text) {
  if (text == "rational") return {};
  if (text.rfind("prime:", 0) == 0) {
    try {
      return FieldChoice{false, std::stoull(text.substr(6))};
    } catch (const std::exception&) {
      throw load_error("cannot parse field override '" + text + "'");
    }
  }
  throw load_error("field override must be 'rational' or 'prime:<p>'");
}

template <exact_field F>
F coeff_from_json(const json& v, const typename F::Config& cfg) {
  if (v.is_number_integer()) return cfg.from_int(v.get<long long>());
  if (v.is_string()) return cfg.parse(v.get<std::string>());
  throw load_error("coefficients must be integers or 'a/b' strings, got " + v.dump());
}

/// Build an AlgebraSpec from a parsed document, with the field already chosen.
template <exact_field F>
AlgebraSpec<F> algebra_from_json(const json& doc, typename F::Config cfg) {
  if (!doc.is_object()) throw load_error("algebra document must be a JSON object");
  for (const char* key : {"dimension", "product"})
    if (!doc.contains(key)) throw load_error(std::string("algebra document lacks '") + key + "'");
  const std::size_t d = doc.at("dimension").get<std::size_t>();
  std::string name = doc.value("name", std::string("unnamed"));

  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    for (const auto& b : doc.at("basis")) basis.push_back(b.get<std::string>());
  } else {
    for (std::size_t i = 0; i < d; ++i) basis.push_back("e" + std::to_string(i));
  }

  const json& prod = doc.at("product");
  if (!prod.is_array() || prod.size() != d)
    throw load_error("product table must have " + std::to_string(d) + " rows");
  std::vector<F> structure;
  structure.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!prod[i].is_array() || prod[i].size() != d)
      throw load_error("product row " + std::to_string(i) + " must have " + std::to_string(d) +
                       " entries");
    for (std::size_t j = 0; j < d; ++j) {
      const json& cell = prod[i][j];
      if (!cell.is_array() || cell.size() != d)
        throw load_error("product[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] must be a coordinate vector of length " + std::to_string(d));
      for (std::size_t k = 0; k < d; ++k) structure.push_back(coeff_from_json<F>(cell[k], cfg));
    }
  }

  std::optional<std::vector<F>> unit;
  if (doc.contains("unit")) {
    std::vector<F> u;
    for (const auto& v : doc.at("unit")) u.push_back(coeff_from_json<F>(v, cfg));
    unit = std::move(u);
  }

  return AlgebraSpec<F>(std::move(name), d, std::move(basis), std::move(structure),
                        std::move(unit), cfg);
}

// -- report serialization ----------------------------------------------------

inline json to_json(const DefectWitness& w) {
  return json{{"flat_index", w.flat_index},
              {"multi_index", w.multi_index},
              {"lhs", w.lhs_value},
              {"rhs", w.rhs_value},
              {"difference", w.difference_value}};
}

inline json to_json(const CheckRecord& r) {
  json j{{"check", r.name},
         {"status", to_string(r.status)},
         {"cases", r.cases},
         {"degrees", json::array({r.degree_low, r.degree_high})},
         {"seed", r.seed}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["witness"]["degrees"] = r.witness_degrees;
    j["witness"]["tuple_seed"] = r.witness_seed;
  }
  return j;
}

template <exact_field F>
json to_json(const CohomologyReport<F>& report) {
  json degrees = json::array();
  for (const auto& s : report.degrees) {
    json reps = json::array();
    for (const auto& rep : s.representatives) {
      json v = json::array();
      for (const F& x : rep) v.push_back(x.str());
      reps.push_back(std::move(v));
    }
    degrees.push_back(json{{"degree", s.degree},
                           {"dim_c", s.dim_c},
                           {"dim_ker", s.dim_ker},
                           {"dim_im", s.dim_im},
                           {"dim_h", s.dim_h},
                           {"representatives", std::move(reps)}});
  }
  const auto& oc = report.oracles;
  json oracles{{"center_dim", oc.center_dim},
               {"derivation_dim", oc.derivation_dim},
               {"inner_derivation_dim", oc.inner_derivation_dim},
               {"bar_dims", oc.bar_dims},
               {"delta_sign_vs_bar", oc.delta_sign_per_degree},
               {"consistent", oc.consistent()},
               {"notes", oc.notes}};
  return json{{"algebra", report.algebra_name},
              {"field", report.field_desc},
              {"max_degree", report.max_degree},
              {"mu_squared_zero", true},
              {"cohomology", std::move(degrees)},
              {"oracles", std::move(oracles)}};
}

template <exact_field F>
json to_json(const GerstenhaberReport<F>& report) {
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json jv{{"axiom", v.axiom}, {"statement", v.statement}, {"pass", v.pass}, {"cases", v.cases}};
    if (!v.note.empty()) jv["note"] = v.note;
    verdicts.push_back(std::move(jv));
  }
  json unit{{"found", report.unit_class.found}, {"note", report.unit_class.note}};
  if (report.unit_class.found) {
    json rep = json::array();
    for (const F& x : report.unit_class.rep) rep.push_back(x.str());
    unit["representative"] = std::move(rep);
  }
  json j = to_json(report.cohomology);
  j["gerstenhaber"] = json{{"verdicts", std::move(verdicts)},
                           {"unit_class", std::move(unit)},
                           {"well_definedness",
                            json{{"seeds", report.well_definedness.seeds},
                                 {"cases", report.well_definedness.cases},
                                 {"pass", report.well_definedness.pass},
                                 {"note", report.well_definedness.note}}}};
  return j;
}

}  // namespace preop
