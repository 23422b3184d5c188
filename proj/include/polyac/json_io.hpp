#pragma once

#include <string>

#include <json.hpp>

#include "polyac/poly.hpp"

// Canonical JSON encodings.  Term order is the terms' map order, so a
// decode/encode round trip is byte-identical.

namespace polyac {

using Json = nlohmann::ordered_json;

inline Json to_json(const FieldElem& e) {
  if (e.is_rational()) return e.rational().str();
  const CycloElem c = e.cyclo();
  Json terms = Json::array();
  for (const auto& [exps, coeff] : c.terms())
    terms.push_back({{"exps", exps}, {"coeff", coeff.str()}});
  return Json{{"primes", c.primes()}, {"terms", terms}};
}

inline FieldElem field_from_json(const Json& j) {
  if (j.is_string()) return FieldElem(Rational::parse(j.get<std::string>()));
  if (j.is_number_integer()) return FieldElem(Rational(j.get<long>()));
  if (!j.is_object() || !j.contains("primes") || !j.contains("terms"))
    throw InvalidParams("bad FieldElem JSON");
  const auto primes = j.at("primes").get<std::vector<unsigned>>();
  CycloElem acc;
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("exps").get<std::vector<unsigned>>();
    if (exps.size() != primes.size())
      throw InvalidParams("FieldElem JSON: exps length != primes length");
    CycloElem term(Rational::parse(t.at("coeff").get<std::string>()));
    for (std::size_t i = 0; i < primes.size(); ++i) {
      CycloElem z = CycloElem::root_of_unity(primes[i]);
      for (unsigned k = 0; k < exps[i]; ++k) term = term * z;
    }
    acc = acc + term;
  }
  return FieldElem(acc);
}

inline Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exps", m}, {"coeff", to_json(c)}});
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline Poly poly_from_json(const Json& j) {
  Poly p(j.at("nvars").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exps").get<Monomial>(), field_from_json(t.at("coeff")));
  return p;
}

inline Json to_json(const PolyMap& f) {
  Json comps = Json::array();
  for (const auto& c : f.components) comps.push_back(to_json(c));
  return Json{{"components", comps}};
}

inline PolyMap poly_map_from_json(const Json& j) {
  std::vector<Poly> comps;
  for (const auto& c : j.at("components")) comps.push_back(poly_from_json(c));
  return PolyMap(std::move(comps));
}

inline Json to_json(const std::vector<FieldElem>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(to_json(e));
  return a;
}

inline std::vector<FieldElem> point_from_json(const Json& j) {
  std::vector<FieldElem> v;
  for (const auto& e : j) v.push_back(field_from_json(e));
  return v;
}

}  // namespace polyac
