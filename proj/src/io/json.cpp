#include "eigcontain/io/json.hpp"

#include <cmath>

namespace eigc::io {

Json to_json(const Rational& r) {
  if (r.is_small()) return Json::array({r.small_num(), r.small_den()});
  return Json::array({r.numerator().get_str(), r.denominator().get_str()});
}

Json to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

Json to_json(const ClassFunction& chi) {
  Json values = Json::array();
  for (const auto& v : chi.values()) values.push_back(to_json(v));
  Json out{{"values", values}, {"text", Json::array()}};
  for (const auto& v : chi.values()) out["text"].push_back(v.str());
  if (auto d = chi.degree()) out["dim"] = *d;
  return out;
}

Json to_json(const CharacterTable& t) {
  const auto& g = *t.group;
  Json classes = Json::array();
  for (const auto& c : g.classes()) {
    classes.push_back({{"size", c.size}, {"rep_order", c.rep_order}});
  }
  Json irr = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : t.irreducibles[i].values()) values.push_back(to_json(v));
    irr.push_back({{"label", t.label(i)}, {"dim", t.dim(i)}, {"values", values}});
  }
  Json out{{"group", g.descriptor()},
           {"order", g.order()},
           {"exponent", g.exponent()},
           {"method", t.method},
           {"classes", classes},
           {"irreducibles", irr}};
  out["dixon_prime"] = t.dixon_prime ? Json(*t.dixon_prime) : Json(nullptr);
  return out;
}

Json to_json(const EigenMultiset& m) {
  Json entries = Json::array();
  for (const auto& [k, mult] : m.entries()) {
    entries.push_back({{"root", "z" + std::to_string(m.order) + "^" + std::to_string(k)},
                       {"exponent", k},
                       {"multiplicity", mult}});
  }
  return Json{{"order", m.order}, {"total", m.total()}, {"eigenvalues", entries}};
}

Json to_json(const PreceqReport& r, const GroupModel& g) {
  Json out{{"holds", r.holds}};
  if (!r.holds) {
    const auto& c = g.cls(r.witness_class);
    out["witness"] = {{"class", r.witness_class},
                      {"representative", g.element(c.rep).str()},
                      {"class_size", c.size},
                      {"eigenvalue", "z" + std::to_string(r.order) + "^" +
                                         std::to_string(r.exponent)},
                      {"small_multiplicity", r.small_multiplicity},
                      {"big_multiplicity", r.big_multiplicity},
                      {"deficit", r.deficit()}};
  }
  return out;
}

Json to_json(const ContainmentResult& r) {
  Json failures = Json::array();
  for (const auto& v : r.primes) {
    if (v.contained) continue;
    failures.push_back({{"p", v.p},
                        {"residual", std::isfinite(v.residual) ? Json(v.residual)
                                                               : Json("inf")}});
  }
  return Json{{"verdict", r.verdict},
              {"primes_checked", r.primes.size()},
              {"failures", failures},
              {"max_residual", std::isfinite(r.max_residual) ? Json(r.max_residual)
                                                             : Json("inf")}};
}

Json to_json(const IdentityReport& r) {
  Json out{{"equal", r.equal},
           {"specialization", r.su2 ? "su2" : "gl2"},
           {"lhs", r.lhs_str()},
           {"rhs", r.rhs_str()},
           {"lhs_dim", r.lhs.dimension()},
           {"rhs_dim", r.rhs.dimension()}};
  if (!r.equal) out["difference"] = r.difference_str();
  return out;
}

Json to_json(const Sym6Result& r) {
  Json types = Json::array();
  for (const auto& t : r.types) types.push_back(t);
  Json ids = Json::array();
  for (const auto& id : r.identities) {
    ids.push_back({{"name", id.name}, {"lhs", id.lhs}, {"rhs", id.rhs}, {"holds", id.holds}});
  }
  return Json{{"case", to_string(r.which)},
              {"types", types},
              {"certificate",
               {{"hypothesis", r.hypothesis},
                {"target", r.target},
                {"decomposition", r.decomposition},
                {"known_blocks", r.known_blocks},
                {"cuspidal_symbols", r.cuspidal_symbols},
                {"rules", r.rules},
                {"identities", ids},
                {"certified", r.certified()}}}};
}

}  // namespace eigc::io
