#include "trident/serialize.hpp"

#include <stdexcept>

namespace trident {

json to_json(const MultiPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    out.push_back({t.exps.e[0], t.exps.e[1], t.exps.e[2], t.exps.e[3], t.coeff.get_str()});
  }
  return out;
}

json to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

MultiPoly multipoly_from_json(const json& j) {
  std::vector<Monomial4> terms;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 5) {
      throw std::invalid_argument("MultiPoly term must be [w, x, y, z, \"coeff\"]");
    }
    Exponents e{{rec[0].get<std::uint32_t>(), rec[1].get<std::uint32_t>(),
                 rec[2].get<std::uint32_t>(), rec[3].get<std::uint32_t>()}};
    terms.push_back(Monomial4{e, BigInt(rec[4].get<std::string>())});
  }
  return MultiPoly::from_terms(std::move(terms));
}

UniPoly unipoly_from_json(const json& j) {
  std::vector<BigInt> c;
  for (const auto& v : j) c.emplace_back(v.get<std::string>());
  return UniPoly(std::move(c));
}

json to_json(const IdentityReport& r) {
  json statuses = json::array();
  for (const auto& s : r.statuses) {
    json e = {{"n", s.parameter}, {"passed", s.passed}};
    if (!s.note.empty()) e["note"] = s.note;
    statuses.push_back(std::move(e));
  }
  json out = {{"id", r.id},
              {"from", r.from},
              {"to", r.to},
              {"passed", r.passed()},
              {"statuses", std::move(statuses)}};
  if (r.witness) out["witness"] = json::parse(*r.witness);
  return out;
}

json to_json(const ChebyshevFormReport& r) {
  return {{"id", "chebyshev_representation"},
          {"n", r.n},
          {"passed", r.passed()},
          {"q_exact", r.q_exact},
          {"r_exact", r.r_exact},
          {"spot_points", r.spot_points},
          {"spot_tolerance", r.spot_tolerance},
          {"worst_q_relative", r.worst_q_relative},
          {"worst_r_relative", r.worst_r_relative},
          {"failures", r.failures}};
}

json to_json(const GfReport& r) {
  json mism = json::array();
  for (const auto& m : r.mismatches) {
    mism.push_back({{"family", std::string(1, m.family)},
                    {"degree", m.degree},
                    {"expected", m.expected},
                    {"actual", m.actual}});
  }
  return {{"id", "generating_functions"},
          {"max_degree", r.max_degree},
          {"passed", r.passed()},
          {"mismatches", std::move(mism)}};
}

json to_json(const StructuralReport& r) {
  return {{"id", "structure"},
          {"spec", std::string(spec_name(r.spec))},
          {"n", r.n},
          {"passed", r.passed()},
          {"checks", r.checks},
          {"failures", r.failures}};
}

json to_json(const LocusReport& r) {
  json out = {{"id", "zero_locus"},
              {"spec", std::string(spec_name(r.spec))},
              {"n", r.n},
              {"tolerance", r.tolerance},
              {"passed", r.passed()},
              {"worst_locus_distance", r.worst_locus_distance},
              {"worst_relative_residual", r.worst_relative_residual},
              {"failures", r.failures}};
  if (r.path_agreement) out["path_agreement"] = *r.path_agreement;
  if (r.strict_margin) out["strict_margin"] = *r.strict_margin;
  if (r.real_zero_range) {
    out["real_zero_range"] = {r.real_zero_range->first, r.real_zero_range->second};
  }
  return out;
}

json to_json(const CoefficientProfile& p) {
  json coeffs = json::array();
  for (const auto& [k, c] : p.coeffs) coeffs.push_back({k, c.get_str()});
  return {{"family", std::string(1, family_char(p.family))},
          {"spec", std::string(spec_name(p.spec))},
          {"n", p.n},
          {"coeffs", std::move(coeffs)}};
}

}  // namespace trident
