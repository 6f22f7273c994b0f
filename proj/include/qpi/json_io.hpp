#pragma once

#include <json.hpp>

#include "qpi/isometry.hpp"
#include "qpi/measures.hpp"
#include "qpi/models.hpp"
#include "qpi/partial_maps.hpp"
#include "qpi/weingarten.hpp"

namespace qpi {

using json = nlohmann::ordered_json;

inline json to_json(const CycInt& z) {
  json coeffs = json::array();
  for (const auto& c : z.coeffs()) coeffs.push_back(c.str());
  auto v = z.to_complex();
  return json{{"order", z.order()},
              {"coeffs", coeffs},
              {"value", {v.real(), v.imag()}}};
}

inline json to_json(const RationalMeasure& m) {
  json atoms = json::array();
  for (const auto& [point, w] : m.atoms)
    atoms.push_back(json{{"point", to_json(point)}, {"weight", to_string(w)}});
  return json{{"x", m.x},
              {"atoms", atoms},
              {"normalization",
               m.exp_rate == 0 ? std::string("exact") : to_string(m.exp_rate)}};
}

inline json to_json(const SignedPartialPermutation& f) {
  json signs = json::array();
  for (const auto& s : f.signs) signs.push_back(to_string(s));
  return json{
      {"n", f.base.n}, {"x", f.x}, {"map", f.base.map}, {"signs", signs}};
}

inline json to_json(const WeingartenTable& t) {
  json basis = json::array();
  for (const auto& p : t.basis) basis.push_back(p.to_string());
  json gram = json::array(), wg = json::array();
  for (const auto& row : t.gram) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.str());
    gram.push_back(r);
  }
  for (const auto& row : t.wg) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    wg.push_back(r);
  }
  return json{{"n", t.n},       {"N", t.N},       {"category", t.cat.name()},
              {"basis", basis}, {"gram", gram},   {"weingarten", wg}};
}

inline json to_json(const BPReport& r) {
  json cc = json::array(), fc = json::array();
  for (const auto& v : r.classical) cc.push_back(to_string(v));
  for (const auto& v : r.free) fc.push_back(to_string(v));
  return json{{"pass", r.pass},
              {"first_fail", r.first_fail},
              {"classical_cumulants", cc},
              {"free_cumulants", fc}};
}

inline json to_json(const HalfCommReport& r) {
  json triple = json::array();
  for (const auto& [i, j] : r.argmax_triple) triple.push_back({i, j});
  return json{{"variant", variant_name(r.variant)},
              {"max_residual", r.max_residual},
              {"argmax_triple", triple},
              {"triples", r.triples},
              {"exhaustive", r.exhaustive},
              {"pass", r.pass}};
}

inline json to_json(const MonteCarloReport& r) {
  json moments = json::array();
  for (const auto& m : r.moments) moments.push_back({m.real(), m.imag()});
  return json{{"samples", r.samples},
              {"moments", moments},
              {"std_errors", r.std_errors}};
}

inline json to_json(const CMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qpi
