#include "jsonio.hpp"

#include <cmath>

namespace bunblocks::jsonio {

json character_json(const liecore::SL2Character& c) {
  json out = json::array();
  for (const auto& [w, mult] : c.mult())
    out.push_back(json::array({w, mult.str()}));
  return out;
}

json decomposition_json(const liecore::Decomposition& d) {
  json out = json::array();
  for (const auto& [w, mult] : d)
    out.push_back(json::array({w, mult.str()}));
  return out;
}

json alcove_json(const alcove::AlcoveClass& c, bool with_word) {
  json out;
  out["regular"] = c.regular;
  if (c.regular) {
    out["length"] = c.length;
    out["reduced"] = c.reduced;
  }
  if (with_word && c.regular)
    out["word"] = c.word;
  return out;
}

json matrix_json(const fusion::IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const Int& x : row)
      r.push_back(x.str());
    out.push_back(std::move(r));
  }
  return out;
}

json cohomology_json(const bwb::CohomologyAnswer& a) {
  json out;
  out["vanishes"] = a.vanishes;
  if (!a.vanishes) {
    out["degree"] = a.degree;
    out["dim"] = a.dim.str();
  }
  return out;
}

json graded_module_json(const coinv::GradedModule& m) {
  const long long top = m.top_degree();
  json pieces = json::array();
  for (long long d = 0; d <= top; ++d) {
    const auto piece = m.piece(d);
    json p;
    p["degree"] = d;
    p["filtration_index"] = top - d;
    p["character"] = character_json(piece);
    p["decomposition"] = decomposition_json(liecore::decompose(piece));
    pieces.push_back(std::move(p));
  }
  const auto total = m.total();
  json out;
  out["top_degree"] = top;
  out["pieces"] = std::move(pieces);
  out["total_character"] = character_json(total);
  out["total_dimension"] = total.dimension().str();
  return out;
}

json block_table_json(const sod::BlockTable& t) {
  json blocks = json::array();
  for (const auto& b : t.blocks) {
    json e;
    e["twist"] = b.twist;
    e["factor"] = sod::factor_name(b.factor);
    e["index"] = b.index;
    e["label"] = b.label();
    blocks.push_back(std::move(e));
  }
  json out;
  out["variant"] = sod::variant_name(t.variant);
  out["type"] = t.type.name();
  out["genus"] = t.genus;
  out["xi_parity"] = t.xi_parity;
  out["count"] = t.blocks.size();
  out["blocks"] = std::move(blocks);
  return out;
}

json hodge_json(const sod::HodgePolynomial& h) {
  json out = json::array();
  for (const auto& [pq, c] : h.poly().terms())
    out.push_back(json::array({pq.first, pq.second, c.str()}));
  return out;
}

json hh_json(const sod::HHPolynomial& h) {
  json coeffs = json::array();
  for (const auto& [e, c] : h.laurent().coeffs())
    coeffs.push_back(json::array({e, c.str()}));
  json out;
  out["str"] = h.str();
  out["coeffs"] = std::move(coeffs);
  out["total"] = h.total().str();
  return out;
}

json criteria_json(const std::vector<verify::CriterionResult>& rs) {
  json out = json::array();
  for (const auto& r : rs) {
    json e;
    e["id"] = r.id;
    e["description"] = r.description;
    e["pass"] = r.pass;
    e["detail"] = r.detail;
    e["ms"] = static_cast<long long>(std::llround(r.seconds * 1000.0));
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace bunblocks::jsonio
