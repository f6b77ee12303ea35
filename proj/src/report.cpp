#include "gvc/report.hpp"

namespace gvc {

Json generators_json(const CohomologyPresentation& pres) {
  Json out = Json::array();
  for (const auto& g : pres.generators) {
    Json entry;
    entry["label"] = g.label;
    entry["degree"] = std::to_string(g.degree);
    if (const auto* w = std::get_if<LinearWeight>(&g.frobenius)) {
      entry["frobenius"] = {{"kind", "linear"}, {"weight", std::to_string(w->d)}};
    } else if (const auto* s = std::get_if<AbelianSlot>(&g.frobenius)) {
      Json f = {{"kind", "abelian"},
                {"node", s->node_path},
                {"slot", std::to_string(s->index)}};
      if (s->charpoly) f["charpoly"] = s->charpoly->str();
      entry["frobenius"] = f;
    } else {
      entry["frobenius"] = {{"kind", "unspecified"}};
    }
    out.push_back(entry);
  }
  return out;
}

Json poincare_json(const PoincarePolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs) out.push_back(c.get_str());
  return out;
}

Json rat_list_json(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json series_json(const RatSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

Json checks_json(const std::vector<CheckResult>& results) {
  Json out = Json::array();
  for (const auto& r : results)
    out.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return out;
}

}  // namespace gvc
