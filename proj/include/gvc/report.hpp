#pragma once

#include <json.hpp>

#include "gvc/presentation.hpp"
#include "gvc/verification.hpp"

namespace gvc {

using Json = nlohmann::json;

// Every numeric value serializes as a decimal string ("p" or "p/q"),
// never as a JSON number; see docs/report-schema.md.
Json generators_json(const CohomologyPresentation& pres);
Json poincare_json(const PoincarePolynomial& p);
Json rat_list_json(const std::vector<Rat>& values);
Json series_json(const RatSeries& s);
Json checks_json(const std::vector<CheckResult>& results);

}  // namespace gvc
