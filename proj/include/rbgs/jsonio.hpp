#pragma once

#include <json.hpp>

#include "rbgs/gsb.hpp"
#include "rbgs/relations.hpp"

namespace rbgs {

using Json = nlohmann::json;

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);
Json coeff_to_json(const Coeff& c);
Coeff coeff_from_json(const Json& j);
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json rule_to_json(const Rule& r);
Rule rule_from_json(const Json& j);
Json ruleset_to_json(const RuleSet& rs);
RuleSet ruleset_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert, const RuleSet& rules);
Json verify_report_to_json(const VerifyReport& rep);
Json dim_report_to_json(const DimReport& rep);

} // namespace rbgs
