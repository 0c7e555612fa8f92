#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hilb/apolarity.hpp"
#include "hilb/corpus.hpp"
#include "hilb/criteria.hpp"
#include "hilb/graded_hom.hpp"
#include "hilb/hilbert.hpp"
#include "hilb/ideal.hpp"

namespace hilb {

// All readers throw InputError on malformed documents; all writers produce
// documents whose keys are stored sorted, so dump() output is deterministic.

// {"ring": {"variables": [...]}, "generators": ["...", ...]}
nlohmann::json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const nlohmann::json& doc);
Ideal ideal_from_json_text(const std::string& text);

// {"ring": {"variables": [...]}, "polynomial": "..."}
nlohmann::json polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& doc);
Polynomial polynomial_from_json_text(const std::string& text);

nlohmann::json table_to_json(const HilbertTable& table);
nlohmann::json report_to_json(const CheckReport& report);
nlohmann::json verdict_to_json(const SlipVerdict& verdict);
nlohmann::json hom_to_json(const HomComputation& hom);
nlohmann::json certificate_to_json(const RankCertificate& cert);
nlohmann::json verify_items_to_json(const std::vector<VerifyItem>& items);

// canonical serialization: two-space indent plus trailing newline
std::string json_text(const nlohmann::json& doc);

} // namespace hilb
