#include "hilb/json_io.hpp"

#include <utility>

#include "hilb/errors.hpp"

namespace hilb {

namespace {

nlohmann::json parse_document(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw InputError(std::string("invalid JSON: ") + ex.what());
    }
}

RingPtr ring_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("ring"))
        throw InputError("document must be an object with a \"ring\" field");
    const auto& ring = doc.at("ring");
    if (!ring.is_object() || !ring.contains("variables") || !ring.at("variables").is_array())
        throw InputError("\"ring\" must be an object with a \"variables\" array");
    std::vector<std::string> names;
    for (const auto& v : ring.at("variables")) {
        if (!v.is_string()) throw InputError("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    if (names.empty()) throw InputError("the ring needs at least one variable");
    return std::make_shared<const PolyRing>(std::move(names));
}

nlohmann::json ring_to_json(const PolyRing& ring) {
    return nlohmann::json{{"variables", ring.names()}};
}

} // namespace

nlohmann::json ideal_to_json(const Ideal& ideal) {
    std::vector<std::string> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.str());
    return nlohmann::json{{"ring", ring_to_json(*ideal.ring())}, {"generators", gens}};
}

Ideal ideal_from_json(const nlohmann::json& doc) {
    const RingPtr ring = ring_from_json(doc);
    if (!doc.contains("generators") || !doc.at("generators").is_array())
        throw InputError("ideal document needs a \"generators\" array");
    std::vector<Polynomial> gens;
    for (const auto& g : doc.at("generators")) {
        if (!g.is_string()) throw InputError("generators must be polynomial strings");
        gens.push_back(Polynomial::parse(ring, g.get<std::string>()));
    }
    return Ideal(ring, std::move(gens));
}

Ideal ideal_from_json_text(const std::string& text) {
    return ideal_from_json(parse_document(text));
}

nlohmann::json polynomial_to_json(const Polynomial& f) {
    return nlohmann::json{{"ring", ring_to_json(*f.ring())}, {"polynomial", f.str()}};
}

Polynomial polynomial_from_json(const nlohmann::json& doc) {
    const RingPtr ring = ring_from_json(doc);
    if (!doc.contains("polynomial") || !doc.at("polynomial").is_string())
        throw InputError("polynomial document needs a \"polynomial\" string");
    return Polynomial::parse(ring, doc.at("polynomial").get<std::string>());
}

Polynomial polynomial_from_json_text(const std::string& text) {
    return polynomial_from_json(parse_document(text));
}

nlohmann::json table_to_json(const HilbertTable& table) {
    nlohmann::json doc{{"values", table.values}};
    if (table.eventual_constant)
        doc["eventual_constant"] = *table.eventual_constant;
    else
        doc["eventual_constant"] = nullptr;
    return doc;
}

nlohmann::json report_to_json(const CheckReport& report) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : report.parameters) params[name] = value;
    return nlohmann::json{{"criterion", report.criterion},
                          {"rule", report.rule},
                          {"parameters", params},
                          {"observed", report.observed},
                          {"outcome", check_outcome_name(report.outcome)}};
}

nlohmann::json verdict_to_json(const SlipVerdict& verdict) {
    nlohmann::json evidence = nlohmann::json::array();
    for (const auto& r : verdict.evidence) evidence.push_back(report_to_json(r));
    return nlohmann::json{{"status", slip_status_name(verdict.status)},
                          {"evidence", evidence}};
}

nlohmann::json hom_to_json(const HomComputation& hom) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& [t, dim] : hom.trace) trace.push_back({t, dim});
    return nlohmann::json{{"dimension", hom.dimension},
                          {"degree", hom.degree},
                          {"truncation", hom.truncation},
                          {"stabilized", hom.stabilized},
                          {"trace", trace}};
}

nlohmann::json certificate_to_json(const RankCertificate& cert) {
    return nlohmann::json{{"ideal", ideal_to_json(cert.ideal)},
                          {"target", cert.target.str()},
                          {"r", cert.r},
                          {"apolar", cert.apolar},
                          {"constant_value_matches", cert.constant_value_matches},
                          {"degree_piece_saturated", cert.degree_piece_saturated},
                          {"valid", cert.valid()}};
}

nlohmann::json verify_items_to_json(const std::vector<VerifyItem>& items) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& item : items)
        rows.push_back(nlohmann::json{{"name", item.name},
                                      {"expected", item.expected},
                                      {"observed", item.observed},
                                      {"pass", item.pass}});
    return nlohmann::json{{"items", rows}, {"all_pass", all_pass(items)}};
}

std::string json_text(const nlohmann::json& doc) {
    return doc.dump(2) + "\n";
}

} // namespace hilb
