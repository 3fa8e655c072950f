#include "ipr/report_json.hpp"

#include <fstream>
#include <stdexcept>

namespace ipr {

namespace {

Json big(const BigInt& v) { return v.get_str(); }

BigInt parse_big(const Json& j) {
    if (j.is_number_integer())
        return BigInt(std::to_string(j.get<long long>()));
    const auto s = j.get<std::string>();
    try {
        return BigInt(s, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("expected a decimal integer, got '" + s + "'");
    }
}

Json optional_u64(const std::optional<std::uint64_t>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const SearchOutcome& outcome) {
    Json j;
    if (const auto* w = std::get_if<Witness>(&outcome)) {
        j["outcome"] = "witness";
        Json assignment = Json::array();
        for (const auto& [label, value] : w->assignment)
            assignment.push_back({{"variable", label}, {"value", value}});
        j["assignment"] = std::move(assignment);
        j["image"] = w->image;
        j["colour"] = w->colour.index;
        return j;
    }
    const auto& e = std::get<Exhausted>(outcome);
    j["outcome"] = "exhausted";
    j["y_bound"] = e.y_bound;
    j["var_bound"] = e.var_bound;
    j["image_max"] = optional_u64(e.image_max);
    Json div = Json::array();
    for (const auto& d : e.divisibility)
        div.push_back(big(d));
    j["divisibility"] = std::move(div);
    return j;
}

SearchOutcome search_outcome_from_json(const Json& j) {
    const auto kind = j.at("outcome").get<std::string>();
    if (kind == "witness") {
        Witness w;
        for (const auto& a : j.at("assignment"))
            w.assignment.emplace_back(a.at("variable").get<std::string>(), a.at("value").get<std::int64_t>());
        w.image = j.at("image").get<std::vector<std::int64_t>>();
        w.colour = Colour{j.at("colour").get<std::uint32_t>()};
        return w;
    }
    if (kind == "exhausted") {
        Exhausted e;
        e.y_bound = j.at("y_bound").get<std::uint64_t>();
        e.var_bound = j.at("var_bound").get<std::uint64_t>();
        if (!j.at("image_max").is_null())
            e.image_max = j.at("image_max").get<std::uint64_t>();
        for (const auto& d : j.at("divisibility"))
            e.divisibility.push_back(parse_big(d));
        return e;
    }
    throw std::invalid_argument("unknown search outcome '" + kind + "'");
}

Json to_json(const ObstructionReport& report) {
    Json j;
    j["passed"] = report.passed();
    j["range"] = report.entries.size();
    j["first_failure"] = report.first_failure() == 0 ? Json(nullptr) : Json(report.first_failure());
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back({{"n", e.n},
                           {"coefficient", big(e.coefficient)},
                           {"congruence_holds", e.congruence_holds},
                           {"class_opposite", e.class_opposite},
                           {"min_expression_value", big(e.min_expression_value)},
                           {"exception_cleared", e.exception_cleared}});
    }
    j["entries"] = std::move(entries);
    return j;
}

ObstructionReport obstruction_report_from_json(const Json& j) {
    ObstructionReport report;
    for (const auto& e : j.at("entries")) {
        ObstructionEntry entry;
        entry.n = e.at("n").get<std::uint64_t>();
        entry.coefficient = parse_big(e.at("coefficient"));
        entry.congruence_holds = e.at("congruence_holds").get<bool>();
        entry.class_opposite = e.at("class_opposite").get<bool>();
        entry.min_expression_value = parse_big(e.at("min_expression_value"));
        entry.exception_cleared = e.at("exception_cleared").get<bool>();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

Json to_json(const std::optional<ColumnsCertificate>& cert) {
    Json j;
    j["satisfied"] = cert.has_value();
    if (!cert)
        return j;
    Json blocks = Json::array();
    for (const auto& b : cert->blocks) {
        Json combo = Json::array();
        for (const auto& [col, coeff] : b.combination)
            combo.push_back({{"column", col}, {"coefficient", coeff.to_string()}});
        blocks.push_back({{"columns", b.columns}, {"combination", std::move(combo)}});
    }
    j["blocks"] = std::move(blocks);
    return j;
}

std::optional<ColumnsCertificate> columns_certificate_from_json(const Json& j) {
    if (!j.at("satisfied").get<bool>())
        return std::nullopt;
    ColumnsCertificate cert;
    for (const auto& b : j.at("blocks")) {
        ColumnBlock block;
        block.columns = b.at("columns").get<std::vector<std::size_t>>();
        for (const auto& c : b.at("combination"))
            block.combination.emplace_back(c.at("column").get<std::size_t>(),
                                           Rational::parse(c.at("coefficient").get<std::string>()));
        cert.blocks.push_back(std::move(block));
    }
    return cert;
}

Json sidecar_json(const SystemInstance& system) {
    Json j;
    j["kind"] = std::string(to_string(system.kind));
    j["depth"] = system.depth;
    Json coeffs = Json::array();
    for (const auto& c : system.coefficients.values)
        coeffs.push_back(big(c));
    j["coefficients"] = std::move(coeffs);
    j["variable_labels"] = system.variable_labels;
    Json div = Json::array();
    for (const auto& d : system.divisibility)
        div.push_back(big(d));
    j["divisibility"] = std::move(div);
    return j;
}

SystemInstance system_from_sidecar(const Json& j) {
    CoefficientSequence coeffs;
    for (const auto& c : j.at("coefficients"))
        coeffs.values.push_back(parse_big(c));
    SystemInstance sys = build_system(parse_system_kind(j.at("kind").get<std::string>()),
                                      j.at("depth").get<std::size_t>(), coeffs);
    if (j.at("variable_labels").get<std::vector<std::string>>() != sys.variable_labels)
        throw std::invalid_argument("sidecar variable labels do not match the system");
    std::vector<BigInt> div;
    for (const auto& d : j.at("divisibility"))
        div.push_back(parse_big(d));
    if (div != sys.divisibility)
        throw std::invalid_argument("sidecar divisibility does not match the system");
    return sys;
}

Json to_json(const ColouringSpec& spec) {
    Json j;
    if (std::holds_alternative<Staged2Adic>(spec)) {
        j["type"] = "staged";
        return j;
    }
    const auto& t = std::get<ResidueTable>(spec);
    j["modulus"] = t.modulus();
    j["table"] = t.table();
    Json ex = Json::array();
    for (const auto& [value, colour] : t.exceptions())
        ex.push_back(Json::array({value, colour}));
    j["exceptions"] = std::move(ex);
    return j;
}

ColouringSpec colouring_spec_from_json(const Json& j) {
    try {
        if (j.contains("type") && j.at("type") == "staged")
            return Staged2Adic{};
        std::vector<std::pair<std::uint64_t, std::uint32_t>> ex;
        if (j.contains("exceptions"))
            for (const auto& e : j.at("exceptions"))
                ex.emplace_back(e.at(0).get<std::uint64_t>(), e.at(1).get<std::uint32_t>());
        return ResidueTable(j.at("modulus").get<std::uint64_t>(),
                            j.at("table").get<std::vector<std::uint32_t>>(), std::move(ex));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed colouring spec: ") + e.what());
    }
}

ColouringSpec read_colouring_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open colouring spec '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("colouring spec '" + path + "': " + e.what());
    }
    return colouring_spec_from_json(j);
}

} // namespace ipr
