#include "bondrisk/registry.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "bondrisk/errors.hpp"

namespace bondrisk {

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* key, const std::string& context) {
    if (!obj.contains(key))
        throw ValidationError(context + ": missing field '" + key + "'");
    if (!obj.at(key).is_number())
        throw ValidationError(context + ": field '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

}  // namespace

const AmortizingBondSpec& BondRegistry::find(const std::string& label) const {
    const auto it = index_by_label.find(label);
    if (it == index_by_label.end())
        throw ValidationError("unknown bond label '" + label + "'");
    return bonds[it->second];
}

std::optional<double> BondRegistry::quoted_yield(const std::string& label) const {
    const auto it = quoted_ytm.find(label);
    if (it == quoted_ytm.end()) return std::nullopt;
    return it->second;
}

BondRegistry parse_bond_registry(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("registry is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ValidationError("registry must be a JSON array of bonds");

    BondRegistry registry;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& entry = doc[i];
        const std::string context = "registry entry " + std::to_string(i);
        if (!entry.is_object()) throw ValidationError(context + ": must be an object");
        if (!entry.contains("label") || !entry.at("label").is_string())
            throw ValidationError(context + ": missing string field 'label'");

        AmortizingBondSpec spec;
        spec.label = entry.at("label").get<std::string>();
        spec.outstanding_principal = require_number(entry, "outstanding_principal", context);
        spec.coupon_rate = require_number(entry, "coupon_rate", context);
        const double periods = require_number(entry, "periods_remaining", context);
        spec.periods_remaining = static_cast<int>(periods);
        if (static_cast<double>(spec.periods_remaining) != periods)
            throw ValidationError(context + ": periods_remaining must be an integer");
        validate(spec);

        if (registry.index_by_label.count(spec.label))
            throw ValidationError("duplicate bond label '" + spec.label + "'");
        if (entry.contains("quoted_ytm")) {
            if (!entry.at("quoted_ytm").is_number())
                throw ValidationError(context + ": field 'quoted_ytm' must be a number");
            const double quoted = entry.at("quoted_ytm").get<double>();
            if (!(quoted > -1.0))
                throw ValidationError(context + ": quoted_ytm must exceed -100%");
            registry.quoted_ytm[spec.label] = quoted;
        }
        registry.index_by_label[spec.label] = registry.bonds.size();
        registry.bonds.push_back(std::move(spec));
    }
    if (registry.bonds.empty()) throw ValidationError("registry contains no bonds");
    return registry;
}

BondRegistry load_bond_registry(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open registry '" + path.string() + "'");
    try {
        return parse_bond_registry(in);
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

}  // namespace bondrisk
