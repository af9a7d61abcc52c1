#include "decor/cell_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <stdexcept>

namespace decor::io {

namespace {

using nlohmann::json;

SpinValue spin_from(const json& doc, const char* key) {
    if (!doc.contains(key))
        throw std::invalid_argument(std::string("cell file: missing \"") + key + "\"");
    return SpinValue(doc.at(key).get<int>());
}

Legs legs_from(const json& doc) {
    if (!doc.contains("legs") || !doc.at("legs").is_array() || doc.at("legs").empty())
        throw std::invalid_argument("cell file: \"legs\" must be a non-empty array of 2s values");
    Legs legs;
    for (const json& v : doc.at("legs")) legs.push_back(SpinValue(v.get<int>()));
    return legs;
}

NodeConvention convention_from(const json& doc) {
    if (!doc.contains("convention")) return NodeConvention::Physical;
    return node_convention_from_string(doc.at("convention").get<std::string>());
}

CouplingVector couplings_from(const json& doc, Legs legs, NodeConvention conv) {
    CouplingVector couplings = CouplingVector::zeros(std::move(legs), conv);
    if (!doc.contains("couplings")) return couplings;
    std::set<std::size_t> seen;
    for (const json& entry : doc.at("couplings")) {
        MultiIndex idx = entry.at("index").get<MultiIndex>();
        const double value = entry.at("value").get<double>();
        const std::size_t pos = linear_index(couplings.legs, idx);
        if (!seen.insert(pos).second)
            throw std::invalid_argument("cell file: duplicate coupling index");
        couplings.entries[pos] = value;
    }
    return couplings;
}

std::vector<double> self_energy_from(const json& doc, SpinValue central) {
    if (!doc.contains("s0_self_energy")) return {};
    auto energy = doc.at("s0_self_energy").get<std::vector<double>>();
    if (energy.size() != static_cast<std::size_t>(central.moment_count()))
        throw std::invalid_argument("cell file: s0_self_energy needs one entry per S0 moment");
    return energy;
}

json index_value_list(const Legs& legs, const std::vector<double>& entries) {
    json list = json::array();
    for (std::size_t k = 0; k < entries.size(); ++k) {
        json item;
        item["index"] = components_at(legs, k);
        item["value"] = entries[k];
        list.push_back(std::move(item));
    }
    return list;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json doc;
    in >> doc;
    return doc;
}

}  // namespace

DecoratedCell parse_cell(const json& doc) {
    DecoratedCell cell{spin_from(doc, "central"), legs_from(doc), convention_from(doc),
                       CouplingVector{}, {}};
    cell.couplings = couplings_from(doc, cell.legs, cell.convention);
    cell.s0_self_energy = self_energy_from(doc, cell.central);
    cell.validate();
    return cell;
}

DecoratedCell load_cell(const std::string& path) { return parse_cell(load_json(path)); }

oracle::LatticeSpec parse_lattice(const json& doc) {
    oracle::LatticeSpec spec;
    if (!doc.contains("sigma_sites"))
        throw std::invalid_argument("lattice file: missing \"sigma_sites\"");
    spec.sigma_site_count = doc.at("sigma_sites").get<int>();
    spec.sigma_spin = doc.contains("sigma_spin") ? SpinValue(doc.at("sigma_spin").get<int>())
                                                 : SpinValue::half();
    spec.convention = convention_from(doc);
    if (!doc.contains("cells") || !doc.at("cells").is_array())
        throw std::invalid_argument("lattice file: missing \"cells\" array");
    for (const json& cell_doc : doc.at("cells")) {
        oracle::DecoratedLatticeCell cell;
        cell.central = spin_from(cell_doc, "central");
        cell.sites = cell_doc.at("sites").get<std::vector<int>>();
        Legs legs(cell.sites.size(), spec.sigma_spin);
        cell.couplings = couplings_from(cell_doc, legs, spec.convention);
        cell.s0_self_energy = self_energy_from(cell_doc, cell.central);
        spec.cells.push_back(std::move(cell));
    }
    spec.validate();
    return spec;
}

oracle::LatticeSpec load_lattice(const std::string& path) {
    return parse_lattice(load_json(path));
}

json couplings_to_json(const EffectiveCouplings& eff) {
    json doc;
    json legs = json::array();
    for (const SpinValue& s : eff.couplings.legs) legs.push_back(s.twice());
    doc["legs"] = std::move(legs);
    doc["convention"] = to_string(eff.couplings.convention);
    doc["constant"] = eff.constant();
    doc["couplings"] = index_value_list(eff.couplings.legs, eff.couplings.entries);
    return doc;
}

json alpha_to_json(const AlphaCoefficients& alpha) {
    json doc;
    json legs = json::array();
    for (const SpinValue& s : alpha.legs) legs.push_back(s.twice());
    doc["legs"] = std::move(legs);
    doc["convention"] = to_string(alpha.convention);
    doc["couplings"] = index_value_list(alpha.legs, alpha.entries);
    return doc;
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace decor::io
