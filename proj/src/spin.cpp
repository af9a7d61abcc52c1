#include "decor/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace decor {

SpinValue::SpinValue(int twice_spin) : twice_(twice_spin) {
    if (twice_spin < 1)
        throw std::invalid_argument("SpinValue: twice_spin must be >= 1, got " +
                                    std::to_string(twice_spin));
}

std::string to_string(NodeConvention conv) {
    return conv == NodeConvention::Physical ? "physical" : "normalized";
}

NodeConvention node_convention_from_string(const std::string& name) {
    if (name == "physical") return NodeConvention::Physical;
    if (name == "normalized") return NodeConvention::Normalized;
    throw std::invalid_argument("unknown node convention \"" + name +
                                "\" (expected physical|normalized)");
}

Rational moment_exact(SpinValue s, NodeConvention conv, int ordinal) {
    if (ordinal < 0 || ordinal >= s.moment_count())
        throw std::out_of_range("moment ordinal out of range");
    // x = -s - 1 + j with j = ordinal + 1, i.e. (2*ordinal - 2s) / 2.
    const int two_x = 2 * ordinal - s.twice();
    if (conv == NodeConvention::Physical) return Rational(two_x, 2);
    return Rational(two_x, s.twice());
}

std::vector<double> moments(SpinValue s, NodeConvention conv) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(s.moment_count()));
    for (int j = 0; j < s.moment_count(); ++j)
        out.push_back(moment_exact(s, conv, j).to_double());
    return out;
}

std::size_t state_count(const Legs& legs) {
    std::size_t n = 1;
    for (const SpinValue& s : legs) n *= static_cast<std::size_t>(s.moment_count());
    return n;
}

std::size_t linear_index(const Legs& legs, const std::vector<int>& components) {
    if (components.size() != legs.size())
        throw std::out_of_range("linear_index: component count does not match legs");
    std::size_t pos = 0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const int radix = legs[i].moment_count();
        if (components[i] < 0 || components[i] >= radix)
            throw std::out_of_range("linear_index: component " + std::to_string(i) +
                                    " out of range");
        pos = pos * static_cast<std::size_t>(radix) + static_cast<std::size_t>(components[i]);
    }
    return pos;
}

std::vector<int> components_at(const Legs& legs, std::size_t position) {
    std::vector<int> out(legs.size(), 0);
    for (std::size_t i = legs.size(); i-- > 0;) {
        const std::size_t radix = static_cast<std::size_t>(legs[i].moment_count());
        out[i] = static_cast<int>(position % radix);
        position /= radix;
    }
    if (position != 0) throw std::out_of_range("components_at: position out of range");
    return out;
}

double monomial(const Legs& legs, NodeConvention conv, const LegConfiguration& config,
                const MultiIndex& idx) {
    if (config.size() != legs.size() || idx.size() != legs.size())
        throw std::out_of_range("monomial: leg lists do not match");
    double value = 1.0;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        const double x = moment_exact(legs[i], conv, config[i]).to_double();
        for (int n = 0; n < idx[i]; ++n) value *= x;  // 0^0 stays 1
    }
    return value;
}

CouplingVector CouplingVector::zeros(Legs legs, NodeConvention conv) {
    CouplingVector out;
    out.convention = conv;
    out.entries.assign(state_count(legs), 0.0);
    out.legs = std::move(legs);
    return out;
}

double CouplingVector::at(const MultiIndex& idx) const {
    return entries.at(linear_index(legs, idx));
}

void CouplingVector::set(const MultiIndex& idx, double value) {
    entries.at(linear_index(legs, idx)) = value;
}

void CouplingVector::validate() const {
    if (legs.empty()) throw std::invalid_argument("CouplingVector: needs at least one leg");
    if (entries.size() != state_count(legs))
        throw std::invalid_argument("CouplingVector: entry count " +
                                    std::to_string(entries.size()) + " != expected " +
                                    std::to_string(state_count(legs)));
    for (double v : entries)
        if (!std::isfinite(v))
            throw std::invalid_argument("CouplingVector: non-finite entry");
}

}  // namespace decor
