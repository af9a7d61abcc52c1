#include "decor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace decor::oracle {

namespace {

constexpr double kStateSpaceCap = 1e7;

void check_sites(int site_count, const std::vector<int>& sites, std::size_t legs) {
    if (sites.size() != legs)
        throw std::invalid_argument("lattice cell: site count does not match coupling legs");
    for (int id : sites)
        if (id < 0 || id >= site_count)
            throw std::invalid_argument("lattice cell: site id " + std::to_string(id) +
                                        " does not exist");
}

/// Odometer over sigma configurations; calls fn(config ordinals).
template <typename Fn>
void for_each_config(int site_count, int radix, Fn&& fn) {
    std::vector<int> config(static_cast<std::size_t>(site_count), 0);
    for (;;) {
        fn(config);
        int i = site_count - 1;
        while (i >= 0 && ++config[static_cast<std::size_t>(i)] == radix) {
            config[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
}

struct CellTables {
    // Indexed by the cell's own leg configuration (linear_index order).
    std::vector<double> log_w;  // ln tr_{S0} e^H
    std::vector<double> ratio;  // (tr S0 e^H) / (tr e^H), only if requested
};

/// Direct per-cell traces; deliberately separate from the transform module so
/// the two sides of every identity are computed by different code.
CellTables build_cell_tables(const DecoratedLatticeCell& cell, NodeConvention conv,
                             bool with_ratio) {
    const Legs& legs = cell.couplings.legs;
    const std::vector<double> mu = moments(cell.central, conv);
    const std::size_t n = state_count(legs);

    CellTables t;
    t.log_w.resize(n);
    if (with_ratio) t.ratio.resize(n);

    for (std::size_t c = 0; c < n; ++c) {
        const LegConfiguration config = components_at(legs, c);
        double a = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double j = cell.couplings.entries[k];
            if (j == 0.0) continue;
            a += j * monomial(legs, conv, config, components_at(legs, k));
        }
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < mu.size(); ++k) {
            double e = mu[k] * a;
            if (!cell.s0_self_energy.empty()) e += cell.s0_self_energy[k];
            shift = std::max(shift, e);
        }
        double den = 0.0, num = 0.0;
        for (std::size_t k = 0; k < mu.size(); ++k) {
            double e = mu[k] * a;
            if (!cell.s0_self_energy.empty()) e += cell.s0_self_energy[k];
            const double w = std::exp(e - shift);
            den += w;
            num += mu[k] * w;
        }
        t.log_w[c] = shift + std::log(den);
        if (with_ratio) t.ratio[c] = num / den;
    }
    return t;
}

std::size_t cell_config_index(const DecoratedLatticeCell& cell, const std::vector<int>& config) {
    std::vector<int> local(cell.sites.size());
    for (std::size_t i = 0; i < cell.sites.size(); ++i)
        local[i] = config[static_cast<std::size_t>(cell.sites[i])];
    return linear_index(cell.couplings.legs, local);
}

std::size_t cell_config_index(const EffectiveLatticeCell& cell, const std::vector<int>& config) {
    std::vector<int> local(cell.sites.size());
    for (std::size_t i = 0; i < cell.sites.size(); ++i)
        local[i] = config[static_cast<std::size_t>(cell.sites[i])];
    return linear_index(cell.couplings.legs, local);
}

double log_sum_exp(const std::vector<double>& xs) {
    double shift = -std::numeric_limits<double>::infinity();
    for (double x : xs) shift = std::max(shift, x);
    double sum = 0.0;
    for (double x : xs) sum += std::exp(x - shift);
    return shift + std::log(sum);
}

}  // namespace

void LatticeSpec::validate() const {
    if (sigma_site_count < 1)
        throw std::invalid_argument("LatticeSpec: need at least one sigma site");
    double states = std::pow(static_cast<double>(sigma_spin.moment_count()), sigma_site_count);
    for (const DecoratedLatticeCell& cell : cells) {
        cell.couplings.validate();
        check_sites(sigma_site_count, cell.sites, cell.couplings.legs.size());
        for (const SpinValue& s : cell.couplings.legs)
            if (s != sigma_spin)
                throw std::invalid_argument("LatticeSpec: cell leg spin differs from sigma spin");
        if (cell.couplings.convention != convention)
            throw std::invalid_argument("LatticeSpec: cell convention differs from lattice");
        if (!cell.s0_self_energy.empty() &&
            cell.s0_self_energy.size() != static_cast<std::size_t>(cell.central.moment_count()))
            throw std::invalid_argument("LatticeSpec: self-energy length mismatch");
        states *= cell.central.moment_count();
    }
    if (states > kStateSpaceCap)
        throw std::length_error("LatticeSpec: state space " + std::to_string(states) +
                                " exceeds enumeration cap 1e7");
}

void EffectiveLatticeSpec::validate() const {
    if (sigma_site_count < 1)
        throw std::invalid_argument("EffectiveLatticeSpec: need at least one sigma site");
    double states = std::pow(static_cast<double>(sigma_spin.moment_count()), sigma_site_count);
    if (states > kStateSpaceCap)
        throw std::length_error("EffectiveLatticeSpec: state space exceeds enumeration cap");
    for (const EffectiveLatticeCell& cell : cells) {
        cell.couplings.validate();
        check_sites(sigma_site_count, cell.sites, cell.couplings.legs.size());
        if (cell.couplings.convention != convention)
            throw std::invalid_argument("EffectiveLatticeSpec: cell convention differs");
    }
}

double enumerate_decorated_log_z(const LatticeSpec& spec) {
    spec.validate();
    std::vector<CellTables> tables;
    tables.reserve(spec.cells.size());
    for (const DecoratedLatticeCell& cell : spec.cells)
        tables.push_back(build_cell_tables(cell, spec.convention, false));

    std::vector<double> log_terms;
    for_each_config(spec.sigma_site_count, spec.sigma_spin.moment_count(),
                    [&](const std::vector<int>& config) {
                        double acc = 0.0;
                        for (std::size_t c = 0; c < spec.cells.size(); ++c)
                            acc += tables[c].log_w[cell_config_index(spec.cells[c], config)];
                        log_terms.push_back(acc);
                    });
    return log_sum_exp(log_terms);
}

double enumerate_effective_log_z(const EffectiveLatticeSpec& spec) {
    spec.validate();
    std::vector<double> log_terms;
    for_each_config(spec.sigma_site_count, spec.sigma_spin.moment_count(),
                    [&](const std::vector<int>& config) {
                        double acc = 0.0;
                        for (const EffectiveLatticeCell& cell : spec.cells) {
                            const LegConfiguration local =
                                components_at(cell.couplings.legs, cell_config_index(cell, config));
                            for (std::size_t k = 0; k < cell.couplings.entries.size(); ++k) {
                                const double j = cell.couplings.entries[k];
                                if (j == 0.0) continue;
                                acc += j * monomial(cell.couplings.legs, spec.convention, local,
                                                    components_at(cell.couplings.legs, k));
                            }
                        }
                        log_terms.push_back(acc);
                    });
    return log_sum_exp(log_terms);
}

double enumerate_correlator(const LatticeSpec& spec,
                            const std::vector<std::pair<int, int>>& sigma_site_powers,
                            const std::vector<int>& decorated_cell_ids) {
    spec.validate();
    for (const auto& [site, power] : sigma_site_powers) {
        if (site < 0 || site >= spec.sigma_site_count)
            throw std::invalid_argument("enumerate_correlator: bad site id");
        if (power < 0) throw std::invalid_argument("enumerate_correlator: negative power");
    }
    std::vector<bool> wants_ratio(spec.cells.size(), false);
    for (int id : decorated_cell_ids) {
        if (id < 0 || id >= static_cast<int>(spec.cells.size()))
            throw std::invalid_argument("enumerate_correlator: bad cell id");
        wants_ratio[static_cast<std::size_t>(id)] = true;
    }

    std::vector<CellTables> tables;
    tables.reserve(spec.cells.size());
    for (std::size_t c = 0; c < spec.cells.size(); ++c)
        tables.push_back(build_cell_tables(spec.cells[c], spec.convention, wants_ratio[c]));

    const std::vector<double> node = moments(spec.sigma_spin, spec.convention);

    // First pass for the shift keeps the weighted sums in range.
    std::vector<double> log_w_all;
    for_each_config(spec.sigma_site_count, spec.sigma_spin.moment_count(),
                    [&](const std::vector<int>& config) {
                        double acc = 0.0;
                        for (std::size_t c = 0; c < spec.cells.size(); ++c)
                            acc += tables[c].log_w[cell_config_index(spec.cells[c], config)];
                        log_w_all.push_back(acc);
                    });
    const double shift = *std::max_element(log_w_all.begin(), log_w_all.end());

    double numerator = 0.0, denominator = 0.0;
    std::size_t flat = 0;
    for_each_config(
        spec.sigma_site_count, spec.sigma_spin.moment_count(),
        [&](const std::vector<int>& config) {
            const double w = std::exp(log_w_all[flat++] - shift);
            double factor = 1.0;
            for (const auto& [site, power] : sigma_site_powers)
                for (int p = 0; p < power; ++p)
                    factor *= node[static_cast<std::size_t>(config[static_cast<std::size_t>(site)])];
            for (int id : decorated_cell_ids) {
                const auto& cell = spec.cells[static_cast<std::size_t>(id)];
                factor *= tables[static_cast<std::size_t>(id)]
                              .ratio[cell_config_index(cell, config)];
            }
            numerator += factor * w;
            denominator += w;
        });
    return numerator / denominator;
}

double enumerate_effective_correlator(const EffectiveLatticeSpec& spec,
                                      const std::vector<std::pair<int, int>>& sigma_site_powers) {
    spec.validate();
    for (const auto& [site, power] : sigma_site_powers) {
        if (site < 0 || site >= spec.sigma_site_count)
            throw std::invalid_argument("enumerate_effective_correlator: bad site id");
        if (power < 0)
            throw std::invalid_argument("enumerate_effective_correlator: negative power");
    }
    const std::vector<double> node = moments(spec.sigma_spin, spec.convention);

    std::vector<double> energies;
    for_each_config(spec.sigma_site_count, spec.sigma_spin.moment_count(),
                    [&](const std::vector<int>& config) {
                        double acc = 0.0;
                        for (const EffectiveLatticeCell& cell : spec.cells) {
                            const LegConfiguration local =
                                components_at(cell.couplings.legs, cell_config_index(cell, config));
                            for (std::size_t k = 0; k < cell.couplings.entries.size(); ++k) {
                                const double j = cell.couplings.entries[k];
                                if (j == 0.0) continue;
                                acc += j * monomial(cell.couplings.legs, spec.convention, local,
                                                    components_at(cell.couplings.legs, k));
                            }
                        }
                        energies.push_back(acc);
                    });
    const double shift = *std::max_element(energies.begin(), energies.end());

    double numerator = 0.0, denominator = 0.0;
    std::size_t flat = 0;
    for_each_config(
        spec.sigma_site_count, spec.sigma_spin.moment_count(),
        [&](const std::vector<int>& config) {
            const double w = std::exp(energies[flat++] - shift);
            double factor = 1.0;
            for (const auto& [site, power] : sigma_site_powers)
                for (int p = 0; p < power; ++p)
                    factor *= node[static_cast<std::size_t>(config[static_cast<std::size_t>(site)])];
            numerator += factor * w;
            denominator += w;
        });
    return numerator / denominator;
}

EffectiveLatticeSpec effective_from_decorated(const LatticeSpec& spec) {
    spec.validate();
    EffectiveLatticeSpec out;
    out.sigma_site_count = spec.sigma_site_count;
    out.sigma_spin = spec.sigma_spin;
    out.convention = spec.convention;
    out.cells.reserve(spec.cells.size());
    for (const DecoratedLatticeCell& cell : spec.cells) {
        DecoratedCell unit{cell.central, cell.couplings.legs, spec.convention, cell.couplings,
                           cell.s0_self_energy};
        EffectiveLatticeCell eff;
        eff.sites = cell.sites;
        eff.couplings = effective_couplings(unit).couplings;
        out.cells.push_back(std::move(eff));
    }
    return out;
}

LatticeSpec make_mixed_torus_2x2(SpinValue s, double coupling_k, double anisotropy_d) {
    LatticeSpec spec;
    spec.sigma_site_count = 4;
    spec.sigma_spin = SpinValue::half();
    spec.convention = NodeConvention::Physical;

    const std::vector<double> mu = moments(s, NodeConvention::Physical);
    std::vector<double> self_energy;
    self_energy.reserve(mu.size());
    for (double m : mu) self_energy.push_back(anisotropy_d * m * m);

    const Legs legs(4, SpinValue::half());
    auto site = [](int x, int y) { return 2 * ((y % 2 + 2) % 2) + ((x % 2 + 2) % 2); };

    for (int y = 0; y < 2; ++y)
        for (int x = 0; x < 2; ++x) {
            DecoratedLatticeCell cell;
            cell.central = s;
            cell.sites = {site(x, y), site(x + 1, y), site(x, y + 1), site(x + 1, y + 1)};
            cell.couplings = CouplingVector::zeros(legs, spec.convention);
            for (std::size_t leg = 0; leg < 4; ++leg) {
                MultiIndex idx(4, 0);
                idx[leg] = 1;
                cell.couplings.set(idx, coupling_k);
            }
            cell.s0_self_energy = self_energy;
            spec.cells.push_back(std::move(cell));
        }
    return spec;
}

LatticeSpec make_two_cell_chain(SpinValue central, const std::vector<double>& couplings_a,
                                const std::vector<double>& couplings_b, NodeConvention conv) {
    const Legs legs(2, SpinValue::half());
    if (couplings_a.size() != state_count(legs) || couplings_b.size() != state_count(legs))
        throw std::invalid_argument("make_two_cell_chain: need 4 couplings per cell");

    LatticeSpec spec;
    spec.sigma_site_count = 3;
    spec.sigma_spin = SpinValue::half();
    spec.convention = conv;

    DecoratedLatticeCell a;
    a.central = central;
    a.sites = {0, 1};
    a.couplings = CouplingVector{legs, conv, couplings_a};
    spec.cells.push_back(a);

    DecoratedLatticeCell b;
    b.central = central;
    b.sites = {1, 2};
    b.couplings = CouplingVector{legs, conv, couplings_b};
    spec.cells.push_back(b);
    return spec;
}

}  // namespace decor::oracle
