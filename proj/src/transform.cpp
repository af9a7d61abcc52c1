#include "decor/transform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace decor {

namespace {

// exp(x) overflows double a bit above 709; keep a margin for the trace sum.
constexpr double kLogOverflowLimit = 700.0;

}  // namespace

void DecoratedCell::validate() const {
    couplings.validate();
    if (couplings.legs.size() != legs.size())
        throw std::invalid_argument("DecoratedCell: couplings do not match legs");
    for (std::size_t i = 0; i < legs.size(); ++i)
        if (couplings.legs[i] != legs[i])
            throw std::invalid_argument("DecoratedCell: couplings leg " + std::to_string(i) +
                                        " has different spin");
    if (couplings.convention != convention)
        throw std::invalid_argument("DecoratedCell: couplings use a different convention");
    if (!s0_self_energy.empty() &&
        s0_self_energy.size() != static_cast<std::size_t>(central.moment_count()))
        throw std::invalid_argument("DecoratedCell: self-energy needs one entry per S0 moment");
}

// sum_idx J_idx * monomial(config, idx) for every configuration.
static std::vector<double> contracted_couplings(const DecoratedCell& cell) {
    const std::size_t n = state_count(cell.legs);
    std::vector<double> out(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        const LegConfiguration config = components_at(cell.legs, c);
        double acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double j = cell.couplings.entries[k];
            if (j == 0.0) continue;
            acc += j * monomial(cell.legs, cell.convention, config, components_at(cell.legs, k));
        }
        out[c] = acc;
    }
    return out;
}

WeightTable boltzmann_weights(const DecoratedCell& cell) {
    cell.validate();
    const std::vector<double> mu = moments(cell.central, cell.convention);
    const std::vector<double> contracted = contracted_couplings(cell);

    WeightTable table;
    table.legs = cell.legs;
    table.convention = cell.convention;
    table.weights.reserve(contracted.size());

    for (double a : contracted) {
        // log-sum-exp over the S0 moments, shifted by the max exponent
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < mu.size(); ++k) {
            double e = mu[k] * a;
            if (!cell.s0_self_energy.empty()) e += cell.s0_self_energy[k];
            shift = std::max(shift, e);
        }
        double sum = 0.0;
        for (std::size_t k = 0; k < mu.size(); ++k) {
            double e = mu[k] * a;
            if (!cell.s0_self_energy.empty()) e += cell.s0_self_energy[k];
            sum += std::exp(e - shift);
        }
        const double log_w = shift + std::log(sum);
        if (std::abs(log_w) > kLogOverflowLimit)
            throw std::range_error("boltzmann_weights: |ln W| = " + std::to_string(log_w) +
                                   " exceeds double range");
        table.weights.push_back(std::exp(log_w));
    }
    return table;
}

std::vector<double> log_weight_vector(const WeightTable& table) {
    std::vector<double> out;
    out.reserve(table.weights.size());
    for (double w : table.weights) {
        if (!(w > 0.0))
            throw std::domain_error("log_weight_vector: non-positive weight " +
                                    std::to_string(w));
        out.push_back(std::log(w));
    }
    return out;
}

EffectiveCouplings effective_couplings_from_weights(const WeightTable& table) {
    const std::size_t n = state_count(table.legs);
    if (table.weights.size() != n)
        throw std::invalid_argument("effective couplings: weight count does not match legs");
    if (n > 1000)  // the materialized Kronecker inverse would exceed the entry cap
        throw std::length_error("effective couplings: state space too large");
    const std::vector<double> r = log_weight_vector(table);

    // Exact per-leg inverses; floating point enters only in the final
    // factor-wise matrix-vector multiplies.
    std::vector<Matrix> factors;
    factors.reserve(table.legs.size());
    for (const SpinValue& s : table.legs)
        factors.push_back(to_real(invert_exact(build_vandermonde(s, table.convention))));

    EffectiveCouplings eff;
    eff.couplings.legs = table.legs;
    eff.couplings.convention = table.convention;
    eff.couplings.entries = apply_kronecker(factors, r);
    return eff;
}

EffectiveCouplings effective_couplings(const DecoratedCell& cell) {
    return effective_couplings_from_weights(boltzmann_weights(cell));
}

EffectiveCouplings spin_half_effective_couplings(const WeightTable& table) {
    if (table.convention != NodeConvention::Normalized)
        throw std::invalid_argument("spin-1/2 closed form requires the normalized convention");
    for (const SpinValue& s : table.legs)
        if (s.twice() != 1)
            throw std::invalid_argument("spin-1/2 closed form requires all legs spin-1/2");

    const std::size_t m = table.legs.size();
    const std::size_t n = std::size_t(1) << m;
    if (table.weights.size() != n)
        throw std::invalid_argument("spin-1/2 closed form: weight count mismatch");

    const std::vector<double> logw = log_weight_vector(table);
    EffectiveCouplings eff;
    eff.couplings.legs = table.legs;
    eff.couplings.convention = table.convention;
    eff.couplings.entries.assign(n, 0.0);

    const double norm = 1.0 / static_cast<double>(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        double acc = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            // sigma_i = +-1, so the monomial is a sign: -1 per leg where the
            // exponent is 1 and the configuration is the low node.
            // Bit i of idx/c is leg (m-1-i); parity is what matters.
            const std::size_t low_with_exponent = idx & ~c;
            acc += (std::popcount(low_with_exponent) % 2 == 0) ? logw[c] : -logw[c];
        }
        eff.couplings.entries[idx] = acc * norm;
    }
    return eff;
}

WeightTable reconstruct_weights(const EffectiveCouplings& eff) {
    const CouplingVector& j = eff.couplings;
    j.validate();
    const std::size_t n = state_count(j.legs);

    WeightTable table;
    table.legs = j.legs;
    table.convention = j.convention;
    table.weights.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        const LegConfiguration config = components_at(j.legs, c);
        double h = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (j.entries[k] == 0.0) continue;
            h += j.entries[k] * monomial(j.legs, j.convention, config, components_at(j.legs, k));
        }
        table.weights.push_back(std::exp(h));
    }
    return table;
}

double partition_constant(const EffectiveCouplings& eff, int n_decorations) {
    if (n_decorations < 1)
        throw std::invalid_argument("partition_constant: need at least one decoration");
    return static_cast<double>(n_decorations) * eff.constant();
}

}  // namespace decor
