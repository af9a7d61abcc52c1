#pragma once

#include <vector>

#include "decor/spin.hpp"
#include "decor/vandermonde.hpp"

namespace decor {

/// A central spin S0 coupled to m peripheral spins ("legs").
///
/// The cell Hamiltonian, in beta units, is
///     H(S0, {sigma}) = sum_idx J_idx * S0 * prod_i sigma_i^{n_i}  + E(S0),
/// where J is `couplings` (note the all-zero multi-index multiplies S0, a
/// field on the central spin, not a constant) and E is the optional
/// per-moment self-energy of S0 (e.g. single-ion anisotropy D*S0^2), listed
/// in ascending moment order. The node convention applies to the central
/// spin's moments as well as to the legs.
struct DecoratedCell {
    SpinValue central;
    Legs legs;
    NodeConvention convention = NodeConvention::Physical;
    CouplingVector couplings;
    std::vector<double> s0_self_energy;  // empty or one entry per S0 moment

    void validate() const;
};

/// Associated Boltzmann weights W(config) = tr_{S0} e^{H}, one strictly
/// positive value per leg configuration, in linear_index order.
struct WeightTable {
    Legs legs;
    NodeConvention convention = NodeConvention::Physical;
    std::vector<double> weights;
};

/// Effective couplings J~ of the undecorated cell Hamiltonian
///     H~({sigma}) = sum_idx J~_idx * prod_i sigma_i^{n_i};
/// the all-zero index is the constant term.
struct EffectiveCouplings {
    CouplingVector couplings;

    double constant() const { return couplings.entries.front(); }
};

/// Traces out the central spin. Log-domain, max-shifted; throws
/// std::range_error if a weight would still overflow double range.
WeightTable boltzmann_weights(const DecoratedCell& cell);

/// Elementwise natural log of a weight table. Throws std::domain_error on a
/// non-positive weight (cannot arise from boltzmann_weights; guarded anyway).
std::vector<double> log_weight_vector(const WeightTable& table);

/// Solves (V^(s1) (x) ... (x) V^(sm)) J~ = ln W for J~. The Vandermonde
/// inverses are exact rationals, converted to floating point only for the
/// final matrix-vector multiply.
EffectiveCouplings effective_couplings_from_weights(const WeightTable& table);

/// effective_couplings_from_weights(boltzmann_weights(cell)).
EffectiveCouplings effective_couplings(const DecoratedCell& cell);

/// Closed form for all-spin-1/2 normalized legs (sigma = +-1):
///     J~_n = 2^-m  sum_config (prod_i sigma_i^{n_i}) ln W(config).
/// Throws std::invalid_argument for other legs or conventions.
EffectiveCouplings spin_half_effective_couplings(const WeightTable& table);

/// W(config) = exp(sum_idx J~_idx * monomial(config, idx)); inverse of
/// effective_couplings_from_weights up to roundoff.
WeightTable reconstruct_weights(const EffectiveCouplings& eff);

/// N_d * J~_{0...0}: log prefactor relating the decorated partition function
/// to the effective one over n_decorations identical cells.
double partition_constant(const EffectiveCouplings& eff, int n_decorations);

}  // namespace decor
