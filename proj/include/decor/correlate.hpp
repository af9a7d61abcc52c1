#pragma once

#include <map>
#include <vector>

#include "decor/transform.hpp"

namespace decor {

/// Coefficients of the expansion of the partial sum
///     C(config) = sum_{mu} mu * exp(mu * A(config) + E(mu))
/// in leg monomials: C(config) = sum_idx alpha_idx * monomial(config, idx).
struct AlphaCoefficients {
    Legs legs;
    NodeConvention convention = NodeConvention::Physical;
    std::vector<double> entries;

    double at(const MultiIndex& idx) const { return entries.at(linear_index(legs, idx)); }
};

/// C(config) per leg configuration. Unlike a weight it may be negative or
/// zero (it vanishes identically when H is even in S0).
std::vector<double> correlation_vector(const DecoratedCell& cell);

/// alpha = (V~^(s1) (x) ... (x) V~^(sm)) C.
AlphaCoefficients alpha_coefficients(const DecoratedCell& cell);

/// Contracts alpha with supplied monomial expectation values:
///     <S0 * f(sigma)> = sum_idx alpha_idx * E_idx.
///
/// E_idx must be the expectation of f(sigma) * prod_i sigma_i^{n_i} taken
/// with THIS cell's weight factor removed from the lattice measure but still
/// normalized by the full partition function, i.e.
///     E_idx = (1/Z) sum_sigma f * prod sigma^n * prod_{c' != cell} W_c'.
/// (For a single isolated cell that is the flat configuration sum over Z.)
/// Equivalently: compute the expectation on the effective lattice with this
/// cell's couplings zeroed and scale by Z_without/Z. The alpha expansion of C
/// then reproduces the decorated correlator exactly.
///
/// Throws std::invalid_argument when a coefficient with |alpha| > zero_tol
/// has no supplied expectation value.
double decorated_correlator(const AlphaCoefficients& alpha,
                            const std::map<MultiIndex, double>& effective_correlators,
                            double zero_tol = 1e-12);

}  // namespace decor
