#pragma once

#include <utility>
#include <vector>

#include "decor/transform.hpp"

namespace decor::oracle {

/// One decorated cell of a finite lattice: a central spin coupled to the
/// sigma sites listed in `sites` (one per leg of `couplings`).
struct DecoratedLatticeCell {
    SpinValue central = SpinValue::half();
    std::vector<int> sites;
    CouplingVector couplings;
    std::vector<double> s0_self_energy;
};

/// A finite decorated lattice: uniform sigma sites plus decorated cells that
/// may share sites. Everything is enumerated exhaustively, so the total state
/// space (2s+1)^sites * prod_cells (2S0+1) is capped at 10^7.
struct LatticeSpec {
    int sigma_site_count = 0;
    SpinValue sigma_spin = SpinValue::half();
    NodeConvention convention = NodeConvention::Physical;
    std::vector<DecoratedLatticeCell> cells;

    void validate() const;
};

/// The transformed counterpart: per-cell effective couplings over the same
/// sites; the all-zero index entry is the cell's constant term.
struct EffectiveLatticeCell {
    std::vector<int> sites;
    CouplingVector couplings;
};

struct EffectiveLatticeSpec {
    int sigma_site_count = 0;
    SpinValue sigma_spin = SpinValue::half();
    NodeConvention convention = NodeConvention::Physical;
    std::vector<EffectiveLatticeCell> cells;

    void validate() const;
};

/// ln of the full decorated partition function, summing every sigma
/// configuration and every central-spin state. Log-domain accumulation.
double enumerate_decorated_log_z(const LatticeSpec& spec);

/// ln of the effective partition function (sigma configurations only),
/// constants included.
double enumerate_effective_log_z(const EffectiveLatticeSpec& spec);

/// Expectation value under the decorated Boltzmann distribution of
///     prod (sigma_site)^power * prod_{cell ids} S0_cell.
double enumerate_correlator(const LatticeSpec& spec,
                            const std::vector<std::pair<int, int>>& sigma_site_powers,
                            const std::vector<int>& decorated_cell_ids = {});

/// Same under the effective distribution (no decorated spins).
double enumerate_effective_correlator(const EffectiveLatticeSpec& spec,
                                      const std::vector<std::pair<int, int>>& sigma_site_powers);

/// Applies the decoration transformation to every cell.
EffectiveLatticeSpec effective_from_decorated(const LatticeSpec& spec);

/// Mixed spin-(1/2,S) square lattice on a 2x2 torus of sigma sites: four
/// spin-1/2 sites, one central spin S per plaquette coupled to its four
/// corners by K, with single-ion anisotropy D*S0^2. Cells share sites, so
/// nothing factorizes.
LatticeSpec make_mixed_torus_2x2(SpinValue s, double coupling_k, double anisotropy_d);

/// Two m=2 cells decorating the bonds of a three-site chain.
LatticeSpec make_two_cell_chain(SpinValue central, const std::vector<double>& couplings_a,
                                const std::vector<double>& couplings_b,
                                NodeConvention conv = NodeConvention::Physical);

}  // namespace decor::oracle
