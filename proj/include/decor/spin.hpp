#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "decor/rational.hpp"

namespace decor {

/// A classical spin quantum number, stored as twice its value so that
/// half-odd spins stay exact (s = 1/2 <-> 1, s = 1 <-> 2, ...).
class SpinValue {
public:
    explicit SpinValue(int twice_spin);

    int twice() const { return twice_; }
    /// Number of magnetic moments, 2s + 1.
    int moment_count() const { return twice_ + 1; }
    bool is_half_odd() const { return twice_ % 2 != 0; }
    double value() const { return twice_ / 2.0; }

    static SpinValue half() { return SpinValue(1); }
    static SpinValue one() { return SpinValue(2); }

    bool operator==(const SpinValue& rhs) const { return twice_ == rhs.twice_; }
    bool operator!=(const SpinValue& rhs) const { return twice_ != rhs.twice_; }

private:
    int twice_;
};

/// Node placement for the 2s+1 equidistant moments of a spin.
///
/// Physical: node j in {1..2s+1} sits at x_j = -s-1+j, spanning [-s, s].
/// Normalized: x_j / s, spanning [-1, 1]; spin-1/2 becomes the +-1 Ising pair.
enum class NodeConvention { Physical, Normalized };

std::string to_string(NodeConvention conv);
NodeConvention node_convention_from_string(const std::string& name);

using Legs = std::vector<SpinValue>;

/// Exponent tuple {n_1..n_m}, n_i in {0..2s_i}, labelling the monomial
/// prod_i sigma_i^{n_i} and its coupling constant.
using MultiIndex = std::vector<int>;

/// Node ordinals {j_1..j_m}, 0-based, ordinal k meaning the (k+1)-th node in
/// ascending moment order. Resolved values depend on the NodeConvention.
using LegConfiguration = std::vector<int>;

/// Ascending moments of one spin: 2s+1 equally spaced values.
std::vector<double> moments(SpinValue s, NodeConvention conv);

/// Same, as an exact rational (ordinal is 0-based).
Rational moment_exact(SpinValue s, NodeConvention conv, int ordinal);

/// prod_i (2s_i + 1): length of coupling vectors and weight tables.
std::size_t state_count(const Legs& legs);

/// Mixed-radix linear position with leg 1 slowest (most significant).
///
/// Used identically for MultiIndex (exponents) and LegConfiguration (node
/// ordinals); both range over {0..2s_i} per leg. This is the unique order
/// consistent with the Kronecker product V^(s1) (x) ... (x) V^(sm).
/// Throws std::out_of_range on invalid components.
std::size_t linear_index(const Legs& legs, const std::vector<int>& components);

/// Inverse of linear_index.
std::vector<int> components_at(const Legs& legs, std::size_t position);

/// prod_i moment_i^{n_i}, with 0^0 = 1.
double monomial(const Legs& legs, NodeConvention conv, const LegConfiguration& config,
                const MultiIndex& idx);

/// Coupling parameters indexed by exponent multi-index, in linear_index order.
/// Values are couplings in units of beta (the Hamiltonian absorbs 1/kT).
///
/// The same container serves two roles: for a decorated cell the entries
/// multiply S0 * prod sigma^n; for an effective (undecorated) Hamiltonian
/// they multiply prod sigma^n alone, the all-zero index being the constant.
struct CouplingVector {
    Legs legs;
    NodeConvention convention = NodeConvention::Physical;
    std::vector<double> entries;

    static CouplingVector zeros(Legs legs, NodeConvention conv);

    double at(const MultiIndex& idx) const;
    void set(const MultiIndex& idx, double value);

    std::size_t size() const { return entries.size(); }
    /// Validates sizes and finiteness; throws std::invalid_argument.
    void validate() const;
};

}  // namespace decor
