#include "decor/correlate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace decor {

namespace {
constexpr double kLogOverflowLimit = 700.0;
}

std::vector<double> correlation_vector(const DecoratedCell& cell) {
    cell.validate();
    const std::vector<double> mu = moments(cell.central, cell.convention);
    const std::size_t n = state_count(cell.legs);

    std::vector<double> out(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
        const LegConfiguration config = components_at(cell.legs, c);
        double a = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double j = cell.couplings.entries[k];
            if (j == 0.0) continue;
            a += j * monomial(cell.legs, cell.convention, config, components_at(cell.legs, k));
        }
        // sum_mu mu e^{mu a + E(mu)}, max-shifted; the result keeps its sign.
        double shift = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < mu.size(); ++k) {
            double e = mu[k] * a;
            if (!cell.s0_self_energy.empty()) e += cell.s0_self_energy[k];
            shift = std::max(shift, e);
        }
        if (shift > kLogOverflowLimit)
            throw std::range_error("correlation_vector: exponent " + std::to_string(shift) +
                                   " exceeds double range");
        double sum = 0.0;
        for (std::size_t k = 0; k < mu.size(); ++k) {
            double e = mu[k] * a;
            if (!cell.s0_self_energy.empty()) e += cell.s0_self_energy[k];
            sum += mu[k] * std::exp(e - shift);
        }
        out[c] = sum * std::exp(shift);
    }
    return out;
}

AlphaCoefficients alpha_coefficients(const DecoratedCell& cell) {
    const std::vector<double> c = correlation_vector(cell);

    std::vector<Matrix> factors;
    factors.reserve(cell.legs.size());
    for (const SpinValue& s : cell.legs)
        factors.push_back(to_real(invert_exact(build_vandermonde(s, cell.convention))));

    AlphaCoefficients alpha;
    alpha.legs = cell.legs;
    alpha.convention = cell.convention;
    alpha.entries = apply_kronecker(factors, c);
    return alpha;
}

double decorated_correlator(const AlphaCoefficients& alpha,
                            const std::map<MultiIndex, double>& effective_correlators,
                            double zero_tol) {
    double scale = 0.0;
    for (double a : alpha.entries) scale = std::max(scale, std::abs(a));
    const double cutoff = zero_tol * std::max(1.0, scale);

    double acc = 0.0;
    for (std::size_t k = 0; k < alpha.entries.size(); ++k) {
        const double a = alpha.entries[k];
        const MultiIndex idx = components_at(alpha.legs, k);
        auto it = effective_correlators.find(idx);
        if (it == effective_correlators.end()) {
            if (std::abs(a) <= cutoff) continue;
            std::ostringstream msg;
            msg << "decorated_correlator: missing expectation value for index (";
            for (std::size_t i = 0; i < idx.size(); ++i) msg << (i ? "," : "") << idx[i];
            msg << ") with coefficient " << a;
            throw std::invalid_argument(msg.str());
        }
        acc += a * it->second;
    }
    return acc;
}

}  // namespace decor
