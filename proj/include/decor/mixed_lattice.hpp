#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "decor/spin.hpp"

namespace decor::mixed {

/// Mixed spin-(1/2,S) square lattice, H = K sum_<ij> S_i sigma_j + D sum S_i^2
/// in beta units: nearest-neighbor coupling K and single-ion anisotropy D.
struct MixedModelParams {
    SpinValue s;
    double k = 0.0;
    double d = 0.0;
};

/// The three independent vertex weights of the traced-out eight-vertex cell
/// (w2 = w3 = w4 and w5 = w6 = w7 = w8 by lattice symmetry). Values are kept
/// in the log domain alongside the linear ones so extreme K, D stay usable;
/// w1 > w5 > w2 holds strictly for every K != 0.
struct VertexWeights {
    double log_w1 = 0.0;
    double log_w2 = 0.0;
    double log_w5 = 0.0;

    double w1() const;
    double w2() const;
    double w5() const;
};

/// Closed-form weights. For integral S:
///     w1 = 1 + 2 sum_{n=1..S} cosh(2nK) e^{n^2 D}
///     w2 = 1 + 2 sum_{n=1..S} e^{n^2 D}
///     w5 = 1 + 2 sum_{n=1..S} cosh(nK) e^{n^2 D}
/// For half-odd S the sums run over the moments n = 1/2, 3/2, ..., S with
/// arguments 2nK / 0 / nK and the same e^{n^2 D} factor, which is what the
/// direct trace over the central spin gives (the cross-check against the
/// four-leg generic trace is part of the test suite).
VertexWeights vertex_weights(const MixedModelParams& p);

/// Effective couplings of the traced cell on +-1 variables:
/// J0 = ln(w2^3 w5^4 w1)/8 (constant), J2 = ln(w1/w2)/8 (each of the six
/// pairs), J4 = ln(w1 w2^3 / w5^4)/8 (four-spin term).
struct SquareCellCouplings {
    double j0 = 0.0;
    double j2 = 0.0;
    double j4 = 0.0;
};

/// The sign expectations j0 > 0, j2 > 0 hold whenever the weights are >= 1;
/// violations are reported through `warnings`, never fatal.
SquareCellCouplings effective_square_params(const VertexWeights& w);
std::vector<std::string> square_params_warnings(const SquareCellCouplings& c);

/// Free-fermion combination Delta = w1 w2 + w2^2 - 2 w5^2.
double delta(const VertexWeights& w);

/// Delta / w1^2, evaluated from weight ratios; safe for any magnitudes.
double delta_ratio(const VertexWeights& w);

/// Critical condition residual f = w1 - 3 w2 + Delta/w1, zero at criticality
/// (from w1 = w2bar + w3 + w4 with w2bar = w2 - Delta/w1 and w3 = w4 = w2).
double critical_residual(const MixedModelParams& p);

/// f / w1 = (1 - w2/w1)^2 - 2 (w5/w1)^2: same zeros, computed from log-domain
/// ratios so it never overflows. This is what the solvers bisect on.
double critical_residual_scaled(const MixedModelParams& p);

struct CriticalPoint {
    double k_c = 0.0;
    double d_c = 0.0;
    double delta = 0.0;       // free-fermion combination at the point
    double ratio = 0.0;       // |Delta| / w1^2, < 1 on the solved curves
    VertexWeights weights;
    double residual = 0.0;    // scaled residual left after bisection
};

inline constexpr double kDefaultResidualTol = 1e-10;
inline constexpr double kDefaultScanStep = 0.05;
inline constexpr std::pair<double, double> kDefaultDBracket{-60.0, 60.0};

/// Scans D through the bracket in fixed steps for a sign change of the
/// scaled residual, then bisects to |residual| <= tol or a bracket width of
/// 1e-12. Empty result when no sign change exists in the bracket.
std::optional<CriticalPoint> solve_critical_d(SpinValue s, double k,
                                              std::pair<double, double> d_bracket = kDefaultDBracket,
                                              double tol = kDefaultResidualTol,
                                              double scan_step = kDefaultScanStep);

/// Transposed solver: fixes D and scans K (K > 0 branch).
std::optional<CriticalPoint> solve_critical_k(SpinValue s, double d,
                                              std::pair<double, double> k_bracket = {1e-3, 30.0},
                                              double tol = kDefaultResidualTol,
                                              double scan_step = kDefaultScanStep);

struct CriticalCurve {
    std::vector<CriticalPoint> points;   // input order of the solved K values
    std::vector<double> no_root_k;       // K values with no sign change
};

/// Maps solve_critical_d over k_values, preserving order.
CriticalCurve solve_critical_curve(SpinValue s, std::span<const double> k_values,
                                   std::pair<double, double> d_bracket = kDefaultDBracket,
                                   double tol = kDefaultResidualTol,
                                   double scan_step = kDefaultScanStep);

}  // namespace decor::mixed
