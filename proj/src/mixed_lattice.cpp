#include "decor/mixed_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace decor::mixed {

namespace {

double log_2cosh(double x) {
    // ln(2 cosh x) = |x| + ln(1 + e^{-2|x|})
    return std::abs(x) + std::log1p(std::exp(-2.0 * std::abs(x)));
}

double log_sum_exp(const std::vector<double>& xs) {
    double shift = -std::numeric_limits<double>::infinity();
    for (double x : xs) shift = std::max(shift, x);
    double sum = 0.0;
    for (double x : xs) sum += std::exp(x - shift);
    return shift + std::log(sum);
}

void check_params(const MixedModelParams& p) {
    if (!std::isfinite(p.k) || !std::isfinite(p.d))
        throw std::invalid_argument("mixed lattice: K and D must be finite");
}

}  // namespace

double VertexWeights::w1() const { return std::exp(log_w1); }
double VertexWeights::w2() const { return std::exp(log_w2); }
double VertexWeights::w5() const { return std::exp(log_w5); }

VertexWeights vertex_weights(const MixedModelParams& p) {
    check_params(p);
    // One log-domain term per central-spin moment magnitude. The n = 0 moment
    // contributes the bare 1 for integral S; for half-odd S the moments are
    // n = 1/2, 3/2, ..., S and every term carries a 2cosh (or plain 2 for w2).
    std::vector<double> t1, t2, t5;
    if (!p.s.is_half_odd()) {
        const int s_int = p.s.twice() / 2;
        t1.push_back(0.0);
        t2.push_back(0.0);
        t5.push_back(0.0);
        for (int n = 1; n <= s_int; ++n) {
            const double site = static_cast<double>(n) * static_cast<double>(n) * p.d;
            t1.push_back(log_2cosh(2.0 * n * p.k) + site);
            t2.push_back(std::log(2.0) + site);
            t5.push_back(log_2cosh(n * p.k) + site);
        }
    } else {
        const int pairs = (p.s.twice() + 1) / 2;  // S + 1/2 moment pairs
        for (int m = 1; m <= pairs; ++m) {
            const double n = m - 0.5;
            const double site = n * n * p.d;
            t1.push_back(log_2cosh(2.0 * n * p.k) + site);
            t2.push_back(std::log(2.0) + site);
            t5.push_back(log_2cosh(n * p.k) + site);
        }
    }
    VertexWeights w;
    w.log_w1 = log_sum_exp(t1);
    w.log_w2 = log_sum_exp(t2);
    w.log_w5 = log_sum_exp(t5);
    return w;
}

SquareCellCouplings effective_square_params(const VertexWeights& w) {
    SquareCellCouplings c;
    c.j0 = (3.0 * w.log_w2 + 4.0 * w.log_w5 + w.log_w1) / 8.0;
    c.j2 = (w.log_w1 - w.log_w2) / 8.0;
    c.j4 = (w.log_w1 + 3.0 * w.log_w2 - 4.0 * w.log_w5) / 8.0;
    return c;
}

std::vector<std::string> square_params_warnings(const SquareCellCouplings& c) {
    std::vector<std::string> out;
    if (!(c.j0 > 0.0)) out.push_back("J0 = " + std::to_string(c.j0) + " is not positive");
    if (!(c.j2 > 0.0)) out.push_back("J2 = " + std::to_string(c.j2) + " is not positive");
    return out;
}

double delta(const VertexWeights& w) {
    return w.w1() * w.w2() + w.w2() * w.w2() - 2.0 * w.w5() * w.w5();
}

double delta_ratio(const VertexWeights& w) {
    const double r2 = std::exp(w.log_w2 - w.log_w1);
    const double r5 = std::exp(w.log_w5 - w.log_w1);
    return r2 + r2 * r2 - 2.0 * r5 * r5;
}

double critical_residual(const MixedModelParams& p) {
    const VertexWeights w = vertex_weights(p);
    return w.w1() - 3.0 * w.w2() + delta(w) / w.w1();
}

double critical_residual_scaled(const MixedModelParams& p) {
    const VertexWeights w = vertex_weights(p);
    const double r2 = std::exp(w.log_w2 - w.log_w1);
    const double r5 = std::exp(w.log_w5 - w.log_w1);
    return (1.0 - r2) * (1.0 - r2) - 2.0 * r5 * r5;
}

namespace {

CriticalPoint make_point(SpinValue s, double k, double d, double residual) {
    CriticalPoint pt;
    pt.k_c = k;
    pt.d_c = d;
    pt.weights = vertex_weights({s, k, d});
    pt.delta = delta(pt.weights);
    pt.ratio = std::abs(delta_ratio(pt.weights));
    pt.residual = residual;
    return pt;
}

/// Bisects fn (assumed continuous) on [lo, hi] with fn(lo), fn(hi) of
/// opposite sign.
template <typename Fn>
std::pair<double, double> bisect(Fn&& fn, double lo, double hi, double f_lo, double tol) {
    double f_mid = f_lo;
    double mid = lo;
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        mid = 0.5 * (lo + hi);
        f_mid = fn(mid);
        if (std::abs(f_mid) <= tol) return {mid, f_mid};
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return {mid, f_mid};
}

template <typename Fn>
std::optional<std::pair<double, double>> scan_and_bisect(Fn&& fn, double lo, double hi,
                                                         double step, double tol) {
    if (!(hi > lo) || !(step > 0.0))
        throw std::invalid_argument("critical solver: invalid bracket or step");
    double x_prev = lo;
    double f_prev = fn(lo);
    if (f_prev == 0.0) return std::pair{lo, 0.0};
    for (double x = lo + step; x_prev < hi; x += step) {
        if (x > hi) x = hi;
        const double f = fn(x);
        if (f == 0.0) return std::pair{x, 0.0};
        if ((f < 0.0) != (f_prev < 0.0))
            return bisect(fn, x_prev, x, f_prev, tol);
        x_prev = x;
        f_prev = f;
        if (x >= hi) break;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CriticalPoint> solve_critical_d(SpinValue s, double k,
                                              std::pair<double, double> d_bracket, double tol,
                                              double scan_step) {
    auto fn = [&](double d) { return critical_residual_scaled({s, k, d}); };
    auto root = scan_and_bisect(fn, d_bracket.first, d_bracket.second, scan_step, tol);
    if (!root) return std::nullopt;
    return make_point(s, k, root->first, root->second);
}

std::optional<CriticalPoint> solve_critical_k(SpinValue s, double d,
                                              std::pair<double, double> k_bracket, double tol,
                                              double scan_step) {
    auto fn = [&](double k) { return critical_residual_scaled({s, k, d}); };
    auto root = scan_and_bisect(fn, k_bracket.first, k_bracket.second, scan_step, tol);
    if (!root) return std::nullopt;
    return make_point(s, root->first, d, root->second);
}

CriticalCurve solve_critical_curve(SpinValue s, std::span<const double> k_values,
                                   std::pair<double, double> d_bracket, double tol,
                                   double scan_step) {
    CriticalCurve curve;
    for (double k : k_values) {
        if (auto pt = solve_critical_d(s, k, d_bracket, tol, scan_step))
            curve.points.push_back(*pt);
        else
            curve.no_root_k.push_back(k);
    }
    return curve;
}

}  // namespace decor::mixed
