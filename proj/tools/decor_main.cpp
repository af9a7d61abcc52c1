// decor: decoration transformations for classical spin models.
//
// Subcommands:
//   vandermonde     exact node matrix (or its inverse) as CSV fractions
//   transform       effective couplings of a decorated cell file
//   alpha           correlation-expansion coefficients of a cell file
//   critical-curve  D_c(K_c) of the mixed spin-(1/2,S) square lattice
//   verify          brute-force identity checks on a lattice file
//
// Exit codes: 0 success, 1 flag/input validation error, 2 computation error
// (overflow, singular matrix, failed verification).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "decor/cell_io.hpp"
#include "decor/correlate.hpp"
#include "decor/mixed_lattice.hpp"
#include "decor/oracle.hpp"
#include "decor/transform.hpp"
#include "decor/vandermonde.hpp"

namespace {

using namespace decor;

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("--output: cannot open " + path);
        out << text;
    }
};

std::string csv_matrix(const RationalMatrix& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ',';
            out << m.at(i, j).to_string();
        }
        out << '\n';
    }
    return out.str();
}

std::string csv_couplings(const Legs& legs, const std::vector<double>& entries) {
    std::ostringstream out;
    for (std::size_t i = 0; i < legs.size(); ++i) out << 'n' << i + 1 << ',';
    out << "value\n";
    for (std::size_t k = 0; k < entries.size(); ++k) {
        for (int n : components_at(legs, k)) out << n << ',';
        out << io::format_double(entries[k]) << '\n';
    }
    return out.str();
}

int run_vandermonde(int twice_spin, const std::string& convention, bool inverse,
                    const OutputTarget& target) {
    if (twice_spin < 1) {
        std::cerr << "--spin must be a positive twice-spin integer\n";
        return 1;
    }
    NodeConvention conv;
    try {
        conv = node_convention_from_string(convention);
    } catch (const std::invalid_argument& e) {
        std::cerr << "--convention: " << e.what() << '\n';
        return 1;
    }
    const RationalMatrix v = build_vandermonde(SpinValue(twice_spin), conv);
    target.write(csv_matrix(inverse ? invert_exact(v) : v));
    return 0;
}

int run_transform(const std::string& cell_path, const std::string& format,
                  const OutputTarget& target) {
    const DecoratedCell cell = io::load_cell(cell_path);
    const EffectiveCouplings eff = effective_couplings(cell);
    if (format == "json") {
        target.write(io::couplings_to_json(eff).dump(2) + "\n");
    } else {
        target.write(csv_couplings(eff.couplings.legs, eff.couplings.entries));
    }
    return 0;
}

int run_alpha(const std::string& cell_path, const std::string& format,
              const OutputTarget& target) {
    const DecoratedCell cell = io::load_cell(cell_path);
    const AlphaCoefficients alpha = alpha_coefficients(cell);
    if (format == "json") {
        target.write(io::alpha_to_json(alpha).dump(2) + "\n");
    } else {
        target.write(csv_couplings(alpha.legs, alpha.entries));
    }
    return 0;
}

int run_critical_curve(int twice_spin, double k_min, double k_max, double k_step,
                       double d_min, double d_max, double tol, const OutputTarget& target) {
    if (twice_spin < 1) {
        std::cerr << "--spin must be a positive twice-spin integer\n";
        return 1;
    }
    if (!(k_step > 0.0)) {
        std::cerr << "--k-step must be positive\n";
        return 1;
    }
    if (!(k_max >= k_min)) {
        std::cerr << "--k-max must not be below --k-min\n";
        return 1;
    }
    if (!(d_max > d_min)) {
        std::cerr << "--d-max must exceed --d-min\n";
        return 1;
    }
    if (!(tol > 0.0)) {
        std::cerr << "--tol must be positive\n";
        return 1;
    }

    std::vector<double> ks;
    for (double k = k_min; k <= k_max + 1e-12; k += k_step) ks.push_back(k);
    const mixed::CriticalCurve curve =
        mixed::solve_critical_curve(SpinValue(twice_spin), ks, {d_min, d_max}, tol);

    std::ostringstream out;
    out << "K_c,D_c,delta,ratio,w1,w2,w5\n";
    for (const mixed::CriticalPoint& pt : curve.points) {
        out << io::format_double(pt.k_c) << ',' << io::format_double(pt.d_c) << ','
            << io::format_double(pt.delta) << ',' << io::format_double(pt.ratio) << ','
            << io::format_double(pt.weights.w1()) << ',' << io::format_double(pt.weights.w2())
            << ',' << io::format_double(pt.weights.w5()) << '\n';
    }
    target.write(out.str());
    for (double k : curve.no_root_k)
        std::cerr << "no root in bracket for K = " << io::format_double(k) << '\n';
    return curve.points.empty() && !ks.empty() ? 2 : 0;
}

struct Check {
    std::string name;
    double residual;
    double tolerance;

    bool pass() const { return residual <= tolerance; }
};

int run_verify(const std::string& spec_path) {
    const oracle::LatticeSpec spec = io::load_lattice(spec_path);
    std::vector<Check> checks;

    // Partition identity: decorated log Z against the transformed sum.
    const double log_z_dec = oracle::enumerate_decorated_log_z(spec);
    oracle::EffectiveLatticeSpec eff = oracle::effective_from_decorated(spec);
    const double log_z_eff = oracle::enumerate_effective_log_z(eff);
    const double scale = std::max(1.0, std::abs(log_z_dec));
    checks.push_back({"partition-identity", std::abs(log_z_dec - log_z_eff) / scale, 1e-8});

    // Correlation identity, first and second order, for every cell.
    for (std::size_t c = 0; c < spec.cells.size(); ++c) {
        const oracle::DecoratedLatticeCell& cell = spec.cells[c];
        const DecoratedCell unit{cell.central, cell.couplings.legs, spec.convention,
                                 cell.couplings, cell.s0_self_energy};
        const AlphaCoefficients alpha = alpha_coefficients(unit);

        oracle::EffectiveLatticeSpec without = eff;
        without.cells.erase(without.cells.begin() + static_cast<std::ptrdiff_t>(c));
        const double z_ratio =
            std::exp(oracle::enumerate_effective_log_z(without) - log_z_eff);

        std::vector<std::vector<std::pair<int, int>>> probes;
        probes.push_back({{cell.sites[0], 1}});
        if (cell.sites.size() > 1)
            probes.push_back({{cell.sites[0], 1}, {cell.sites[1], 1}});

        int order = 1;
        for (const auto& probe : probes) {
            std::map<MultiIndex, double> expectations;
            const Legs& legs = cell.couplings.legs;
            for (std::size_t k = 0; k < state_count(legs); ++k) {
                const MultiIndex idx = components_at(legs, k);
                std::vector<std::pair<int, int>> powers = probe;
                for (std::size_t leg = 0; leg < legs.size(); ++leg)
                    if (idx[leg] > 0) powers.emplace_back(cell.sites[leg], idx[leg]);
                expectations[idx] =
                    z_ratio * oracle::enumerate_effective_correlator(without, powers);
            }
            const double expanded = decorated_correlator(alpha, expectations);
            const double direct =
                oracle::enumerate_correlator(spec, probe, {static_cast<int>(c)});
            const double denom = std::max(1.0, std::abs(direct));
            checks.push_back({"correlation-identity cell " + std::to_string(c) + " order " +
                                  std::to_string(order),
                              std::abs(expanded - direct) / denom, 1e-8});
            ++order;
        }
    }

    // Gauge check: shifting one constant shifts log Z by exactly that much.
    {
        oracle::EffectiveLatticeSpec shifted = eff;
        shifted.cells[0].couplings.entries[0] += 0.7;
        const double moved = oracle::enumerate_effective_log_z(shifted);
        checks.push_back({"constant-shift", std::abs(moved - log_z_eff - 0.7), 1e-10});
    }

    bool all_pass = true;
    for (const Check& check : checks) {
        all_pass = all_pass && check.pass();
        std::cout << (check.pass() ? "PASS " : "FAIL ") << check.name
                  << "  residual=" << io::format_double(check.residual)
                  << "  tol=" << io::format_double(check.tolerance) << '\n';
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decoration transformations for classical spin models"};
    app.require_subcommand(1);
    app.fallthrough();  // lets -o sit after the subcommand name too

    OutputTarget target;
    app.add_option("-o,--output", target.path, "write output to a file instead of stdout");

    auto* vand = app.add_subcommand("vandermonde", "print the exact node matrix as CSV");
    int v_spin = 0;
    std::string v_conv = "physical";
    bool v_inverse = false;
    vand->add_option("--spin", v_spin, "twice the spin (2s)")->required();
    vand->add_option("--convention", v_conv, "physical|normalized");
    vand->add_flag("--inverse", v_inverse, "print the exact inverse instead");

    auto* trans = app.add_subcommand("transform", "effective couplings of a decorated cell");
    std::string t_cell;
    std::string t_format = "json";
    trans->add_option("--cell", t_cell, "cell JSON file")->required();
    trans->add_option("--format", t_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* alph = app.add_subcommand("alpha", "correlation coefficients of a decorated cell");
    std::string a_cell;
    std::string a_format = "json";
    alph->add_option("--cell", a_cell, "cell JSON file")->required();
    alph->add_option("--format", a_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    auto* curve = app.add_subcommand("critical-curve",
                                     "critical line D_c(K_c) of the mixed spin-(1/2,S) lattice");
    int c_spin = 0;
    double k_min = 0.0, k_max = 0.0, k_step = 0.1;
    double d_min = mixed::kDefaultDBracket.first, d_max = mixed::kDefaultDBracket.second;
    double tol = mixed::kDefaultResidualTol;
    curve->add_option("--spin", c_spin, "twice the decorated spin (2S)")->required();
    curve->add_option("--k-min", k_min, "first K value")->required();
    curve->add_option("--k-max", k_max, "last K value")->required();
    curve->add_option("--k-step", k_step, "K grid step");
    curve->add_option("--d-min", d_min, "lower end of the D search bracket");
    curve->add_option("--d-max", d_max, "upper end of the D search bracket");
    curve->add_option("--tol", tol, "residual tolerance for the bisection");

    auto* verify = app.add_subcommand("verify", "run brute-force identity checks on a lattice");
    std::string spec_path;
    verify->add_option("--spec", spec_path, "lattice JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (vand->parsed()) return run_vandermonde(v_spin, v_conv, v_inverse, target);
        if (trans->parsed()) return run_transform(t_cell, t_format, target);
        if (alph->parsed()) return run_alpha(a_cell, a_format, target);
        if (curve->parsed())
            return run_critical_curve(c_spin, k_min, k_max, k_step, d_min, d_max, tol, target);
        if (verify->parsed()) return run_verify(spec_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
