// Command-line front end: spectrum tables, wavefunction dumps, verification
// suites and partner-map reports for the Hartmann-potential SUSY solver.
// All quantities are in atomic units.  Exit codes: 0 success, 1 tolerance or
// verification failure, 2 invalid configuration.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hartmann/model.hpp"
#include "hartmann/oracle.hpp"
#include "hartmann/radial_function.hpp"
#include "hartmann/susy_fullline.hpp"
#include "hartmann/susy_halfline.hpp"

using json = nlohmann::json;
using namespace hartmann;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitInvalidConfig = 2;

struct RunConfig {
    double eta = 1.0;
    double sigma = 1.0;
    int m = 0;
    int depth = 3;
    std::string format = "text";
    std::string out_path;
    double tol = -1.0;             // < 0: per-check defaults
    int grid_points = 0;           // 0: module default
    double grid_max = 0.0;         // 0: module default
    double capital_m_override = -1.0;
    double gamma_override = -1.0;

    double capital_m() const {
        if (capital_m_override >= 0.0) return capital_m_override;
        return magnetic_to_capital_m(m, HartmannParams(eta, sigma));
    }
    double gamma() const {
        if (gamma_override > 0.0) return gamma_override;
        return HartmannParams(eta, sigma).gamma();
    }
    double tol_or(double fallback) const { return tol > 0.0 ? tol : fallback; }

    Grid radial_grid(double n, double g) const {
        Grid grid = default_radial_grid(n, g);
        const double r_max = grid_max > 0.0 ? grid_max : grid.x_max;
        const int points = grid_points > 0 ? grid_points : grid.n_points;
        return Grid(grid.x_min, r_max, points);
    }
};

void emit(const RunConfig& config, const std::string& text) {
    if (config.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.out_path);
    if (!out) {
        throw std::runtime_error("cannot open output file " + config.out_path);
    }
    out << text;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// compact form for human-facing text tables
std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

json config_json(const RunConfig& config) {
    return json{{"units", "atomic"},
                {"eta", config.eta},
                {"sigma", config.sigma},
                {"m", config.m},
                {"capital_m", config.capital_m()},
                {"gamma", config.gamma()}};
}

// ---------------------------------------------------------------------------
// spectrum

int cmd_spectrum(const RunConfig& config) {
    const double cm = config.capital_m();
    const double g = config.gamma();
    const double tol = config.tol_or(1e-4);
    SpectrumReport report = spectrum(cm, config.depth, g);

    // One oracle solve per distinct L covers every N at that L.
    const double n_max = cm + config.depth;
    for (double l : allowed_l_values(n_max, cm)) {
        int needed = 0;
        for (const SpectrumRow& row : report.rows) {
            if (std::abs(row.l - l) < 1e-12) {
                needed = std::max(needed,
                                  static_cast<int>(std::llround(row.n - row.l)));
            }
        }
        if (needed == 0) continue;
        const EigenResult fd =
            solve_radial(l, g, config.radial_grid(n_max, g), needed, tol);
        for (SpectrumRow& row : report.rows) {
            if (std::abs(row.l - l) < 1e-12) {
                row.energy_oracle =
                    fd.eigenvalues[static_cast<std::size_t>(
                        std::llround(row.n - row.l) - 1)];
            }
        }
    }

    double worst = 0.0;
    for (const SpectrumRow& row : report.rows) {
        worst = std::max(worst, std::abs(*row.energy_oracle - row.energy_analytic) /
                                    std::abs(row.energy_analytic));
    }
    const bool pass = worst <= tol;

    std::ostringstream text;
    if (config.format == "json") {
        json doc = config_json(config);
        doc["command"] = "spectrum";
        doc["depth"] = config.depth;
        doc["tolerance"] = tol;
        doc["max_relative_delta"] = worst;
        doc["pass"] = pass;
        doc["rows"] = json::array();
        for (const SpectrumRow& row : report.rows) {
            doc["rows"].push_back(
                {{"n", row.n},
                 {"l", row.l},
                 {"energy_analytic", row.energy_analytic},
                 {"energy_oracle", *row.energy_oracle},
                 {"delta", std::abs(*row.energy_oracle - row.energy_analytic)},
                 {"builder_trace", row.builder_trace}});
        }
        text << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        text << "# hartmann spectrum (atomic units)\n";
        text << "# gamma=" << num(g) << " capital_m=" << num(cm)
             << " tolerance=" << num(tol) << "\n";
        text << "n,l,energy_analytic,energy_oracle,delta\n";
        for (const SpectrumRow& row : report.rows) {
            text << num(row.n) << ',' << num(row.l) << ','
                 << num(row.energy_analytic) << ',' << num(*row.energy_oracle)
                 << ','
                 << num(std::abs(*row.energy_oracle - row.energy_analytic))
                 << "\n";
        }
    } else {
        text << "Hartmann spectrum: |M| = " << short_num(cm) << ", gamma = "
             << short_num(g) << ", depth = " << config.depth
             << " (atomic units)\n";
        char line[160];
        std::snprintf(line, sizeof(line), "%10s %10s %16s %16s %12s\n", "N", "L",
                      "E_analytic", "E_oracle", "delta");
        text << line;
        for (const SpectrumRow& row : report.rows) {
            std::snprintf(line, sizeof(line), "%10.4f %10.4f %16.9e %16.9e %12.3e\n",
                          row.n, row.l, row.energy_analytic, *row.energy_oracle,
                          std::abs(*row.energy_oracle - row.energy_analytic));
            text << line;
        }
        text << (pass ? "PASS" : "FAIL") << ": max relative delta " << num(worst)
             << " against tolerance " << num(tol) << "\n";
    }
    emit(config, text.str());
    return pass ? kExitOk : kExitToleranceFailure;
}

// ---------------------------------------------------------------------------
// eigenfunction

int cmd_eigenfunction(const RunConfig& config, double n, double l, int samples) {
    const double cm = config.capital_m();
    const double g = config.gamma();
    if (!is_nonneg_integer(l - cm) || !is_nonneg_integer(n - l - 1.0)) {
        std::cerr << "eigenfunction: (N, L) = (" << n << ", " << l
                  << ") is inconsistent with |M| = " << cm << "\n";
        return kExitInvalidConfig;
    }
    if (samples < 2) {
        std::cerr << "eigenfunction: need at least 2 samples\n";
        return kExitInvalidConfig;
    }
    const RadialFunction u = build_eigenfunction(n, l, g);
    const RadialFunction r_fn = radial_wavefunction(n, l, g);
    const double norm_residual = std::abs(inner_product(u, u) - 1.0);
    const double r_hi =
        config.grid_max > 0.0 ? config.grid_max : std::max(10.0, 4.0 * n * n / g);

    std::vector<double> rs(samples);
    for (int i = 0; i < samples; ++i) {
        rs[i] = r_hi * static_cast<double>(i + 1) / samples;
    }

    std::ostringstream text;
    if (config.format == "json") {
        json doc = config_json(config);
        doc["command"] = "eigenfunction";
        doc["n"] = n;
        doc["l"] = l;
        doc["norm_residual"] = norm_residual;
        doc["rows"] = json::array();
        for (double r : rs) {
            doc["rows"].push_back(
                {{"r", r}, {"u", u.evaluate(r)}, {"R", r_fn.evaluate(r)}});
        }
        text << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        text << "# hartmann eigenfunction u_NL and R_NL = u/r (atomic units)\n";
        text << "# gamma=" << num(g) << " capital_m=" << num(cm) << " n=" << num(n)
             << " l=" << num(l) << " norm_residual=" << num(norm_residual) << "\n";
        text << "r,u,R\n";
        for (double r : rs) {
            text << num(r) << ',' << num(u.evaluate(r)) << ','
                 << num(r_fn.evaluate(r)) << "\n";
        }
    } else {
        text << "Eigenfunction (N, L) = (" << short_num(n) << ", " << short_num(l)
             << "), |M| = " << short_num(cm) << ", gamma = " << short_num(g)
             << ", norm residual " << num(norm_residual) << "\n";
        char line[120];
        std::snprintf(line, sizeof(line), "%14s %18s %18s\n", "r", "u_NL", "R_NL");
        text << line;
        for (double r : rs) {
            std::snprintf(line, sizeof(line), "%14.6f %18.10e %18.10e\n", r,
                          u.evaluate(r), r_fn.evaluate(r));
            text << line;
        }
    }
    emit(config, text.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

class CheckList {
  public:
    void add(const std::string& name, double residual, double threshold) {
        checks_.push_back({name, residual, threshold, residual <= threshold});
    }
    // for quantities that must sit at an observed value inside a window
    void add_window(const std::string& name, double value, double lo, double hi) {
        CheckResult c;
        c.name = name;
        c.residual = value;
        c.threshold = hi;
        c.pass = value >= lo && value <= hi;
        checks_.push_back(c);
    }
    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_pass() const {
        for (const CheckResult& c : checks_) {
            if (!c.pass) return false;
        }
        return true;
    }

  private:
    std::vector<CheckResult> checks_;
};

void verify_algebra_suite(const RunConfig& config, CheckList& list) {
    const double g = config.gamma();
    const double cm = config.capital_m();
    Grid grid(1e-3, 40.0, 2001);
    if (config.grid_points > 0 || config.grid_max > 0.0) {
        grid = Grid(1e-3, config.grid_max > 0.0 ? config.grid_max : 40.0,
                    config.grid_points > 0 ? config.grid_points : 2001);
    }
    const AlgebraReport report = verify_susy_algebra(cm, g, grid);
    list.add("algebra.Q^2", report.q_squared_norm, 0.0);
    list.add("algebra.Qdag^2", report.qdag_squared_norm, 0.0);
    list.add("algebra.anticommutator", report.anticommutator_residual, 0.0);
    list.add("algebra.commutator_QHss", report.commutator_rel_residual,
             config.tol_or(1e-10));
    list.add("algebra.factorization_residual", report.factorization_err,
             config.tol_or(1e-2));
    list.add_window("algebra.factorization_order", report.factorization_order,
                    1.5, 2.5);
}

void verify_halfline_suite(const RunConfig& config, CheckList& list) {
    const double g = config.gamma();
    const double cm = config.capital_m();
    const std::vector<double> ladder = allowed_l_values(cm + 4.0, cm);

    // annihilation of every lowest rung
    double worst = 0.0;
    for (double l : ladder) {
        const RadialFunction psi0 = ground_state(l, g);
        const RadialFunction image = apply_ladder(l, g, Ladder::minus, psi0);
        worst = std::max(worst, norm(image) / norm(psi0));
    }
    list.add("halfline.annihilation", worst, config.tol_or(1e-12));

    // Ricatti identity on 1000 radii per L, scaled by the potential size
    worst = 0.0;
    for (double l : ladder) {
        for (int i = 1; i <= 1000; ++i) {
            const double r = 0.1 + (20.0 - 0.1) * i / 1000.0;
            const double scale =
                std::max(1.0, std::abs(effective_potential(l, g, r)));
            worst = std::max(worst, std::abs(ricatti_residual(l, g, r)) / scale);
        }
    }
    list.add("halfline.ricatti", worst, config.tol_or(1e-12));

    // eigen-residual, intertwining, orthonormality, degeneracy
    double worst_eigen = 0.0, worst_twine = 0.0, worst_ortho = 0.0,
           worst_degeneracy = 0.0;
    for (int level = 1; level <= 4; ++level) {
        const double n = cm + level;
        const double energy = energy_scaled(n, g);
        for (double l : allowed_l_values(n, cm)) {
            const RadialFunction u = build_eigenfunction(n, l, g);
            const RadialFunction hu = apply_radial_hamiltonian(l, g, u);
            const RadialFunction residual =
                linear_combination(1.0, hu, -energy, u);
            worst_eigen = std::max(
                worst_eigen, residual.is_zero() ? 0.0 : norm(residual));
            if (n - l - 1.0 > 0.5) {
                const RadialFunction down = apply_ladder(l, g, Ladder::minus, u);
                const double overlap = std::abs(
                    inner_product(normalize(down), build_eigenfunction(n, l + 1.0, g)));
                worst_twine = std::max(worst_twine, 1.0 - overlap);
            }
            worst_degeneracy =
                std::max(worst_degeneracy, std::abs(energy_scaled(n, g) - energy));
        }
        for (int other = 1; other < level; ++other) {
            const RadialFunction a = build_eigenfunction(n, cm, g);
            const RadialFunction b = build_eigenfunction(cm + other, cm, g);
            worst_ortho = std::max(worst_ortho, std::abs(inner_product(a, b)));
        }
    }
    list.add("halfline.eigen_residual", worst_eigen, config.tol_or(1e-10));
    list.add("halfline.intertwining", worst_twine, config.tol_or(1e-10));
    list.add("halfline.orthogonality", worst_ortho, config.tol_or(1e-8));
    list.add("halfline.degeneracy", worst_degeneracy, 0.0);
}

void verify_fullline_suite(const RunConfig& config, CheckList& list) {
    const double g = config.gamma();
    const double cm = config.capital_m();
    const double n_test = cm + 3.0;

    // Ricatti and partner identities on the line
    double worst_ricatti = 0.0, worst_partner = 0.0;
    const MorsePartnerPotentials pots = morse_partner_potentials(n_test);
    for (int i = 0; i <= 1000; ++i) {
        const double x = -10.0 + 15.0 * i / 1000.0;
        const double w = morse_superpotential(n_test, x);
        const double w_prime = std::exp(x) / n_test;
        const double scale = std::max(1.0, std::abs(pots.v2(x)));
        worst_ricatti = std::max(
            worst_ricatti, std::abs(morse_ricatti_residual(n_test, x)) / scale);
        worst_partner = std::max(
            worst_partner,
            std::abs(0.5 * (w * w + w_prime) - pots.v2(x)) / scale);
    }
    list.add("fullline.ricatti", worst_ricatti, config.tol_or(1e-12));
    list.add("fullline.partner_identity", worst_partner, config.tol_or(1e-12));

    // partner map invariant, randomized
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> n_pick(2.0, 16.0);
    std::uniform_real_distribution<double> d_pick(0.2, 8.0);
    double worst_map = 0.0, worst_energy = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const double n = n_pick(rng);
        const double delta = d_pick(rng);
        const PartnerMapResult r = partner_map(n, delta);
        worst_map = std::max(worst_map,
                             std::abs(r.energy_check) / (delta / n));
        const double e1 = energy_scaled(n, delta);
        const double e2 = energy_scaled(r.n_prime, r.delta_prime);
        worst_energy = std::max(worst_energy, std::abs(e1 - e2) / std::abs(e1));
    }
    list.add("fullline.partner_map", worst_map, config.tol_or(1e-15));
    list.add("fullline.energy_equality", worst_energy, config.tol_or(1e-15));

    // transformed eigenfunction satisfies the Morse equation
    double worst_transform = 0.0;
    for (double l : allowed_l_values(std::min(n_test, cm + 2.0), cm)) {
        const double n = std::min(n_test, cm + 2.0);
        const RadialFunction u = build_eigenfunction(n, l, g);
        const LineFunction psi = transform_eigenfunction(u, g);
        const double eig = -0.5 * (l + 0.5) * (l + 0.5);
        const double h = 3e-3;
        double residual = 0.0, scale = 0.0;
        for (double x = std::log(n * n) - 4.0; x <= std::log(n * n) + 2.0;
             x += 0.2) {
            const double d2 = (-psi(x + 2 * h) + 16 * psi(x + h) - 30 * psi(x) +
                               16 * psi(x - h) - psi(x - 2 * h)) /
                              (12 * h * h);
            const double ex = std::exp(x);
            const double v = ex * ex / (2.0 * n * n) - ex;
            residual = std::max(
                residual, std::abs(-0.5 * d2 + v * psi(x) - eig * psi(x)));
            scale = std::max(scale, std::abs(eig * psi(x)));
        }
        worst_transform = std::max(worst_transform, residual / scale);
    }
    list.add("fullline.morse_equation", worst_transform, config.tol_or(1e-8));

    // isospectrality via the finite-difference oracle
    const IsospectralityReport iso =
        verify_partner_spectra(n_test, default_morse_grid(n_test),
                               config.tol_or(1e-3));
    list.add("fullline.isospectrality", iso.max_abs_mismatch, iso.tol);
    list.add("fullline.morse_levels", iso.max_reference_error, iso.tol);
}

int cmd_verify(const RunConfig& config, const std::string& suite) {
    CheckList list;
    if (suite == "algebra" || suite == "all") verify_algebra_suite(config, list);
    if (suite == "halfline" || suite == "all") verify_halfline_suite(config, list);
    if (suite == "fullline" || suite == "all") verify_fullline_suite(config, list);

    std::ostringstream text;
    if (config.format == "json") {
        json doc = config_json(config);
        doc["command"] = "verify";
        doc["suite"] = suite;
        doc["pass"] = list.all_pass();
        doc["checks"] = json::array();
        for (const CheckResult& c : list.checks()) {
            doc["checks"].push_back({{"name", c.name},
                                     {"residual", c.residual},
                                     {"threshold", c.threshold},
                                     {"pass", c.pass}});
        }
        text << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        text << "# hartmann verify suite=" << suite << " gamma="
             << num(config.gamma()) << " capital_m=" << num(config.capital_m())
             << "\n";
        text << "check,residual,threshold,status\n";
        for (const CheckResult& c : list.checks()) {
            text << c.name << ',' << num(c.residual) << ',' << num(c.threshold)
                 << ',' << (c.pass ? "pass" : "fail") << "\n";
        }
    } else {
        for (const CheckResult& c : list.checks()) {
            char line[160];
            std::snprintf(line, sizeof(line), "[%s] %-34s residual %.3e (threshold %.3e)\n",
                          c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                          c.threshold);
            text << line;
        }
        text << (list.all_pass() ? "all checks passed\n" : "some checks FAILED\n");
    }
    emit(config, text.str());
    return list.all_pass() ? kExitOk : kExitToleranceFailure;
}

// ---------------------------------------------------------------------------
// partner

int cmd_partner(const RunConfig& config, double n) {
    const double cm = config.capital_m();
    const double delta = config.gamma();  // delta = eta sigma^2 = gamma in a.u.
    if (!(n > 1.0)) {
        std::cerr << "partner: N must exceed 1\n";
        return kExitInvalidConfig;
    }
    std::vector<double> ladder;
    try {
        ladder = allowed_l_values(n, cm);
    } catch (const std::invalid_argument& e) {
        std::cerr << "partner: " << e.what() << "\n";
        return kExitInvalidConfig;
    }
    const PartnerMapResult map = partner_map(n, delta);

    std::ostringstream text;
    if (config.format == "json") {
        json doc = config_json(config);
        doc["command"] = "partner";
        doc["n"] = n;
        doc["delta"] = delta;
        doc["n_prime"] = map.n_prime;
        doc["delta_prime"] = map.delta_prime;
        doc["energy_check"] = map.energy_check;
        doc["rows"] = json::array();
        for (double l : ladder) {
            json row = {{"l", l},
                        {"susy_eigenvalue", -0.5 * (l + 0.5) * (l + 0.5)},
                        {"bose", {{"n", n}, {"l", l}, {"delta", delta}}}};
            if (l < n - 1.5) {
                row["fermi"] = {{"n", map.n_prime},
                                {"l", l},
                                {"delta", map.delta_prime}};
            } else {
                row["fermi"] = nullptr;  // missing ground state
            }
            doc["rows"].push_back(row);
        }
        text << doc.dump(2) << "\n";
    } else if (config.format == "csv") {
        text << "# hartmann partner map (atomic units)\n";
        text << "# n=" << num(n) << " delta=" << num(delta) << " n_prime="
             << num(map.n_prime) << " delta_prime=" << num(map.delta_prime)
             << " energy_check=" << num(map.energy_check) << "\n";
        text << "l,susy_eigenvalue,bose_state,fermi_state\n";
        for (double l : ladder) {
            text << num(l) << ',' << num(-0.5 * (l + 0.5) * (l + 0.5)) << ','
                 << "u(" << num(n) << ";" << num(l) << ")" << ',';
            if (l < n - 1.5) {
                text << "u(" << num(map.n_prime) << ";" << num(l) << ")";
            } else {
                text << "missing";
            }
            text << "\n";
        }
    } else {
        text << "Full-line SUSY pairing: (N = " << short_num(n) << ", delta = "
             << short_num(delta) << ")  <->  (N' = " << short_num(map.n_prime)
             << ", delta' = " << short_num(map.delta_prime) << ")\n";
        char line[160];
        std::snprintf(line, sizeof(line), "%10s %18s %22s %26s\n", "L",
                      "SUSY eigenvalue", "bose (N, delta)", "fermi (N', delta')");
        text << line;
        for (double l : ladder) {
            const double susy = -0.5 * (l + 0.5) * (l + 0.5);
            char fermi[64];
            if (l < n - 1.5) {
                std::snprintf(fermi, sizeof(fermi), "u(%.4g, %.4g)", map.n_prime, l);
            } else {
                std::snprintf(fermi, sizeof(fermi), "-- missing ground state --");
            }
            std::snprintf(line, sizeof(line), "%10.4f %18.6f %22s %26s\n", l, susy,
                          (std::string("u(") + short_num(n) + ", " + short_num(l) +
                           ")")
                              .c_str(),
                          fermi);
            text << line;
        }
        text << "energy check delta'/N' - delta/N = " << num(map.energy_check)
             << "\n";
    }
    emit(config, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SUSY solver for the ring-shaped Hartmann potential (atomic units)"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--eta", config.eta, "potential parameter eta > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--sigma", config.sigma, "potential parameter sigma > 0")
        ->check(CLI::PositiveNumber);
    app.add_option("--m", config.m, "magnetic quantum number m");
    app.add_option("--depth", config.depth, "number of N levels")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", config.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", config.out_path, "write the report to a file");
    app.add_option("--tol", config.tol, "override the per-check tolerances")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid-points", config.grid_points, "oracle grid points")
        ->check(CLI::PositiveNumber);
    app.add_option("--grid-max", config.grid_max, "oracle grid upper end")
        ->check(CLI::PositiveNumber);
    app.add_option("--capital-m", config.capital_m_override,
                   "use this |M| instead of sqrt(m^2 + eta^2 sigma^2)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--gamma", config.gamma_override,
                   "use this gamma instead of eta sigma^2")
        ->check(CLI::PositiveNumber);

    auto* spectrum_cmd =
        app.add_subcommand("spectrum", "energy table with oracle cross-check");
    spectrum_cmd->fallthrough();

    auto* eigen_cmd =
        app.add_subcommand("eigenfunction", "sample u_NL and R_NL on a radial grid");
    eigen_cmd->fallthrough();
    double eigen_n = 1.0, eigen_l = 0.0;
    int eigen_samples = 200;
    eigen_cmd->add_option("--N", eigen_n, "principal label N")->required();
    eigen_cmd->add_option("--L", eigen_l, "angular label L")->required();
    eigen_cmd->add_option("--samples", eigen_samples, "number of radii");

    auto* verify_cmd =
        app.add_subcommand("verify", "run the SUSY invariant suites");
    verify_cmd->fallthrough();
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "algebra, halfline, fullline or all")
        ->check(CLI::IsMember({"algebra", "halfline", "fullline", "all"}));

    auto* partner_cmd =
        app.add_subcommand("partner", "full-line partner pairing report");
    partner_cmd->fallthrough();
    double partner_n = 3.0;
    partner_cmd->add_option("--N", partner_n, "principal label N > 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidConfig;
    }

    try {
        if (!(config.eta > 0.0) || !(config.sigma > 0.0)) {
            std::cerr << "invalid config: eta and sigma must be positive\n";
            return kExitInvalidConfig;
        }
        if (config.depth < 1) {
            std::cerr << "invalid config: depth must be at least 1\n";
            return kExitInvalidConfig;
        }
        if (spectrum_cmd->parsed()) return cmd_spectrum(config);
        if (eigen_cmd->parsed()) {
            return cmd_eigenfunction(config, eigen_n, eigen_l, eigen_samples);
        }
        if (verify_cmd->parsed()) return cmd_verify(config, suite);
        if (partner_cmd->parsed()) return cmd_partner(config, partner_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid config: " << e.what() << "\n";
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitToleranceFailure;
    }
    return kExitInvalidConfig;
}
