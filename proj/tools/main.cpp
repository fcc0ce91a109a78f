// blochpath: two-level-system dynamics in a monochromatic field, with and
// without the rotating wave approximation, plus Bloch-path geometry analysis.
// Subcommands emit machine-readable data files (CSV or JSON); runs are fully
// deterministic, so repeated invocations produce byte-identical output.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "blochpath/bloch.hpp"
#include "blochpath/classical.hpp"
#include "blochpath/geometry.hpp"
#include "blochpath/metrics.hpp"
#include "blochpath/quantum.hpp"
#include "blochpath/rotation.hpp"
#include "table_output.hpp"

using namespace blochpath;
using blochpath_cli::Table;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

struct CommonOpts {
    std::string out = "-";
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "Output path ('-' for stdout)")->capture_default_str();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

// RWA reference kinematics from the initial polar angle theta0 = 0 path:
// the great circle (0, -sin 2t, cos 2t) traversed at constant speed 2.
Vec3 rwa_velocity(double t) { return {0.0, -2.0 * std::cos(2.0 * t), -2.0 * std::sin(2.0 * t)}; }
Vec3 rwa_acceleration(double t) { return {0.0, 4.0 * std::sin(2.0 * t), -4.0 * std::cos(2.0 * t)}; }

void audit_or_fail(const Trajectory& traj, bool check_unit_ball = true) {
    auto issues = audit(traj);
    if (check_unit_ball) {
        for (const auto& r : traj.bloch) {
            if (r.norm() > 1.0 + 1e-9) {
                issues.push_back("Bloch vector left the unit ball");
                break;
            }
        }
    }
    if (!issues.empty()) throw IntegrationError("output audit failed: " + issues.front(), 0.0);
}

void audit_nondecreasing(const std::vector<double>& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] < s[i - 1]) throw IntegrationError("arc length decreased", 0.0);
}

void add_sim_params(Table& table, const SimConfig& cfg) {
    table.add_param("omega", cfg.omega);
    table.add_param("detuning", cfg.detuning);
    table.add_param("theta0", cfg.theta0);
    table.add_param("t_end", cfg.t_end);
    table.add_param("samples_per_period", static_cast<double>(cfg.samples_per_drive_period));
}

int run_classical_path(const SimConfig& cfg, const PropagatorSpec& spec, bool rwa, bool with_rwa,
                       const CommonOpts& opts) {
    cfg.validate_or_throw();
    const Trajectory traj = rwa ? rwa_trajectory(cfg) : integrate_classical(cfg, spec);
    const Trajectory ref = with_rwa ? rwa_trajectory(cfg) : Trajectory{};

    std::vector<double> speeds(traj.size()), kappas(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (rwa) {
            speeds[i] = rwa_velocity(traj.times[i]).norm();
            kappas[i] = curvature_from_derivatives(rwa_velocity(traj.times[i]),
                                                   rwa_acceleration(traj.times[i]));
        } else {
            speeds[i] = speed_and_sddot(traj.bloch[i], traj.times[i], cfg.omega).s_dot;
            kappas[i] = classical_curvature(traj.bloch[i], traj.times[i], cfg.omega);
        }
    }
    const auto s = arc_length(traj.times, speeds);

    Table table;
    table.scenario = rwa ? "classical-path-rwa" : "classical-path";
    add_sim_params(table, cfg);
    table.columns = {"t", "X", "Y", "Z", "s", "s_dot", "kappa"};
    if (with_rwa) {
        table.columns.insert(table.columns.end(), {"X_rwa", "Y_rwa", "Z_rwa", "s_rwa"});
    }
    for (std::size_t i = 0; i < traj.size(); ++i) {
        std::vector<double> row{traj.times[i], traj.bloch[i].x, traj.bloch[i].y,
                                traj.bloch[i].z, s[i],          speeds[i],
                                kappas[i]};
        if (with_rwa) {
            row.push_back(ref.bloch[i].x);
            row.push_back(ref.bloch[i].y);
            row.push_back(ref.bloch[i].z);
            row.push_back(2.0 * ref.times[i]);
        }
        table.rows.push_back(std::move(row));
    }
    blochpath_cli::write_output(table, opts.out, opts.format);
    audit_or_fail(traj);
    audit_nondecreasing(s);
    return 0;
}

int run_rotation_profile(const SimConfig& cfg, const CommonOpts& opts) {
    cfg.validate_or_throw();
    Table table;
    table.scenario = "rotation-profile";
    add_sim_params(table, cfg);
    table.columns = {"t", "theta_dot", "n_x", "n_y"};
    for (double t : output_times(cfg)) {
        const auto axis = rotation_axis(t, cfg.omega);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        table.rows.push_back({t, rotation_speed(t, cfg.omega), axis ? axis->x : nan,
                              axis ? axis->y : nan});
    }
    blochpath_cli::write_output(table, opts.out, opts.format);
    return 0;
}

int run_curvature(const SimConfig& cfg, const PropagatorSpec& spec, const CommonOpts& opts) {
    cfg.validate_or_throw();
    const Trajectory traj = integrate_classical(cfg, spec);
    Table table;
    table.scenario = "curvature";
    add_sim_params(table, cfg);
    table.columns = {"t", "omega_t", "kappa"};
    for (std::size_t i = 0; i < traj.size(); ++i)
        table.rows.push_back({traj.times[i], cfg.omega * traj.times[i],
                              classical_curvature(traj.bloch[i], traj.times[i], cfg.omega)});
    blochpath_cli::write_output(table, opts.out, opts.format);
    audit_or_fail(traj);
    return 0;
}

int run_arclength(const SimConfig& cfg, const PropagatorSpec& spec, const CommonOpts& opts) {
    cfg.validate_or_throw();
    const Trajectory traj = integrate_classical(cfg, spec);
    const auto s = arc_length(traj);
    Table table;
    table.scenario = "arclength";
    add_sim_params(table, cfg);
    table.columns = {"t", "s", "s_dot", "s_rwa"};
    for (std::size_t i = 0; i < traj.size(); ++i)
        table.rows.push_back({traj.times[i], s[i],
                              speed_and_sddot(traj.bloch[i], traj.times[i], cfg.omega).s_dot,
                              2.0 * traj.times[i]});
    blochpath_cli::write_output(table, opts.out, opts.format);
    audit_or_fail(traj);
    audit_nondecreasing(s);
    return 0;
}

int run_cusps(const SimConfig& cfg, const CommonOpts& opts) {
    if (!(cfg.omega > 0.0)) throw ValidationError({"omega must be positive"});
    Table table;
    table.scenario = "cusps";
    table.add_param("omega", cfg.omega);
    table.add_param("t_end", cfg.t_end);
    table.columns = {"k", "t_k"};
    const auto tk = cusp_times(cfg.omega, cfg.t_end);
    for (std::size_t k = 0; k < tk.size(); ++k)
        table.rows.push_back({static_cast<double>(k), tk[k]});
    blochpath_cli::write_output(table, opts.out, opts.format);
    return 0;
}

void add_quantum_params(Table& table, const QuantumConfig& cfg) {
    table.add_param("alpha", cfg.alpha);
    table.add_param("theta0", cfg.theta0);
    table.add_param("omega", cfg.omega);
    table.add_param("n_max", static_cast<double>(cfg.effective_n_max()));
    table.add_param("lambda", cfg.effective_lambda());
    table.add_param("t_end", cfg.t_end);
    table.add_param("samples_per_period", static_cast<double>(cfg.samples_per_drive_period));
    table.add_param("rwa", cfg.rwa ? 1.0 : 0.0);
}

int run_quantum_path(const QuantumConfig& cfg, const CommonOpts& opts) {
    cfg.validate_or_throw();
    const Trajectory traj = quantum_trajectory(cfg);
    Table table;
    table.scenario = "quantum-path";
    add_quantum_params(table, cfg);
    table.columns = {"t", "X", "Y", "Z", "R_norm"};
    for (std::size_t i = 0; i < traj.size(); ++i)
        table.rows.push_back({traj.times[i], traj.bloch[i].x, traj.bloch[i].y, traj.bloch[i].z,
                              traj.bloch[i].norm()});
    blochpath_cli::write_output(table, opts.out, opts.format);
    audit_or_fail(traj);
    return 0;
}

int run_table1(double omega, int peak_grid, const CommonOpts& opts) {
    if (!(omega > 0.0)) throw ValidationError({"omega must be positive"});
    const double t1 = M_PI / (2.0 * omega);
    const double t2 = 3.0 * M_PI / (2.0 * omega);
    const double half_window = std::min(0.1, 0.45 * M_PI / omega);

    Table table;
    table.scenario = "table1";
    table.add_param("omega", omega);
    table.add_param("t1", t1);
    table.add_param("t2", t2);
    table.columns = {"alpha",       "theta0",  "kappa_t1",    "kappa_t2",
                     "peak1_t",     "peak1_kappa", "peak2_t", "peak2_kappa"};

    const std::pair<double, double> cases[] = {{1.0, 0.0}, {1.0, M_PI}, {5.0, 0.0}};
    for (const auto& [alpha, theta] : cases) {
        QuantumConfig cfg;
        cfg.alpha = alpha;
        cfg.theta0 = theta;
        cfg.omega = omega;
        cfg.validate_or_throw();
        const auto H = build_hamiltonian(cfg, false);
        const SpectralPropagator prop(H);
        const EhrenfestKinematics kin(H, cfg);
        const auto psi0 = initial_joint_state(cfg);

        const double k1 = kin.sample(prop.evolve(psi0, t1), t1).kappa;
        const double k2 = kin.sample(prop.evolve(psi0, t2), t2).kappa;
        const auto p1 =
            find_curvature_peak(prop, kin, psi0, t1 - half_window, t1 + half_window, peak_grid);
        const auto p2 =
            find_curvature_peak(prop, kin, psi0, t2 - half_window, t2 + half_window, peak_grid);
        table.rows.push_back({alpha, theta, k1, k2, p1.t, p1.kappa, p2.t, p2.kappa});
    }
    blochpath_cli::write_output(table, opts.out, opts.format);
    return 0;
}

int run_delta_scan(const DeltaScanSpec& spec, const CommonOpts& opts) {
    const auto res = delta_scan(spec);

    Table table;
    table.scenario = "delta-scan";
    table.add_param("model",
                    spec.model == DeltaScanSpec::Model::classical ? "classical" : "quantum");
    if (spec.model == DeltaScanSpec::Model::quantum) {
        table.add_param("alpha", spec.alpha);
        table.add_param("reference", spec.reference == QuantumReference::jaynes_cummings
                                         ? "jaynes-cummings"
                                         : "classical-rwa");
    }
    table.add_param("tau", spec.tau);
    table.add_param("samples_per_period", static_cast<double>(spec.samples_per_drive_period));
    table.columns = {"omega", "delta"};
    bool any_ok = false;
    for (std::size_t i = 0; i < res.omegas.size(); ++i) {
        table.rows.push_back({res.omegas[i], res.deltas[i]});
        if (res.errors[i].empty())
            any_ok = true;
        else
            table.trailing_comments.push_back("omega=" + blochpath_cli::format_double(res.omegas[i]) +
                                              " failed: " + res.errors[i]);
    }
    table.trailing_comments.push_back(
        "fitted_loglog_slope: " +
        (res.slope_defined ? blochpath_cli::format_double(res.fitted_loglog_slope)
                           : std::string("undefined (needs >= 2 frequencies)")));
    blochpath_cli::write_output(table, opts.out, opts.format);
    if (!any_ok) throw IntegrationError("every frequency in the scan failed", 0.0);
    return 0;
}

std::vector<double> parse_omega_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (...) {
            throw ValidationError({"cannot parse omega list entry: '" + item + "'"});
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-level system in a monochromatic field: exact vs RWA dynamics,\n"
                 "Bloch-path geometry (rotation axis/speed, cusps, arc length, curvature)\n"
                 "and quantized-field comparisons."};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value file ([subcommand] sections)");
    app.get_formatter()->column_width(30);

    SimConfig sim;
    QuantumConfig qcfg;
    PropagatorSpec prop_spec;
    CommonOpts opts;
    bool rwa = false, with_rwa = false;
    std::string method = "rk54";
    std::string omegas_csv = "10,20,40,80,160";
    std::string model = "classical";
    std::string reference = "jaynes-cummings";
    int peak_grid = 800;

    auto add_sim_flags = [&](CLI::App* cmd, bool with_detuning = true) {
        cmd->add_option("--omega", sim.omega, "Drive frequency (units of the Rabi frequency)")
            ->capture_default_str();
        if (with_detuning)
            cmd->add_option("--detuning", sim.detuning, "Detuning omega - omega_a")
                ->capture_default_str();
        cmd->add_option("--theta0", sim.theta0, "Initial polar angle (rad)")
            ->capture_default_str();
        cmd->add_option("--t-end", sim.t_end, "Evolution horizon (units of 1/Omega)")
            ->capture_default_str();
        cmd->add_option("--samples-per-period", sim.samples_per_drive_period,
                        "Output samples per drive period")
            ->capture_default_str();
    };
    auto add_integrator_flags = [&](CLI::App* cmd) {
        cmd->add_option("--method", method, "Integrator: rk54 (adaptive) or rk4 (fixed step)")
            ->check(CLI::IsMember({"rk54", "rk4"}))
            ->capture_default_str();
        cmd->add_option("--rel-tol", prop_spec.rel_tol, "Adaptive relative tolerance")
            ->capture_default_str();
        cmd->add_option("--abs-tol", prop_spec.abs_tol, "Adaptive absolute tolerance")
            ->capture_default_str();
        cmd->add_option("--steps-per-period", prop_spec.steps_per_period,
                        "Fixed-step integrator resolution")
            ->capture_default_str();
    };

    auto* cp = app.add_subcommand("classical-path",
                                  "Bloch path of the classical-field model (or its RWA circle)");
    add_sim_flags(cp);
    add_integrator_flags(cp);
    cp->add_flag("--rwa", rwa, "Emit the RWA reference path instead of the exact one");
    cp->add_flag("--with-rwa", with_rwa, "Append same-time RWA reference columns");
    add_common(cp, opts);

    auto* rp = app.add_subcommand("rotation-profile",
                                  "Instantaneous rotation speed and axis of the exact evolution");
    add_sim_flags(rp, false);
    add_common(rp, opts);

    auto* cv = app.add_subcommand("curvature", "Curvature versus rescaled time omega*t");
    add_sim_flags(cv, false);
    add_integrator_flags(cv);
    add_common(cv, opts);

    auto* al = app.add_subcommand("arclength", "Path length s(t) with the RWA reference 2t");
    add_sim_flags(al, false);
    add_integrator_flags(al);
    add_common(al, opts);

    auto* cu = app.add_subcommand("cusps", "Cusp times t_k = (2k+1) pi / (2 omega)");
    cu->add_option("--omega", sim.omega, "Drive frequency")->capture_default_str();
    cu->add_option("--t-end", sim.t_end, "List cusps up to this time")->capture_default_str();
    add_common(cu, opts);

    auto* qp = app.add_subcommand("quantum-path",
                                  "Reduced Bloch path for a coherent quantized field");
    qp->add_option("--alpha", qcfg.alpha, "Coherent amplitude (mean photons alpha^2)")
        ->capture_default_str();
    qp->add_option("--theta0", qcfg.theta0, "Initial qubit polar angle")->capture_default_str();
    qp->add_option("--omega", qcfg.omega, "Field frequency (= qubit frequency)")
        ->capture_default_str();
    qp->add_option("--n-max", qcfg.n_max, "Fock cutoff (negative: automatic)")
        ->capture_default_str();
    double lambda_opt = 0.0;
    auto* lam_flag = qp->add_option("--lambda", lambda_opt, "Coupling (default 1/alpha)");
    qp->add_option("--t-end", qcfg.t_end, "Evolution horizon")->capture_default_str();
    qp->add_option("--samples-per-period", qcfg.samples_per_drive_period,
                   "Output samples per drive period")
        ->capture_default_str();
    qp->add_flag("--rwa", qcfg.rwa, "Jaynes-Cummings evolution (counter-rotating terms dropped)");
    add_common(qp, opts);

    auto* t1 = app.add_subcommand(
        "table1", "Curvature of the quantum path at the first two classical cusp times");
    double t1_omega = 5.0;
    t1->add_option("--omega", t1_omega, "Field frequency")->capture_default_str();
    t1->add_option("--peak-grid", peak_grid, "Grid points for the peak search")
        ->capture_default_str();
    add_common(t1, opts);

    auto* ds = app.add_subcommand("delta-scan",
                                  "RMS exact-vs-RWA gate error delta over a frequency sweep");
    ds->add_option("--model", model, "classical or quantum")
        ->check(CLI::IsMember({"classical", "quantum"}))
        ->capture_default_str();
    ds->add_option("--alpha", qcfg.alpha, "Coherent amplitude (quantum model)")
        ->capture_default_str();
    ds->add_option("--omegas", omegas_csv, "Comma-separated frequency list")
        ->capture_default_str();
    ds->add_option("--reference", reference,
                   "Quantum reference evolution: jaynes-cummings or classical-rwa")
        ->check(CLI::IsMember({"jaynes-cummings", "classical-rwa"}))
        ->capture_default_str();
    ds->add_option("--theta0", qcfg.theta0, "Initial polar angle")->capture_default_str();
    ds->add_option("--t-end", sim.t_end, "Gate horizon tau")->capture_default_str();
    ds->add_option("--samples-per-period", sim.samples_per_drive_period,
                   "Output samples per drive period")
        ->capture_default_str();
    add_common(ds, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        prop_spec.method = (method == "rk4") ? PropagatorSpec::Method::rk4_fixed
                                             : PropagatorSpec::Method::rk54_adaptive;
        if (lam_flag->count() > 0) qcfg.lambda = lambda_opt;

        if (cp->parsed()) return run_classical_path(sim, prop_spec, rwa, with_rwa, opts);
        if (rp->parsed()) return run_rotation_profile(sim, opts);
        if (cv->parsed()) return run_curvature(sim, prop_spec, opts);
        if (al->parsed()) return run_arclength(sim, prop_spec, opts);
        if (cu->parsed()) return run_cusps(sim, opts);
        if (qp->parsed()) return run_quantum_path(qcfg, opts);
        if (t1->parsed()) return run_table1(t1_omega, peak_grid, opts);
        if (ds->parsed()) {
            DeltaScanSpec spec;
            spec.omegas = parse_omega_list(omegas_csv);
            spec.model = (model == "quantum") ? DeltaScanSpec::Model::quantum
                                              : DeltaScanSpec::Model::classical;
            spec.alpha = qcfg.alpha;
            spec.reference = (reference == "classical-rwa") ? QuantumReference::classical_rwa
                                                            : QuantumReference::jaynes_cummings;
            spec.theta0 = qcfg.theta0;
            spec.tau = sim.t_end;
            spec.samples_per_drive_period = sim.samples_per_drive_period;
            return run_delta_scan(spec, opts);
        }
        std::cerr << "no scenario selected\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        for (const auto& issue : e.issues()) std::cerr << "error: " << issue << "\n";
        return kExitValidation;
    } catch (const IntegrationError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
