#include "blochpath/metrics.hpp"

#include <cmath>

#include "blochpath/classical.hpp"
#include "blochpath/geometry.hpp"

namespace blochpath {

double pointwise_distance(const BlochVector& r, const BlochVector& r_rwa) {
    return (r - r_rwa).norm();
}

double rms_gate_error(const Trajectory& traj_exact, const Trajectory& traj_ref, double tau) {
    if (traj_exact.size() != traj_ref.size() || traj_exact.size() < 3)
        throw ValidationError({"trajectories must share a grid of at least 3 samples"});
    for (std::size_t i = 0; i < traj_exact.size(); ++i)
        if (std::abs(traj_exact.times[i] - traj_ref.times[i]) > 1e-12)
            throw ValidationError({"time grids differ at index " + std::to_string(i)});
    if (std::abs(traj_exact.times.front()) > 1e-12 ||
        std::abs(traj_exact.times.back() - tau) > 1e-9)
        throw ValidationError({"trajectories must cover [0, tau]"});

    std::vector<double> d2(traj_exact.size());
    for (std::size_t i = 0; i < traj_exact.size(); ++i) {
        const double d = pointwise_distance(traj_exact.bloch[i], traj_ref.bloch[i]);
        d2[i] = d * d;
    }
    const auto integral = cumulative_integral(traj_exact.times, d2);
    return std::sqrt(integral.back() / tau);
}

namespace {

double delta_for_omega(const DeltaScanSpec& spec, double omega) {
    SimConfig cfg{omega, 0.0, spec.theta0, spec.tau, spec.samples_per_drive_period};
    if (spec.model == DeltaScanSpec::Model::classical) {
        const Trajectory exact = integrate_classical(cfg);
        const Trajectory ref = rwa_trajectory(cfg);
        return rms_gate_error(exact, ref, spec.tau);
    }
    QuantumConfig qcfg;
    qcfg.alpha = spec.alpha;
    qcfg.theta0 = spec.theta0;
    qcfg.omega = omega;
    qcfg.t_end = spec.tau;
    qcfg.samples_per_drive_period = spec.samples_per_drive_period;
    const Trajectory exact = quantum_trajectory(qcfg);
    const Trajectory ref = (spec.reference == QuantumReference::jaynes_cummings)
                               ? jaynes_cummings_trajectory(qcfg)
                               : rwa_trajectory(cfg);
    return rms_gate_error(exact, ref, spec.tau);
}

}  // namespace

DeltaScanResult delta_scan(const DeltaScanSpec& spec) {
    if (spec.omegas.empty()) throw ValidationError({"delta scan needs at least one omega"});
    for (std::size_t i = 1; i < spec.omegas.size(); ++i)
        if (!(spec.omegas[i] > spec.omegas[i - 1]))
            throw ValidationError({"omegas must be strictly increasing"});

    DeltaScanResult res;
    res.omegas = spec.omegas;
    res.deltas.assign(spec.omegas.size(), std::numeric_limits<double>::quiet_NaN());
    res.errors.assign(spec.omegas.size(), "");
    for (std::size_t i = 0; i < spec.omegas.size(); ++i) {
        try {
            res.deltas[i] = delta_for_omega(spec, spec.omegas[i]);
        } catch (const std::exception& e) {
            res.errors[i] = e.what();
        }
    }
    res.fitted_loglog_slope = loglog_slope(res.omegas, res.deltas);
    res.slope_defined = std::isfinite(res.fitted_loglog_slope);
    return res;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0) || !std::isfinite(y[i])) continue;
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return (n * sxy - sx * sy) / denom;
}

}  // namespace blochpath
