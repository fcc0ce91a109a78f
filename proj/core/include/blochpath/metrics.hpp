#pragma once

#include "blochpath/quantum.hpp"
#include "blochpath/types.hpp"

namespace blochpath {

/// Euclidean distance on the Bloch ball.
double pointwise_distance(const BlochVector& r, const BlochVector& r_rwa);

/// Gate-scale RMS error
///   delta = sqrt( (1/tau) integral_0^tau ||R(t) - R_ref(t)||^2 dt ),
/// composite Simpson over the shared uniform grid. Both trajectories must be
/// sampled at identical times covering [0, tau].
double rms_gate_error(const Trajectory& traj_exact, const Trajectory& traj_ref, double tau);

/// Reference evolution the quantum delta is measured against. The
/// Jaynes-Cummings evolution (counter-rotating terms dropped, same alpha) is
/// the default: it isolates exactly the beyond-RWA error and reproduces the
/// ordering quantum(alpha) < classical. The classical RWA circle is kept as an
/// option for cross-model comparisons.
enum class QuantumReference { jaynes_cummings, classical_rwa };

struct DeltaScanSpec {
    enum class Model { classical, quantum };

    std::vector<double> omegas;
    Model model = Model::classical;
    double alpha = 1.0;  // quantum model only
    QuantumReference reference = QuantumReference::jaynes_cummings;
    double theta0 = 0.0;
    double tau = M_PI;
    int samples_per_drive_period = 64;
};

struct DeltaScanResult {
    std::vector<double> omegas;
    std::vector<double> deltas;        // NaN where the run failed
    std::vector<std::string> errors;   // parallel; empty string when the run succeeded
    double fitted_loglog_slope = std::numeric_limits<double>::quiet_NaN();
    bool slope_defined = false;        // needs >= 2 successful frequencies
};

/// delta per frequency plus a least-squares slope of log(delta) vs log(omega).
/// Per-frequency failures are recorded and the scan continues.
DeltaScanResult delta_scan(const DeltaScanSpec& spec);

/// Unweighted least-squares slope of log(y) against log(x) over positive,
/// finite pairs. NaN when fewer than two usable points exist.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace blochpath
