#pragma once

#include "blochpath/types.hpp"

namespace blochpath {

/// Integrator selection for the classical-field propagator.
struct PropagatorSpec {
    enum class Method { rk4_fixed, rk54_adaptive };

    Method method = Method::rk54_adaptive;
    double rel_tol = 1e-10;   // adaptive mode
    double abs_tol = 1e-12;   // adaptive mode
    int steps_per_period = 256;  // fixed-step mode; must keep h <= T/16

    std::vector<std::string> validate(double omega) const {
        std::vector<std::string> issues;
        if (method == Method::rk4_fixed && steps_per_period < 16)
            issues.push_back("fixed-step integration needs at least 16 steps per drive period");
        if (method == Method::rk54_adaptive && (!(rel_tol > 0.0) || !(abs_tol > 0.0)))
            issues.push_back("adaptive tolerances must be positive");
        (void)omega;
        return issues;
    }
};

/// Right-hand side of the interaction-picture equations of motion,
///   i dC0/dt = [e^{i Delta t} + e^{-i(2 omega - Delta) t}] C1
///   i dC1/dt = [e^{i(2 omega - Delta) t} + e^{-i Delta t}] C0,
/// with Delta = omega - omega_a. Purely algebraic.
QubitAmplitudes rhs_classical(double t, const QubitAmplitudes& s, double omega,
                              double detuning = 0.0);

/// Propagates from initial_qubit_state(cfg.theta0) and samples the state on a
/// uniform grid covering [0, t_end] with at least cfg.samples_per_drive_period
/// samples per drive period (the spacing is rounded so the grid lands exactly
/// on t_end). Adaptive steps are capped at output times, so sampled states are
/// integrator-exact. Throws IntegrationError on step-size underflow.
Trajectory integrate_classical(const SimConfig& cfg, const PropagatorSpec& spec = {});

/// Closed-form state under the resonant rotating wave approximation:
///   (C0(0) cos t - i C1(0) sin t,  C1(0) cos t - i C0(0) sin t).
QubitAmplitudes rwa_state(double t, const QubitAmplitudes& s0);

/// RWA reference trajectory sampled on the same grid integrate_classical uses.
Trajectory rwa_trajectory(const SimConfig& cfg);

/// The uniform output grid for a config (exposed so comparison code can pair
/// exact and reference trajectories sample by sample).
std::vector<double> output_times(const SimConfig& cfg);

}  // namespace blochpath
