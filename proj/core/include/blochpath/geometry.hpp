#pragma once

#include "blochpath/types.hpp"

namespace blochpath {

/// Position plus derivative data at one trajectory sample. `kappa` is
/// +infinity exactly at cusps (serialized as "inf" downstream).
struct KinematicSample {
    double t = 0.0;
    BlochVector r;
    Vec3 v;
    Vec3 a;
    double s_dot = 0.0;
    double s_ddot = 0.0;
    bool s_ddot_one_sided = false;  // set at cusp instants (|cos wt| derivative jumps)
    double kappa = 0.0;
};

/// Closed-form velocity of the resonant classical-field Bloch path,
///   V = ( -4Z sin(wt) cos(wt),  4Z cos^2(wt),  4 cos(wt) [X sin(wt) - Y cos(wt)] ),
/// i.e. V = R x G(t) with G the rotation generator. The propagated flow runs
/// opposite (dR/dt = G x R = -V); speed, arc length and curvature agree.
Vec3 classical_velocity(const BlochVector& r, double t, double omega);

/// Matching second-derivative field,
///   A = ( -4Zw cos(2wt),  -4Zw sin(2wt),  4w [X cos(2wt) + Y sin(2wt)] )
///     = R x dG/dt: the time derivative of the velocity field at fixed R.
Vec3 classical_acceleration(const BlochVector& r, double t, double omega);

struct SpeedDerivatives {
    double s_dot = 0.0;
    double s_ddot = 0.0;
    bool one_sided = false;  // s_ddot carries the outgoing (right) limit at a cusp
};

/// Path speed s_dot = |V| = 4|cos(wt)| sqrt(Z^2 + W^2), W = X sin(wt) - Y cos(wt),
/// and its time derivative s_ddot (tangential acceleration). At cusp instants
/// d|cos|/dt is one-sided; the right limit is returned and flagged.
SpeedDerivatives speed_and_sddot(const BlochVector& r, double t, double omega);

/// Curvature of the classical path assembled from the closed forms above,
///   kappa = |A - s_ddot T| / s_dot^2  with T = V / s_dot.
/// Returns +infinity when s_dot < speed_floor (cusp; the curvature diverges there).
double classical_curvature(const BlochVector& r, double t, double omega,
                           double speed_floor = 1e-12);

/// Generic curvature |v x a| / |v|^3; +infinity when |v| < speed_floor. Used
/// for the quantum model, where the closed forms above do not apply.
double curvature_from_derivatives(const Vec3& v, const Vec3& a, double speed_floor = 1e-12);

/// Full kinematic sample of the classical path at (r, t).
KinematicSample classical_kinematics(const BlochVector& r, double t, double omega);

/// Cumulative composite-Simpson integral of uniformly sampled values
/// (asymmetric 4th-order rule on odd half-intervals); out[0] = 0.
std::vector<double> cumulative_integral(const std::vector<double>& times,
                                        const std::vector<double>& values);

/// Cumulative arc length over uniformly sampled speeds; s[0] = 0,
/// nondecreasing for nonnegative speeds.
std::vector<double> arc_length(const std::vector<double>& times,
                               const std::vector<double>& speeds);

/// Arc length of an exact classical-field trajectory using the closed-form
/// speed at each sample (does not apply to the RWA circle; use arc_length_rwa).
std::vector<double> arc_length(const Trajectory& traj);

/// Arc length of the RWA reference path (constant speed 2): s(t) = 2t.
std::vector<double> arc_length_rwa(const std::vector<double>& times);

/// Indices of interior local minima of `values` with value below `threshold`
/// (plateau / cusp detection on sampled speeds).
std::vector<std::size_t> local_minima(const std::vector<double>& values, double threshold);

/// Indices of interior local maxima (exploratory curvature-peak finder).
std::vector<std::size_t> local_maxima(const std::vector<double>& values);

}  // namespace blochpath
