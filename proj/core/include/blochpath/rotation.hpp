#pragma once

#include <functional>
#include <optional>

#include "blochpath/types.hpp"

namespace blochpath {

/// Instantaneous rotation of the Bloch vector at resonance: axis n (in the XY
/// plane), speed theta_dot in [0, 4]. At cusp instants the axis is undefined
/// and `axis` is empty; the generator axis*speed is continuous and vanishes
/// there, so downstream code should prefer it.
struct RotationSample {
    double t = 0.0;
    std::optional<Vec3> axis;
    double speed = 0.0;
};

/// Rotation speed theta_dot(t) = 4 |cos(omega t)|.
double rotation_speed(double t, double omega);

/// Rotation axis ( |cos wt|, sin(wt) sgn[cos wt], 0 ); empty when |cos wt|
/// falls below cusp_tol (the axis flips sign there and is undefined).
std::optional<Vec3> rotation_axis(double t, double omega, double cusp_tol = 1e-14);

/// axis * speed in closed form: ( 2[1 + cos 2wt], 2 sin 2wt, 0 ). Smooth in t,
/// zero exactly at cusps.
Vec3 rotation_generator(double t, double omega);

RotationSample rotation_sample(double t, double omega);

/// Cusp instants t_k = (2k+1) pi / (2 omega), k = 0, 1, ..., with t_k <= t_end
/// (boundary included within relative tolerance 1e-9).
std::vector<double> cusp_times(double omega, double t_end);

/// Consistency check of the axis/speed decomposition against an integrated
/// resonant trajectory: for each consecutive sample pair the exact (Rodrigues)
/// rotation generated over [t, t+dt] — generator evaluated at the interval
/// midpoint — is applied to R(t) and compared with R(t+dt). Returns the max
/// Euclidean deviation. Throws ValidationError for detuned trajectories (the
/// decomposition is only derived at resonance).
double verify_decomposition(const Trajectory& traj, double omega);

/// Same check against an arbitrary generator t -> axis*speed (e.g. the
/// constant RWA generator (2, 0, 0)).
double verify_decomposition(const Trajectory& traj,
                            const std::function<Vec3(double)>& generator);

/// Rotates v by `angle` around `axis` (Rodrigues form; axis need not be unit).
Vec3 rotate_about(const Vec3& axis, double angle, const Vec3& v);

}  // namespace blochpath
