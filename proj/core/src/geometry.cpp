#include "blochpath/geometry.hpp"

#include <cmath>
#include <limits>

namespace blochpath {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

Vec3 classical_velocity(const BlochVector& r, double t, double omega) {
    const double c = std::cos(omega * t), s = std::sin(omega * t);
    return {-4.0 * r.z * s * c,
            4.0 * r.z * c * c,
            4.0 * c * (r.x * s - r.y * c)};
}

Vec3 classical_acceleration(const BlochVector& r, double t, double omega) {
    const double c2 = std::cos(2.0 * omega * t), s2 = std::sin(2.0 * omega * t);
    return {-4.0 * r.z * omega * c2,
            -4.0 * r.z * omega * s2,
            4.0 * omega * (r.x * c2 + r.y * s2)};
}

SpeedDerivatives speed_and_sddot(const BlochVector& r, double t, double omega) {
    const double c = std::cos(omega * t), s = std::sin(omega * t);
    const double w = r.x * s - r.y * c;
    const double q = std::sqrt(r.z * r.z + w * w);

    SpeedDerivatives out;
    out.s_dot = 4.0 * std::abs(c) * q;

    // d|cos(wt)|/dt = -w sin(wt) sgn[cos(wt)]; at a cusp sgn is one-sided and the
    // outgoing branch has sgn = -sgn(sin(wt)).
    double sgn_c;
    if (std::abs(c) < 1e-14) {
        sgn_c = (s > 0.0) ? -1.0 : 1.0;
        out.one_sided = true;
    } else {
        sgn_c = (c > 0.0) ? 1.0 : -1.0;
    }
    const double dabscos = -omega * s * sgn_c;

    // d/dt sqrt(Z^2 + W^2) along the flow reduces to w W (X cos + Y sin) / q.
    const double dq = (q > 0.0) ? omega * w * (r.x * c + r.y * s) / q : 0.0;
    out.s_ddot = 4.0 * (dabscos * q + std::abs(c) * dq);
    return out;
}

double curvature_from_derivatives(const Vec3& v, const Vec3& a, double speed_floor) {
    const double nv = v.norm();
    if (nv < speed_floor) return kInf;
    return cross(v, a).norm() / (nv * nv * nv);
}

double classical_curvature(const BlochVector& r, double t, double omega, double speed_floor) {
    const Vec3 v = classical_velocity(r, t, omega);
    const Vec3 a = classical_acceleration(r, t, omega);
    const SpeedDerivatives sd = speed_and_sddot(r, t, omega);
    if (sd.s_dot < speed_floor) return kInf;
    const Vec3 tangent = v / sd.s_dot;
    return (a - tangent * sd.s_ddot).norm() / (sd.s_dot * sd.s_dot);
}

KinematicSample classical_kinematics(const BlochVector& r, double t, double omega) {
    KinematicSample k;
    k.t = t;
    k.r = r;
    k.v = classical_velocity(r, t, omega);
    k.a = classical_acceleration(r, t, omega);
    const SpeedDerivatives sd = speed_and_sddot(r, t, omega);
    k.s_dot = sd.s_dot;
    k.s_ddot = sd.s_ddot;
    k.s_ddot_one_sided = sd.one_sided;
    k.kappa = classical_curvature(r, t, omega);
    return k;
}

std::vector<double> cumulative_integral(const std::vector<double>& times,
                                        const std::vector<double>& values) {
    if (times.size() != values.size())
        throw ValidationError({"times and values must have equal length"});
    const std::size_t n = times.size();
    std::vector<double> s(n, 0.0);
    if (n < 2) return s;
    const double h = times[1] - times[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) {
            s[i] = s[i - 2] + h / 3.0 * (values[i - 2] + 4.0 * values[i - 1] + values[i]);
        } else if (i + 1 < n) {
            s[i] = s[i - 1] + h / 12.0 * (5.0 * values[i - 1] + 8.0 * values[i] - values[i + 1]);
        } else {
            s[i] = s[i - 1] + h / 2.0 * (values[i - 1] + values[i]);
        }
    }
    return s;
}

std::vector<double> arc_length(const std::vector<double>& times,
                               const std::vector<double>& speeds) {
    return cumulative_integral(times, speeds);
}

std::vector<double> arc_length(const Trajectory& traj) {
    std::vector<double> speeds(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i)
        speeds[i] = speed_and_sddot(traj.bloch[i], traj.times[i], traj.meta.omega).s_dot;
    return arc_length(traj.times, speeds);
}

std::vector<double> arc_length_rwa(const std::vector<double>& times) {
    std::vector<double> s(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) s[i] = 2.0 * times[i];
    return s;
}

std::vector<std::size_t> local_minima(const std::vector<double>& values, double threshold) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        if (values[i] <= values[i - 1] && values[i] <= values[i + 1] && values[i] < threshold)
            idx.push_back(i);
    return idx;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& values) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        if (values[i] >= values[i - 1] && values[i] > values[i + 1]) idx.push_back(i);
    return idx;
}

}  // namespace blochpath
