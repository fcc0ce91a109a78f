#include "blochpath/rotation.hpp"

#include <cmath>

namespace blochpath {

double rotation_speed(double t, double omega) { return 4.0 * std::abs(std::cos(omega * t)); }

std::optional<Vec3> rotation_axis(double t, double omega, double cusp_tol) {
    const double c = std::cos(omega * t);
    if (std::abs(c) < cusp_tol) return std::nullopt;  // cusp degeneracy
    const double sgn = (c > 0.0) ? 1.0 : -1.0;
    return Vec3{std::abs(c), std::sin(omega * t) * sgn, 0.0};
}

Vec3 rotation_generator(double t, double omega) {
    return {2.0 * (1.0 + std::cos(2.0 * omega * t)), 2.0 * std::sin(2.0 * omega * t), 0.0};
}

RotationSample rotation_sample(double t, double omega) {
    return {t, rotation_axis(t, omega), rotation_speed(t, omega)};
}

std::vector<double> cusp_times(double omega, double t_end) {
    std::vector<double> out;
    if (!(omega > 0.0)) throw ValidationError({"omega must be positive"});
    const double bound = t_end * (1.0 + 1e-9) + 1e-12;
    for (int k = 0;; ++k) {
        const double tk = (2.0 * k + 1.0) * M_PI / (2.0 * omega);
        if (tk > bound) break;
        out.push_back(tk);
    }
    return out;
}

Vec3 rotate_about(const Vec3& axis, double angle, const Vec3& v) {
    const double n = axis.norm();
    if (n == 0.0 || angle == 0.0) return v;
    const Vec3 u = axis / n;
    const double c = std::cos(angle), s = std::sin(angle);
    return v * c + cross(u, v) * s + u * (dot(u, v) * (1.0 - c));
}

double verify_decomposition(const Trajectory& traj,
                            const std::function<Vec3(double)>& generator) {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
        const double dt = traj.times[i + 1] - traj.times[i];
        const Vec3 g = generator(0.5 * (traj.times[i] + traj.times[i + 1]));
        const Vec3 predicted = rotate_about(g, g.norm() * dt, traj.bloch[i]);
        worst = std::max(worst, (predicted - traj.bloch[i + 1]).norm());
    }
    return worst;
}

double verify_decomposition(const Trajectory& traj, double omega) {
    if (traj.meta.detuning != 0.0)
        throw ValidationError({"rotation decomposition is only available at resonance (detuning 0)"});
    return verify_decomposition(
        traj, [omega](double t) { return rotation_generator(t, omega); });
}

}  // namespace blochpath
