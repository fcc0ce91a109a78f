#include "blochpath/bloch.hpp"

#include <algorithm>
#include <cmath>

namespace blochpath {

BlochVector bloch_from_amplitudes(const QubitAmplitudes& s, double norm_tol) {
    const double n2 = s.squared_norm();
    if (std::abs(n2 - 1.0) > norm_tol) {
        throw ValidationError({"amplitudes not normalized: |c0|^2+|c1|^2 = " + std::to_string(n2)});
    }
    const double c0r = s.c0.real(), c0i = s.c0.imag();
    const double c1r = s.c1.real(), c1i = s.c1.imag();
    return {2.0 * (c0r * c1r + c0i * c1i),
            2.0 * (c0r * c1i - c0i * c1r),
            2.0 * (c0r * c0r + c0i * c0i) - 1.0};
}

QubitAmplitudes initial_qubit_state(double theta0) {
    return {Complex(std::cos(0.5 * theta0), 0.0), Complex(std::sin(0.5 * theta0), 0.0)};
}

QubitAmplitudes amplitudes_from_bloch(const BlochVector& r) {
    const double z = std::clamp(r.z, -1.0, 1.0);
    const double theta = std::acos(z);
    const double phi = std::atan2(r.y, r.x);
    return {Complex(std::cos(0.5 * theta), 0.0),
            std::polar(std::sin(0.5 * theta), phi)};
}

std::vector<std::string> audit(const Trajectory& traj) {
    std::vector<std::string> issues;
    for (std::size_t i = 1; i < traj.times.size(); ++i) {
        if (!(traj.times[i] > traj.times[i - 1])) {
            issues.push_back("times not strictly increasing at index " + std::to_string(i));
            break;
        }
    }
    if (traj.bloch.size() != traj.times.size())
        issues.push_back("bloch list length differs from times");
    if (!traj.states.empty() && traj.states.size() != traj.times.size())
        issues.push_back("states list length differs from times");
    return issues;
}

}  // namespace blochpath
