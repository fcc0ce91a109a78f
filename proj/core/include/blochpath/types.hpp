#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace blochpath {

using Complex = std::complex<double>;

// Small 3-vector with value semantics; used for Bloch vectors, velocities,
// accelerations and rotation generators alike.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    double squared_norm() const { return x * x + y * y + z * z; }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Point on (or inside) the Bloch ball.
using BlochVector = Vec3;

/// Two-level amplitudes (C0, C1) in the rotating/interaction picture.
struct QubitAmplitudes {
    Complex c0{1.0, 0.0};
    Complex c1{0.0, 0.0};

    double squared_norm() const { return std::norm(c0) + std::norm(c1); }
};

/// Aggregated parameter-validation failure. `issues` lists every violation,
/// not just the first one.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues)
        : std::runtime_error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) {
            if (!out.empty()) out += "; ";
            out += s;
        }
        return out;
    }
    std::vector<std::string> issues_;
};

/// Numerical failure during propagation; carries the time that was reached.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double time_reached)
        : std::runtime_error(what + " (t = " + std::to_string(time_reached) + ")"),
          time_reached_(time_reached) {}

    double time_reached() const { return time_reached_; }

private:
    double time_reached_;
};

/// Simulation parameters for the classical-field model. All frequencies are in
/// units of the Rabi frequency (Omega = 1), times in 1/Omega.
struct SimConfig {
    double omega = 5.0;              // drive frequency
    double detuning = 0.0;           // Delta = omega - omega_a
    double theta0 = 0.0;             // initial polar angle of the Bloch vector
    double t_end = M_PI;             // evolution horizon
    int samples_per_drive_period = 64;

    double drive_period() const { return 2.0 * M_PI / omega; }

    std::vector<std::string> validate() const {
        std::vector<std::string> issues;
        if (!(omega > 0.0)) issues.push_back("omega must be positive");
        if (!(t_end > 0.0)) issues.push_back("t_end must be positive");
        if (samples_per_drive_period < 16)
            issues.push_back("samples_per_drive_period must be at least 16");
        return issues;
    }
    void validate_or_throw() const {
        auto issues = validate();
        if (!issues.empty()) throw ValidationError(std::move(issues));
    }
};

/// Time-ordered simulation output. `states` may be empty for reduced (quantum)
/// trajectories where only Bloch data is meaningful; all non-empty lists run
/// parallel to `times`.
struct Trajectory {
    std::vector<double> times;
    std::vector<QubitAmplitudes> states;
    std::vector<BlochVector> bloch;
    SimConfig meta;

    std::size_t size() const { return times.size(); }
};

/// Checks the Trajectory invariants (strictly increasing times, parallel list
/// lengths); returns violations as strings, empty when consistent.
std::vector<std::string> audit(const Trajectory& traj);

}  // namespace blochpath
