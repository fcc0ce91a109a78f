#include "blochpath/classical.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "blochpath/bloch.hpp"

namespace blochpath {

namespace {

using State = std::array<Complex, 2>;

State rhs(double t, const State& y, double omega, double delta) {
    const Complex i(0.0, 1.0);
    const double wp = 2.0 * omega - delta;
    const Complex f01 = std::polar(1.0, delta * t) + std::polar(1.0, -wp * t);
    const Complex f10 = std::polar(1.0, wp * t) + std::polar(1.0, -delta * t);
    return {-i * f01 * y[1], -i * f10 * y[0]};
}

State axpy(const State& y, double h, const State& k) {
    return {y[0] + h * k[0], y[1] + h * k[1]};
}

// One classic RK4 step.
State rk4_step(double t, const State& y, double h, double omega, double delta) {
    const State k1 = rhs(t, y, omega, delta);
    const State k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1), omega, delta);
    const State k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2), omega, delta);
    const State k4 = rhs(t + h, axpy(y, h, k3), omega, delta);
    State out;
    for (int j = 0; j < 2; ++j)
        out[j] = y[j] + (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    return out;
}

// Dormand-Prince 5(4) with FSAL. Steps are capped by the caller so the
// integrator lands exactly on requested output times.
struct Dopri5 {
    double omega, delta, rtol, atol;
    double t;
    State y;
    State k1;  // slope at (t, y), maintained FSAL
    double h;

    Dopri5(double t0, const State& y0, double omega_, double delta_, double rtol_, double atol_)
        : omega(omega_), delta(delta_), rtol(rtol_), atol(atol_), t(t0), y(y0) {
        k1 = rhs(t, y, omega, delta);
        h = initial_step();
    }

    double error_norm(const State& err, const State& ynew) const {
        double acc = 0.0;
        for (int j = 0; j < 2; ++j) {
            const double sc = atol + rtol * std::max(std::abs(y[j]), std::abs(ynew[j]));
            const double e = std::abs(err[j]) / sc;
            acc += e * e;
        }
        return std::sqrt(acc / 2.0);
    }

    double initial_step() const {
        double d0 = 0.0, d1 = 0.0;
        for (int j = 0; j < 2; ++j) {
            const double sc = atol + rtol * std::abs(y[j]);
            d0 += std::norm(y[j] / sc);
            d1 += std::norm(k1[j] / sc);
        }
        d0 = std::sqrt(d0 / 2.0);
        d1 = std::sqrt(d1 / 2.0);
        double h0 = 1e-6;
        if (std::isfinite(d0) && std::isfinite(d1) && d0 >= 1e-5 && d1 >= 1e-5)
            h0 = 0.01 * d0 / d1;
        return std::min(h0, 1e-2);
    }

    // Steps until t_target, capping each step so the solution lands exactly on
    // the target time. Throws on controller step-size underflow.
    void advance_to(double t_target) {
        while (true) {
            const double gap = t_target - t;
            if (gap <= 1e-14 * std::max(1.0, std::abs(t_target))) {
                t = t_target;
                break;
            }
            if (!(h >= 1e-14 * std::max(1.0, std::abs(t))))  // also catches non-finite h
                throw IntegrationError("adaptive step size underflow", t);
            const double hs = std::min(h, gap);

            static constexpr double a21 = 1.0 / 5.0;
            static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
            static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
            static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                                    a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
            static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                                    a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                                    a65 = -5103.0 / 18656.0;
            static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                                    b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
            static constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                                    e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

            State k2, k3, k4, k5, k6, k7, ynew, err;
            State tmp;
            for (int j = 0; j < 2; ++j) tmp[j] = y[j] + hs * a21 * k1[j];
            k2 = rhs(t + hs / 5.0, tmp, omega, delta);
            for (int j = 0; j < 2; ++j) tmp[j] = y[j] + hs * (a31 * k1[j] + a32 * k2[j]);
            k3 = rhs(t + 3.0 * hs / 10.0, tmp, omega, delta);
            for (int j = 0; j < 2; ++j)
                tmp[j] = y[j] + hs * (a41 * k1[j] + a42 * k2[j] + a43 * k3[j]);
            k4 = rhs(t + 4.0 * hs / 5.0, tmp, omega, delta);
            for (int j = 0; j < 2; ++j)
                tmp[j] = y[j] + hs * (a51 * k1[j] + a52 * k2[j] + a53 * k3[j] + a54 * k4[j]);
            k5 = rhs(t + 8.0 * hs / 9.0, tmp, omega, delta);
            for (int j = 0; j < 2; ++j)
                tmp[j] = y[j] + hs * (a61 * k1[j] + a62 * k2[j] + a63 * k3[j] + a64 * k4[j] +
                                      a65 * k5[j]);
            k6 = rhs(t + hs, tmp, omega, delta);
            for (int j = 0; j < 2; ++j)
                ynew[j] = y[j] + hs * (b1 * k1[j] + b3 * k3[j] + b4 * k4[j] + b5 * k5[j] +
                                       b6 * k6[j]);
            k7 = rhs(t + hs, ynew, omega, delta);
            for (int j = 0; j < 2; ++j)
                err[j] = hs * (e1 * k1[j] + e3 * k3[j] + e4 * k4[j] + e5 * k5[j] + e6 * k6[j] +
                               e7 * k7[j]);

            const double en = error_norm(err, ynew);
            if (std::isfinite(en) && en <= 1.0) {
                t += hs;
                y = ynew;
                k1 = k7;
                if (hs >= h) {  // controller step, not an output-capped one
                    const double grow = (en == 0.0) ? 5.0 : 0.9 * std::pow(en, -0.2);
                    h = hs * std::clamp(grow, 0.2, 5.0);
                }
            } else {
                const double shrink =
                    std::isfinite(en) ? std::clamp(0.9 * std::pow(en, -0.2), 0.2, 1.0) : 0.2;
                h = hs * shrink;
            }
        }
    }
};

}  // namespace

QubitAmplitudes rhs_classical(double t, const QubitAmplitudes& s, double omega, double detuning) {
    const State d = rhs(t, {s.c0, s.c1}, omega, detuning);
    return {d[0], d[1]};
}

std::vector<double> output_times(const SimConfig& cfg) {
    const double dt_nominal = cfg.drive_period() / cfg.samples_per_drive_period;
    const auto n = static_cast<std::size_t>(std::max(2.0, std::ceil(cfg.t_end / dt_nominal)));
    std::vector<double> ts(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        ts[i] = cfg.t_end * static_cast<double>(i) / static_cast<double>(n);
    return ts;
}

Trajectory integrate_classical(const SimConfig& cfg, const PropagatorSpec& spec) {
    cfg.validate_or_throw();
    {
        auto issues = spec.validate(cfg.omega);
        if (!issues.empty()) throw ValidationError(std::move(issues));
    }

    const auto ts = output_times(cfg);
    const QubitAmplitudes s0 = initial_qubit_state(cfg.theta0);

    Trajectory traj;
    traj.meta = cfg;
    traj.times = ts;
    traj.states.reserve(ts.size());
    traj.bloch.reserve(ts.size());

    auto push = [&](const State& y) {
        QubitAmplitudes s{y[0], y[1]};
        traj.states.push_back(s);
        traj.bloch.push_back(bloch_from_amplitudes(s));
    };

    if (spec.method == PropagatorSpec::Method::rk54_adaptive) {
        Dopri5 solver(0.0, {s0.c0, s0.c1}, cfg.omega, cfg.detuning, spec.rel_tol, spec.abs_tol);
        push(solver.y);
        for (std::size_t i = 1; i < ts.size(); ++i) {
            solver.advance_to(ts[i]);
            push(solver.y);
        }
    } else {
        // Fixed-step RK4: subdivide every output interval so h <= T/steps_per_period.
        const double h_target = cfg.drive_period() / spec.steps_per_period;
        State y{s0.c0, s0.c1};
        push(y);
        for (std::size_t i = 1; i < ts.size(); ++i) {
            const double span = ts[i] - ts[i - 1];
            const int nsub = std::max(1, static_cast<int>(std::ceil(span / h_target - 1e-12)));
            const double h = span / nsub;
            double t = ts[i - 1];
            for (int k = 0; k < nsub; ++k) {
                y = rk4_step(t, y, h, cfg.omega, cfg.detuning);
                t += h;
            }
            push(y);
        }
    }
    return traj;
}

QubitAmplitudes rwa_state(double t, const QubitAmplitudes& s0) {
    const Complex i(0.0, 1.0);
    const double c = std::cos(t), s = std::sin(t);
    return {s0.c0 * c - i * s0.c1 * s, s0.c1 * c - i * s0.c0 * s};
}

Trajectory rwa_trajectory(const SimConfig& cfg) {
    cfg.validate_or_throw();
    const auto ts = output_times(cfg);
    const QubitAmplitudes s0 = initial_qubit_state(cfg.theta0);

    Trajectory traj;
    traj.meta = cfg;
    traj.times = ts;
    traj.states.reserve(ts.size());
    traj.bloch.reserve(ts.size());
    for (double t : ts) {
        const QubitAmplitudes s = rwa_state(t, s0);
        traj.states.push_back(s);
        traj.bloch.push_back(bloch_from_amplitudes(s));
    }
    return traj;
}

}  // namespace blochpath
