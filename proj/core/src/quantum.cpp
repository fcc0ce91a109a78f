#include "blochpath/quantum.hpp"

#include <cmath>

#include "blochpath/classical.hpp"

namespace blochpath {

namespace {

// Annihilation operator on the truncated Fock space.
Eigen::MatrixXd annihilation(int n_max) {
    const int N = n_max + 1;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(N, N);
    for (int n = 1; n < N; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

// |0><1| x I and (|0><0| - |1><1|) x I over the joint basis.
Eigen::MatrixXcd sigma_minus_joint(int n_max) {
    const int N = n_max + 1;
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) op(n, N + n) = 1.0;
    return op;
}

Eigen::MatrixXcd sigma_z_joint(int n_max) {
    const int N = n_max + 1;
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) {
        op(n, n) = 1.0;
        op(N + n, N + n) = -1.0;
    }
    return op;
}

double log_poisson_pmf(double mean, int n) {
    // log of e^{-mean} mean^n / n!
    return -mean + n * std::log(mean) - std::lgamma(n + 1.0);
}

}  // namespace

std::vector<std::string> QuantumConfig::validate() const {
    std::vector<std::string> issues;
    if (!(alpha >= 0.0)) issues.push_back("alpha must be nonnegative");
    if (!(omega > 0.0)) issues.push_back("omega must be positive");
    if (!(t_end > 0.0)) issues.push_back("t_end must be positive");
    if (samples_per_drive_period < 16)
        issues.push_back("samples_per_drive_period must be at least 16");
    if (alpha <= 0.0 && !lambda)
        issues.push_back("lambda must be given explicitly when alpha is 0");
    if (n_max >= 0 && n_max < 1) issues.push_back("n_max must be at least 1");
    if (issues.empty() && coherent_tail_mass(alpha, effective_n_max()) >= 1e-12)
        issues.push_back("n_max = " + std::to_string(effective_n_max()) +
                         " too small: coherent tail mass >= 1e-12 for alpha = " +
                         std::to_string(alpha));
    return issues;
}

double coherent_tail_mass(double alpha, int n_max) {
    if (alpha == 0.0) return 0.0;
    const double mean = alpha * alpha;
    double cum = 0.0;
    for (int n = 0; n <= n_max; ++n) cum += std::exp(log_poisson_pmf(mean, n));
    return std::max(0.0, 1.0 - cum);
}

std::vector<double> coherent_amplitudes(double alpha, int n_max) {
    if (n_max < 0) throw ValidationError({"n_max must be nonnegative"});
    const double tail = coherent_tail_mass(alpha, n_max);
    if (tail >= 1e-12)
        throw ValidationError({"Fock cutoff too small: tail mass " + std::to_string(tail) +
                               " >= 1e-12 for alpha = " + std::to_string(alpha)});
    std::vector<double> c(n_max + 1);
    if (alpha == 0.0) {
        c[0] = 1.0;
        return c;
    }
    for (int n = 0; n <= n_max; ++n)
        c[n] = std::exp(-0.5 * alpha * alpha + n * std::log(alpha) - 0.5 * std::lgamma(n + 1.0));
    return c;
}

JointState initial_joint_state(const QuantumConfig& cfg) {
    cfg.validate_or_throw();
    const int N = cfg.effective_n_max() + 1;
    const auto c = coherent_amplitudes(cfg.alpha, cfg.effective_n_max());
    JointState psi;
    psi.n_max = cfg.effective_n_max();
    psi.amp = Eigen::VectorXcd::Zero(2 * N);
    const double w0 = std::cos(0.5 * cfg.theta0);
    const double w1 = std::sin(0.5 * cfg.theta0);
    for (int n = 0; n < N; ++n) {
        psi.amp[n] = w0 * c[n];
        psi.amp[N + n] = w1 * c[n];
    }
    return psi;
}

Eigen::MatrixXcd build_hamiltonian(const QuantumConfig& cfg, bool rwa) {
    const int n_max = cfg.effective_n_max();
    const int N = n_max + 1;
    const int dim = 2 * N;
    const double w = cfg.omega;
    const double lam = cfg.effective_lambda();

    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(dim, dim);
    // Free part, zero-point included: E(q, n) = (q - 1/2) w + w (n + 1/2).
    for (int n = 0; n < N; ++n) {
        H(n, n) = -0.5 * w + w * (n + 0.5);
        H(N + n, N + n) = 0.5 * w + w * (n + 0.5);
    }
    // Coupling written once into the <1,m|H|0,n> block, then mirrored, so each
    // term enters exactly once.
    Eigen::MatrixXcd coupling = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n < N; ++n) {
        if (n >= 1) coupling(N + n - 1, n) = lam * std::sqrt(static_cast<double>(n));  // sigma_+ a
        if (!rwa && n + 1 < N)
            coupling(N + n + 1, n) = lam * std::sqrt(n + 1.0);  // sigma_+ a^dag
    }
    H += coupling + coupling.adjoint();
    return H;
}

Eigen::MatrixXcd excitation_number_operator(int n_max) {
    const int N = n_max + 1;
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) {
        op(n, n) = n;
        op(N + n, N + n) = n + 1.0;
    }
    return op;
}

std::pair<double, double> excitation_moments(const JointState& psi) {
    const int N = psi.n_max + 1;
    double m1 = 0.0, m2 = 0.0;
    for (int q = 0; q < 2; ++q) {
        for (int n = 0; n < N; ++n) {
            const double nexc = n + q;
            const double p = std::norm(psi.amp[q * N + n]);
            m1 += nexc * p;
            m2 += nexc * nexc * p;
        }
    }
    return {m1, m2 - m1 * m1};
}

SpectralPropagator::SpectralPropagator(const Eigen::MatrixXcd& hamiltonian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian);
    if (solver.info() != Eigen::Success)
        throw ValidationError({"hermitian eigendecomposition failed"});
    eigenvalues_ = solver.eigenvalues();
    eigenvectors_ = solver.eigenvectors();

    const Eigen::MatrixXcd rebuilt =
        eigenvectors_ * eigenvalues_.asDiagonal() * eigenvectors_.adjoint();
    const double scale = hamiltonian.cwiseAbs().maxCoeff();
    reconstruction_residual_ =
        (rebuilt - hamiltonian).cwiseAbs().maxCoeff() / (scale > 0.0 ? scale : 1.0);
}

JointState SpectralPropagator::evolve(const JointState& psi0, double t) const {
    Eigen::VectorXcd w = eigenvectors_.adjoint() * psi0.amp;
    for (Eigen::Index j = 0; j < w.size(); ++j)
        w[j] *= std::polar(1.0, -eigenvalues_[j] * t);
    return {eigenvectors_ * w, psi0.n_max};
}

std::vector<JointState> SpectralPropagator::evolve(const JointState& psi0,
                                                   const std::vector<double>& times) const {
    const Eigen::VectorXcd w0 = eigenvectors_.adjoint() * psi0.amp;
    std::vector<JointState> out;
    out.reserve(times.size());
    Eigen::VectorXcd w(w0.size());
    for (double t : times) {
        for (Eigen::Index j = 0; j < w.size(); ++j)
            w[j] = w0[j] * std::polar(1.0, -eigenvalues_[j] * t);
        out.push_back({eigenvectors_ * w, psi0.n_max});
    }
    return out;
}

BlochVector reduced_bloch_interaction_frame(const JointState& psi, double t,
                                            const QuantumConfig& cfg) {
    const int N = psi.n_max + 1;
    Complex u(0.0, 0.0);  // <sigma_-> = sum_n conj(A_n) B_n
    double z = 0.0;
    for (int n = 0; n < N; ++n) {
        u += std::conj(psi.amp[n]) * psi.amp[N + n];
        z += std::norm(psi.amp[n]) - std::norm(psi.amp[N + n]);
    }
    const Complex ui = std::polar(1.0, cfg.omega * t) * u;
    return {2.0 * ui.real(), 2.0 * ui.imag(), z};
}

EhrenfestKinematics::EhrenfestKinematics(const Eigen::MatrixXcd& hamiltonian,
                                         const QuantumConfig& cfg)
    : omega_(cfg.omega),
      sigma_minus_(sigma_minus_joint(cfg.effective_n_max())),
      sigma_z_(sigma_z_joint(cfg.effective_n_max())) {
    const Complex i(0.0, 1.0);
    auto commutator = [&](const Eigen::MatrixXcd& m) -> Eigen::MatrixXcd {
        return hamiltonian * m - m * hamiltonian;
    };
    // d/dt of e^{i w t} <sigma_-> is e^{i w t} <M1>; one more derivative gives M2.
    m1_ = i * omega_ * sigma_minus_ + i * commutator(sigma_minus_);
    m2_ = i * omega_ * m1_ + i * commutator(m1_);
    k1_ = i * commutator(sigma_z_);
    k2_ = i * commutator(k1_);
}

KinematicSample EhrenfestKinematics::sample(const JointState& psi, double t) const {
    const Complex ph = std::polar(1.0, omega_ * t);
    const auto expval = [&](const Eigen::MatrixXcd& op) -> Complex {
        return psi.amp.dot(op * psi.amp);
    };
    const Complex u = ph * expval(sigma_minus_);
    const Complex du = ph * expval(m1_);
    const Complex d2u = ph * expval(m2_);

    KinematicSample k;
    k.t = t;
    k.r = {2.0 * u.real(), 2.0 * u.imag(), expval(sigma_z_).real()};
    k.v = {2.0 * du.real(), 2.0 * du.imag(), expval(k1_).real()};
    k.a = {2.0 * d2u.real(), 2.0 * d2u.imag(), expval(k2_).real()};
    k.s_dot = k.v.norm();
    k.s_ddot = (k.s_dot > 0.0) ? dot(k.v, k.a) / k.s_dot : 0.0;
    k.kappa = curvature_from_derivatives(k.v, k.a);
    return k;
}

KinematicSample bloch_kinematics_ehrenfest(const JointState& psi, double t,
                                           const Eigen::MatrixXcd& hamiltonian,
                                           const QuantumConfig& cfg) {
    return EhrenfestKinematics(hamiltonian, cfg).sample(psi, t);
}

Trajectory quantum_trajectory(const QuantumConfig& cfg) {
    cfg.validate_or_throw();
    SimConfig grid_cfg{cfg.omega, 0.0, cfg.theta0, cfg.t_end, cfg.samples_per_drive_period};
    const auto ts = output_times(grid_cfg);

    const Eigen::MatrixXcd H = build_hamiltonian(cfg, cfg.rwa);
    const SpectralPropagator prop(H);
    const JointState psi0 = initial_joint_state(cfg);

    Trajectory traj;
    traj.meta = grid_cfg;
    traj.times = ts;
    traj.bloch.reserve(ts.size());
    const auto states = prop.evolve(psi0, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
        traj.bloch.push_back(reduced_bloch_interaction_frame(states[i], ts[i], cfg));
    return traj;
}

Trajectory jaynes_cummings_trajectory(const QuantumConfig& cfg) {
    QuantumConfig jc = cfg;
    jc.rwa = true;
    return quantum_trajectory(jc);
}

CurvaturePeak find_curvature_peak(const SpectralPropagator& prop, const EhrenfestKinematics& kin,
                                  const JointState& psi0, double t_lo, double t_hi,
                                  int grid_points) {
    const auto kappa_at = [&](double t) { return kin.sample(prop.evolve(psi0, t), t).kappa; };

    double best_t = t_lo, best_k = -1.0;
    for (int i = 0; i <= grid_points; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / grid_points;
        const double k = kappa_at(t);
        if (std::isfinite(k) && k > best_k) {
            best_k = k;
            best_t = t;
        }
    }
    const double step = (t_hi - t_lo) / grid_points;
    double lo = std::max(t_lo, best_t - 2.0 * step);
    double hi = std::min(t_hi, best_t + 2.0 * step);
    for (int it = 0; it < 200 && (hi - lo) > 1e-13; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (kappa_at(m1) < kappa_at(m2))
            lo = m1;
        else
            hi = m2;
    }
    const double t_peak = 0.5 * (lo + hi);
    return {t_peak, kappa_at(t_peak)};
}

}  // namespace blochpath
