#pragma once

#include <Eigen/Dense>
#include <optional>

#include "blochpath/geometry.hpp"
#include "blochpath/types.hpp"

namespace blochpath {

/// Parameters of the quantized-field model at resonance (omega_a = omega).
/// Frequencies are measured in units of the mean-field Rabi frequency
/// lambda * alpha, so the default coupling is lambda = 1/alpha.
struct QuantumConfig {
    double alpha = 1.0;   // coherent amplitude; mean photon number alpha^2
    double theta0 = 0.0;  // initial qubit polar angle
    double omega = 5.0;   // field (and qubit) frequency
    int n_max = -1;       // Fock cutoff; negative selects the default below
    std::optional<double> lambda;  // coupling; defaults to 1/alpha
    double t_end = M_PI;
    int samples_per_drive_period = 64;
    bool rwa = false;     // true: drop counter-rotating terms (Jaynes-Cummings)

    int effective_n_max() const {
        if (n_max >= 1) return n_max;
        return static_cast<int>(std::ceil(alpha * alpha + 8.0 * alpha + 20.0));
    }
    double effective_lambda() const {
        if (lambda) return *lambda;
        if (alpha <= 0.0)
            throw ValidationError({"lambda must be given explicitly when alpha is 0"});
        return 1.0 / alpha;
    }
    std::vector<std::string> validate() const;
    void validate_or_throw() const {
        auto issues = validate();
        if (!issues.empty()) throw ValidationError(std::move(issues));
    }
};

/// Joint qubit+field state over the basis |q> x |n>_p, q in {0,1},
/// n in 0..n_max, flattened as index = q*(n_max+1) + n.
struct JointState {
    Eigen::VectorXcd amp;
    int n_max = 0;

    int dim() const { return static_cast<int>(amp.size()); }
    double norm() const { return amp.norm(); }
    Complex& at(int q, int n) { return amp[q * (n_max + 1) + n]; }
    Complex at(int q, int n) const { return amp[q * (n_max + 1) + n]; }
};

/// Coherent-state coefficients c_n = e^{-alpha^2/2} alpha^n / sqrt(n!) for
/// n <= n_max (evaluated in log space). Throws if the truncated tail mass is
/// not below 1e-12.
std::vector<double> coherent_amplitudes(double alpha, int n_max);

/// Probability mass of the coherent distribution beyond n_max.
double coherent_tail_mass(double alpha, int n_max);

/// Product state |phi_0> |alpha>_p with |phi_0> = cos(theta0/2)|0> + sin(theta0/2)|1>.
JointState initial_joint_state(const QuantumConfig& cfg);

/// Full Hamiltonian
///   H = (omega/2)(|1><1| - |0><0|) + omega (a^dag a + 1/2) + lambda sigma_X (a + a^dag);
/// with rwa = true the counter-rotating pair is dropped, leaving the
/// Jaynes-Cummings coupling lambda (sigma_+ a + sigma_- a^dag).
Eigen::MatrixXcd build_hamiltonian(const QuantumConfig& cfg, bool rwa);

/// N_exc = a^dag a + |1><1|; conserved by the Jaynes-Cummings Hamiltonian.
Eigen::MatrixXcd excitation_number_operator(int n_max);

/// <N_exc> and Var(N_exc) for a joint state.
std::pair<double, double> excitation_moments(const JointState& psi);

/// Exact propagator exp(-iHt) through a one-time Hermitian eigendecomposition.
class SpectralPropagator {
public:
    explicit SpectralPropagator(const Eigen::MatrixXcd& hamiltonian);

    const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
    const Eigen::MatrixXcd& eigenvectors() const { return eigenvectors_; }
    /// max|H - U diag(E) U^dag| / max|H|, recorded at construction.
    double reconstruction_residual() const { return reconstruction_residual_; }

    JointState evolve(const JointState& psi0, double t) const;
    std::vector<JointState> evolve(const JointState& psi0,
                                   const std::vector<double>& times) const;

private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXcd eigenvectors_;
    double reconstruction_residual_ = 0.0;
};

/// Reduced qubit Bloch vector in the frame rotating at omega_a: traces out the
/// field and removes the free qubit precession, making the path directly
/// comparable to the classical interaction-picture trajectories. |R| <= 1,
/// with |R| < 1 signalling qubit-field entanglement.
BlochVector reduced_bloch_interaction_frame(const JointState& psi, double t,
                                            const QuantumConfig& cfg);

/// Exact first and second time derivatives of the interaction-frame Bloch
/// vector via Ehrenfest commutator expectations (no finite differences). The
/// operator polynomials in H are precomputed at construction.
class EhrenfestKinematics {
public:
    EhrenfestKinematics(const Eigen::MatrixXcd& hamiltonian, const QuantumConfig& cfg);

    KinematicSample sample(const JointState& psi, double t) const;

private:
    double omega_;
    Eigen::MatrixXcd sigma_minus_, sigma_z_;  // qubit ops x identity
    Eigen::MatrixXcd m1_, m2_, k1_, k2_;
};

/// Convenience form of EhrenfestKinematics::sample for one-off evaluations.
KinematicSample bloch_kinematics_ehrenfest(const JointState& psi, double t,
                                           const Eigen::MatrixXcd& hamiltonian,
                                           const QuantumConfig& cfg);

/// Reduced Bloch trajectory on the uniform output grid (full model, or
/// Jaynes-Cummings when cfg.rwa). Trajectory.states is left empty: the joint
/// state does not reduce to two amplitudes once entangled.
Trajectory quantum_trajectory(const QuantumConfig& cfg);

/// quantum_trajectory with the counter-rotating terms dropped.
Trajectory jaynes_cummings_trajectory(const QuantumConfig& cfg);

/// Curvature local maximum of the interaction-frame path in [t_lo, t_hi]:
/// grid argmax refined by ternary search (the sharp peaks near the classical
/// cusp times are far narrower than any reasonable output grid).
struct CurvaturePeak {
    double t = 0.0;
    double kappa = 0.0;
};
CurvaturePeak find_curvature_peak(const SpectralPropagator& prop,
                                  const EhrenfestKinematics& kin, const JointState& psi0,
                                  double t_lo, double t_hi, int grid_points = 512);

}  // namespace blochpath
