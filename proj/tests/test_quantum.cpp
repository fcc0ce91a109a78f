#include <doctest.h>

#include <cmath>

#include "blochpath/classical.hpp"
#include "blochpath/metrics.hpp"
#include "blochpath/quantum.hpp"
#include "oracles.hpp"

using namespace blochpath;

namespace {

QuantumConfig make_cfg(double alpha, double theta0, double omega) {
    QuantumConfig cfg;
    cfg.alpha = alpha;
    cfg.theta0 = theta0;
    cfg.omega = omega;
    return cfg;
}

}  // namespace

TEST_CASE("coherent amplitudes") {
    SUBCASE("vacuum") {
        const auto c = coherent_amplitudes(0.0, 5);
        CHECK(c[0] == 1.0);
        for (int n = 1; n <= 5; ++n) CHECK(c[n] == 0.0);
    }
    SUBCASE("alpha = 1: c0 = c1 = e^{-1/2}") {
        const auto c = coherent_amplitudes(1.0, 30);
        CHECK(c[0] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
        CHECK(c[1] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    }
    SUBCASE("alpha = 5: mean photon number 25, spread 5, unit norm") {
        const int n_max = 85;
        const auto c = coherent_amplitudes(5.0, n_max);
        double norm = 0.0, mean = 0.0, second = 0.0;
        for (int n = 0; n <= n_max; ++n) {
            const double p = c[n] * c[n];
            norm += p;
            mean += n * p;
            second += double(n) * n * p;
        }
        CHECK(std::abs(norm - 1.0) < 1e-12);
        CHECK(mean == doctest::Approx(25.0).epsilon(1e-9));
        CHECK(std::sqrt(second - mean * mean) == doctest::Approx(5.0).epsilon(1e-9));
    }
    SUBCASE("cutoff too small") {
        CHECK_THROWS_AS(coherent_amplitudes(5.0, 10), ValidationError);
    }
}

TEST_CASE("QuantumConfig validation") {
    auto cfg = make_cfg(5.0, 0.0, 5.0);
    cfg.n_max = 10;
    const auto issues = cfg.validate();
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("tail mass") != std::string::npos);

    auto vac = make_cfg(0.0, 0.0, 5.0);
    CHECK(!vac.validate().empty());  // lambda required when alpha = 0
    vac.lambda = 1.0;
    CHECK(vac.validate().empty());

    CHECK(make_cfg(1.0, 0.0, 5.0).effective_n_max() == 29);
    CHECK(make_cfg(5.0, 0.0, 5.0).effective_n_max() == 85);
}

TEST_CASE("hamiltonian structure") {
    auto cfg = make_cfg(1.0, 0.0, 7.0);
    cfg.n_max = 8;
    cfg.lambda = 0.3;

    SUBCASE("hermitian by construction") {
        for (bool rwa : {false, true}) {
            const auto H = build_hamiltonian(cfg, rwa);
            CHECK((H - H.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        }
    }

    SUBCASE("Jaynes-Cummings conserves the excitation number") {
        const auto H = build_hamiltonian(cfg, true);
        const auto N = excitation_number_operator(cfg.n_max);
        CHECK((H * N - N * H).cwiseAbs().maxCoeff() < 1e-12);
        const auto Hfull = build_hamiltonian(cfg, false);
        CHECK((Hfull * N - N * Hfull).cwiseAbs().maxCoeff() > 0.1);  // full model does not
    }

    SUBCASE("Jaynes-Cummings doublet splitting scales as sqrt(n)") {
        // Analytic spectrum: {0, w(n_max+1)} plus wn +- lambda sqrt(n).
        const auto H = build_hamiltonian(cfg, true);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
        std::vector<double> expected{0.0, cfg.omega * (cfg.n_max + 1.0)};
        for (int n = 1; n <= cfg.n_max; ++n) {
            expected.push_back(cfg.omega * n - *cfg.lambda * std::sqrt(n));
            expected.push_back(cfg.omega * n + *cfg.lambda * std::sqrt(n));
        }
        std::sort(expected.begin(), expected.end());
        REQUIRE(static_cast<int>(expected.size()) == H.rows());
        for (int i = 0; i < H.rows(); ++i)
            REQUIRE(es.eigenvalues()[i] == doctest::Approx(expected[i]).epsilon(1e-9));
    }
}

TEST_CASE("spectral propagator") {
    auto cfg = make_cfg(1.0, 0.0, 5.0);
    cfg.n_max = 20;
    const auto H = build_hamiltonian(cfg, false);
    const SpectralPropagator prop(H);

    SUBCASE("reconstruction residual") { CHECK(prop.reconstruction_residual() < 1e-9); }

    SUBCASE("t = 0 is the identity") {
        const auto psi0 = initial_joint_state(cfg);
        const auto psi = prop.evolve(psi0, 0.0);
        CHECK((psi.amp - psi0.amp).norm() < 1e-12);
    }

    SUBCASE("eigenstates only pick up a phase") {
        JointState psi0;
        psi0.n_max = cfg.n_max;
        psi0.amp = prop.eigenvectors().col(3);
        const auto psi = prop.evolve(psi0, 1.37);
        CHECK(std::abs(std::abs(psi0.amp.dot(psi.amp)) - 1.0) < 1e-12);
    }

    SUBCASE("matches an independent RK4 integration of the Schrodinger equation") {
        const auto psi0 = initial_joint_state(cfg);
        const auto spectral = prop.evolve(psi0, M_PI);
        const Eigen::VectorXcd rk = oracles::rk4_schrodinger(H, psi0.amp, M_PI, 5e-5);
        CHECK((spectral.amp - rk).norm() < 1e-7);
    }

    SUBCASE("norm conserved along the evolution") {
        const auto psi0 = initial_joint_state(cfg);
        for (double t : {0.2, 1.0, 2.0, M_PI})
            REQUIRE(std::abs(prop.evolve(psi0, t).norm() - 1.0) < 1e-9);
    }
}

TEST_CASE("reduced Bloch vector in the interaction frame") {
    SUBCASE("product state at t = 0 sits at the north pole") {
        const auto cfg = make_cfg(2.0, 0.0, 5.0);
        const auto psi0 = initial_joint_state(cfg);
        const auto r = reduced_bloch_interaction_frame(psi0, 0.0, cfg);
        CHECK((r - BlochVector{0, 0, 1}).norm() < 1e-12);
    }
    SUBCASE("maximally entangled state reduces to the center") {
        auto cfg = make_cfg(1.0, 0.0, 5.0);
        cfg.n_max = 1;
        cfg.lambda = 1.0;
        JointState psi;
        psi.n_max = 1;
        psi.amp = Eigen::VectorXcd::Zero(4);
        psi.amp[0] = 1.0 / std::sqrt(2.0);  // |0,0>
        psi.amp[3] = 1.0 / std::sqrt(2.0);  // |1,1>
        const auto r = reduced_bloch_interaction_frame(psi, 0.7, cfg);
        CHECK(r.norm() < 1e-12);
    }
    SUBCASE("alpha=5 path shadows the classical omega=5 path") {
        const auto cfg = make_cfg(5.0, 0.0, 5.0);
        const auto quantum = quantum_trajectory(cfg);
        const auto classical = integrate_classical(quantum.meta);
        REQUIRE(quantum.size() == classical.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < quantum.size(); ++i)
            worst = std::max(worst, (quantum.bloch[i] - classical.bloch[i]).norm());
        CHECK(worst < 0.21);   // "close to the classical plots"
        CHECK(worst > 0.15);   // converged regression: 0.197
    }
}

TEST_CASE("ehrenfest derivatives match finite differences of the path") {
    const auto cfg = make_cfg(1.0, 0.0, 5.0);
    const auto H = build_hamiltonian(cfg, false);
    const SpectralPropagator prop(H);
    const EhrenfestKinematics kin(H, cfg);
    const auto psi0 = initial_joint_state(cfg);

    const auto r_at = [&](double t) {
        return reduced_bloch_interaction_frame(prop.evolve(psi0, t), t, cfg);
    };
    for (double t : {0.17, 0.37, 1.23, 2.6}) {
        const auto sample = kin.sample(prop.evolve(psi0, t), t);
        const Vec3 v_fd = oracles::central_difference(r_at, t, 1e-5);
        const Vec3 a_fd = oracles::second_difference(r_at, t, 1e-4);
        REQUIRE((sample.v - v_fd).norm() < 1e-6);
        REQUIRE((sample.a - a_fd).norm() < 1e-4);
        REQUIRE((sample.r - r_at(t)).norm() < 1e-12);
        REQUIRE(sample.s_dot == doctest::Approx(sample.v.norm()).epsilon(1e-12));
    }
}

TEST_CASE("curvature at the first two classical cusp times (converged regression values)") {
    // Exact spectral evolution + Ehrenfest derivatives, evaluated exactly at
    // t1 = pi/(2w) and t2 = 3pi/(2w), omega = 5.
    struct Case {
        double alpha, theta, kappa_t1, kappa_t2;
    };
    const Case cases[] = {
        {1.0, 0.0, 12.6905, 5.75516},
        {1.0, M_PI, 9.43824, 8.68000},
        {5.0, 0.0, 3322.75, 3115.02},
    };
    const double t1 = M_PI / 10.0, t2 = 3.0 * M_PI / 10.0;
    for (const auto& c : cases) {
        const auto cfg = make_cfg(c.alpha, c.theta, 5.0);
        const auto H = build_hamiltonian(cfg, false);
        const SpectralPropagator prop(H);
        const EhrenfestKinematics kin(H, cfg);
        const auto psi0 = initial_joint_state(cfg);
        const double k1 = kin.sample(prop.evolve(psi0, t1), t1).kappa;
        const double k2 = kin.sample(prop.evolve(psi0, t2), t2).kappa;
        REQUIRE(k1 == doctest::Approx(c.kappa_t1).epsilon(1e-2));
        REQUIRE(k2 == doctest::Approx(c.kappa_t2).epsilon(1e-2));
    }
}

TEST_CASE("one-off kinematics helper matches the precomputed-operator path") {
    const auto cfg = make_cfg(1.0, 0.0, 5.0);
    const auto H = build_hamiltonian(cfg, false);
    const SpectralPropagator prop(H);
    const auto psi = prop.evolve(initial_joint_state(cfg), 0.6);
    const auto a = EhrenfestKinematics(H, cfg).sample(psi, 0.6);
    const auto b = bloch_kinematics_ehrenfest(psi, 0.6, H, cfg);
    CHECK((a.v - b.v).norm() == 0.0);
    CHECK((a.a - b.a).norm() == 0.0);
    CHECK(a.kappa == b.kappa);
}

TEST_CASE("curvature peak finder locates the sharp near-cusp maxima") {
    const auto cfg = make_cfg(1.0, M_PI, 5.0);
    const auto H = build_hamiltonian(cfg, false);
    const SpectralPropagator prop(H);
    const EhrenfestKinematics kin(H, cfg);
    const auto psi0 = initial_joint_state(cfg);
    const auto peak = find_curvature_peak(prop, kin, psi0, M_PI / 10.0 - 0.1, M_PI / 10.0 + 0.1);
    CHECK(peak.t == doctest::Approx(0.289222).epsilon(1e-3));
    CHECK(peak.kappa == doctest::Approx(12.2885).epsilon(1e-2));
}

TEST_CASE("classical limit: quantum paths converge to the classical one") {
    SimConfig grid{5.0, 0.0, 0.0, M_PI, 64};
    const auto classical = integrate_classical(grid);
    const double expected[] = {1.8815, 0.9678, 0.1972, 0.0510};
    double prev = 1e9;
    int i = 0;
    for (double alpha : {1.0, 2.0, 5.0, 10.0}) {
        const auto traj = quantum_trajectory(make_cfg(alpha, 0.0, 5.0));
        REQUIRE(traj.size() == classical.size());
        double worst = 0.0;
        for (std::size_t j = 0; j < traj.size(); ++j)
            worst = std::max(worst, (traj.bloch[j] - classical.bloch[j]).norm());
        REQUIRE(worst < prev);
        REQUIRE(worst == doctest::Approx(expected[i]).epsilon(0.02));
        prev = worst;
        ++i;
    }
}

TEST_CASE("jaynes-cummings limit") {
    SUBCASE("vacuum with the qubit in |0> is stationary") {
        auto cfg = make_cfg(0.0, 0.0, 5.0);
        cfg.lambda = 1.0;
        cfg.n_max = 4;
        const auto traj = jaynes_cummings_trajectory(cfg);
        for (const auto& r : traj.bloch) REQUIRE((r - BlochVector{0, 0, 1}).norm() < 1e-12);
    }

    SUBCASE("alpha=5 spiral: the first collapse pulls the path inside the ball") {
        const auto traj = jaynes_cummings_trajectory(make_cfg(5.0, 0.0, 5.0));
        const double r0 = traj.bloch.front().norm();
        const double r_end = traj.bloch.back().norm();
        CHECK(r0 == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(r_end < r0);
        CHECK(r_end == doctest::Approx(0.81928).epsilon(5e-3));  // regression
    }

    SUBCASE("full model approaches the JC path as omega grows") {
        double prev = 1e9;
        const double expected[] = {0.0988, 0.0196};
        int i = 0;
        for (double omega : {20.0, 100.0}) {
            const auto cfg = make_cfg(5.0, 0.0, omega);
            const auto full = quantum_trajectory(cfg);
            const auto jc = jaynes_cummings_trajectory(cfg);
            double worst = 0.0;
            for (std::size_t j = 0; j < full.size(); ++j)
                worst = std::max(worst, (full.bloch[j] - jc.bloch[j]).norm());
            REQUIRE(worst < prev);
            REQUIRE(worst == doctest::Approx(expected[i]).epsilon(0.05));
            prev = worst;
            ++i;
        }
    }
}

TEST_CASE("quantum sanity properties") {
    for (const auto& cfg :
         {make_cfg(1.0, 0.0, 5.0), make_cfg(1.0, M_PI, 5.0), make_cfg(5.0, 0.0, 5.0)}) {
        const auto H = build_hamiltonian(cfg, cfg.rwa);
        const SpectralPropagator prop(H);
        const auto psi0 = initial_joint_state(cfg);
        const auto ts = output_times({cfg.omega, 0.0, cfg.theta0, M_PI, 32});
        const auto states = prop.evolve(psi0, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            REQUIRE(std::abs(states[i].norm() - 1.0) < 1e-9);
            const auto r = reduced_bloch_interaction_frame(states[i], ts[i], cfg);
            REQUIRE(r.norm() <= 1.0 + 1e-9);  // purity bound
        }
    }
}

TEST_CASE("JC excitation-number variance is constant in time") {
    auto cfg = make_cfg(2.0, 0.0, 5.0);
    const auto H = build_hamiltonian(cfg, true);
    const SpectralPropagator prop(H);
    const auto psi0 = initial_joint_state(cfg);
    const auto [m0, v0] = excitation_moments(psi0);
    CHECK(m0 == doctest::Approx(4.0).epsilon(1e-9));  // nbar = alpha^2 with qubit in |0>
    for (double t : {0.3, 1.0, 2.1, M_PI}) {
        const auto [m, v] = excitation_moments(prop.evolve(psi0, t));
        REQUIRE(std::abs(m - m0) < 1e-9);
        REQUIRE(std::abs(v - v0) < 1e-9);
    }
}

TEST_CASE("doubling the Fock cutoff leaves the Bloch outputs unchanged") {
    auto base = make_cfg(1.0, 0.0, 5.0);
    auto doubled = base;
    doubled.n_max = 2 * base.effective_n_max();
    const auto a = quantum_trajectory(base);
    const auto b = quantum_trajectory(doubled);
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, (a.bloch[i] - b.bloch[i]).norm());
    CHECK(worst < 1e-8);
}
