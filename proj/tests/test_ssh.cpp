#include <doctest.h>

#include <random>

#include "qwalk/ssh.hpp"

using namespace qwalk;

TEST_CASE("bloch hamiltonian at k = 0 is (v + w) sigma_x") {
    const BlochModel m{1.0, 2.0};
    const Eigen::Matrix2cd h = bloch_h(m, 0.0);
    Eigen::Matrix2cd want;
    want << 0.0, 3.0, 3.0, 0.0;
    CHECK((h - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gap closes at v = w, k = pi") {
    const BlochModel m{1.3, 1.3};
    CHECK(m.gap_closed());
    CHECK(bloch_h(m, M_PI).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(energy(m, M_PI) == doctest::Approx(0.0));
}

TEST_CASE("chiral generator anticommutes with the hamiltonian") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(0.05, 3.0);
    std::uniform_real_distribution<double> dk(-M_PI, M_PI);
    const Eigen::Matrix2cd g = chiral_generator();
    for (int i = 0; i < 50; ++i) {
        const BlochModel m{d(rng), d(rng)};
        const Eigen::Matrix2cd h = bloch_h(m, dk(rng));
        CHECK((g * h * g.inverse() + h).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("band energies") {
    const BlochModel m{0.8, 2.2};
    CHECK(energy(m, 0.0) == doctest::Approx(3.0));
    CHECK(energy(m, M_PI) == doctest::Approx(1.4));
    // spectrum of bloch_h is +-E
    for (double k : {0.3, 1.0, 2.5}) {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(bloch_h(m, k));
        CHECK(es.eigenvalues()[0] == doctest::Approx(-energy(m, k)));
        CHECK(es.eigenvalues()[1] == doctest::Approx(energy(m, k)));
    }
}

TEST_CASE("berry angle") {
    CHECK(theta_k(BlochModel{1.0, 2.0}, 0.0) == doctest::Approx(0.0));
    for (double k : {-2.0, 0.5, 3.0})
        CHECK(theta_k(BlochModel{1.5, 1.5}, k) == doctest::Approx(0.0));
    CHECK_THROWS_AS(theta_k(BlochModel{1.0, 1.0}, M_PI), SingularPointError);

    // continuity and total off-diagonal winding of 2 pi for w > v
    const BlochModel m{1.0, 2.0};
    double prev = std::arg(cplx(bloch_h(m, -M_PI)(0, 1)));
    double total = 0.0;
    const int n = 2048;
    for (int i = 1; i <= n; ++i) {
        const double k = -M_PI + 2.0 * M_PI * i / n;
        const double a = std::arg(cplx(bloch_h(m, k)(0, 1)));
        double diff = a - prev;
        while (diff > M_PI) diff -= 2.0 * M_PI;
        while (diff < -M_PI) diff += 2.0 * M_PI;
        total += diff;
        prev = a;
        const double th0 = theta_k(m, k - 2.0 * M_PI / n);
        CHECK(std::abs(theta_k(m, k) - th0) < 0.1);
    }
    CHECK(std::abs(std::abs(total) - 2.0 * M_PI) < 1e-6);
}

TEST_CASE("eigenvectors are orthonormal eigenstates") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(0.05, 3.0);
    std::uniform_real_distribution<double> dk(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const BlochModel m{d(rng), d(rng)};
        const double k = dk(rng);
        const Eigen::Matrix2cd v = eigenvectors(m, k);
        CHECK(std::abs(v.col(0).dot(v.col(1))) < 1e-12);
        CHECK(v.col(0).norm() == doctest::Approx(1.0).epsilon(1e-12));
        const Eigen::Matrix2cd h = bloch_h(m, k);
        const double e = energy(m, k);
        CHECK((h * v.col(0) - e * v.col(0)).norm() < 1e-10);
        CHECK((h * v.col(1) + e * v.col(1)).norm() < 1e-10);
    }
    const Eigen::Matrix2cd v0 = eigenvectors(BlochModel{0.7, 2.0}, 0.0);
    CHECK(std::abs(v0(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(v0(1, 0) - 1.0 / std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(v0(1, 1) + 1.0 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("winding number on reference models") {
    CHECK(winding_number(BlochModel{1.0, 2.0}, 1024).nu == 1);
    CHECK(winding_number(BlochModel{2.0, 1.0}, 1024).nu == 0);
    CHECK(winding_number(BlochModel{1.0, 0.0}, 1024).nu == 0);
    CHECK_THROWS_AS(winding_number(BlochModel{1.0, 1.0}, 1024), GapClosedError);
    CHECK_THROWS_AS(winding_number(BlochModel{1.0, 2.0}, 32),
                    std::invalid_argument);
}

TEST_CASE("winding equals the hopping-ratio indicator and scales invariantly") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> d(0.0, 3.0);
    int done = 0;
    while (done < 200) {
        const double v = d(rng), w = d(rng);
        if (std::abs(v - w) <= 0.05) continue;
        const WindingResult r = winding_number(BlochModel{v, w}, 1024);
        CHECK(r.nu == (w > v ? 1 : 0));
        CHECK(std::abs(r.raw_phase_accumulation / (2.0 * M_PI) - r.nu) < 1e-6);
        for (double c : {0.1, 3.7})
            CHECK(winding_number(BlochModel{c * v, c * w}, 1024).nu == r.nu);
        ++done;
    }
}

TEST_CASE("k-sum wavefunction basics") {
    const BlochModel m{1.3, 0.6};
    const Eigen::VectorXcd psi0 = ssh_wavefunction(m, 20, 0.0, 48);
    CHECK(std::abs(psi0[2 * 20] - 1.0) < 1e-12);
    CHECK(psi0.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> d(0.1, 2.5);
    for (int i = 0; i < 5; ++i) {
        const BlochModel mm{d(rng), d(rng)};
        const Eigen::VectorXcd psi = ssh_wavefunction(mm, 10, d(rng) * 4.0, 32);
        CHECK(std::abs(psi.squaredNorm() - 1.0) < 1e-10);
    }
}

TEST_CASE("decoupled cells Rabi-oscillate between their subsites") {
    const BlochModel m{1.0, 0.0};
    for (double t : {0.3, 1.2, 2.8}) {
        const Eigen::VectorXcd psi = ssh_wavefunction(m, 7, t, 16);
        for (int n = 0; n < 16; ++n) {
            if (n == 7) continue;
            CHECK(std::abs(psi[2 * n]) < 1e-12);
            CHECK(std::abs(psi[2 * n + 1]) < 1e-12);
        }
        CHECK(std::abs(psi[2 * 7 + 1]) ==
              doctest::Approx(std::abs(std::sin(t))).epsilon(1e-10));
    }
}

TEST_CASE("real-space oracle structure") {
    const BlochModel m{0.9, 1.7};
    const Eigen::MatrixXd h = real_space_hamiltonian(m, 12, true);
    CHECK((h - h.transpose()).cwiseAbs().maxCoeff() == 0.0);
    const Eigen::VectorXcd psi = exact_evolution_oracle(m, 4, 0.0, 16);
    CHECK(std::abs(psi[2 * 4] - 1.0) < 1e-12);
}

TEST_CASE("k-sum and real-space routes agree") {
    for (const auto& [v, w] : std::vector<std::pair<double, double>>{
             {1.0, 2.0}, {2.0, 1.0}, {1.5, 0.5}}) {
        const BlochModel m{v, w};
        for (double t : {1.0, 5.0, 20.0}) {
            const Eigen::VectorXcd a = ssh_wavefunction(m, 32, t, 64);
            const Eigen::VectorXcd b = exact_evolution_oracle(m, 32, t, 64);
            CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("transmission through a swap boundary falls with dimerization") {
    double prev = 1.1;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const double v = 1.0 + r, w = 1.0 - r;
        const TransmissionResult tr =
            boundary_transmission(v, w, M_PI / 2.0, 0.05 * 2.0 * M_PI);
        CHECK(std::abs(tr.transmission + tr.reflection - 1.0) < 1e-9);
        CHECK(tr.transmission < prev);
        prev = tr.transmission;
    }
}

TEST_CASE("transmission argument validation") {
    CHECK_THROWS_AS(boundary_transmission(1.0, 0.5, M_PI / 2.0, 1.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(boundary_transmission(1.0, 0.5, 0.0, 0.3), SizingError);
}
