#pragma once

#include <Eigen/Dense>

#include "qwalk/winding.hpp"

namespace qwalk {

struct SingularPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two-band chain with intracell hopping v and intercell hopping w.
struct BlochModel {
    double v = 0.0;
    double w = 0.0;
    bool gap_closed() const { return std::abs(v - w) < 1e-12; }
};

/// d(k) = (v + w cos k, w sin k); H(k) = E_k * (d_hat . sigma).
Eigen::Vector2d d_vector(const BlochModel& m, double k);

double energy(const BlochModel& m, double k);  // sqrt(v^2+w^2+2vw cos k)

/// Berry-phase angle, branch-tracked through atan2 of
/// ((v-w) sin(k/2), (v+w) cos(k/2)).
double theta_k(const BlochModel& m, double k);

Eigen::Matrix2cd bloch_h(const BlochModel& m, double k);

/// (|+>, |->) with H|+-> = +-E|+->; columns of the returned matrix.
Eigen::Matrix2cd eigenvectors(const BlochModel& m, double k);

/// Chiral generator exp(-i pi sigma_z / 2); anticommutes with bloch_h.
Eigen::Matrix2cd chiral_generator();

/// Winding of the phase of d_x + i d_y over the Brillouin zone, by unwrapped
/// accumulation over n_k samples.
WindingResult winding_number(const BlochModel& m, int n_k);

/// Amplitudes over (cell, subsite) of a photon starting at subsite A of cell
/// n0, evolved for time t on a periodic N-cell chain via the two-band k-sum.
/// Layout: entry 2n = (n, A), 2n+1 = (n, B).
Eigen::VectorXcd ssh_wavefunction(const BlochModel& m, int n0, double t, int N);

/// Same amplitudes from the real-space 2N x 2N tight-binding Hamiltonian and
/// its exact matrix exponential; independent check of the k-sum route.
Eigen::VectorXcd exact_evolution_oracle(const BlochModel& m, int n0, double t,
                                        int N);

/// Real-space SSH Hamiltonian on N cells (periodic when `periodic`).
Eigen::MatrixXd real_space_hamiltonian(const BlochModel& m, int N,
                                       bool periodic);

struct TransmissionResult {
    double transmission = 0.0;
    double reflection = 0.0;
};

/// Gaussian wavepacket scattering off a boundary where (v, w) swap. The
/// packet is built from the upper-band Bloch states of the launch region and
/// aimed at the boundary; returns the probability beyond the boundary after
/// the scattering completes. steps = 0 picks the time horizon automatically.
TransmissionResult boundary_transmission(double v, double w, double k0,
                                         double sigma_k, int steps = 0);

}  // namespace qwalk
