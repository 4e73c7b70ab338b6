#include "qwalk/ssh.hpp"

#include <cmath>

namespace qwalk {

namespace {
const cplx kI(0.0, 1.0);
}

Eigen::Vector2d d_vector(const BlochModel& m, double k) {
    return {m.v + m.w * std::cos(k), m.w * std::sin(k)};
}

double energy(const BlochModel& m, double k) {
    return std::sqrt(m.v * m.v + m.w * m.w + 2.0 * m.v * m.w * std::cos(k));
}

double theta_k(const BlochModel& m, double k) {
    const double x = (m.v + m.w) * std::cos(k / 2.0);
    const double y = (m.v - m.w) * std::sin(k / 2.0);
    if (std::abs(x) < 1e-14 && std::abs(y) < 1e-14)
        throw SingularPointError("theta_k: direction undefined at v = w, k = pi");
    return std::atan2(y, x);
}

Eigen::Matrix2cd bloch_h(const BlochModel& m, double k) {
    const Eigen::Vector2d d = d_vector(m, k);
    Eigen::Matrix2cd h;
    h << 0.0, cplx(d.x(), -d.y()), cplx(d.x(), d.y()), 0.0;
    return h;
}

Eigen::Matrix2cd eigenvectors(const BlochModel& m, double k) {
    const double th = theta_k(m, k);
    const cplx ph = std::exp(-kI * (th - k / 2.0));
    Eigen::Matrix2cd v;
    const double r = 1.0 / std::sqrt(2.0);
    v << r, r, r * ph, -r * ph;
    return v;
}

Eigen::Matrix2cd chiral_generator() {
    Eigen::Matrix2cd g;
    g << std::exp(-kI * (M_PI / 2.0)), 0.0, 0.0, std::exp(kI * (M_PI / 2.0));
    return g;
}

WindingResult winding_number(const BlochModel& m, int n_k) {
    if (n_k < 64) throw std::invalid_argument("winding_number: n_k >= 64");
    if (m.gap_closed()) throw GapClosedError("winding_number: v = w, gap closed");
    double total = 0.0;
    double prev = std::arg(cplx(m.v + m.w * std::cos(-M_PI), 0.0) +
                           kI * (m.w * std::sin(-M_PI)));
    for (int i = 1; i <= n_k; ++i) {
        const double k = -M_PI + 2.0 * M_PI * i / n_k;
        const Eigen::Vector2d d = d_vector(m, k);
        const double a = std::atan2(d.y(), d.x());
        double diff = a - prev;
        while (diff > M_PI) diff -= 2.0 * M_PI;
        while (diff < -M_PI) diff += 2.0 * M_PI;
        if (std::abs(diff) > M_PI / 2.0)
            throw ResolutionError("winding_number: unwrap jump too large; "
                                  "increase n_k");
        total += diff;
        prev = a;
    }
    WindingResult res;
    res.nu = static_cast<int>(std::lround(total / (2.0 * M_PI)));
    res.raw_phase_accumulation = total;
    res.n_k = n_k;
    return res;
}

Eigen::VectorXcd ssh_wavefunction(const BlochModel& m, int n0, double t,
                                  int N) {
    if (N < 8) throw std::invalid_argument("ssh_wavefunction: N >= 8");
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * N);
    for (int j = 0; j < N; ++j) {
        const double k = -M_PI + 2.0 * M_PI * j / N;
        const double E = energy(m, k);
        // e^{-i theta_k + i k/2} stays single-valued around the zone even
        // though theta_k and k/2 individually do not
        const double x = (m.v + m.w) * std::cos(k / 2.0);
        const double y = (m.v - m.w) * std::sin(k / 2.0);
        cplx bphase;
        if (std::abs(x) < 1e-300 && std::abs(y) < 1e-300)
            bphase = std::exp(kI * (k / 2.0));
        else
            bphase = std::exp(kI * (k / 2.0 - std::atan2(y, x)));
        const double c = std::cos(E * t), s = std::sin(E * t);
        for (int n = 0; n < N; ++n) {
            const cplx blo = std::exp(kI * (k * (n - n0)));
            psi[2 * n] += blo * c;
            psi[2 * n + 1] += blo * kI * bphase * s;
        }
    }
    psi /= static_cast<double>(N);
    return psi;
}

Eigen::MatrixXd real_space_hamiltonian(const BlochModel& m, int N,
                                       bool periodic) {
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) {
        H(2 * n, 2 * n + 1) = m.v;
        H(2 * n + 1, 2 * n) = m.v;
        const int next = n + 1;
        if (next < N) {
            H(2 * n + 1, 2 * next) = m.w;
            H(2 * next, 2 * n + 1) = m.w;
        } else if (periodic) {
            H(2 * n + 1, 0) = m.w;
            H(0, 2 * n + 1) = m.w;
        }
    }
    return H;
}

Eigen::VectorXcd exact_evolution_oracle(const BlochModel& m, int n0, double t,
                                        int N) {
    if (N < 8) throw std::invalid_argument("exact_evolution_oracle: N >= 8");
    const Eigen::MatrixXd H = real_space_hamiltonian(m, N, true);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& V = es.eigenvectors();
    Eigen::VectorXd delta = Eigen::VectorXd::Zero(2 * N);
    delta[2 * n0] = 1.0;
    const Eigen::VectorXd c = V.transpose() * delta;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * N);
    for (int j = 0; j < 2 * N; ++j)
        psi += std::exp(kI * (lam[j] * t)) * c[j] * V.col(j).cast<cplx>();
    return psi;
}

TransmissionResult boundary_transmission(double v, double w, double k0,
                                         double sigma_k, int steps) {
    if (!(sigma_k > 0.0) || sigma_k >= 1.0)
        throw std::invalid_argument("boundary_transmission: sigma_k in (0,1)");
    const BlochModel left{v, w};
    const double E0 = energy(left, k0);
    const double vg = std::abs(v * w * std::sin(k0) / E0);
    if (vg < 1e-9)
        throw SizingError("boundary_transmission: zero group velocity at k0");

    // group-velocity bound over the band for chain sizing
    double vg_max = vg;
    for (int i = 1; i < 64; ++i) {
        const double k = M_PI * i / 64.0;
        vg_max = std::max(vg_max,
                          std::abs(v * w * std::sin(k) / energy(left, k)));
    }

    const int d0 = 25;  // launch distance from the boundary, in cells
    const int t_end = steps > 0 ? steps
                                : static_cast<int>(std::ceil(4.0 * d0 / vg));
    const int half = std::max(80, static_cast<int>(std::ceil(
                                      d0 + vg_max * t_end * 0.6)) + 20);
    const int N = 2 * half;
    const int nb = half;  // boundary: first cell of the swapped region

    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    for (int n = 0; n < N; ++n) {
        const double vv = n < nb ? v : w;
        const double ww = n < nb ? w : v;
        H(2 * n, 2 * n + 1) = vv;
        H(2 * n + 1, 2 * n) = vv;
        if (n + 1 < N) {
            H(2 * n + 1, 2 * (n + 1)) = ww;
            H(2 * (n + 1), 2 * n + 1) = ww;
        }
    }

    // upper-band packet of the launch region, aimed rightward
    const int nc = nb - d0;
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * N);
    const int nkg = 801;
    for (int j = 0; j < nkg; ++j) {
        const double k = k0 + 5.0 * sigma_k * (2.0 * j / (nkg - 1) - 1.0);
        const double g =
            std::exp(-(k - k0) * (k - k0) / (4.0 * sigma_k * sigma_k));
        const double x = (v + w) * std::cos(k / 2.0);
        const double y = (v - w) * std::sin(k / 2.0);
        if (std::abs(x) < 1e-14 && std::abs(y) < 1e-14) continue;
        const cplx chiB =
            std::exp(-kI * (std::atan2(y, x) - k / 2.0)) / std::sqrt(2.0);
        for (int n = 0; n < N; ++n) {
            const cplx blo = g * std::exp(kI * (k * (n - nc)));
            psi[2 * n] += blo / std::sqrt(2.0);
            psi[2 * n + 1] += blo * chiB;
        }
    }
    psi.normalize();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& V = es.eigenvectors();
    const Eigen::VectorXcd c = V.transpose().cast<cplx>() * psi;
    Eigen::VectorXcd fin = Eigen::VectorXcd::Zero(2 * N);
    for (int j = 0; j < 2 * N; ++j)
        fin += std::exp(kI * (lam[j] * static_cast<double>(t_end))) * c[j] *
               V.col(j).cast<cplx>();

    double end_mass = 0.0;
    for (int n : {0, 1, 2, N - 3, N - 2, N - 1})
        end_mass += std::norm(fin[2 * n]) + std::norm(fin[2 * n + 1]);
    if (end_mass > 1e-6)
        throw SizingError(
            "boundary_transmission: packet reached the chain ends");

    TransmissionResult r;
    for (int n = 0; n < N; ++n) {
        const double mass = std::norm(fin[2 * n]) + std::norm(fin[2 * n + 1]);
        if (n >= nb)
            r.transmission += mass;
        else
            r.reflection += mass;
    }
    return r;
}

}  // namespace qwalk
