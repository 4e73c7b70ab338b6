#pragma once

#include <complex>
#include <vector>

namespace qwalk {

/// Quasienergy-domain reduction of a diamond chain to its two-channel
/// propagating sector. Each diamond acts as a two-port scatterer with
/// reflection rho and transmission tau at spectral factor z = exp(i*eps);
/// a unit cell is described by the 2x2 transfer matrix T_b * T_a acting on
/// (right-mover, left-mover) amplitudes of the connecting segments. The
/// transfer matrices are kept in the regularized form tau*T so that total
/// reflection points stay finite.

struct DiamondAmplitudes {
    std::complex<double> rho;
    std::complex<double> tau;
};

DiamondAmplitudes diamond_amplitudes(std::complex<double> z, double theta,
                                     double phi);

struct CellTransfer {
    // tilde T = (tau_a * tau_b) * T_cell, det = (tau_a * tau_b)^2
    std::complex<double> t11, t12, t21, t22;
    std::complex<double> scale;  // tau_a * tau_b
    std::complex<double> trace_ratio() const { return (t11 + t22) / scale; }
};

CellTransfer cell_transfer(std::complex<double> z, double theta, double phi_a,
                           double phi_b);

struct GapInterval {
    double lo, hi;  // quasienergy interval with no propagating cell mode
    double width() const { return hi - lo; }
    double mid() const { return lo + (hi - lo) / 2.0; }
};

/// Spectral gaps of the uniform chain, from an n-point scan of |tr| > 2 over
/// the quasienergy circle. Intervals may extend past +-pi when a gap wraps.
std::vector<GapInterval> gap_scan(double theta, double phi_a, double phi_b,
                                  int n);

/// In-gap reflection amplitude ratios on a connecting segment:
/// first = rightward-decaying solution (semi-infinite chain to the right),
/// second = leftward-decaying one (chain to the left). Both unimodular
/// inside gaps.
struct ReflectionPair {
    std::complex<double> rho_right;
    std::complex<double> rho_left;
};

ReflectionPair reflection_pair(std::complex<double> z, double theta,
                               double phi_a, double phi_b);

/// True if the junction (left chain | right chain) binds a state in some
/// common spectral gap: the round-trip phase of the two reflection
/// amplitudes crosses zero inside the gap.
bool junction_has_resonance(double theta, double pa_left, double pb_left,
                            double pa_right, double pb_right, int n_scan = 2048,
                            int n_res = 600);

/// Half-cell dislocation probe: a gapped chain always binds a state against
/// its own phase-swapped copy; the binding disappears exactly where the
/// relevant gap closes.
bool dislocation_gapped(double theta, double phi_a, double phi_b,
                        int n_scan = 2048);

}  // namespace qwalk
