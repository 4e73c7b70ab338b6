#pragma once

#include <stdexcept>

#include "qwalk/lattice.hpp"

namespace qwalk {

struct WindingResult {
    int nu = 0;
    double raw_phase_accumulation = 0.0;  // 2*pi*nu for converged results
    int n_k = 0;
};

/// Raised when the relevant quasienergy gap is closed (winding undefined).
struct GapClosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a discretized winding cannot be resolved at the requested
/// resolution or classification margin.
struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Topological class of a uniform chain's effective Hamiltonian for the
/// given polarization. The chain is Bloch-reduced to its two-channel
/// propagating sector to verify a spectral gap and that the half-cell
/// dislocation binds (it unbinds exactly at a topological transition); the
/// binary class is then fixed by which of the two reference configurations
/// ((-pi/2, 0) labelled nu=1 and (1.5, 2.5) labelled nu=0) the chain forms a
/// clean, boundary-state-free junction with.
WindingResult effective_winding_from_graph(const LatticeGraph& g,
                                           Polarization pol, int n_k = 1024);

/// Same classifier on raw phase settings.
WindingResult effective_winding(double theta, double phi_a, double phi_b,
                                int n_k = 1024);

/// Width of the widest spectral gap of the uniform chain (diagnostic; the
/// sweep export's min_gap column).
double widest_gap_width(double theta, double phi_a, double phi_b,
                        int n_k = 1024);

/// Effective two-band hopping fit from the quasienergy band structure:
/// half-sum and half-difference of the widest gap's flanking band extremes.
/// Diagnostic only; magnitudes carry no class label.
struct HoppingFit {
    double v = 0.0;
    double w = 0.0;
};
HoppingFit band_fit_vw(double theta, double phi_a, double phi_b,
                       int n_k = 4096);

}  // namespace qwalk
