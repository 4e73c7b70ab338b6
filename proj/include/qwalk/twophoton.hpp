#pragma once

#include <optional>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

struct NoEdgeStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MisconfigurationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PolarizationQubit {
    cplx alpha;  // H amplitude
    cplx beta;   // V amplitude
    void validate() const;
};

enum class BellSign { Plus, Minus };
enum class Partition { Upper, Lower };

/// Superposition of product terms over (upper chain x lower chain). The
/// photons never interact, so factor-wise evolution keeps the term count.
struct TwoPhotonState {
    struct Term {
        cplx coeff;
        WalkState upper;
        WalkState lower;
    };
    std::vector<Term> terms;
    double squared_norm() const;
};

TwoPhotonState bell_state(BellSign sign, const LatticeGraph& upper,
                          const LatticeGraph& lower, int cell,
                          Subsite s = Subsite::A,
                          Direction dir = Direction::Right);

/// Local polarization-mixing channel: a rotation by asin(strength) between
/// the H and V amplitudes of every edge, applied on steps in
/// [step_from, step_to).
struct MixingSchedule {
    double strength = 0.0;
    int step_from = 0;
    int step_to = 0;
};

void apply_mixing(WalkState& st, double strength);

/// Evolves each term's photons under their own chain (and the chain's
/// polarization-matched operators); coefficients unchanged.
TwoPhotonState evolve_two_photon(TwoPhotonState state,
                                 const LatticeGraph& upper,
                                 const LatticeGraph& lower, int steps,
                                 const MixingSchedule* mixing = nullptr);

/// Von Neumann entropy (bits) of the reduced state of one photon.
double entanglement_entropy(const TwoPhotonState& state, Partition part);

/// Winding/polarization register on a ring.
WalkState register_write(const PolarizationQubit& q, const LatticeGraph& ring,
                         int cell = 0);
std::pair<double, double> register_read(const WalkState& st);

/// Net polarization-flip probability per perturbed step for a qubit held in
/// the ring under a sustained mixing channel.
double polarization_flip_rate(const LatticeGraph& ring,
                              const PolarizationQubit& q, double mix_strength,
                              int steps, int cell = 0);

struct EdgeBasisAmplitudes {
    cplx amp[2][2];      // [upper in {e,void}][lower in {e,void}]
    double residual = 0.0;
};

/// Per-chain reference pair for the edge-occupation readout. `edge` is the
/// converged boundary profile of the polarization that sees a winding change
/// across the boundary (final window-restricted snapshots of a long run,
/// phase-aligned and averaged); `void_state` is the other polarization's
/// fully evolved state under the same injection protocol, the experiment's
/// "no edge state" branch.
struct EdgeBasis {
    Eigen::VectorXcd edge[2];
    Eigen::VectorXcd void_state[2];
    double peak_mass = 0.0;
    Polarization edge_pol{};
};

/// Which polarization forms a boundary state on this two-region chain:
/// its phases must differ across the boundary with distinct windings.
Polarization edge_polarization(const LatticeGraph& g);

EdgeBasis calibrate_edge_basis(const LatticeGraph& g, int boundary_cell,
                               int window, int calibration_steps,
                               int injection_cell, int run_steps);

EdgeBasisAmplitudes edge_projection(const TwoPhotonState& state,
                                    const EdgeBasis& upper,
                                    const EdgeBasis& lower);

/// Entropy (bits) of the four edge-basis amplitudes renormalized as a
/// two-qubit state.
double edge_basis_entropy(const EdgeBasisAmplitudes& a);

}  // namespace qwalk
