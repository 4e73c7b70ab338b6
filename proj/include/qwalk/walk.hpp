#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/lattice.hpp"
#include "qwalk/step_operator.hpp"

namespace qwalk {

enum class Direction { Right, Left, Symmetric };
enum class Side { Left, Right };

/// Photon amplitudes over (directed edge, polarization), one vector per
/// polarization sector. With no mixing channel the sectors never couple.
struct WalkState {
    Eigen::VectorXcd amp[2];  // indexed by Polarization
    int time_step = 0;

    double squared_norm() const;
    Eigen::VectorXcd& sector(Polarization p) { return amp[static_cast<int>(p)]; }
    const Eigen::VectorXcd& sector(Polarization p) const {
        return amp[static_cast<int>(p)];
    }
};

WalkState inject(const LatticeGraph& g, int cell, Subsite s, Polarization pol,
                 Direction dir = Direction::Right);

/// Probabilities over (cell, subsite), both polarizations summed.
struct Distribution {
    int cells = 0;
    int step = 0;
    std::vector<double> p;  // 2*cells entries, [2*cell + subsite]

    double& at(int cell, Subsite s) { return p[2 * cell + static_cast<int>(s)]; }
    double at(int cell, Subsite s) const {
        return p[2 * cell + static_cast<int>(s)];
    }
    double total() const;
    double mean_position() const;   // subsites at cell -/+ 1/4
    double sigma() const;
    double cell_mass(int cell) const { return p[2 * cell] + p[2 * cell + 1]; }
};

Distribution position_distribution(const LatticeGraph& g, const WalkState& s);

/// Steps at which region phases are replaced for that one step.
struct PerturbationSchedule {
    std::map<int, RegionOverrides> at_step;
};

struct EvolveOptions {
    bool record_history = true;
    bool check_ends = true;      // reflective chains: wavefront must not arrive
    double end_mass_tol = 1e-9;
    bool use_parallel_kernel = true;
};

struct EvolveResult {
    WalkState state;
    std::vector<Distribution> history;  // step 0 .. steps inclusive
};

EvolveResult evolve(const LatticeGraph& g, WalkState state, int steps,
                    const PerturbationSchedule* schedule = nullptr,
                    const EvolveOptions& opt = {});

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Least-squares slope of sigma(step) from `from` on, with its R^2.
LinearFit spread_slope(const std::vector<Distribution>& history, int from = 0);

/// Probability strictly beyond boundary_cell on the given side. Cells
/// >= boundary_cell count as the right side.
double crossing_mass(const Distribution& d, int boundary_cell, Side side);

/// Window mass within +-window cells of the boundary, one value per record.
std::vector<double> boundary_peak_mass(const std::vector<Distribution>& history,
                                       int boundary_cell, int window);

/// Classical random walk on the same graph: probabilities instead of
/// amplitudes. Returns the sigma(step) series.
std::vector<double> classical_walk_sigma(const LatticeGraph& g, int cell,
                                         Subsite s, int steps);

}  // namespace qwalk
