#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qwalk/lattice.hpp"

namespace qwalk {

/// One-step evolution operator over directed edges, stored as CSR. Row e
/// collects the amplitudes scattered onto edge e from the in-edges of its
/// tail vertex, so rows have at most three entries and writes are disjoint.
struct StepOperator {
    int dim = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<cplx> val;

    void apply_serial(const cplx* in, cplx* out) const;
    void apply_parallel(const cplx* in, cplx* out) const;
    void apply_adjoint(const cplx* in, cplx* out) const;

    Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;
    Eigen::VectorXcd apply_adjoint(const Eigen::VectorXcd& x) const;

    /// max entrywise |S^dag S - I|; intended for tests on moderate sizes.
    double unitarity_defect() const;
};

/// Optional per-region phase replacement used while a perturbation is active.
using RegionOverrides = std::vector<std::pair<int, RegionPhases>>;

StepOperator build_step_operator(const LatticeGraph& g, Polarization pol,
                                 const RegionOverrides* overrides = nullptr);

/// Classical counterpart: entries are squared magnitudes, acting on
/// probability vectors (column-stochastic).
struct ClassicalStepOperator {
    int dim = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<double> val;
    void apply(const double* in, double* out) const;
};

ClassicalStepOperator build_classical_operator(const LatticeGraph& g,
                                               Polarization pol);

}  // namespace qwalk
