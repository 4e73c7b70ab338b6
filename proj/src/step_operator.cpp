#include "qwalk/step_operator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qwalk {

namespace {

struct Triplet {
    int row, col;
    cplx v;
};

std::vector<Triplet> scatter_triplets(const LatticeGraph& g, Polarization pol,
                                      const RegionOverrides* overrides) {
    // effective per-edge phase with overrides applied
    std::vector<double> phase(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) phase[e] = g.edge_phase(e, pol);
    if (overrides) {
        for (const auto& [region, rp] : *overrides) {
            for (int n = 0; n < g.cells(); ++n) {
                if (g.region_of_cell(n) != region) continue;
                const int b = 12 * n;
                phase[b + 2] = phase[b + 3] = rp.phi_a;
                phase[b + 8] = phase[b + 9] = rp.phi_b(pol);
            }
        }
    }

    const Eigen::Matrix3cd& U = g.scatterer().matrix;
    std::vector<Triplet> t;
    t.reserve(3 * g.edge_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& p = g.vertex(v);
        if (g.vertex_is_mirror(v)) {
            t.push_back({p.out_edge[0], p.in_edge[0], cplx(1.0)});
            continue;
        }
        for (int po = 0; po < 3; ++po) {
            const int f = p.out_edge[po];
            const cplx ph = std::exp(cplx(0.0, phase[f]));
            for (int pi = 0; pi < 3; ++pi)
                t.push_back({f, p.in_edge[pi], ph * U(po, pi)});
        }
    }
    return t;
}

template <typename Op, typename Val>
void fill_csr(Op& op, int dim, std::vector<Triplet>& trip,
              Val&& convert) {
    op.dim = dim;
    std::stable_sort(trip.begin(), trip.end(),
                     [](const Triplet& a, const Triplet& b) {
                         return a.row != b.row ? a.row < b.row : a.col < b.col;
                     });
    op.row_ptr.assign(dim + 1, 0);
    for (const auto& e : trip) ++op.row_ptr[e.row + 1];
    for (int i = 0; i < dim; ++i) op.row_ptr[i + 1] += op.row_ptr[i];
    op.col.resize(trip.size());
    op.val.resize(trip.size());
    for (std::size_t i = 0; i < trip.size(); ++i) {
        op.col[i] = trip[i].col;
        op.val[i] = convert(trip[i].v);
    }
}

}  // namespace

StepOperator build_step_operator(const LatticeGraph& g, Polarization pol,
                                 const RegionOverrides* overrides) {
    auto trip = scatter_triplets(g, pol, overrides);
    StepOperator op;
    fill_csr(op, g.edge_count(), trip, [](cplx v) { return v; });
    return op;
}

ClassicalStepOperator build_classical_operator(const LatticeGraph& g,
                                               Polarization pol) {
    auto trip = scatter_triplets(g, pol, nullptr);
    ClassicalStepOperator op;
    fill_csr(op, g.edge_count(), trip, [](cplx v) { return std::norm(v); });
    return op;
}

void StepOperator::apply_serial(const cplx* in, cplx* out) const {
    for (int r = 0; r < dim; ++r) {
        cplx acc = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[k] * in[col[k]];
        out[r] = acc;
    }
}

void StepOperator::apply_parallel(const cplx* in, cplx* out) const {
#pragma omp parallel for schedule(static)
    for (int r = 0; r < dim; ++r) {
        cplx acc = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[k] * in[col[k]];
        out[r] = acc;
    }
}

void StepOperator::apply_adjoint(const cplx* in, cplx* out) const {
    for (int r = 0; r < dim; ++r) out[r] = 0.0;
    for (int r = 0; r < dim; ++r)
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            out[col[k]] += std::conj(val[k]) * in[r];
}

Eigen::VectorXcd StepOperator::apply(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd y(dim);
    apply_parallel(x.data(), y.data());
    return y;
}

Eigen::VectorXcd StepOperator::apply_adjoint(const Eigen::VectorXcd& x) const {
    Eigen::VectorXcd y(dim);
    apply_adjoint(x.data(), y.data());
    return y;
}

double StepOperator::unitarity_defect() const {
    // S^dag S entries exist only for column pairs meeting in some row
    std::map<std::pair<int, int>, cplx> acc;
    for (int r = 0; r < dim; ++r)
        for (int a = row_ptr[r]; a < row_ptr[r + 1]; ++a)
            for (int b = row_ptr[r]; b < row_ptr[r + 1]; ++b)
                acc[{col[a], col[b]}] += std::conj(val[a]) * val[b];
    double defect = 0.0;
    std::vector<bool> diag_seen(dim, false);
    for (const auto& [key, v] : acc) {
        const cplx expect = key.first == key.second ? cplx(1.0) : cplx(0.0);
        defect = std::max(defect, std::abs(v - expect));
        if (key.first == key.second) diag_seen[key.first] = true;
    }
    for (int i = 0; i < dim; ++i)
        if (!diag_seen[i]) defect = std::max(defect, 1.0);
    return defect;
}

void ClassicalStepOperator::apply(const double* in, double* out) const {
    for (int r = 0; r < dim; ++r) {
        double acc = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            acc += val[k] * in[col[k]];
        out[r] = acc;
    }
}

}  // namespace qwalk
