// Compares the serial reference step kernel against the OpenMP one on a
// large ring and reports throughput plus the worst amplitude mismatch.

#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "qwalk/step_operator.hpp"
#include "qwalk/walk.hpp"

namespace {

double now_seconds() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

}  // namespace

int main(int argc, char** argv) {
    int cells = 50000;
    int steps = 200;
    if (argc > 1) cells = std::atoi(argv[1]);
    if (argc > 2) steps = std::atoi(argv[2]);

    qwalk::ChainSpec spec;
    spec.boundary = qwalk::Boundary::Periodic;
    spec.regions = {{qwalk::RegionPhases::make(-M_PI / 2.0, 0.0), cells}};
    const qwalk::LatticeGraph g(spec);
    const qwalk::StepOperator op =
        build_step_operator(g, qwalk::Polarization::V);

    Eigen::VectorXcd psi(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        psi[e] = std::exp(qwalk::cplx(0.0, 0.37 * e)) /
                 std::sqrt(static_cast<double>(g.edge_count()));

    Eigen::VectorXcd a = psi, b = psi, tmp(g.edge_count());

    const double t0 = now_seconds();
    for (int t = 0; t < steps; ++t) {
        op.apply_serial(a.data(), tmp.data());
        a.swap(tmp);
    }
    const double t_serial = now_seconds() - t0;

    const double t1 = now_seconds();
    for (int t = 0; t < steps; ++t) {
        op.apply_parallel(b.data(), tmp.data());
        b.swap(tmp);
    }
    const double t_parallel = now_seconds() - t1;

    const double diff = (a - b).cwiseAbs().maxCoeff();
    const double flops = 2.0 * 8.0 * op.val.size() * steps;  // cmul+cadd per nnz
    std::printf("cells=%d edges=%d steps=%d\n", cells, g.edge_count(), steps);
    std::printf("serial:   %8.3f s  (%6.2f Mflop/s)\n", t_serial,
                flops / t_serial / 1e6);
    std::printf("parallel: %8.3f s  (%6.2f Mflop/s, speedup %.2fx)\n",
                t_parallel, flops / t_parallel / 1e6, t_serial / t_parallel);
    std::printf("max |serial - parallel| = %.3e\n", diff);
    std::printf("norm drift serial = %.3e\n",
                std::abs(a.squaredNorm() - psi.squaredNorm()));
    return diff < 1e-12 ? 0 : 1;
}
