#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "qwalk/scattering.hpp"
#include "qwalk/step_operator.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {
constexpr double kTheta = 3.0 * M_PI / 2.0;
}

TEST_CASE("diamond two-port scattering is unitary on the circle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> d(-M_PI, M_PI);
    for (int i = 0; i < 50; ++i) {
        const auto da = diamond_amplitudes(std::exp(cplx(0.0, d(rng))),
                                           kTheta, d(rng));
        CHECK(std::norm(da.rho) + std::norm(da.tau) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(da.rho * std::conj(da.tau) +
                       da.tau * std::conj(da.rho)) < 1e-12);
    }
}

TEST_CASE("reduced dispersion reproduces the ring walk spectrum") {
    // every quasienergy of a small ring must satisfy tr T(eps) = 2 cos k
    // for one of the ring momenta; the caged flat modes are the only
    // exceptions and are absent at this setting
    const int N = 6;
    ChainSpec spec;
    spec.boundary = Boundary::Periodic;
    spec.regions = {{RegionPhases::make(1.5, 2.5), N}};
    const LatticeGraph g(spec);
    const StepOperator op = build_step_operator(g, Polarization::V);
    Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(op.dim, op.dim);
    for (int r = 0; r < op.dim; ++r)
        for (int k = op.row_ptr[r]; k < op.row_ptr[r + 1]; ++k)
            S(r, op.col[k]) = op.val[k];
    const Eigen::VectorXcd lam = Eigen::ComplexEigenSolver<Eigen::MatrixXcd>(S)
                                     .eigenvalues();
    int matched = 0;
    for (int i = 0; i < lam.size(); ++i) {
        CHECK(std::abs(std::abs(lam[i]) - 1.0) < 1e-9);
        const double eps = -std::arg(lam[i]);
        const CellTransfer t =
            cell_transfer(std::exp(cplx(0.0, eps)), kTheta, 1.5, 2.5);
        const cplx ratio = t.trace_ratio();
        double best = 1e9;
        for (int m = 0; m < N; ++m)
            best = std::min(best,
                            std::abs(ratio - 2.0 * std::cos(2.0 * M_PI * m / N)));
        if (best < 1e-6) ++matched;
    }
    CHECK(matched == lam.size());
}

TEST_CASE("gap scan finds gaps whose interior has no propagating mode") {
    const auto gaps = gap_scan(kTheta, -M_PI / 2.0, 0.0, 4096);
    REQUIRE(!gaps.empty());
    for (const GapInterval& gi : gaps) {
        const CellTransfer t = cell_transfer(std::exp(cplx(0.0, gi.mid())),
                                             kTheta, -M_PI / 2.0, 0.0);
        CHECK(std::abs(t.trace_ratio()) > 2.0);
    }
}

TEST_CASE("in-gap reflection amplitudes are unimodular") {
    const auto gaps = gap_scan(kTheta, 1.5, 2.5, 4096);
    REQUIRE(!gaps.empty());
    for (const GapInterval& gi : gaps) {
        if (gi.width() < 0.05) continue;
        const ReflectionPair r =
            reflection_pair(std::exp(cplx(0.0, gi.mid())), kTheta, 1.5, 2.5);
        CHECK(std::abs(r.rho_right) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(r.rho_left) == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("the half-cell dislocation binds for gapped settings only") {
    CHECK(dislocation_gapped(kTheta, -M_PI / 2.0, 0.0));
    CHECK(dislocation_gapped(kTheta, 1.5, 2.5));
    CHECK_FALSE(dislocation_gapped(kTheta, 0.7, 0.7));
    CHECK_FALSE(dislocation_gapped(kTheta, -2.0, -2.0));
}

TEST_CASE("the labelled reference junction binds a boundary state") {
    CHECK(junction_has_resonance(kTheta, -M_PI / 2.0, 0.0, 1.5, 2.5));
}
