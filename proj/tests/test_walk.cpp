#include <doctest.h>

#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

LatticeGraph uniform_chain(int cells) {
    ChainSpec spec;
    spec.regions = {{RegionPhases::make(-M_PI / 2.0, 0.0), cells}};
    return LatticeGraph(spec);
}

LatticeGraph uniform_ring(int cells) {
    ChainSpec spec;
    spec.boundary = Boundary::Periodic;
    spec.regions = {{RegionPhases::make(-M_PI / 2.0, 0.0), cells}};
    return LatticeGraph(spec);
}

}  // namespace

TEST_CASE("fresh injection is a unit delta at the chosen cell") {
    const LatticeGraph g = uniform_chain(100);
    const WalkState st = inject(g, 68, Subsite::A, Polarization::V);
    CHECK(st.squared_norm() == doctest::Approx(1.0).epsilon(1e-14));
    const Distribution d = position_distribution(g, st);
    CHECK(d.at(68, Subsite::A) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("zero steps leave the distribution unchanged") {
    const LatticeGraph g = uniform_chain(20);
    WalkState st = inject(g, 10, Subsite::B, Polarization::H,
                          Direction::Symmetric);
    const Distribution before = position_distribution(g, st);
    const EvolveResult res = evolve(g, std::move(st), 0);
    const Distribution after = position_distribution(g, res.state);
    for (std::size_t i = 0; i < before.p.size(); ++i)
        CHECK(before.p[i] == after.p[i]);
}

TEST_CASE("norm is conserved over 1000 steps") {
    const LatticeGraph g = uniform_ring(24);
    WalkState st = inject(g, 5, Subsite::A, Polarization::V);
    EvolveOptions opt;
    opt.record_history = false;
    const EvolveResult res = evolve(g, std::move(st), 1000, nullptr, opt);
    CHECK(std::abs(res.state.squared_norm() - 1.0) < 1e-10);
}

TEST_CASE("ballistic spreading on the uniform chain") {
    const LatticeGraph g = uniform_chain(160);
    WalkState st = inject(g, 68, Subsite::A, Polarization::V);
    const EvolveResult res = evolve(g, std::move(st), 50);
    const LinearFit f = spread_slope(res.history, 10);
    CHECK(f.r2 > 0.99);
    CHECK(f.slope > 0.0);
    for (const Distribution& d : res.history)
        CHECK(std::abs(d.total() - 1.0) < 1e-10);
}

TEST_CASE("translation covariance away from the ends") {
    const LatticeGraph g = uniform_chain(60);
    const int m = 20, k = 7;
    const Distribution a =
        evolve(g, inject(g, 25, Subsite::A, Polarization::V), m).history.back();
    const Distribution b =
        evolve(g, inject(g, 25 + k, Subsite::A, Polarization::V), m)
            .history.back();
    for (int n = 10; n < 45; ++n) {
        CHECK(a.at(n, Subsite::A) ==
              doctest::Approx(b.at(n + k, Subsite::A)).epsilon(1e-10));
        CHECK(a.at(n, Subsite::B) ==
              doctest::Approx(b.at(n + k, Subsite::B)).epsilon(1e-10));
    }
}

TEST_CASE("polarizations never mix during plain evolution") {
    const LatticeGraph g = uniform_chain(40);
    WalkState st = inject(g, 20, Subsite::A, Polarization::H);
    const EvolveResult res = evolve(g, std::move(st), 60);
    CHECK(res.state.amp[1].cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("crossing mass of a delta left of the boundary is zero") {
    const LatticeGraph g = uniform_chain(100);
    const Distribution d =
        position_distribution(g, inject(g, 68, Subsite::A, Polarization::V));
    CHECK(crossing_mass(d, 86, Side::Right) == 0.0);
    CHECK(crossing_mass(d, 50, Side::Left) == 0.0);
    CHECK(crossing_mass(d, 68, Side::Right) == doctest::Approx(1.0));
}

TEST_CASE("a window spanning the whole chain holds all the mass") {
    const LatticeGraph g = uniform_chain(30);
    WalkState st = inject(g, 15, Subsite::A, Polarization::V);
    const EvolveResult res = evolve(g, std::move(st), 10);
    const auto series = boundary_peak_mass(res.history, 15, 30);
    for (double m : series) CHECK(m == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spread fit rejects short or empty histories") {
    const LatticeGraph g = uniform_chain(30);
    WalkState st = inject(g, 15, Subsite::A, Polarization::V);
    const EvolveResult res = evolve(g, std::move(st), 5);
    CHECK_THROWS_AS(spread_slope(res.history), std::invalid_argument);

    std::vector<Distribution> degenerate(12);
    for (int i = 0; i < 12; ++i) {
        degenerate[i].cells = 3;
        degenerate[i].step = i;
        degenerate[i].p = {0.0, 1.0, 0.0, 0.0, 0.0, 0.0};  // zero sigma forever
    }
    CHECK_THROWS_AS(spread_slope(degenerate), std::invalid_argument);
}

TEST_CASE("classical walk spreads diffusively, not ballistically") {
    const LatticeGraph g = uniform_chain(160);
    const std::vector<double> sig = classical_walk_sigma(g, 68, Subsite::A, 50);
    std::vector<double> t, rt, s;
    for (int i = 10; i <= 50; ++i) {
        t.push_back(i);
        rt.push_back(std::sqrt(static_cast<double>(i)));
        s.push_back(sig[i]);
    }
    const LinearFit lin = fit_line(t, s);
    const LinearFit root = fit_line(rt, s);
    CHECK(root.r2 > lin.r2);
}

TEST_CASE("wavefront reaching the ends trips the evolve guard") {
    const LatticeGraph g = uniform_chain(10);
    WalkState st = inject(g, 5, Subsite::A, Polarization::V);
    CHECK_THROWS_AS(evolve(g, std::move(st), 400), std::runtime_error);
}
