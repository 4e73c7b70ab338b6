#include <doctest.h>

#include "qwalk/winding.hpp"

using namespace qwalk;

namespace {

LatticeGraph uniform_graph(double pa, double pbH, double pbV) {
    ChainSpec spec;
    spec.regions = {{RegionPhases::make(pa, pbH, pbV), 8}};
    return LatticeGraph(spec);
}

}  // namespace

TEST_CASE("winding anchors") {
    const LatticeGraph g1 = uniform_graph(-M_PI / 2.0, 0.0, 0.0);
    CHECK(effective_winding_from_graph(g1, Polarization::V).nu == 1);
    const LatticeGraph g0 = uniform_graph(1.5, 2.5, 2.5);
    CHECK(effective_winding_from_graph(g0, Polarization::V).nu == 0);
}

TEST_CASE("swapping phi_a and phi_b flips the class") {
    CHECK(effective_winding(3.0 * M_PI / 2.0, 0.0, -M_PI / 2.0).nu == 0);
    CHECK(effective_winding(3.0 * M_PI / 2.0, 2.5, 1.5).nu == 1);
}

TEST_CASE("register phases carry opposite classes per polarization") {
    const LatticeGraph g = uniform_graph(0.0, -M_PI / 2.0, 1.2);
    CHECK(effective_winding_from_graph(g, Polarization::H).nu == 0);
    CHECK(effective_winding_from_graph(g, Polarization::V).nu == 1);
}

TEST_CASE("equal phases close the gap") {
    CHECK_THROWS_AS(effective_winding(3.0 * M_PI / 2.0, 0.7, 0.7),
                    GapClosedError);
}

TEST_CASE("winding result is well-formed") {
    const WindingResult r = effective_winding(3.0 * M_PI / 2.0, -M_PI / 2.0, 0.0);
    CHECK(std::abs(r.raw_phase_accumulation / (2.0 * M_PI) - r.nu) < 1e-6);
    CHECK((r.nu == 0 || r.nu == 1));
    CHECK_THROWS_AS(effective_winding(3.0 * M_PI / 2.0, 0.1, 0.2, 32),
                    std::invalid_argument);
}

TEST_CASE("non-uniform graphs are rejected") {
    ChainSpec spec;
    spec.regions = {{RegionPhases::make(0.0, 1.0), 4},
                    {RegionPhases::make(0.5, 1.5), 4}};
    const LatticeGraph g(spec);
    CHECK_THROWS_AS(effective_winding_from_graph(g, Polarization::H),
                    std::invalid_argument);
}

TEST_CASE("hopping fit returns a dimerized pair") {
    const HoppingFit f = band_fit_vw(3.0 * M_PI / 2.0, -M_PI / 2.0, 0.0);
    CHECK(f.v > 0.0);
    CHECK(f.w >= 0.0);
    CHECK(f.v >= f.w);
}
