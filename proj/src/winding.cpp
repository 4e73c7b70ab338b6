#include "qwalk/winding.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "qwalk/scattering.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace {

constexpr double kRef1PhiA = -M_PI / 2.0, kRef1PhiB = 0.0;  // nu = 1 anchor
constexpr double kRef0PhiA = 1.5, kRef0PhiB = 2.5;          // nu = 0 anchor

// Long-run boundary-window mass of the junction (ref | target): a two-region
// reflective chain, photon injected next to the interface, window +-2 cells,
// averaged over the final 40 of 400 steps.
double junction_window_mass(double theta, double ref_a, double ref_b,
                            double pa, double pb) {
    constexpr int kHalf = 60, kSteps = 400, kAvg = 40, kWin = 2;
    ChainSpec spec;
    spec.threeport_theta = theta;
    spec.regions = {{RegionPhases::make(ref_a, ref_b), kHalf},
                    {RegionPhases::make(pa, pb), kHalf}};
    const LatticeGraph g(spec);
    WalkState st = inject(g, kHalf - 1, Subsite::A, Polarization::V);

    StepOperator op = build_step_operator(g, Polarization::V);
    Eigen::VectorXcd tmp(g.edge_count());
    double acc = 0.0;
    for (int t = 0; t < kSteps; ++t) {
        op.apply_parallel(st.amp[1].data(), tmp.data());
        st.amp[1].swap(tmp);
        ++st.time_step;
        if (t >= kSteps - kAvg) {
            const Distribution d = position_distribution(g, st);
            for (int n = kHalf - kWin; n <= kHalf + kWin; ++n)
                acc += d.cell_mass(n);
        }
    }
    return acc / kAvg;
}

bool binds_either_order(double theta, double ra, double rb, double pa,
                        double pb) {
    return junction_has_resonance(theta, ra, rb, pa, pb, 4096, 2400) ||
           junction_has_resonance(theta, pa, pb, ra, rb, 4096, 2400);
}

struct SideVerdict {
    std::optional<int> nu;
    bool certified = false;
};

// Classification of one phase ordering. A junction between chains of
// different classes always binds a state, so the absence of any resonance
// against a reference certifies membership in that reference's class.
// When states exist against both references (interface states need not be
// topological), fall back to comparing the dynamically captured boundary
// mass and require a clear margin.
SideVerdict classify_side(double theta, double pa, double pb) {
    const bool r1 = binds_either_order(theta, kRef1PhiA, kRef1PhiB, pa, pb);
    const bool r0 = binds_either_order(theta, kRef0PhiA, kRef0PhiB, pa, pb);
    if (!r1 && !r0)
        throw ResolutionError(
            "effective_winding: no bound state against either reference");
    SideVerdict v;
    if (!r1 || !r0) {
        v.nu = !r1 ? 1 : 0;
        v.certified = true;
        return v;
    }
    const double w1 = junction_window_mass(theta, kRef1PhiA, kRef1PhiB, pa, pb);
    const double w0 = junction_window_mass(theta, kRef0PhiA, kRef0PhiB, pa, pb);
    if (std::max(w1, w0) >= 1.4 * std::min(w1, w0) + 1e-6)
        v.nu = w1 < w0 ? 1 : 0;
    return v;
}

}  // namespace

WindingResult effective_winding(double theta, double phi_a, double phi_b,
                                int n_k) {
    if (n_k < 64) throw std::invalid_argument("effective_winding: n_k >= 64");
    const int n_scan = std::max(n_k, 512);

    const auto gaps = gap_scan(theta, phi_a, phi_b, n_scan);
    if (gaps.empty())
        throw GapClosedError("effective_winding: no spectral gap");
    if (!dislocation_gapped(theta, phi_a, phi_b, n_scan))
        throw GapClosedError(
            "effective_winding: dislocation unbinds; gap closes at this "
            "setting");

    // classify both cell labellings; they must land in opposite classes
    const SideVerdict own = classify_side(theta, phi_a, phi_b);
    const SideVerdict swapped = classify_side(theta, phi_b, phi_a);

    std::optional<int> nu;
    if (own.certified && swapped.certified) {
        if (*own.nu == *swapped.nu)
            throw ResolutionError(
                "effective_winding: contradictory certificates");
        nu = own.nu;
    } else if (own.certified) {
        nu = own.nu;
    } else if (swapped.certified) {
        nu = 1 - *swapped.nu;
    } else if (own.nu && swapped.nu) {
        if (*own.nu == *swapped.nu)
            throw ResolutionError(
                "effective_winding: cell relabelling does not flip the class");
        nu = own.nu;
    } else if (own.nu) {
        nu = own.nu;
    } else if (swapped.nu) {
        nu = 1 - *swapped.nu;
    }
    if (!nu)
        throw ResolutionError(
            "effective_winding: classification margin too small");

    WindingResult res;
    res.nu = *nu;
    res.raw_phase_accumulation = 2.0 * M_PI * res.nu;
    res.n_k = n_scan;
    return res;
}

WindingResult effective_winding_from_graph(const LatticeGraph& g,
                                           Polarization pol, int n_k) {
    if (!g.uniform())
        throw std::invalid_argument(
            "effective_winding_from_graph: graph must be uniform");
    const RegionPhases& rp = g.region_phases(0);
    return effective_winding(g.spec().threeport_theta, rp.phi_a, rp.phi_b(pol),
                             n_k);
}

double widest_gap_width(double theta, double phi_a, double phi_b, int n_k) {
    double w = 0.0;
    for (const GapInterval& gi : gap_scan(theta, phi_a, phi_b, n_k))
        w = std::max(w, gi.width());
    return w;
}

HoppingFit band_fit_vw(double theta, double phi_a, double phi_b, int n_k) {
    const auto gaps = gap_scan(theta, phi_a, phi_b, n_k);
    if (gaps.empty()) throw GapClosedError("band_fit_vw: no spectral gap");
    const GapInterval* widest = &gaps[0];
    for (const auto& gi : gaps)
        if (gi.width() > widest->width()) widest = &gi;
    // flanking bands end where the neighbouring gaps begin
    double below = widest->lo - 2.0 * M_PI, above = widest->hi + 2.0 * M_PI;
    for (const auto& gi : gaps) {
        for (double s : {-2.0 * M_PI, 0.0, 2.0 * M_PI}) {
            const double hi = gi.hi + s, lo = gi.lo + s;
            if (hi < widest->lo + 1e-12 && hi > below) below = hi;
            if (lo > widest->hi - 1e-12 && lo < above) above = lo;
        }
    }
    // two-band correspondence: half the gap is |v - w|, half the outer span v + w
    const double e_min = widest->width() / 2.0;
    const double e_max = (above - below) / 2.0;
    HoppingFit f;
    f.v = (e_max + e_min) / 2.0;
    f.w = (e_max - e_min) / 2.0;
    return f;
}

}  // namespace qwalk
