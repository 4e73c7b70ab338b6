#include "qwalk/scattering.hpp"

#include <cmath>

#include "qwalk/threeport.hpp"

namespace qwalk {

namespace {
using C = std::complex<double>;
constexpr double kTwoPi = 2.0 * M_PI;
}  // namespace

DiamondAmplitudes diamond_amplitudes(C z, double theta, double phi) {
    const ThreePortUnitary u = build_threeport(theta);
    const C p = u.matrix(0, 0);
    const C pq = u.matrix(0, 1);
    const C b = std::exp(C(0.0, 1.0) * phi);

    // internal two-mode bounce matrix M = z * diag(1, b) * V
    const C a11 = z * u.matrix(1, 1);
    const C a12 = z * u.matrix(1, 2);
    const C a21 = z * b * u.matrix(2, 1);
    const C a22 = z * b * u.matrix(2, 2);
    // I - M^2
    const C m11 = a11 * a11 + a12 * a21;
    const C m12 = a11 * a12 + a12 * a22;
    const C m21 = a21 * a11 + a22 * a21;
    const C m22 = a21 * a12 + a22 * a22;
    const C A = 1.0 - m11, B = -m12, Cc = -m21, D = 1.0 - m22;
    const C det = A * D - B * Cc;
    const C k1 = z * pq, k2 = z * b * pq;
    const C x1 = (D * k1 - B * k2) / det;
    const C x2 = (-Cc * k1 + A * k2) / det;

    DiamondAmplitudes out;
    out.tau = z * pq * (x1 + x2);
    const C mx1 = a11 * x1 + a12 * x2;
    const C mx2 = a21 * x1 + a22 * x2;
    out.rho = z * p + z * pq * (mx1 + mx2);
    return out;
}

CellTransfer cell_transfer(C z, double theta, double phi_a, double phi_b) {
    const DiamondAmplitudes da = diamond_amplitudes(z, theta, phi_a);
    const DiamondAmplitudes db = diamond_amplitudes(z, theta, phi_b);
    // tilde T_d = tau * T_d = [[tau^2 - rho^2, rho], [-rho, 1]]
    const C a11 = da.tau * da.tau - da.rho * da.rho, a12 = da.rho;
    const C a21 = -da.rho, a22 = 1.0;
    const C b11 = db.tau * db.tau - db.rho * db.rho, b12 = db.rho;
    const C b21 = -db.rho, b22 = 1.0;
    CellTransfer t;
    t.t11 = b11 * a11 + b12 * a21;
    t.t12 = b11 * a12 + b12 * a22;
    t.t21 = b21 * a11 + b22 * a21;
    t.t22 = b21 * a12 + b22 * a22;
    t.scale = da.tau * db.tau;
    return t;
}

std::vector<GapInterval> gap_scan(double theta, double phi_a, double phi_b,
                                  int n) {
    const double dw = kTwoPi / n;
    std::vector<bool> ingap(n);
    int first_band = -1;
    for (int i = 0; i < n; ++i) {
        const double w = -M_PI + i * dw;
        const CellTransfer t = cell_transfer(std::exp(C(0.0, w)), theta, phi_a,
                                             phi_b);
        ingap[i] = std::abs(t.t11 + t.t22) > 2.0 * std::abs(t.scale);
        if (!ingap[i] && first_band < 0) first_band = i;
    }
    std::vector<GapInterval> gaps;
    if (first_band < 0) {  // no propagating sample anywhere (fully caged)
        gaps.push_back({-M_PI, M_PI});
        return gaps;
    }
    int run_start = -1;
    for (int k = 0; k <= n; ++k) {
        const int j = (first_band + k) % n;
        if (k < n && ingap[j]) {
            if (run_start < 0) run_start = first_band + k;
        } else if (run_start >= 0) {
            const double lo = -M_PI + (run_start % n) * dw;
            const double width = (first_band + k - 1 - run_start) * dw;
            gaps.push_back({lo, lo + width});
            run_start = -1;
        }
    }
    return gaps;
}

ReflectionPair reflection_pair(C z, double theta, double phi_a, double phi_b) {
    const CellTransfer t = cell_transfer(z, theta, phi_a, phi_b);
    const C tr = t.t11 + t.t22;
    const C s2 = t.scale * t.scale;
    const C disc = std::sqrt(tr * tr - 4.0 * s2);
    const C mu1 = (tr + disc) / 2.0;
    const C mu2 = (tr - disc) / 2.0;
    const bool one_smaller = std::abs(mu1) < std::abs(mu2);
    const C mu_dec = one_smaller ? mu1 : mu2;
    const C mu_gr = one_smaller ? mu2 : mu1;
    ReflectionPair r;
    r.rho_right = (mu_dec - t.t11) / t.t12;
    r.rho_left = t.t12 / (mu_gr - t.t11);
    return r;
}

namespace {

struct Interval {
    double lo, hi;
};

std::vector<Interval> common_gaps(const std::vector<GapInterval>& a,
                                  const std::vector<GapInterval>& b) {
    std::vector<Interval> out;
    for (const auto& ga : a)
        for (const auto& gb : b)
            for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
                const double lo = std::max(ga.lo, gb.lo + shift);
                const double hi = std::min(ga.hi, gb.hi + shift);
                if (hi - lo > 1e-9) out.push_back({lo, hi});
            }
    return out;
}

bool scan_for_crossing(double theta, double paL, double pbL, double paR,
                       double pbR, const Interval& iv, int n_res) {
    const int n = std::max(24, static_cast<int>(n_res * (iv.hi - iv.lo) / kTwoPi) + 24);
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < n; ++i) {
        const double w =
            iv.lo + (iv.hi - iv.lo) * (1e-3 + (1.0 - 2e-3) * i / (n - 1));
        const C z = std::exp(C(0.0, w));
        const ReflectionPair L = reflection_pair(z, theta, paL, pbL);
        const ReflectionPair R = reflection_pair(z, theta, paR, pbR);
        const double th = std::arg(L.rho_left * R.rho_right);
        if (have_prev && std::abs(th - prev) < M_PI &&
            std::signbit(th) != std::signbit(prev))
            return true;
        prev = th;
        have_prev = true;
    }
    return false;
}

}  // namespace

bool junction_has_resonance(double theta, double pa_left, double pb_left,
                            double pa_right, double pb_right, int n_scan,
                            int n_res) {
    const auto gl = gap_scan(theta, pa_left, pb_left, n_scan);
    const auto gr = gap_scan(theta, pa_right, pb_right, n_scan);
    for (const Interval& iv : common_gaps(gl, gr))
        if (scan_for_crossing(theta, pa_left, pb_left, pa_right, pb_right, iv,
                              n_res))
            return true;
    return false;
}

bool dislocation_gapped(double theta, double phi_a, double phi_b, int n_scan) {
    return junction_has_resonance(theta, phi_a, phi_b, phi_b, phi_a, n_scan);
}

}  // namespace qwalk
