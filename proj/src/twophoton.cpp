#include "qwalk/twophoton.hpp"

#include <cmath>

#include "qwalk/winding.hpp"

namespace qwalk {

namespace {
const cplx kI(0.0, 1.0);

Eigen::VectorXcd flatten(const WalkState& s) {
    Eigen::VectorXcd v(s.amp[0].size() + s.amp[1].size());
    v << s.amp[0], s.amp[1];
    return v;
}
}  // namespace

void PolarizationQubit::validate() const {
    if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12)
        throw std::invalid_argument("PolarizationQubit: not normalized");
}

double TwoPhotonState::squared_norm() const {
    // terms with orthogonal factors; cross terms handled via overlaps
    double n = 0.0;
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = 0; j < terms.size(); ++j) {
            cplx gu = 0.0, gl = 0.0;
            for (int k = 0; k < 2; ++k) {
                gu += terms[j].upper.amp[k].dot(terms[i].upper.amp[k]);
                gl += terms[j].lower.amp[k].dot(terms[i].lower.amp[k]);
            }
            n += std::real(terms[i].coeff * std::conj(terms[j].coeff) * gu * gl);
        }
    return n;
}

TwoPhotonState bell_state(BellSign sign, const LatticeGraph& upper,
                          const LatticeGraph& lower, int cell, Subsite s,
                          Direction dir) {
    const double r = 1.0 / std::sqrt(2.0);
    TwoPhotonState st;
    st.terms.push_back({r, inject(upper, cell, s, Polarization::H, dir),
                        inject(lower, cell, s, Polarization::V, dir)});
    st.terms.push_back({sign == BellSign::Plus ? r : -r,
                        inject(upper, cell, s, Polarization::V, dir),
                        inject(lower, cell, s, Polarization::H, dir)});
    return st;
}

void apply_mixing(WalkState& st, double strength) {
    const double a = std::asin(strength);
    const double c = std::cos(a), s = std::sin(a);
    const Eigen::Index n = st.amp[0].size();
    for (Eigen::Index e = 0; e < n; ++e) {
        const cplx h = st.amp[0][e], v = st.amp[1][e];
        st.amp[0][e] = c * h - s * v;
        st.amp[1][e] = s * h + c * v;
    }
}

namespace {

void evolve_single(WalkState& st, const LatticeGraph& g, int steps,
                   const MixingSchedule* mixing) {
    const StepOperator op[2] = {build_step_operator(g, Polarization::H),
                                build_step_operator(g, Polarization::V)};
    Eigen::VectorXcd tmp(g.edge_count());
    for (int t = 0; t < steps; ++t) {
        if (mixing && mixing->strength != 0.0 && st.time_step >= mixing->step_from &&
            st.time_step < mixing->step_to)
            apply_mixing(st, mixing->strength);
        for (int k = 0; k < 2; ++k) {
            op[k].apply_parallel(st.amp[k].data(), tmp.data());
            st.amp[k].swap(tmp);
        }
        ++st.time_step;
    }
}

}  // namespace

TwoPhotonState evolve_two_photon(TwoPhotonState state,
                                 const LatticeGraph& upper,
                                 const LatticeGraph& lower, int steps,
                                 const MixingSchedule* mixing) {
    if (steps < 0)
        throw std::invalid_argument("evolve_two_photon: steps >= 0");
    const double n0 = state.squared_norm();
    for (auto& term : state.terms) {
        evolve_single(term.upper, upper, steps, mixing);
        evolve_single(term.lower, lower, steps, mixing);
    }
    if (std::abs(state.squared_norm() - n0) > 1e-10)
        throw std::runtime_error("evolve_two_photon: norm drifted");
    return state;
}

double entanglement_entropy(const TwoPhotonState& state, Partition part) {
    const double nrm = state.squared_norm();
    if (std::abs(nrm - 1.0) > 1e-8)
        throw std::invalid_argument("entanglement_entropy: state not normalized");
    const int n = static_cast<int>(state.terms.size());
    if (n == 0) return 0.0;

    // chosen-photon vectors and the complementary Gram matrix
    std::vector<Eigen::VectorXcd> kept(n), other(n);
    for (int t = 0; t < n; ++t) {
        kept[t] = flatten(part == Partition::Upper ? state.terms[t].upper
                                                   : state.terms[t].lower);
        other[t] = flatten(part == Partition::Upper ? state.terms[t].lower
                                                    : state.terms[t].upper);
    }
    Eigen::MatrixXcd G(n, n);  // G(t', t) = <other_t' | other_t>
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G(a, b) = other[a].dot(other[b]);

    // orthonormalize the kept vectors: kept_t = sum_i R(i, t) e_i
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(n, n);
    std::vector<Eigen::VectorXcd> basis;
    for (int t = 0; t < n; ++t) {
        Eigen::VectorXcd v = kept[t];
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const cplx c = basis[i].dot(v);
            R(static_cast<int>(i), t) = c;
            v -= c * basis[i];
        }
        const double nv = v.norm();
        if (nv > 1e-12) {
            R(static_cast<int>(basis.size()), t) = nv;
            basis.push_back(v / nv);
        }
    }
    const int m = static_cast<int>(basis.size());

    Eigen::MatrixXcd core = Eigen::MatrixXcd::Zero(m, m);
    for (int t = 0; t < n; ++t)
        for (int u = 0; u < n; ++u) {
            const cplx w = state.terms[t].coeff *
                           std::conj(state.terms[u].coeff) * G(u, t);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    core(i, j) += w * R(i, t) * std::conj(R(j, u));
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(core);
    double S = 0.0;
    for (int i = 0; i < m; ++i) {
        const double lam = es.eigenvalues()[i] / nrm;
        if (lam > 1e-15) S -= lam * std::log2(lam);
    }
    return S;
}

WalkState register_write(const PolarizationQubit& q, const LatticeGraph& ring,
                         int cell) {
    q.validate();
    if (!ring.uniform())
        throw std::invalid_argument("register_write: ring must be uniform");
    const RegionPhases& rp = ring.region_phases(0);
    const double theta = ring.spec().threeport_theta;
    int nu_h, nu_v;
    try {
        nu_h = effective_winding(theta, rp.phi_a, rp.phi_b_H).nu;
        nu_v = effective_winding(theta, rp.phi_a, rp.phi_b_V).nu;
    } catch (const GapClosedError&) {
        throw MisconfigurationError(
            "register_write: gap closed for one polarization");
    }
    if (nu_h == nu_v)
        throw MisconfigurationError(
            "register_write: H and V see equal winding numbers");

    WalkState h = inject(ring, cell, Subsite::A, Polarization::H);
    WalkState v = inject(ring, cell, Subsite::A, Polarization::V);
    WalkState st;
    st.amp[0] = q.alpha * h.amp[0];
    st.amp[1] = q.beta * v.amp[1];
    return st;
}

std::pair<double, double> register_read(const WalkState& st) {
    const double pH = st.amp[0].squaredNorm();
    const double pV = st.amp[1].squaredNorm();
    const double tot = pH + pV;
    if (std::abs(tot - 1.0) > 1e-9)
        throw std::invalid_argument("register_read: state not normalized");
    return {pH, pV};
}

double polarization_flip_rate(const LatticeGraph& ring,
                              const PolarizationQubit& q, double mix_strength,
                              int steps, int cell) {
    if (mix_strength < 0.0 || mix_strength > 1.0)
        throw std::invalid_argument("polarization_flip_rate: strength in [0,1]");
    WalkState st;
    {
        WalkState h = inject(ring, cell, Subsite::A, Polarization::H);
        WalkState v = inject(ring, cell, Subsite::A, Polarization::V);
        st.amp[0] = q.alpha * h.amp[0];
        st.amp[1] = q.beta * v.amp[1];
    }
    const double pV0 = st.amp[1].squaredNorm();
    const bool written_h = std::norm(q.alpha) >= std::norm(q.beta);
    MixingSchedule mix{mix_strength, 0, steps};
    evolve_single(st, ring, steps, &mix);
    const double pH = st.amp[0].squaredNorm(), pV = st.amp[1].squaredNorm();
    const double flipped = written_h ? pV - pV0 : pH - (1.0 - pV0);
    return std::max(0.0, flipped) / std::max(1, steps);
}

Polarization edge_polarization(const LatticeGraph& g) {
    if (g.spec().regions.size() < 2)
        throw NoEdgeStateError("edge_polarization: chain has no boundary");
    const RegionPhases& l = g.region_phases(0);
    const RegionPhases& r = g.region_phases(1);
    const double theta = g.spec().threeport_theta;
    bool forms[2] = {false, false};
    for (Polarization pol : {Polarization::H, Polarization::V}) {
        const double bl = l.phi_b(pol), br = r.phi_b(pol);
        if (std::abs(l.phi_a - r.phi_a) < 1e-12 && std::abs(bl - br) < 1e-12)
            continue;  // identical phases on both sides
        try {
            forms[static_cast<int>(pol)] =
                effective_winding(theta, l.phi_a, bl).nu !=
                effective_winding(theta, r.phi_a, br).nu;
        } catch (const GapClosedError&) {
        } catch (const ResolutionError&) {
        }
    }
    if (forms[0] == forms[1])
        throw NoEdgeStateError(
            "edge_polarization: boundary does not single out one polarization");
    return forms[0] ? Polarization::H : Polarization::V;
}

EdgeBasis calibrate_edge_basis(const LatticeGraph& g, int boundary_cell,
                               int window, int calibration_steps,
                               int injection_cell, int run_steps) {
    constexpr int kAvg = 20;
    const Polarization epol = edge_polarization(g);
    const Polarization vpol =
        epol == Polarization::H ? Polarization::V : Polarization::H;
    EdgeBasis basis;
    basis.edge_pol = epol;

    {  // converged boundary profile of the edge-forming polarization
        const int k = static_cast<int>(epol);
        WalkState st = inject(g, injection_cell, Subsite::A, epol);
        const StepOperator op = build_step_operator(g, epol);
        Eigen::VectorXcd tmp(g.edge_count());
        // the boundary window holds several incommensurate bound components,
        // so time-averaged profiles dephase; the window content at the
        // readout step itself is the faithful reference. The trailing
        // window-mass record doubles as a convergence check.
        std::vector<double> tail_mass;
        for (int t = 1; t <= calibration_steps; ++t) {
            op.apply_parallel(st.amp[k].data(), tmp.data());
            st.amp[k].swap(tmp);
            if (t > calibration_steps - kAvg) {
                double m = 0.0;
                for (int e = 0; e < g.edge_count(); ++e)
                    if (std::abs(g.edge_cell(e) - boundary_cell) <= window)
                        m += std::norm(st.amp[k][e]);
                tail_mass.push_back(m);
            }
        }
        Eigen::VectorXcd cut = Eigen::VectorXcd::Zero(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e)
            if (std::abs(g.edge_cell(e) - boundary_cell) <= window)
                cut[e] = st.amp[k][e];
        basis.peak_mass = 0.0;
        for (double m : tail_mass) basis.peak_mass += m;
        basis.peak_mass /= tail_mass.size();
        if (basis.peak_mass < 0.05)
            throw NoEdgeStateError(
                "calibrate_edge_basis: boundary peak below threshold");
        basis.edge[k] = cut / cut.norm();
        basis.edge[1 - k] = Eigen::VectorXcd::Zero(g.edge_count());
    }

    {  // the other polarization's evolved branch: the "no edge state" reference
        const int k = static_cast<int>(vpol);
        WalkState st = inject(g, injection_cell, Subsite::A, vpol);
        const StepOperator op = build_step_operator(g, vpol);
        Eigen::VectorXcd tmp(g.edge_count());
        for (int t = 0; t < run_steps; ++t) {
            op.apply_parallel(st.amp[k].data(), tmp.data());
            st.amp[k].swap(tmp);
        }
        basis.void_state[k] = st.amp[k] / st.amp[k].norm();
        basis.void_state[1 - k] = Eigen::VectorXcd::Zero(g.edge_count());
    }
    return basis;
}

namespace {

cplx overlap2(const Eigen::VectorXcd* ref, const WalkState& s) {
    return ref[0].dot(s.amp[0]) + ref[1].dot(s.amp[1]);
}

}  // namespace

EdgeBasisAmplitudes edge_projection(const TwoPhotonState& state,
                                    const EdgeBasis& upper,
                                    const EdgeBasis& lower) {
    EdgeBasisAmplitudes out{};
    double captured = 0.0;
    for (const auto& term : state.terms) {
        const cplx u_amp[2] = {overlap2(upper.edge, term.upper),
                               overlap2(upper.void_state, term.upper)};
        const cplx l_amp[2] = {overlap2(lower.edge, term.lower),
                               overlap2(lower.void_state, term.lower)};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                out.amp[i][j] += term.coeff * u_amp[i] * l_amp[j];
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) captured += std::norm(out.amp[i][j]);
    out.residual = std::max(0.0, state.squared_norm() - captured);
    return out;
}

double edge_basis_entropy(const EdgeBasisAmplitudes& a) {
    Eigen::Matrix2cd psi;
    psi << a.amp[0][0], a.amp[0][1], a.amp[1][0], a.amp[1][1];
    const double nrm = psi.squaredNorm();
    if (nrm < 1e-12) return 0.0;
    const Eigen::Matrix2cd rho = psi * psi.adjoint() / nrm;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho);
    double S = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double lam = es.eigenvalues()[i];
        if (lam > 1e-15) S -= lam * std::log2(lam);
    }
    return S;
}

}  // namespace qwalk
