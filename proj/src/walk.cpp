#include "qwalk/walk.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

double WalkState::squared_norm() const {
    return amp[0].squaredNorm() + amp[1].squaredNorm();
}

WalkState inject(const LatticeGraph& g, int cell, Subsite s, Polarization pol,
                 Direction dir) {
    if (cell < 0 || cell >= g.cells())
        throw std::out_of_range("inject: cell out of range");
    WalkState st;
    st.amp[0] = Eigen::VectorXcd::Zero(g.edge_count());
    st.amp[1] = Eigen::VectorXcd::Zero(g.edge_count());
    Eigen::VectorXcd& a = st.sector(pol);
    if (dir == Direction::Symmetric) {
        const double r = 1.0 / std::sqrt(2.0);
        a[g.injection_edge(cell, s, true)] = r;
        a[g.injection_edge(cell, s, false)] = r;
    } else {
        a[g.injection_edge(cell, s, dir == Direction::Right)] = 1.0;
    }
    return st;
}

Distribution position_distribution(const LatticeGraph& g, const WalkState& s) {
    Distribution d;
    d.cells = g.cells();
    d.step = s.time_step;
    d.p.assign(2 * g.cells(), 0.0);
    for (int k = 0; k < 2; ++k) {
        const Eigen::VectorXcd& a = s.amp[k];
        if (a.size() == 0) continue;
        for (int e = 0; e < g.edge_count(); ++e) {
            const double w = std::norm(a[e]);
            if (w != 0.0)
                d.p[2 * g.edge_cell(e) + static_cast<int>(g.edge_subsite(e))] += w;
        }
    }
    return d;
}

double Distribution::total() const {
    double t = 0.0;
    for (double v : p) t += v;
    return t;
}

double Distribution::mean_position() const {
    double m = 0.0;
    for (int n = 0; n < cells; ++n)
        m += (n - 0.25) * p[2 * n] + (n + 0.25) * p[2 * n + 1];
    return m;
}

double Distribution::sigma() const {
    const double m = mean_position();
    double v = 0.0;
    for (int n = 0; n < cells; ++n) {
        const double xa = n - 0.25 - m, xb = n + 0.25 - m;
        v += xa * xa * p[2 * n] + xb * xb * p[2 * n + 1];
    }
    return std::sqrt(v);
}

EvolveResult evolve(const LatticeGraph& g, WalkState state, int steps,
                    const PerturbationSchedule* schedule,
                    const EvolveOptions& opt) {
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    const double norm0 = state.squared_norm();

    StepOperator base[2] = {build_step_operator(g, Polarization::H),
                            build_step_operator(g, Polarization::V)};

    EvolveResult res;
    if (opt.record_history) {
        res.history.reserve(steps + 1);
        res.history.push_back(position_distribution(g, state));
    }

    Eigen::VectorXcd tmp(g.edge_count());
    for (int t = 0; t < steps; ++t) {
        const RegionOverrides* ov = nullptr;
        if (schedule) {
            auto it = schedule->at_step.find(state.time_step);
            if (it != schedule->at_step.end()) ov = &it->second;
        }
        StepOperator pert[2];
        const StepOperator* ops = base;
        if (ov) {
            pert[0] = build_step_operator(g, Polarization::H, ov);
            pert[1] = build_step_operator(g, Polarization::V, ov);
            ops = pert;
        }
        for (int k = 0; k < 2; ++k) {
            if (opt.use_parallel_kernel)
                ops[k].apply_parallel(state.amp[k].data(), tmp.data());
            else
                ops[k].apply_serial(state.amp[k].data(), tmp.data());
            state.amp[k].swap(tmp);
        }
        ++state.time_step;
        if (opt.record_history)
            res.history.push_back(position_distribution(g, state));
    }

    if (std::abs(state.squared_norm() - norm0) > 1e-10)
        throw std::runtime_error("evolve: norm conservation violated");
    if (opt.check_ends && g.reflective() && g.cells() >= 8) {
        const Distribution d = position_distribution(g, state);
        double ends = 0.0;
        for (int n : {0, 1, 2, g.cells() - 3, g.cells() - 2, g.cells() - 1})
            ends += d.cell_mass(n);
        if (ends > opt.end_mass_tol)
            throw std::runtime_error(
                "evolve: wavefront reached the chain ends; enlarge the chain");
    }
    res.state = std::move(state);
    return res;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_line: need >= 2 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw std::invalid_argument("fit_line: degenerate abscissa");
    LinearFit f;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double e = y[i] - (f.slope * x[i] + f.intercept);
        ss_res += e * e;
        ss_tot += (y[i] - ybar) * (y[i] - ybar);
    }
    f.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return f;
}

LinearFit spread_slope(const std::vector<Distribution>& history, int from) {
    if (static_cast<int>(history.size()) - from < 10)
        throw std::invalid_argument("spread_slope: need >= 10 history entries");
    std::vector<double> t, s;
    for (std::size_t i = from; i < history.size(); ++i) {
        t.push_back(static_cast<double>(history[i].step));
        s.push_back(history[i].sigma());
    }
    double smax = 0.0;
    for (double v : s) smax = std::max(smax, v);
    if (smax < 1e-14)
        throw std::invalid_argument("spread_slope: zero-variance history");
    return fit_line(t, s);
}

double crossing_mass(const Distribution& d, int boundary_cell, Side side) {
    double m = 0.0;
    for (int n = 0; n < d.cells; ++n) {
        const bool beyond = side == Side::Right ? n >= boundary_cell
                                                : n < boundary_cell;
        if (beyond) m += d.cell_mass(n);
    }
    return m;
}

std::vector<double> boundary_peak_mass(const std::vector<Distribution>& history,
                                       int boundary_cell, int window) {
    if (window < 1)
        throw std::invalid_argument("boundary_peak_mass: window must be >= 1");
    std::vector<double> out;
    out.reserve(history.size());
    for (const Distribution& d : history) {
        double m = 0.0;
        for (int n = std::max(0, boundary_cell - window);
             n <= std::min(d.cells - 1, boundary_cell + window); ++n)
            m += d.cell_mass(n);
        out.push_back(m);
    }
    return out;
}

std::vector<double> classical_walk_sigma(const LatticeGraph& g, int cell,
                                         Subsite s, int steps) {
    const ClassicalStepOperator op =
        build_classical_operator(g, Polarization::V);
    std::vector<double> p(g.edge_count(), 0.0), q(g.edge_count());
    p[g.injection_edge(cell, s, true)] = 1.0;
    std::vector<double> sig;
    sig.reserve(steps + 1);
    auto sigma_of = [&](const std::vector<double>& w) {
        Distribution d;
        d.cells = g.cells();
        d.p.assign(2 * g.cells(), 0.0);
        for (int e = 0; e < g.edge_count(); ++e)
            d.p[2 * g.edge_cell(e) + static_cast<int>(g.edge_subsite(e))] += w[e];
        return d.sigma();
    };
    sig.push_back(sigma_of(p));
    for (int t = 0; t < steps; ++t) {
        op.apply(p.data(), q.data());
        p.swap(q);
        sig.push_back(sigma_of(p));
    }
    return sig;
}

}  // namespace qwalk
