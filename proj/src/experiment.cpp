#include "qwalk/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "qwalk/scattering.hpp"
#include "qwalk/ssh.hpp"
#include "qwalk/twophoton.hpp"
#include "qwalk/walk.hpp"
#include "qwalk/winding.hpp"

namespace qwalk {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr double kDefaultTheta = 3.0 * M_PI / 2.0;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + p.string());
    f << text;
}

// ---------------------------------------------------------------------------
// config parsing
// ---------------------------------------------------------------------------

ExperimentKind parse_kind(const std::string& s) {
    static const std::map<std::string, ExperimentKind> m = {
        {"walk", ExperimentKind::Walk},
        {"boundary", ExperimentKind::Boundary},
        {"perturb", ExperimentKind::Perturb},
        {"winding-sweep", ExperimentKind::WindingSweep},
        {"transmission", ExperimentKind::Transmission},
        {"register", ExperimentKind::Register},
        {"entangle-bulk", ExperimentKind::EntangleBulk},
        {"entangle-edge", ExperimentKind::EntangleEdge},
    };
    auto it = m.find(s);
    if (it == m.end()) throw ConfigError("unknown experiment kind: " + s);
    return it->second;
}

double need_num(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw ConfigError(std::string("missing numeric field: ") + key);
    return j[key].get<double>();
}

int need_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ConfigError(std::string("missing integer field: ") + key);
    return j[key].get<int>();
}

RegionPhases parse_region_phases(const json& j) {
    const double a = need_num(j, "phi_a");
    double bh, bv;
    if (j.contains("phi_b")) {
        bh = bv = need_num(j, "phi_b");
    } else {
        bh = need_num(j, "phi_b_H");
        bv = need_num(j, "phi_b_V");
    }
    return RegionPhases::make(a, bh, bv);
}

ChainSpec parse_chain(const json& j) {
    ChainSpec spec;
    spec.threeport_theta = j.value("theta", kDefaultTheta);
    const std::string bc = j.value("boundary_condition", "reflective");
    if (bc == "reflective")
        spec.boundary = Boundary::Reflective;
    else if (bc == "periodic")
        spec.boundary = Boundary::Periodic;
    else
        throw ConfigError("boundary_condition must be reflective|periodic");
    if (!j.contains("regions") || !j["regions"].is_array() ||
        j["regions"].empty())
        throw ConfigError("regions: non-empty array required");
    for (const json& r : j["regions"]) {
        const int cells = need_int(r, "cells");
        if (cells < 1) throw ConfigError("regions[].cells must be >= 1");
        spec.regions.emplace_back(parse_region_phases(r), cells);
    }
    try {
        spec.validate();
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return spec;
}

struct Injection {
    int cell = 0;
    Subsite subsite = Subsite::A;
    Polarization pol = Polarization::V;
    Direction dir = Direction::Right;
};

Injection parse_injection(const json& j, int cells) {
    if (!j.contains("injection")) throw ConfigError("injection required");
    const json& i = j["injection"];
    Injection inj;
    inj.cell = need_int(i, "cell");
    if (inj.cell < 0 || inj.cell >= cells)
        throw ConfigError("injection.cell outside the chain");
    const std::string sub = i.value("subsite", "A");
    if (sub == "A")
        inj.subsite = Subsite::A;
    else if (sub == "B")
        inj.subsite = Subsite::B;
    else
        throw ConfigError("injection.subsite must be A|B");
    const std::string pol = i.value("polarization", "V");
    if (pol == "H")
        inj.pol = Polarization::H;
    else if (pol == "V")
        inj.pol = Polarization::V;
    else
        throw ConfigError("injection.polarization must be H|V");
    const std::string dir = i.value("direction", "right");
    if (dir == "right")
        inj.dir = Direction::Right;
    else if (dir == "left")
        inj.dir = Direction::Left;
    else if (dir == "symmetric")
        inj.dir = Direction::Symmetric;
    else
        throw ConfigError("injection.direction must be right|left|symmetric");
    return inj;
}

// ---------------------------------------------------------------------------
// output writers
// ---------------------------------------------------------------------------

void write_distribution_csv(const fs::path& p,
                            const std::vector<Distribution>& history) {
    std::ostringstream os;
    os << "step,cell,subsite,probability\n";
    for (const Distribution& d : history)
        for (int n = 0; n < d.cells; ++n)
            for (int s = 0; s < 2; ++s) {
                const double v = d.p[2 * n + s];
                if (v > 1e-15)
                    os << d.step << ',' << n << ',' << (s == 0 ? 'A' : 'B')
                       << ',' << fmt(v) << '\n';
            }
    write_text(p, os.str());
}

void write_summary(const fs::path& p, const json& summary) {
    write_text(p, summary.dump(2) + "\n");
}

// ---------------------------------------------------------------------------
// runners
// ---------------------------------------------------------------------------

RunOutcome run_walk_like(const json& j, ExperimentKind kind,
                         const fs::path& out) {
    const ChainSpec spec = parse_chain(j);
    const LatticeGraph g(spec);
    const Injection inj = parse_injection(j, g.cells());
    const int steps = need_int(j, "steps");
    if (steps < 1) throw ConfigError("steps must be >= 1");

    PerturbationSchedule sched;
    if (j.contains("perturbation")) {
        for (const json& pj : j["perturbation"]) {
            const int step = need_int(pj, "step");
            const int region = need_int(pj, "region");
            if (region < 0 || region >= static_cast<int>(spec.regions.size()))
                throw ConfigError("perturbation.region out of range");
            sched.at_step[step].push_back({region, parse_region_phases(pj)});
        }
    }

    WalkState st = inject(g, inj.cell, inj.subsite, inj.pol, inj.dir);
    EvolveResult res =
        evolve(g, std::move(st), steps, sched.at_step.empty() ? nullptr : &sched);

    json summary;
    summary["spec"] = json::parse(j.dump());
    summary["steps"] = steps;

    const int fit_from =
        j.contains("measure") ? j["measure"].value("fit_from", 10) : 10;
    try {
        const LinearFit f = spread_slope(res.history, fit_from);
        summary["spread_slope"] = f.slope;
        summary["r2"] = f.r2;
    } catch (const std::invalid_argument&) {
        summary["spread_slope"] = nullptr;
        summary["r2"] = nullptr;
    }

    summary["crossing_mass"] = nullptr;
    summary["boundary_peak_mass_final"] = nullptr;
    if (j.contains("measure") && j["measure"].contains("boundary_cell")) {
        const int bc = need_int(j["measure"], "boundary_cell");
        const int window = j["measure"].value("window", 2);
        const std::string side_s = j["measure"].value("side", "right");
        const Side side = side_s == "left" ? Side::Left : Side::Right;
        summary["crossing_mass"] =
            crossing_mass(res.history.back(), bc, side);
        summary["boundary_peak_mass_final"] =
            boundary_peak_mass(res.history, bc, window).back();
    }

    write_distribution_csv(out / "distribution.csv", res.history);
    write_summary(out / "summary.json", summary);
    (void)kind;
    RunOutcome oc;
    std::ostringstream os;
    os << "steps=" << steps;
    if (!summary["spread_slope"].is_null())
        os << " spread_slope=" << fmt(summary["spread_slope"].get<double>())
           << " r2=" << fmt(summary["r2"].get<double>());
    if (!summary["crossing_mass"].is_null())
        os << " crossing_mass=" << fmt(summary["crossing_mass"].get<double>())
           << " boundary_peak_mass="
           << fmt(summary["boundary_peak_mass_final"].get<double>());
    oc.summary_text = os.str();
    return oc;
}

RunOutcome run_winding_sweep(const json& j, const fs::path& out) {
    if (!j.contains("sweep")) throw ConfigError("sweep block required");
    const json& sw = j["sweep"];
    const std::string space = sw.value("space", "phases");
    const double theta = j.value("theta", kDefaultTheta);

    std::ostringstream csv;
    json summary;
    summary["spec"] = json::parse(j.dump());

    if (space == "vw") {
        std::vector<std::pair<double, double>> pts;
        if (sw.contains("vw_pairs")) {
            for (const json& p : sw["vw_pairs"])
                pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        } else {
            for (const json& v : sw.at("v"))
                for (const json& w : sw.at("w"))
                    pts.emplace_back(v.get<double>(), w.get<double>());
        }
        if (pts.empty() || pts.size() > 100000)
            throw ConfigError("sweep grid must have 1..1e5 points");
        csv << "v,w,nu,gap\n";
        std::vector<std::string> rows(pts.size());
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const BlochModel m{pts[i].first, pts[i].second};
            std::ostringstream row;
            row << fmt(m.v) << ',' << fmt(m.w) << ',';
            if (m.gap_closed())
                row << "-1,0\n";
            else
                row << winding_number(m, 1024).nu << ','
                    << fmt(2.0 * std::abs(m.v - m.w)) << '\n';
            rows[i] = row.str();
        }
        for (const std::string& r : rows) csv << r;
        summary["rows"] = pts.size();
    } else if (space == "phases") {
        std::vector<std::pair<double, double>> pts;
        if (sw.contains("pairs")) {
            for (const json& p : sw["pairs"])
                pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        } else {
            for (const json& a : sw.at("phi_a"))
                for (const json& b : sw.at("phi_b"))
                    pts.emplace_back(a.get<double>(), b.get<double>());
        }
        if (pts.empty() || pts.size() > 100000)
            throw ConfigError("sweep grid must have 1..1e5 points");

        const bool with_dyn = sw.contains("boundary_run");
        csv << (with_dyn ? "phi_a,phi_b,pol,nu,min_gap,boundary_peak_mass\n"
                         : "phi_a,phi_b,pol,nu,min_gap\n");
        std::vector<std::string> rows(pts.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto [pa, pb] = pts[i];
            std::ostringstream row;
            row << fmt(pa) << ',' << fmt(pb) << ",V,";
            int nu = -1;
            try {
                nu = effective_winding(theta, pa, pb).nu;
            } catch (const GapClosedError&) {
            } catch (const ResolutionError&) {
            }
            row << nu << ',' << fmt(widest_gap_width(theta, pa, pb));
            if (with_dyn) {
                const json& br = sw["boundary_run"];
                ChainSpec spec;
                spec.threeport_theta = theta;
                spec.regions = {
                    {parse_region_phases(br.at("left")),
                     br.value("cells_left", 86)},
                    {RegionPhases::make(pa, pb), br.value("cells_right", 114)}};
                const LatticeGraph g(spec);
                const int b = br.value("cells_left", 86);
                const int steps = br.value("steps", 400);
                const int window = br.value("window", 2);
                const int avg = br.value("avg_last", 40);
                WalkState st = inject(g, br.value("injection_cell", b - 1),
                                      Subsite::A, Polarization::V);
                EvolveResult res = evolve(g, std::move(st), steps);
                const std::vector<double> pk =
                    boundary_peak_mass(res.history, b, window);
                double acc = 0.0;
                for (int t = steps - avg + 1; t <= steps; ++t) acc += pk[t];
                row << ',' << fmt(acc / avg);
            }
            row << '\n';
            rows[i] = row.str();
        }
        for (const std::string& r : rows) csv << r;
        summary["rows"] = pts.size();
    } else {
        throw ConfigError("sweep.space must be phases|vw");
    }

    write_text(out / "sweep.csv", csv.str());
    write_summary(out / "summary.json", summary);
    RunOutcome oc;
    oc.summary_text = "sweep rows=" + std::to_string(summary["rows"].get<std::size_t>());
    return oc;
}

RunOutcome run_transmission(const json& j, const fs::path& out) {
    if (!j.contains("transmission")) throw ConfigError("transmission block required");
    const json& tj = j["transmission"];
    const double vw_sum = tj.value("v_plus_w", 2.0);
    const double k0 = tj.value("k0", M_PI / 2.0);
    const double sigma_k = tj.value("sigma_k", 0.05 * 2.0 * M_PI);
    const int steps = tj.value("steps", 0);
    if (!tj.contains("ratios")) throw ConfigError("transmission.ratios required");
    std::vector<double> ratios = tj["ratios"].get<std::vector<double>>();

    std::vector<std::string> rows(ratios.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const double r = ratios[i];
        const double v = vw_sum * (1.0 + r) / 2.0;
        const double w = vw_sum * (1.0 - r) / 2.0;
        const TransmissionResult tr = boundary_transmission(v, w, k0, sigma_k,
                                                            steps);
        std::ostringstream row;
        row << fmt(r) << ',' << fmt(v) << ',' << fmt(w) << ','
            << fmt(tr.transmission) << ',' << fmt(tr.reflection) << '\n';
        rows[i] = row.str();
    }
    std::ostringstream csv;
    csv << "ratio,v,w,transmission,reflection\n";
    for (const std::string& r : rows) csv << r;
    write_text(out / "sweep.csv", csv.str());

    json summary;
    summary["spec"] = json::parse(j.dump());
    summary["rows"] = ratios.size();
    write_summary(out / "summary.json", summary);
    RunOutcome oc;
    oc.summary_text = "transmission rows=" + std::to_string(ratios.size());
    return oc;
}

// deterministic qubit sequence for register trials (no randomness anywhere)
PolarizationQubit qubit_from_index(int i) {
    const double golden = 0.61803398874989484820;
    const double a = std::fmod(0.17 + golden * i, 1.0) * M_PI / 2.0;
    const double ph = std::fmod(0.31 + golden * golden * i, 1.0) * 2.0 * M_PI;
    PolarizationQubit q;
    q.alpha = std::cos(a);
    q.beta = std::sin(a) * std::exp(cplx(0.0, ph));
    return q;
}

RunOutcome run_register(const json& j, const fs::path& out) {
    if (!j.contains("register")) throw ConfigError("register block required");
    const json& rj = j["register"];
    ChainSpec spec;
    spec.threeport_theta = j.value("theta", kDefaultTheta);
    spec.boundary = Boundary::Periodic;
    spec.regions = {{parse_region_phases(rj), rj.value("ring_cells", 32)}};
    const LatticeGraph ring(spec);
    const int steps = rj.value("steps", 200);
    const int trials = rj.value("qubit_trials", 1);

    double worst_err = 0.0;
    for (int i = 0; i < trials; ++i) {
        const PolarizationQubit q = qubit_from_index(i);
        WalkState st = register_write(q, ring);
        EvolveOptions opt;
        opt.record_history = false;
        opt.check_ends = false;
        st = evolve(ring, std::move(st), steps, nullptr, opt).state;
        const auto [pH, pV] = register_read(st);
        worst_err = std::max(worst_err, std::abs(pH - std::norm(q.alpha)));
        worst_err = std::max(worst_err, std::abs(pV - std::norm(q.beta)));
    }

    json summary;
    summary["spec"] = json::parse(j.dump());
    summary["register_fidelity"] = 1.0 - worst_err;
    summary["readout_error_max"] = worst_err;

    const double mix = rj.value("mix_strength", 0.0);
    if (mix > 0.0) {
        const int mix_steps = rj.value("mix_steps", 600);
        const PolarizationQubit h{1.0, 0.0};
        summary["flip_rate"] =
            polarization_flip_rate(ring, h, mix, mix_steps);
        // trivial comparison ring: identical phases for both polarizations;
        // written directly since the winding check rejects such rings
        ChainSpec triv = spec;
        triv.regions[0].first.phi_b_H = triv.regions[0].first.phi_b_V;
        const LatticeGraph ring_triv(triv);
        WalkState st = inject(ring_triv, 0, Subsite::A, Polarization::H);
        const StepOperator op[2] = {
            build_step_operator(ring_triv, Polarization::H),
            build_step_operator(ring_triv, Polarization::V)};
        Eigen::VectorXcd tmp(ring_triv.edge_count());
        for (int t = 0; t < mix_steps; ++t) {
            apply_mixing(st, mix);
            for (int k = 0; k < 2; ++k) {
                op[k].apply_parallel(st.amp[k].data(), tmp.data());
                st.amp[k].swap(tmp);
            }
        }
        summary["flip_rate_trivial"] = st.amp[1].squaredNorm() / mix_steps;
    } else {
        summary["flip_rate"] = nullptr;
        summary["flip_rate_trivial"] = nullptr;
    }
    write_summary(out / "summary.json", summary);
    RunOutcome oc;
    std::ostringstream os;
    os << "register readout_error_max=" << fmt(worst_err);
    if (!summary["flip_rate"].is_null())
        os << " flip_rate=" << fmt(summary["flip_rate"].get<double>())
           << " flip_rate_trivial="
           << fmt(summary["flip_rate_trivial"].get<double>());
    oc.summary_text = os.str();
    return oc;
}

RunOutcome run_entangle_bulk(const json& j, const fs::path& out) {
    if (!j.contains("entangle")) throw ConfigError("entangle block required");
    const json& ej = j["entangle"];
    ChainSpec spec;
    spec.threeport_theta = j.value("theta", kDefaultTheta);
    spec.boundary = Boundary::Periodic;
    spec.regions = {{parse_region_phases(ej), ej.value("cells", 48)}};
    const LatticeGraph chain(spec);
    const int steps = ej.value("steps", 200);
    const BellSign sign =
        ej.value("bell_sign", "+") == std::string("-") ? BellSign::Minus
                                                       : BellSign::Plus;
    TwoPhotonState st = bell_state(sign, chain, chain,
                                   ej.value("injection_cell", 10));
    const double s0 = entanglement_entropy(st, Partition::Upper);
    st = evolve_two_photon(std::move(st), chain, chain, steps);
    const double s1 = entanglement_entropy(st, Partition::Upper);

    json summary;
    summary["spec"] = json::parse(j.dump());
    summary["entropy_bits"] = s1;
    summary["entropy_bits_initial"] = s0;
    write_summary(out / "summary.json", summary);
    RunOutcome oc;
    oc.summary_text = "entropy_bits_initial=" + fmt(s0) +
                      " entropy_bits_final=" + fmt(s1);
    return oc;
}

RunOutcome run_entangle_edge(const json& j, const fs::path& out) {
    if (!j.contains("entangle_edge"))
        throw ConfigError("entangle_edge block required");
    const json& ej = j["entangle_edge"];
    auto parse_side = [&](const char* key) {
        ChainSpec spec;
        spec.threeport_theta = j.value("theta", kDefaultTheta);
        if (!ej.contains(key)) throw ConfigError(std::string(key) + " required");
        for (const json& r : ej[key])
            spec.regions.emplace_back(parse_region_phases(r),
                                      need_int(r, "cells"));
        spec.validate();
        return spec;
    };
    const LatticeGraph upper(parse_side("upper_regions"));
    const LatticeGraph lower(parse_side("lower_regions"));
    const int boundary_cell = need_int(ej, "boundary_cell");
    const int window = ej.value("window", 2);
    const int steps = ej.value("steps", 200);
    const int cal_steps = ej.value("calibration_steps", 200);
    const BellSign sign =
        ej.value("bell_sign", "+") == std::string("-") ? BellSign::Minus
                                                       : BellSign::Plus;

    const int inj_cell = ej.value("injection_cell", boundary_cell - 1);
    const EdgeBasis pe_u = calibrate_edge_basis(upper, boundary_cell, window,
                                                cal_steps, inj_cell, steps);
    const EdgeBasis pe_l = calibrate_edge_basis(lower, boundary_cell, window,
                                                cal_steps, inj_cell, steps);

    TwoPhotonState st = bell_state(sign, upper, lower, inj_cell);
    st = evolve_two_photon(std::move(st), upper, lower, steps);
    const EdgeBasisAmplitudes amps = edge_projection(st, pe_u, pe_l);

    json summary;
    summary["spec"] = json::parse(j.dump());
    json amp_list = json::array();
    const char* names[2] = {"e", "none"};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k) {
            json a;
            a["upper"] = names[i];
            a["lower"] = names[k];
            a["re"] = amps.amp[i][k].real();
            a["im"] = amps.amp[i][k].imag();
            a["prob"] = std::norm(amps.amp[i][k]);
            amp_list.push_back(a);
        }
    summary["edge_amplitudes"] = amp_list;
    summary["residual"] = amps.residual;
    summary["entropy_bits"] = edge_basis_entropy(amps);
    summary["calibration_peak_mass_upper"] = pe_u.peak_mass;
    summary["calibration_peak_mass_lower"] = pe_l.peak_mass;
    write_summary(out / "summary.json", summary);

    RunOutcome oc;
    std::ostringstream os;
    os << "edge amplitudes |ee|^2=" << fmt(std::norm(amps.amp[0][0]))
       << " |e0|^2=" << fmt(std::norm(amps.amp[0][1]))
       << " |0e|^2=" << fmt(std::norm(amps.amp[1][0]))
       << " |00|^2=" << fmt(std::norm(amps.amp[1][1]))
       << " residual=" << fmt(amps.residual)
       << " entropy_bits=" << fmt(summary["entropy_bits"].get<double>());
    oc.summary_text = os.str();
    return oc;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ConfigError("config needs a string 'kind'");
    ExperimentConfig cfg;
    cfg.kind = parse_kind(j["kind"].get<std::string>());
    cfg.source = j.dump();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const fs::path& p) {
    std::ifstream f(p);
    if (!f) throw ConfigError("cannot open config file " + p.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return from_json_text(ss.str());
}

RunOutcome run_experiment(const ExperimentConfig& cfg, const fs::path& out_dir,
                          int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
    fs::create_directories(out_dir);
    const json j = json::parse(cfg.source);
    try {
        switch (cfg.kind) {
            case ExperimentKind::Walk:
            case ExperimentKind::Boundary:
            case ExperimentKind::Perturb:
                return run_walk_like(j, cfg.kind, out_dir);
            case ExperimentKind::WindingSweep:
                return run_winding_sweep(j, out_dir);
            case ExperimentKind::Transmission:
                return run_transmission(j, out_dir);
            case ExperimentKind::Register:
                return run_register(j, out_dir);
            case ExperimentKind::EntangleBulk:
                return run_entangle_bulk(j, out_dir);
            case ExperimentKind::EntangleEdge:
                return run_entangle_edge(j, out_dir);
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    throw ConfigError("unhandled experiment kind");
}

// ---------------------------------------------------------------------------
// presets
// ---------------------------------------------------------------------------

namespace {

const std::map<std::string, const char*>& preset_map() {
    static const std::map<std::string, const char*> presets = {
        {"fig6", R"JSON({
  "kind": "walk",
  "theta": 4.71238898038469,
  "regions": [{"phi_a": -1.5707963267948966, "phi_b": 0.0, "cells": 160}],
  "injection": {"cell": 68, "subsite": "A", "polarization": "V", "direction": "right"},
  "steps": 50,
  "measure": {"fit_from": 10}
})JSON"},
        {"fig7a", R"JSON({
  "kind": "boundary",
  "theta": 4.71238898038469,
  "regions": [
    {"phi_a": -1.5707963267948966, "phi_b": 0.0, "cells": 86},
    {"phi_a": 1.5, "phi_b": 2.5, "cells": 74}
  ],
  "injection": {"cell": 68, "subsite": "A", "polarization": "V", "direction": "right"},
  "steps": 100,
  "measure": {"boundary_cell": 86, "window": 2, "side": "right", "fit_from": 10}
})JSON"},
        {"fig7b", R"JSON({
  "kind": "boundary",
  "theta": 4.71238898038469,
  "regions": [
    {"phi_a": -1.5707963267948966, "phi_b": 0.0, "cells": 86},
    {"phi_a": 1.5, "phi_b": 2.5, "cells": 74}
  ],
  "injection": {"cell": 85, "subsite": "A", "polarization": "V", "direction": "right"},
  "steps": 100,
  "measure": {"boundary_cell": 86, "window": 2, "side": "right", "fit_from": 10}
})JSON"},
        {"fig7c", R"JSON({
  "kind": "boundary",
  "theta": 4.71238898038469,
  "regions": [
    {"phi_a": -1.5707963267948966, "phi_b": 0.0, "cells": 86},
    {"phi_a": 1.5, "phi_b": 2.5, "cells": 74}
  ],
  "injection": {"cell": 88, "subsite": "A", "polarization": "V", "direction": "symmetric"},
  "steps": 100,
  "measure": {"boundary_cell": 86, "window": 2, "side": "left", "fit_from": 10}
})JSON"},
        {"fig8", R"JSON({
  "kind": "boundary",
  "theta": 4.71238898038469,
  "regions": [
    {"phi_a": -1.5707963267948966, "phi_b": 0.0, "cells": 86},
    {"phi_a": 1.5, "phi_b": 2.5, "cells": 74}
  ],
  "injection": {"cell": 85, "subsite": "A", "polarization": "V", "direction": "right"},
  "steps": 100,
  "measure": {"boundary_cell": 86, "window": 2, "side": "right", "fit_from": 10}
})JSON"},
        {"fig9", R"JSON({
  "kind": "perturb",
  "theta": 4.71238898038469,
  "regions": [
    {"phi_a": -1.5707963267948966, "phi_b": 0.0, "cells": 86},
    {"phi_a": 1.5, "phi_b": 2.5, "cells": 74}
  ],
  "injection": {"cell": 68, "subsite": "A", "polarization": "V", "direction": "right"},
  "steps": 100,
  "perturbation": [{"step": 30, "region": 0, "phi_a": 1.5, "phi_b": 2.5}],
  "measure": {"boundary_cell": 86, "window": 2, "side": "right", "fit_from": 10}
})JSON"},
        {"fig10", R"JSON({
  "kind": "winding-sweep",
  "theta": 4.71238898038469,
  "sweep": {
    "space": "phases",
    "pairs": [[1.5, 2.5], [1.05, -3.1], [0.8, -2.2], [1.2, 0.0], [0.65, 2.7], [-1.05, 0.35]],
    "boundary_run": {
      "left": {"phi_a": -1.5707963267948966, "phi_b": 0.0},
      "cells_left": 86, "cells_right": 114,
      "injection_cell": 85, "steps": 400, "window": 2, "avg_last": 40
    }
  }
})JSON"},
        {"register", R"JSON({
  "kind": "register",
  "theta": 4.71238898038469,
  "register": {
    "ring_cells": 32,
    "phi_a": 0.0, "phi_b_H": -1.5707963267948966, "phi_b_V": 1.2,
    "steps": 200, "qubit_trials": 8,
    "mix_strength": 0.0005, "mix_steps": 800
  }
})JSON"},
        {"entangle-bulk", R"JSON({
  "kind": "entangle-bulk",
  "theta": 4.71238898038469,
  "entangle": {
    "cells": 48,
    "phi_a": 0.0, "phi_b_H": -1.5707963267948966, "phi_b_V": 1.2,
    "injection_cell": 10, "steps": 200, "bell_sign": "+"
  }
})JSON"},
        {"entangle-edge-sym", R"JSON({
  "kind": "entangle-edge",
  "theta": 4.71238898038469,
  "entangle_edge": {
    "upper_regions": [
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": 1.2, "cells": 86},
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": -1.5707963267948966, "cells": 114}
    ],
    "lower_regions": [
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": 1.2, "cells": 86},
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": -1.5707963267948966, "cells": 114}
    ],
    "boundary_cell": 86, "injection_cell": 86,
    "steps": 200, "window": 2, "bell_sign": "+", "calibration_steps": 200
  }
})JSON"},
        {"entangle-edge-crossed", R"JSON({
  "kind": "entangle-edge",
  "theta": 4.71238898038469,
  "entangle_edge": {
    "upper_regions": [
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": 1.2, "cells": 86},
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": -1.5707963267948966, "cells": 114}
    ],
    "lower_regions": [
      {"phi_a": 0.0, "phi_b_H": 1.2, "phi_b_V": 1.2, "cells": 86},
      {"phi_a": 0.0, "phi_b_H": -1.5707963267948966, "phi_b_V": 1.2, "cells": 114}
    ],
    "boundary_cell": 86, "injection_cell": 86,
    "steps": 200, "window": 2, "bell_sign": "+", "calibration_steps": 200
  }
})JSON"},
        {"transmission", R"JSON({
  "kind": "transmission",
  "transmission": {
    "v_plus_w": 2.0,
    "ratios": [0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.97],
    "k0": 1.5707963267948966,
    "sigma_k": 0.3141592653589793,
    "steps": 0
  }
})JSON"},
    };
    return presets;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : preset_map()) names.push_back(k);
    return names;
}

std::string preset_json(const std::string& name) {
    const auto& m = preset_map();
    auto it = m.find(name);
    if (it == m.end()) throw ConfigError("unknown preset: " + name);
    return it->second;
}

}  // namespace qwalk
