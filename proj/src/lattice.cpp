#include "qwalk/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

namespace {
double wrap_phase(double x) {
    double w = std::remainder(x, 2.0 * M_PI);
    return w;
}
}  // namespace

RegionPhases RegionPhases::make(double a, double bH, double bV) {
    if (!std::isfinite(a) || !std::isfinite(bH) || !std::isfinite(bV))
        throw std::invalid_argument("RegionPhases: phases must be finite");
    RegionPhases r;
    r.phi_a = wrap_phase(a);
    r.phi_b_H = wrap_phase(bH);
    r.phi_b_V = wrap_phase(bV);
    return r;
}

int ChainSpec::total_cells() const {
    int n = 0;
    for (const auto& [r, c] : regions) n += c;
    return n;
}

std::vector<int> ChainSpec::boundary_positions() const {
    std::vector<int> b;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < regions.size(); ++i) {
        acc += regions[i].second;
        b.push_back(acc);
    }
    return b;
}

void ChainSpec::validate() const {
    if (regions.empty()) throw std::invalid_argument("ChainSpec: no regions");
    for (const auto& [r, c] : regions)
        if (c < 1) throw std::invalid_argument("ChainSpec: region with < 1 cell");
    if (total_cells() < 2)
        throw std::invalid_argument("ChainSpec: chain needs at least 2 cells");
    if (!std::isfinite(threeport_theta))
        throw std::invalid_argument("ChainSpec: theta must be finite");
}

LatticeGraph::LatticeGraph(ChainSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    cells_ = spec_.total_cells();
    const bool refl = spec_.boundary == Boundary::Reflective;
    edge_count_ = 12 * cells_ + (refl ? 2 : 0);
    vertex_count_ = 4 * cells_ + (refl ? 2 : 0);
    threeport_ = build_threeport(spec_.threeport_theta);

    cell_region_.resize(cells_);
    {
        int n = 0, reg = 0;
        for (const auto& [r, c] : spec_.regions) {
            for (int i = 0; i < c; ++i) cell_region_[n++] = reg;
            ++reg;
        }
    }

    edge_cell_.assign(edge_count_, 0);
    edge_subsite_.assign(edge_count_, Subsite::A);
    edge_reverse_.assign(edge_count_, -1);
    phase_H_.assign(edge_count_, 0.0);
    phase_V_.assign(edge_count_, 0.0);

    for (int n = 0; n < cells_; ++n) {
        const RegionPhases& rp = spec_.regions[cell_region_[n]].first;
        for (int k = 0; k < 12; ++k) {
            const int e = 12 * n + k;
            if (k <= 4) {
                edge_cell_[e] = n;
                edge_subsite_[e] = Subsite::A;
            } else if (k <= 10) {
                edge_cell_[e] = n;
                edge_subsite_[e] = Subsite::B;
            } else {  // xL: tail sits in the next cell's first diamond
                if (n < cells_ - 1 || !refl) {
                    edge_cell_[e] = (n + 1) % cells_;
                    edge_subsite_[e] = Subsite::A;
                } else {  // right mirror return edge
                    edge_cell_[e] = n;
                    edge_subsite_[e] = Subsite::B;
                }
            }
        }
        const int b = 12 * n;
        edge_reverse_[b + 0] = b + 1;
        edge_reverse_[b + 1] = b + 0;
        edge_reverse_[b + 2] = b + 3;
        edge_reverse_[b + 3] = b + 2;
        edge_reverse_[b + 4] = b + 5;
        edge_reverse_[b + 5] = b + 4;
        edge_reverse_[b + 6] = b + 7;
        edge_reverse_[b + 7] = b + 6;
        edge_reverse_[b + 8] = b + 9;
        edge_reverse_[b + 9] = b + 8;
        edge_reverse_[b + 10] = b + 11;
        edge_reverse_[b + 11] = b + 10;
        phase_H_[b + 2] = phase_H_[b + 3] = rp.phi_a;
        phase_V_[b + 2] = phase_V_[b + 3] = rp.phi_a;
        phase_H_[b + 8] = phase_H_[b + 9] = rp.phi_b_H;
        phase_V_[b + 8] = phase_V_[b + 9] = rp.phi_b_V;
    }
    if (refl) {
        const int mlo = 12 * cells_;      // L_a(0).A -> mirror
        const int mli = 12 * cells_ + 1;  // mirror -> L_a(0).A
        edge_cell_[mlo] = edge_cell_[mli] = 0;
        edge_subsite_[mlo] = edge_subsite_[mli] = Subsite::A;
        edge_reverse_[mlo] = mli;
        edge_reverse_[mli] = mlo;
    }

    // vertex wiring: ids 4n + {0 L_a, 1 R_a, 2 L_b, 3 R_b}
    vertices_.assign(vertex_count_, VertexPorts{});
    auto set3 = [&](int v, int inA, int outA, int inB, int outB, int inC,
                    int outC) {
        VertexPorts& p = vertices_[v];
        p.n_ports = 3;
        p.in_edge = {inA, inB, inC};
        p.out_edge = {outA, outB, outC};
    };
    for (int n = 0; n < cells_; ++n) {
        const int b = 12 * n;
        int inA_La, outA_La;
        if (n == 0 && refl) {
            inA_La = 12 * cells_ + 1;
            outA_La = 12 * cells_;
        } else {
            const int prev = (n - 1 + cells_) % cells_;
            inA_La = 12 * prev + 10;
            outA_La = 12 * prev + 11;
        }
        set3(4 * n + 0, inA_La, outA_La, b + 1, b + 0, b + 3, b + 2);
        set3(4 * n + 1, b + 5, b + 4, b + 0, b + 1, b + 2, b + 3);
        set3(4 * n + 2, b + 4, b + 5, b + 7, b + 6, b + 9, b + 8);
        set3(4 * n + 3, b + 11, b + 10, b + 6, b + 7, b + 8, b + 9);
    }
    if (refl) {
        VertexPorts& ml = vertices_[4 * cells_];
        ml.n_ports = 1;
        ml.in_edge[0] = 12 * cells_;
        ml.out_edge[0] = 12 * cells_ + 1;
        VertexPorts& mr = vertices_[4 * cells_ + 1];
        mr.n_ports = 1;
        mr.in_edge[0] = 12 * (cells_ - 1) + 10;
        mr.out_edge[0] = 12 * (cells_ - 1) + 11;
    }
}

int LatticeGraph::injection_edge(int cell, Subsite s, bool rightward) const {
    if (cell < 0 || cell >= cells_)
        throw std::out_of_range("injection_edge: cell out of range");
    if (rightward)
        return 12 * cell + (s == Subsite::A ? 4 : 10);
    if (s == Subsite::B) return 12 * cell + 5;
    // leftward out of diamond a: the previous cell's xL edge, or the left
    // mirror edge at the chain head
    if (cell == 0) {
        if (!reflective())
            return 12 * (cells_ - 1) + 11;
        return 12 * cells_;
    }
    return 12 * (cell - 1) + 11;
}

void LatticeGraph::check_structure() const {
    for (int e = 0; e < edge_count_; ++e) {
        const int r = edge_reverse_[e];
        if (r < 0 || edge_reverse_[r] != e)
            throw std::logic_error("edge reverse pairing broken");
    }
    std::vector<int> in_seen(edge_count_, 0), out_seen(edge_count_, 0);
    for (int v = 0; v < vertex_count_; ++v) {
        const VertexPorts& p = vertices_[v];
        if (!vertex_is_mirror(v) && p.n_ports != 3)
            throw std::logic_error("three-port vertex without 3 port pairs");
        for (int k = 0; k < p.n_ports; ++k) {
            ++in_seen[p.in_edge[k]];
            ++out_seen[p.out_edge[k]];
        }
    }
    for (int e = 0; e < edge_count_; ++e)
        if (in_seen[e] != 1 || out_seen[e] != 1)
            throw std::logic_error("edge not wired to exactly one head and tail");
}

LatticeGraph build_chain(const ChainSpec& spec) { return LatticeGraph(spec); }

}  // namespace qwalk
