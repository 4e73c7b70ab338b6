#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "qwalk/threeport.hpp"

namespace qwalk {

enum class Polarization : int { H = 0, V = 1 };
enum class Subsite : int { A = 0, B = 1 };
enum class Boundary { Reflective, Periodic };

/// Phase settings of one chain region. phi_a sits on the first diamond of
/// every cell and is the same for both polarizations; phi_b sits on the
/// second diamond and may differ between H and V.
struct RegionPhases {
    double phi_a = 0.0;
    double phi_b_H = 0.0;
    double phi_b_V = 0.0;

    double phi_b(Polarization p) const {
        return p == Polarization::H ? phi_b_H : phi_b_V;
    }
    static RegionPhases make(double a, double bH, double bV);
    static RegionPhases make(double a, double b) { return make(a, b, b); }
};

struct ChainSpec {
    std::vector<std::pair<RegionPhases, int>> regions;  // (phases, cell count)
    double threeport_theta = 3.0 * 1.57079632679489661923;  // 3*pi/2
    Boundary boundary = Boundary::Reflective;

    int total_cells() const;
    std::vector<int> boundary_positions() const;  // first cell of each later region
    void validate() const;
};

/// Directed-edge graph of a chain of two-diamond unit cells. Each cell owns
/// 12 directed edges:
///   0 aBR  1 aBL  2 aCR  3 aCL  4 abR  5 abL
///   6 bBR  7 bBL  8 bCR  9 bCL  10 xR  11 xL
/// where a/b name the first/second diamond, B/C the internal edges, ab the
/// connecting segment inside the cell and x the segment to the next cell.
/// A reflective chain appends two left-mirror edges with ids 12N and 12N+1
/// and rewires cell N-1's x edges into the right mirror pair. Rings connect
/// cell N-1 back to cell 0 instead.
class LatticeGraph {
  public:
    explicit LatticeGraph(ChainSpec spec);

    const ChainSpec& spec() const { return spec_; }
    int cells() const { return cells_; }
    int edge_count() const { return edge_count_; }
    int vertex_count() const { return vertex_count_; }
    bool reflective() const { return spec_.boundary == Boundary::Reflective; }
    bool uniform() const { return spec_.regions.size() == 1; }
    int region_of_cell(int cell) const { return cell_region_[cell]; }
    const RegionPhases& region_phases(int region) const {
        return spec_.regions[region].first;
    }

    int edge_cell(int e) const { return edge_cell_[e]; }
    Subsite edge_subsite(int e) const { return edge_subsite_[e]; }
    int reverse_edge(int e) const { return edge_reverse_[e]; }
    /// Phase picked up by an amplitude scattered onto edge e.
    double edge_phase(int e, Polarization p) const {
        return p == Polarization::H ? phase_H_[e] : phase_V_[e];
    }

    /// Per-vertex port wiring. Mirror vertices have a single pair.
    struct VertexPorts {
        int n_ports = 0;
        std::array<int, 3> in_edge{{-1, -1, -1}};
        std::array<int, 3> out_edge{{-1, -1, -1}};
    };
    const VertexPorts& vertex(int v) const { return vertices_[v]; }
    bool vertex_is_mirror(int v) const { return v >= 4 * cells_; }
    const ThreePortUnitary& scatterer() const { return threeport_; }

    /// Identity of the edge carrying a photon injected at (cell, subsite)
    /// moving in the given sense. Rightward injections sit on the external
    /// edge leaving the subsite's diamond to the right.
    int injection_edge(int cell, Subsite s, bool rightward) const;

    void check_structure() const;  // reverse-pairing and port-count invariants

  private:
    ChainSpec spec_;
    int cells_ = 0;
    int edge_count_ = 0;
    int vertex_count_ = 0;
    ThreePortUnitary threeport_;
    std::vector<int> cell_region_;
    std::vector<int> edge_cell_;
    std::vector<Subsite> edge_subsite_;
    std::vector<int> edge_reverse_;
    std::vector<double> phase_H_, phase_V_;
    std::vector<VertexPorts> vertices_;
};

LatticeGraph build_chain(const ChainSpec& spec);

}  // namespace qwalk
