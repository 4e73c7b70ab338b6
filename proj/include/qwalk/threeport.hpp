#pragma once

#include <complex>
#include <Eigen/Dense>

namespace qwalk {

using cplx = std::complex<double>;

enum Port : int { PortA = 0, PortB = 1, PortC = 2 };

/// 3x3 unitary scattering matrix of one directionally-unbiased three-port.
/// All three internal mirror units share the phase theta; the matrix is
/// symmetric under any permutation of the ports.
struct ThreePortUnitary {
    double theta = 0.0;
    Eigen::Matrix3cd matrix;
};

ThreePortUnitary build_threeport(double theta);

/// Two three-ports joined on their B and C ports (two parallel internal
/// edges); the C-C edge carries the phase shifter phi and the A ports face
/// the chain. `step` is the one-step scattering action on the local directed
/// amplitudes, ordered (in_L, in_R, BR, BL, CR, CL) -> same slots, where
/// in/out of slot 0/1 are the external A-port edges of the left and right
/// three-port.
struct DiamondUnit {
    double phi = 0.0;
    Port entry_port = PortA;  // external port of the left three-port
    Port exit_port = PortA;   // external port of the right three-port
    ThreePortUnitary left;
    ThreePortUnitary right;
    Eigen::Matrix<cplx, 6, 6> step;
};

DiamondUnit compose_diamond(double phi, const ThreePortUnitary& t1,
                            const ThreePortUnitary& t2);

}  // namespace qwalk
