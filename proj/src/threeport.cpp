#include "qwalk/threeport.hpp"

#include <cmath>
#include <stdexcept>

namespace qwalk {

ThreePortUnitary build_threeport(double theta) {
    if (!std::isfinite(theta))
        throw std::invalid_argument("build_threeport: theta must be finite");
    const cplx I(0.0, 1.0);
    const cplx pref = std::exp(I * theta) / (2.0 + I * std::exp(I * theta));
    const cplx off = I * std::exp(-I * theta) - 1.0;
    ThreePortUnitary u;
    u.theta = theta;
    u.matrix.setConstant(pref * off);
    u.matrix.diagonal().setConstant(pref);
    return u;
}

DiamondUnit compose_diamond(double phi, const ThreePortUnitary& t1,
                            const ThreePortUnitary& t2) {
    if (!std::isfinite(phi))
        throw std::invalid_argument("compose_diamond: phi must be finite");
    DiamondUnit d;
    d.phi = phi;
    d.left = t1;
    d.right = t2;

    const Eigen::Matrix3cd& L = t1.matrix;
    const Eigen::Matrix3cd& R = t2.matrix;
    const cplx eph = std::exp(cplx(0.0, 1.0) * phi);

    // slots: 0 in_L/out_L, 1 in_R/out_R, 2 BR, 3 BL, 4 CR, 5 CL
    // scattering at the left three-port reads (in_L, BL, CL) and writes
    // (out_L, BR, CR); the right one reads (in_R, BR, CR) and writes
    // (out_R, BL, CL). The phase shifter acts on amplitudes entering the
    // C edge in either direction.
    Eigen::Matrix<cplx, 6, 6> S = Eigen::Matrix<cplx, 6, 6>::Zero();
    const int inL = 0, inR = 1, BR = 2, BL = 3, CR = 4, CL = 5;
    auto scatter = [&](const Eigen::Matrix3cd& U, int inA, int inB, int inC,
                       int outA, int outB, int outC) {
        const int ins[3] = {inA, inB, inC};
        const int outs[3] = {outA, outB, outC};
        for (int po = 0; po < 3; ++po) {
            const cplx ph = (po == PortC) ? eph : cplx(1.0);
            for (int pi = 0; pi < 3; ++pi) S(outs[po], ins[pi]) += ph * U(po, pi);
        }
    };
    scatter(L, inL, BL, CL, /*outA=*/inL, BR, CR);
    scatter(R, inR, BR, CR, /*outA=*/inR, BL, CL);
    d.step = S;
    return d;
}

}  // namespace qwalk
