#pragma once

#include "symfact/state.hpp"

namespace symfact {

// Angular sector: L_z ladder, theta shift d±_{theta,m} and ladder
// lambda±_l operators, the C_l operator, the composed symmetries
// L± = d± l±, and generation of spherical harmonics from the seed 1.

struct AngularPair {
  AngularFunction theta;
  AzimuthalMode mode;
  int l{0};
  int m{0};
  bool isZero() const { return theta.isZero(); }
  static AngularPair zeroPair() { return {}; }
};

// L_z e^{im phi} = m e^{im phi}
int applyLz(const AzimuthalMode& mode);

// e^{±i phi}: m -> m ± 1
AzimuthalMode ladderPhi(const AzimuthalMode& mode, int sign);

// sign=-1: d^-_{theta,m} = -d/dtheta - m cot(theta)       (P_l^m -> P_l^{m-1})
// sign=+1: d^+_{theta,m} = +d/dtheta - (m-1) cot(theta)   (P_l^{m-1} -> P_l^m)
AngularFunction shiftTheta(const AngularFunction& g, int m, int sign);

// lambda^±_l = ± sin(theta) d/dtheta + l cos(theta)
// lambda^-_l: P_l^m -> P_{l-1}^m,  lambda^+_{l+1}: P_l^m -> P_{l+1}^m
AngularFunction ladderThetaL(const AngularFunction& g, int ell, int sign);

// C_l = -sin^2 d^2 - sin cos d - l(l+1) sin^2, eigenvalue -m^2
AngularFunction applyCl(const AngularFunction& g, int ell);

// L^2_m = -d^2 - cot d + m^2/sin^2, eigenvalue l(l+1)
AngularFunction applyL2m(const AngularFunction& g, int m);

// L̂± = d±_{theta,m±1} l±_phi acting on the pair; annihilation gives the zero pair.
AngularPair angularSymmetry(const AngularPair& p, int sign);

// Phi_{l,m} generated by the lambda^+ chain and (L̂+)^m from Phi_{0,0} = 1;
// negative m by conjugation. normalize: unit L2 norm over the sphere.
AngularPair buildSphericalHarmonic(int ell, int m, bool normalize);

}  // namespace symfact
