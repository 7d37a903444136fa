#pragma once

#include <string>
#include <vector>

#include "symfact/dynamics.hpp"

namespace symfact {

struct ActionAngleSet {
  double Jphi{0.0};
  double Jtheta{0.0};
  double Jr{0.0};
  double xiPhi{0.0};
  double xiTheta{0.0};
  double xiR{0.0};
};

struct VerificationCheck {
  std::string name;
  double residual{0.0};
  double tolerance{0.0};
  bool pass{false};
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool allPass() const;
  double worstMargin() const;  // max residual/tolerance ratio
};

// Principal-branch argument of a symmetry-function value; throws
// std::domain_error when the modulus is under 1e-12 (degenerate orbit).
double phaseOf(Complex value);

// Actions only; well defined including the degenerate circular/equatorial
// limits. (J_phi = p_phi; J_theta and J_r from the involutive constants.)
ActionAngleSet actionsOnly(const PhasePoint& pt, const SystemKind& sys);

// Full set with angles extracted from the complex symmetry functions.
// Throws std::domain_error on degenerate orbits or unbound Kepler points.
ActionAngleSet actionAngle(const PhasePoint& pt, const SystemKind& sys);

// Continuity-unwrapped angle series along a trajectory; index selects
// xiPhi (0), xiTheta (1) or xiR (2). Throws when sampling is too coarse to
// unwrap reliably.
std::vector<double> unwrapAlong(const Trajectory& traj, int angleIndex);

// Least-squares slope of an unwrapped series against sample times.
struct SlopeFit {
  double slope{0.0};
  double maxResidual{0.0};
};
SlopeFit fitSlope(const Trajectory& traj, const std::vector<double>& series);

// FD-oracle verification of the canonical structure at random non-degenerate
// points: {xi_i, J_i} = 1, {xi_i, xi_j} = 0, {J_i, J_j} = 0, and
// {xi_i, I_j} = 0 (i != j) where I = (p_phi, sqrt(L^2), J_r(H)) are the
// sector momenta the angles are conjugate to (sqrt(L^2)/2 and H/(2 omega)
// for the oscillator). The difference-form actions J_theta = ell - |m| and
// J_r = J_r(H) - ell mix sectors, so {xi_phi, J_theta} and {xi_theta, J_r}
// are the constant off-diagonal entries of a triangular bracket matrix;
// that structure is what keeps xi_phi and xi_theta constant along orbits
// while only xi_r advances.
VerificationReport verifyCanonicalPairs(const SystemKind& sys, int samples,
                                        unsigned long long seed);

}  // namespace symfact
