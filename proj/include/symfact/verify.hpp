#pragma once

#include "symfact/action_angle.hpp"

namespace symfact {

// Options shared by the quantum identity suites.
struct QuantumVerifyOptions {
  int lmax{4};                    // angular range for harmonics / lattices
  int nmax{6};                    // principal quantum number range
  int samples{20};                // random functions per operator identity
  unsigned long long seed{1};
  double tol{1e-10};
};

// Options for the classical modulus/bracket suites.
struct ClassicalVerifyOptions {
  int samples{200};               // random phase-space points per identity
  unsigned long long seed{7};
  double moduliTol{1e-10};
  double bracketTol{1e-6};
};

// Oscillator (omega) or Kepler-Coulomb (k) quantum suite: spectra,
// factorizations, ladder/shift identities, intertwinings and the spherical
// harmonic construction. Every check records its worst residual.
VerificationReport verifyQuantum(const SystemKind& sys, const QuantumVerifyOptions& opts);

// Classical suite for one system: modulus table of the symmetry functions
// plus the Poisson-bracket identities against the finite-difference oracle.
VerificationReport verifyClassical(const SystemKind& sys, const ClassicalVerifyOptions& opts);

}  // namespace symfact
