#pragma once

#include <vector>

#include "symfact/observables.hpp"

namespace symfact {

struct IntegratorControls {
  double dt{1e-2};          // base step
  double tolerance{1e-9};   // max relative H drift contract
  int maxHalvings{6};       // step-halving fallback depth
};

struct TrajectorySample {
  double t{0.0};
  PhasePoint pt;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  SystemKind system;
  double dt{0.0};       // step actually used
  int order{6};
  double tolerance{0.0};
};

struct DriftEntry {
  ObservableId id;
  double initial{0.0};
  double maxRelDrift{0.0};
};

struct DriftReport {
  std::vector<DriftEntry> entries;
};

enum class OrbitClass { Closed, Open, Circular };

struct OrbitClassification {
  OrbitClass kind;
  double period{0.0};  // recurrence time for closed orbits
};

// Canonical flow of H = p_r^2 + V(r) + (p_theta^2 + p_phi^2/sin^2 theta)/r^2
// by a 3-stage Gauss collocation step (order 6, symplectic). The step is
// halved until the max relative H drift over the run meets ctrl.tolerance.
// phi is left unwrapped. Throws on singularity approach (r or sin theta
// under 1e-4) and, unless allowUnbound, on Kepler points with H >= 0.
Trajectory hamiltonFlow(const PhasePoint& pt0, const SystemKind& sys, double T,
                        const IntegratorControls& ctrl = {}, bool allowUnbound = false);

DriftReport driftReport(const Trajectory& traj, const std::vector<ObservableId>& ids);

// Period of the r(t) oscillation via turning points with Hermite-style local
// refinement; throws std::invalid_argument when fewer than 3 turning points
// are present (e.g. circular orbits).
double radialPeriod(const Trajectory& traj);

// Closed iff the full 6d phase point recurs within tol (phi compared mod 2 pi).
OrbitClassification classifyOrbit(const Trajectory& traj, double tol = 1e-5);

// Time derivative of the phase point under the flow.
std::array<double, 6> equationsOfMotion(const PhasePoint& pt, const SystemKind& sys);

}  // namespace symfact
