#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "symfact/action_angle.hpp"
#include "symfact/angular_function.hpp"
#include "symfact/radial_function.hpp"
#include "symfact/state.hpp"

namespace symfact {

using Json = nlohmann::ordered_json;

// Function serialization: {"s": "num/den", "coeffs": [[re, im], ...],
// "alpha": a, "beta": b} and the angular analogue with "a" for the sine
// power. Angles/harmonics carry their labels alongside.
Json toJson(const RadialFunction& f);
Json toJson(const AngularFunction& g);
Json toJson(const SeparatedState& st);
Json toJson(const VerificationCheck& check);

// Versioned report envelope: {"schema": "1", "suite": ..., "pass": ...,
// "checks": [...]}.
Json reportJson(const std::string& suite, const VerificationReport& report);

// Orbit CSV with the fixed header
// t,r,p_r,theta,p_theta,phi,p_phi,H,L2,Lz,Xsym,Xanti.
void writeOrbitCsv(std::ostream& out, const Trajectory& traj);

// Parse a CSV produced by writeOrbitCsv back into a trajectory (only the
// first seven columns are consumed).
Trajectory readOrbitCsv(std::istream& in, const SystemKind& sys);

}  // namespace symfact
