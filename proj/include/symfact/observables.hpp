#pragma once

#include <array>
#include <complex>
#include <functional>

namespace symfact {

using Complex = std::complex<double>;

// Canonical spherical phase-space point (2m = 1 units).
struct PhasePoint {
  double r{1.0};
  double pr{0.0};
  double theta{1.5707963267948966};
  double ptheta{0.0};
  double phi{0.0};
  double pphi{0.0};
};

struct SystemKind {
  enum class Tag { Ho, Kc };
  Tag tag{Tag::Ho};
  double param{1.0};  // omega for Ho, k for Kc
  static SystemKind ho(double omega) { return {Tag::Ho, omega}; }
  static SystemKind kc(double k) { return {Tag::Kc, k}; }
};

// Catalog of classical phase-space functions. l/m/E-parameterized entries use
// frozen parameter values (see FrozenParams); Cartesian-built entries (Q, A,
// Xsym, Xanti) depend on the full coordinates.
enum class ObservableId {
  H,
  L2,
  Lz,
  SqrtL2,
  LPhiPlus,          // e^{+i phi}
  LPhiMinus,         // e^{-i phi}
  SigmaThetaPlus,    // +i p_theta - p_phi cot(theta)
  SigmaThetaMinus,   // -i p_theta - p_phi cot(theta)
  APlus,             // e^{+i phi} sigma^+_theta
  AMinus,            // e^{-i phi} sigma^-_theta
  LambdaThetaPlus,   // +i sin(theta) p_theta + l cos(theta)
  LambdaThetaMinus,  // -i sin(theta) p_theta + l cos(theta)
  HoAPlus,           // -i p_r + l/r + (w/2) r
  HoAMinus,          // +i p_r + l/r + (w/2) r
  HoBPlus,           // -i p_r + l/r - (w/2) r
  HoBMinus,          // +i p_r + l/r - (w/2) r
  SigmaRPlus,        // Ho: b+ a+ ; Kc: -i p_r + l/r - k/(2l)
  SigmaRMinus,
  LambdaRPlus,       // Ho: a+ b- ; Kc: dilation-phase ladder (needs H < 0)
  LambdaRMinus,
  SPlus,  // Ho: sigma^+_r (lambda^+_theta)^2 ; Kc: sigma^+_r lambda^+_theta
  SMinus,
  Xsym,   // Ho: (L2 - Lz^2) H - 2 L2 Qzz ; Kc: A_z
  Xanti,  // Ho: 2 (Lx Qyz - Ly Qzx) ; Kc: Lx Ay - Ly Ax
  Qxx,
  Qyy,
  Qzz,
  Qxy,
  Qyz,
  Qzx,
  Ax,
  Ay,
  Az,
};

// Complex value with forward-mode partials in the order
// (r, p_r, theta, p_theta, phi, p_phi).
struct CDual {
  Complex v{};
  std::array<Complex, 6> d{};
};

// l = sqrt(L2) and E = H captured at a base point; parameterized catalog
// entries treat these as constants under differentiation.
struct FrozenParams {
  double ell{0.0};
  double energy{0.0};
};

FrozenParams freezeAt(const PhasePoint& pt, const SystemKind& sys);

// Value plus analytic gradient; frozen parameters are supplied explicitly so
// a function can be displaced off its freezing point.
CDual evalObservable(ObservableId id, const PhasePoint& pt, const SystemKind& sys,
                     const FrozenParams& frozen);

// Convenience: freeze at the evaluation point itself.
Complex observableValue(ObservableId id, const PhasePoint& pt, const SystemKind& sys);
std::array<Complex, 6> analyticGradient(ObservableId id, const PhasePoint& pt,
                                        const SystemKind& sys);

// {f, g} from analytic gradients.
Complex poissonBracket(const CDual& f, const CDual& g);
// Both observables frozen at pt and differentiated there.
Complex poissonBracket(ObservableId f, ObservableId g, const PhasePoint& pt,
                       const SystemKind& sys);

// A catalog entry as a plain evaluator with its parameters frozen at
// freezeBase (needed by the finite-difference oracle, which displaces the
// point while the parameters stay put).
using PhaseFn = std::function<Complex(const PhasePoint&)>;
PhaseFn observableFn(ObservableId id, const SystemKind& sys, const PhasePoint& freezeBase);

// Central-difference Poisson bracket with one Richardson extrapolation step
// (steps h and h/2). Requires the point to sit further than 10h from the
// coordinate singularities.
Complex poissonBracketFD(const PhaseFn& f, const PhaseFn& g, const PhasePoint& pt, double h);

std::array<Complex, 6> gradientFD(const PhaseFn& f, const PhasePoint& pt, double h);

// Cartesian view (x, y, z, p_x, p_y, p_z) of a spherical phase point.
std::array<double, 6> toCartesian(const PhasePoint& pt);

}  // namespace symfact
