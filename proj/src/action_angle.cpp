#include "symfact/action_angle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace symfact {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr Complex kI{0.0, 1.0};
constexpr double kDegenerate = 1e-12;

struct LiveValues {
  double H, L2, ell, m;
};

LiveValues liveValues(const PhasePoint& pt, const SystemKind& sys) {
  const double st = std::sin(pt.theta);
  const double L2 = pt.ptheta * pt.ptheta + pt.pphi * pt.pphi / (st * st);
  double H = pt.pr * pt.pr + L2 / (pt.r * pt.r);
  H += sys.tag == SystemKind::Tag::Ho ? sys.param * sys.param * pt.r * pt.r / 4.0
                                      : -sys.param / pt.r;
  return {H, L2, std::sqrt(L2), pt.pphi};
}

// Complex symmetry-function carriers with every parameter live (full
// coordinate dependence), as needed for the canonical angle variables.
Complex carrierPhi(const PhasePoint& pt, const LiveValues& lv) {
  const Complex sigma = kI * pt.ptheta - lv.m * std::cos(pt.theta) / std::sin(pt.theta);
  return std::exp(kI * pt.phi) * sigma;  // A^+
}

Complex lambdaTheta(const PhasePoint& pt, const LiveValues& lv) {
  return kI * std::sin(pt.theta) * pt.ptheta + lv.ell * std::cos(pt.theta);
}

Complex sigmaR(const PhasePoint& pt, const SystemKind& sys, const LiveValues& lv) {
  if (sys.tag == SystemKind::Tag::Kc)
    return -kI * pt.pr + lv.ell / pt.r - sys.param / (2.0 * lv.ell);
  const Complex a = -kI * pt.pr + lv.ell / pt.r + sys.param * pt.r / 2.0;
  const Complex b = -kI * pt.pr + lv.ell / pt.r - sys.param * pt.r / 2.0;
  return b * a;
}

Complex carrierTheta(const PhasePoint& pt, const SystemKind& sys, const LiveValues& lv) {
  const Complex lam = lambdaTheta(pt, lv);
  const Complex sig = sigmaR(pt, sys, lv);
  return sys.tag == SystemKind::Tag::Ho ? sig * lam * lam : sig * lam;  // S^+
}

Complex carrierR(const PhasePoint& pt, const SystemKind& sys, const LiveValues& lv) {
  if (sys.tag == SystemKind::Tag::Ho)
    return Complex(lv.H - sys.param * sys.param * pt.r * pt.r / 2.0,
                   sys.param * pt.r * pt.pr);  // a^+ b^-
  if (lv.H >= 0.0) throw std::domain_error("Kepler radial angle requires H < 0");
  const double h = std::sqrt(-lv.H);
  const Complex pre{pt.r * h - sys.param / (2.0 * h), -pt.r * pt.pr};
  return pre * std::exp(-2.0 * kI * pt.r * pt.pr * h / sys.param);
}

}  // namespace

bool VerificationReport::allPass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerificationCheck& c) { return c.pass; });
}

double VerificationReport::worstMargin() const {
  double worst = 0.0;
  for (const auto& c : checks)
    worst = std::max(worst, c.residual / std::max(c.tolerance, 1e-300));
  return worst;
}

double phaseOf(Complex value) {
  if (std::abs(value) <= kDegenerate)
    throw std::domain_error("phase undefined: symmetry function vanishes (degenerate orbit)");
  return std::arg(value);
}

ActionAngleSet actionsOnly(const PhasePoint& pt, const SystemKind& sys) {
  const LiveValues lv = liveValues(pt, sys);
  ActionAngleSet out;
  out.Jphi = pt.pphi;
  if (sys.tag == SystemKind::Tag::Ho) {
    out.Jtheta = (lv.ell - std::abs(lv.m)) / 2.0;
    out.Jr = lv.H / (2.0 * sys.param) - lv.ell / 2.0;
  } else {
    if (lv.H >= 0.0) throw std::domain_error("Kepler actions require H < 0");
    out.Jtheta = lv.ell - std::abs(lv.m);
    out.Jr = sys.param / (2.0 * std::sqrt(-lv.H)) - lv.ell;
  }
  return out;
}

ActionAngleSet actionAngle(const PhasePoint& pt, const SystemKind& sys) {
  ActionAngleSet out = actionsOnly(pt, sys);
  const LiveValues lv = liveValues(pt, sys);
  out.xiPhi = phaseOf(carrierPhi(pt, lv));
  out.xiTheta = phaseOf(carrierTheta(pt, sys, lv));
  out.xiR = phaseOf(carrierR(pt, sys, lv));
  return out;
}

std::vector<double> unwrapAlong(const Trajectory& traj, int angleIndex) {
  if (angleIndex < 0 || angleIndex > 2)
    throw std::invalid_argument("unwrapAlong: angle index must be 0, 1 or 2");
  std::vector<double> out;
  out.reserve(traj.samples.size());
  double prev = 0.0;
  for (const auto& s : traj.samples) {
    const ActionAngleSet set = actionAngle(s.pt, traj.system);
    const double raw = angleIndex == 0 ? set.xiPhi : angleIndex == 1 ? set.xiTheta : set.xiR;
    if (out.empty()) {
      out.push_back(raw);
    } else {
      const double delta = std::remainder(raw - prev, 2.0 * kPi);
      if (std::abs(delta) > kPi / 2.0)
        throw std::runtime_error("unwrapAlong: sampling too coarse to unwrap the angle");
      out.push_back(out.back() + delta);
    }
    prev = raw;
  }
  return out;
}

SlopeFit fitSlope(const Trajectory& traj, const std::vector<double>& series) {
  const std::size_t n = series.size();
  if (n != traj.samples.size() || n < 2)
    throw std::invalid_argument("fitSlope: series/trajectory size mismatch");
  double st = 0.0, sx = 0.0, stt = 0.0, stx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = traj.samples[i].t;
    st += t;
    sx += series[i];
    stt += t * t;
    stx += t * series[i];
  }
  const double den = n * stt - st * st;
  SlopeFit fit;
  fit.slope = (n * stx - st * sx) / den;
  const double intercept = (sx - fit.slope * st) / n;
  for (std::size_t i = 0; i < n; ++i)
    fit.maxResidual = std::max(
        fit.maxResidual, std::abs(series[i] - fit.slope * traj.samples[i].t - intercept));
  return fit;
}

namespace {

// Angle evaluator with the branch cut rotated away from the base value, so
// finite differencing near the point never crosses it.
PhaseFn angleFn(int index, const SystemKind& sys, const PhasePoint& base) {
  const LiveValues lvb = liveValues(base, sys);
  const Complex ref =
      index == 0 ? carrierPhi(base, lvb)
                 : index == 1 ? carrierTheta(base, sys, lvb) : carrierR(base, sys, lvb);
  const double psi0 = phaseOf(ref);
  return [index, sys, psi0](const PhasePoint& pt) {
    const LiveValues lv = liveValues(pt, sys);
    const Complex value = index == 0
                              ? carrierPhi(pt, lv)
                              : index == 1 ? carrierTheta(pt, sys, lv) : carrierR(pt, sys, lv);
    return Complex(psi0 + std::arg(value * std::polar(1.0, -psi0)));
  };
}

PhaseFn actionFn(int index, const SystemKind& sys) {
  return [index, sys](const PhasePoint& pt) {
    const ActionAngleSet set = actionsOnly(pt, sys);
    return Complex(index == 0 ? set.Jphi : index == 1 ? set.Jtheta : set.Jr);
  };
}

// Sector momenta conjugate to the angles: p_phi, sqrt(L^2) (halved for the
// oscillator) and the radial action expressed through the energy alone.
// The xi_i are canonical against these — {xi_i, I_j} = delta_ij — while the
// difference-form actions J_theta, J_r mix sectors and pick up the constant
// off-diagonal brackets {xi_phi, J_theta} and {xi_theta, J_r}.
PhaseFn sectorMomentumFn(int index, const SystemKind& sys) {
  return [index, sys](const PhasePoint& pt) {
    const LiveValues lv = liveValues(pt, sys);
    if (index == 0) return Complex(lv.m);
    if (index == 1)
      return Complex(sys.tag == SystemKind::Tag::Ho ? lv.ell / 2.0 : lv.ell);
    if (sys.tag == SystemKind::Tag::Ho) return Complex(lv.H / (2.0 * sys.param));
    return Complex(sys.param / (2.0 * std::sqrt(-lv.H)));
  };
}

}  // namespace

VerificationReport verifyCanonicalPairs(const SystemKind& sys, int samples,
                                        unsigned long long seed) {
  VerificationReport report;
  const char* names[3] = {"phi", "theta", "r"};
  const double tol = 1e-5;
  double diag[3] = {0.0, 0.0, 0.0};
  double cross = 0.0, angles = 0.0, actions = 0.0;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> rDist(0.5, 3.0);
  std::uniform_real_distribution<double> thDist(0.5, kPi - 0.5);
  std::uniform_real_distribution<double> pDist(-1.0, 1.0);
  std::uniform_real_distribution<double> pphiDist(0.3, 1.0);
  std::uniform_real_distribution<double> phDist(0.0, 2.0 * kPi);

  int accepted = 0;
  while (accepted < samples) {
    PhasePoint pt{rDist(rng), pDist(rng), thDist(rng), pDist(rng), phDist(rng), pphiDist(rng)};
    if (std::abs(pt.ptheta) < 0.1) pt.ptheta += 0.3;  // stay off equatorial degeneracy
    const LiveValues lv = liveValues(pt, sys);
    if (sys.tag == SystemKind::Tag::Kc && lv.H > -0.08) continue;
    if (sys.tag == SystemKind::Tag::Ho &&
        lv.H * lv.H - sys.param * sys.param * lv.L2 < 0.05)
      continue;
    try {
      actionAngle(pt, sys);  // reject remaining degenerate carriers
    } catch (const std::domain_error&) {
      continue;
    }
    ++accepted;

    PhaseFn xi[3], J[3], I[3];
    for (int i = 0; i < 3; ++i) {
      xi[i] = angleFn(i, sys, pt);
      J[i] = actionFn(i, sys);
      I[i] = sectorMomentumFn(i, sys);
    }
    const double h = 1e-4;
    for (int i = 0; i < 3; ++i) {
      diag[i] = std::max(diag[i],
                         std::abs(poissonBracketFD(xi[i], J[i], pt, h) - Complex(1.0)));
      for (int j = 0; j < 3; ++j) {
        if (i != j) cross = std::max(cross, std::abs(poissonBracketFD(xi[i], I[j], pt, h)));
        if (i < j) {
          angles = std::max(angles, std::abs(poissonBracketFD(xi[i], xi[j], pt, h)));
          actions = std::max(actions, std::abs(poissonBracketFD(J[i], J[j], pt, h)));
        }
      }
    }
  }

  for (int i = 0; i < 3; ++i)
    report.checks.push_back({std::string("{xi_") + names[i] + ", J_" + names[i] + "} = 1",
                             diag[i], tol, diag[i] < tol});
  report.checks.push_back({"{xi_i, I_j} = 0 (i != j)", cross, tol, cross < tol});
  report.checks.push_back({"{xi_i, xi_j} = 0", angles, tol, angles < tol});
  report.checks.push_back({"{J_i, J_j} = 0", actions, tol, actions < tol});
  return report;
}

}  // namespace symfact
