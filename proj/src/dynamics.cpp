#include "symfact/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symfact {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kRGuard = 1e-4;
constexpr double kSinThetaGuard = 1e-4;

std::array<double, 6> asArray(const PhasePoint& pt) {
  return {pt.r, pt.pr, pt.theta, pt.ptheta, pt.phi, pt.pphi};
}

PhasePoint fromArray(const std::array<double, 6>& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5]};
}

void checkGuards(const PhasePoint& pt) {
  if (pt.r < kRGuard || std::abs(std::sin(pt.theta)) < kSinThetaGuard)
    throw std::domain_error("trajectory approached a coordinate singularity");
}

// 3-stage Gauss collocation tableau (order 6).
struct GaussTableau {
  static constexpr double s15 = 3.872983346207417;  // sqrt(15)
  static constexpr double a[3][3] = {
      {5.0 / 36.0, 2.0 / 9.0 - s15 / 15.0, 5.0 / 36.0 - s15 / 30.0},
      {5.0 / 36.0 + s15 / 24.0, 2.0 / 9.0, 5.0 / 36.0 - s15 / 24.0},
      {5.0 / 36.0 + s15 / 30.0, 2.0 / 9.0 + s15 / 15.0, 5.0 / 36.0}};
  static constexpr double b[3] = {5.0 / 18.0, 4.0 / 9.0, 5.0 / 18.0};
};

PhasePoint gaussStep(const PhasePoint& pt, const SystemKind& sys, double h) {
  const std::array<double, 6> y0 = asArray(pt);
  std::array<std::array<double, 6>, 3> k;
  const std::array<double, 6> f0 = equationsOfMotion(pt, sys);
  k.fill(f0);

  for (int iter = 0; iter < 100; ++iter) {
    double delta = 0.0;
    for (int s = 0; s < 3; ++s) {
      std::array<double, 6> y = y0;
      for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 6; ++i) y[i] += h * GaussTableau::a[s][j] * k[j][i];
      const std::array<double, 6> f = equationsOfMotion(fromArray(y), sys);
      for (int i = 0; i < 6; ++i) {
        delta = std::max(delta, std::abs(f[i] - k[s][i]));
        k[s][i] = f[i];
      }
    }
    if (delta < 1e-14) break;
  }

  std::array<double, 6> y1 = y0;
  for (int s = 0; s < 3; ++s)
    for (int i = 0; i < 6; ++i) y1[i] += h * GaussTableau::b[s] * k[s][i];
  return fromArray(y1);
}

Trajectory integrateOnce(const PhasePoint& pt0, const SystemKind& sys, double T, double dt,
                         double* maxDrift) {
  Trajectory traj;
  traj.system = sys;
  traj.dt = dt;
  const long nSteps = std::lround(std::ceil(T / dt - 1e-12));
  traj.samples.reserve(static_cast<std::size_t>(nSteps) + 1);
  traj.samples.push_back({0.0, pt0});
  const double h0 = observableValue(ObservableId::H, pt0, sys).real();
  const double hScale = std::max(std::abs(h0), 1e-12);
  double drift = 0.0;
  PhasePoint pt = pt0;
  for (long i = 1; i <= nSteps; ++i) {
    const double tNext = std::min(T, i * dt);
    pt = gaussStep(pt, sys, tNext - traj.samples.back().t);
    checkGuards(pt);
    traj.samples.push_back({tNext, pt});
    drift = std::max(drift,
                     std::abs(observableValue(ObservableId::H, pt, sys).real() - h0) / hScale);
  }
  *maxDrift = drift;
  return traj;
}

double angleDiff(double a, double b) {
  double d = std::fmod(a - b, 2.0 * kPi);
  if (d > kPi) d -= 2.0 * kPi;
  if (d < -kPi) d += 2.0 * kPi;
  return d;
}

double pointDistance(const PhasePoint& a, const PhasePoint& b) {
  double d = std::abs(a.r - b.r);
  d = std::max(d, std::abs(a.pr - b.pr));
  d = std::max(d, std::abs(a.theta - b.theta));
  d = std::max(d, std::abs(a.ptheta - b.ptheta));
  d = std::max(d, std::abs(angleDiff(a.phi, b.phi)));
  return std::max(d, std::abs(a.pphi - b.pphi));
}

// Advance from a base point by delta using steps no larger than dt.
PhasePoint advance(const PhasePoint& base, const SystemKind& sys, double delta, double dt) {
  PhasePoint pt = base;
  double done = 0.0;
  while (delta - done > 1e-15) {
    const double h = std::min(dt, delta - done);
    pt = gaussStep(pt, sys, h);
    done += h;
  }
  return pt;
}

}  // namespace

std::array<double, 6> equationsOfMotion(const PhasePoint& pt, const SystemKind& sys) {
  const double r2 = pt.r * pt.r;
  const double st = std::sin(pt.theta), ct = std::cos(pt.theta);
  const double st2 = st * st;
  const double l2 = pt.ptheta * pt.ptheta + pt.pphi * pt.pphi / st2;
  const double vPrime = sys.tag == SystemKind::Tag::Ho
                            ? sys.param * sys.param * pt.r / 2.0
                            : sys.param / r2;
  return {2.0 * pt.pr,
          2.0 * l2 / (r2 * pt.r) - vPrime,
          2.0 * pt.ptheta / r2,
          2.0 * pt.pphi * pt.pphi * ct / (r2 * st2 * st),
          2.0 * pt.pphi / (r2 * st2),
          0.0};
}

Trajectory hamiltonFlow(const PhasePoint& pt0, const SystemKind& sys, double T,
                        const IntegratorControls& ctrl, bool allowUnbound) {
  checkGuards(pt0);
  if (!(T > 0.0)) throw std::invalid_argument("hamiltonFlow: T must be positive");
  if (sys.tag == SystemKind::Tag::Kc && !allowUnbound &&
      observableValue(ObservableId::H, pt0, sys).real() >= 0.0)
    throw std::domain_error("hamiltonFlow: Kepler point is unbound (H >= 0)");

  double dt = ctrl.dt;
  for (int attempt = 0; attempt <= ctrl.maxHalvings; ++attempt, dt /= 2.0) {
    double drift = 0.0;
    Trajectory traj = integrateOnce(pt0, sys, T, dt, &drift);
    if (drift <= ctrl.tolerance) {
      traj.tolerance = ctrl.tolerance;
      return traj;
    }
  }
  throw std::runtime_error("hamiltonFlow: H drift tolerance not met after step halving");
}

DriftReport driftReport(const Trajectory& traj, const std::vector<ObservableId>& ids) {
  DriftReport report;
  for (const auto id : ids) {
    const double f0 =
        observableValue(id, traj.samples.front().pt, traj.system).real();
    // Unit floor: the tracked constants have O(1) natural scale, and a
    // conserved quantity that happens to start near zero would otherwise
    // turn round-off into an arbitrarily large "relative" drift.
    const double scale = std::max(1.0, std::abs(f0));
    double worst = 0.0;
    for (const auto& s : traj.samples)
      worst = std::max(worst,
                       std::abs(observableValue(id, s.pt, traj.system).real() - f0) / scale);
    report.entries.push_back({id, f0, worst});
  }
  return report;
}

double radialPeriod(const Trajectory& traj) {
  // Turning points: zero crossings of p_r(t), refined with a cubic Hermite
  // model of p_r on the bracketing interval (slope from the flow itself).
  std::vector<double> turns;
  const auto& s = traj.samples;
  double prAmp = 0.0;
  for (const auto& smp : s) prAmp = std::max(prAmp, std::abs(smp.pt.pr));
  if (prAmp < 1e-8)
    throw std::invalid_argument("radialPeriod: no radial oscillation (circular orbit)");
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double pa = s[i].pt.pr, pb = s[i + 1].pt.pr;
    if (pa == 0.0 && pb == 0.0) continue;
    if ((pa < 0.0 && pb >= 0.0) || (pa > 0.0 && pb <= 0.0)) {
      const double h = s[i + 1].t - s[i].t;
      const double da = equationsOfMotion(s[i].pt, traj.system)[1];
      const double db = equationsOfMotion(s[i + 1].pt, traj.system)[1];
      // Hermite in normalized u on [0,1]; bisection on the cubic.
      const auto eval = [&](double u) {
        const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
        const double h10 = u * (1 - u) * (1 - u);
        const double h01 = u * u * (3 - 2 * u);
        const double h11 = u * u * (u - 1);
        return h00 * pa + h10 * h * da + h01 * pb + h11 * h * db;
      };
      double lo = 0.0, hi = 1.0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((eval(lo) <= 0.0) == (eval(mid) <= 0.0) ? lo : hi) = mid;
      }
      turns.push_back(s[i].t + 0.5 * (lo + hi) * h);
    }
  }
  if (turns.size() < 3)
    throw std::invalid_argument("radialPeriod: fewer than 3 radial turning points");
  // Same-type turning points alternate; average over all gap-2 spacings.
  double sum = 0.0;
  for (std::size_t i = 0; i + 2 < turns.size() + 0; ++i) sum += turns[i + 2] - turns[i];
  return sum / static_cast<double>(turns.size() - 2);
}

OrbitClassification classifyOrbit(const Trajectory& traj, double tol) {
  const auto& s = traj.samples;
  const PhasePoint& p0 = s.front().pt;

  double rMin = p0.r, rMax = p0.r;
  for (const auto& smp : s) {
    rMin = std::min(rMin, smp.pt.r);
    rMax = std::max(rMax, smp.pt.r);
  }
  if (rMax - rMin < tol * std::max(1.0, p0.r)) return {OrbitClass::Circular, 0.0};

  // Find a sample-resolution local minimum of the recurrence distance after
  // the point has left the initial neighborhood, then refine in time.
  bool departed = false;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    const double d = pointDistance(s[i].pt, p0);
    if (!departed) {
      departed = d > 100.0 * tol;
      continue;
    }
    if (d <= pointDistance(s[i - 1].pt, p0) && d <= pointDistance(s[i + 1].pt, p0)) {
      // Ternary search on t in [t_{i-1}, t_{i+1}], advancing from s[i-1].
      const PhasePoint base = s[i - 1].pt;
      double lo = 0.0, hi = s[i + 1].t - s[i - 1].t;
      for (int it = 0; it < 80; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        const double d1 = pointDistance(advance(base, traj.system, m1, traj.dt), p0);
        const double d2 = pointDistance(advance(base, traj.system, m2, traj.dt), p0);
        (d1 < d2 ? hi : lo) = (d1 < d2 ? m2 : m1);
      }
      const double tStar = s[i - 1].t + 0.5 * (lo + hi);
      const double dStar =
          pointDistance(advance(base, traj.system, 0.5 * (lo + hi), traj.dt), p0);
      if (dStar < tol) return {OrbitClass::Closed, tStar};
    }
  }
  return {OrbitClass::Open, 0.0};
}

}  // namespace symfact
