#include "symfact/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace symfact {

namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kFdStep = 1e-4;

PhasePoint samplePoint(std::mt19937_64& rng, const SystemKind& sys, bool requireBound) {
  std::uniform_real_distribution<double> rDist(0.3, 5.0);
  std::uniform_real_distribution<double> thDist(0.2, kPi - 0.2);
  std::uniform_real_distribution<double> pDist(-2.0, 2.0);
  std::uniform_real_distribution<double> phDist(0.0, 2.0 * kPi);
  for (;;) {
    PhasePoint pt{rDist(rng), pDist(rng), thDist(rng), pDist(rng), phDist(rng), pDist(rng)};
    if (std::abs(pt.pphi) < 0.05) pt.pphi += 0.2;
    if (requireBound && observableValue(ObservableId::H, pt, sys).real() > -0.05) continue;
    return pt;
  }
}

void record(VerificationReport& report, std::string name, double residual, double tol) {
  report.checks.push_back({std::move(name), residual, tol, residual <= tol});
}

double modSq(ObservableId id, const PhasePoint& pt, const SystemKind& sys) {
  return std::norm(observableValue(id, pt, sys));
}

Complex fdBracket(ObservableId f, ObservableId g, const PhasePoint& pt,
                  const SystemKind& sys) {
  return poissonBracketFD(observableFn(f, sys, pt), observableFn(g, sys, pt), pt, kFdStep);
}

void moduliChecks(VerificationReport& report, const SystemKind& sys,
                  const ClassicalVerifyOptions& opts, std::mt19937_64& rng) {
  const bool ho = sys.tag == SystemKind::Tag::Ho;
  double azimuthal = 0.0, polarShift = 0.0, polarLadder = 0.0;
  double radialShift = 0.0, radialLadder = 0.0;
  for (int it = 0; it < opts.samples; ++it) {
    // Radial moduli for Kepler need a bound, non-degenerate point.
    const PhasePoint pt = samplePoint(rng, sys, !ho);
    const double H = observableValue(ObservableId::H, pt, sys).real();
    const double L2 = observableValue(ObservableId::L2, pt, sys).real();
    const double m2 = pt.pphi * pt.pphi;
    const double ell = std::sqrt(L2);

    auto rel = [](double got, double want) {
      return std::abs(got - want) / std::max(1.0, std::abs(want));
    };

    azimuthal = std::max(azimuthal, rel(modSq(ObservableId::LPhiPlus, pt, sys), 1.0));
    polarShift = std::max(polarShift, rel(modSq(ObservableId::SigmaThetaPlus, pt, sys), L2 - m2));
    polarShift = std::max(polarShift, rel(modSq(ObservableId::APlus, pt, sys), L2 - m2));
    polarLadder =
        std::max(polarLadder, rel(modSq(ObservableId::LambdaThetaPlus, pt, sys), L2 - m2));
    if (ho) {
      radialShift = std::max(radialShift,
                             rel(modSq(ObservableId::HoAPlus, pt, sys), H + sys.param * ell));
      radialShift = std::max(radialShift,
                             rel(modSq(ObservableId::HoBPlus, pt, sys), H - sys.param * ell));
      radialLadder = std::max(
          radialLadder, rel(modSq(ObservableId::LambdaRPlus, pt, sys),
                            H * H - sys.param * sys.param * L2));
    } else {
      radialShift = std::max(
          radialShift, rel(modSq(ObservableId::SigmaRPlus, pt, sys),
                           H + sys.param * sys.param / (4.0 * L2)));
      radialLadder = std::max(
          radialLadder, rel(modSq(ObservableId::LambdaRPlus, pt, sys),
                            sys.param * sys.param / (4.0 * -H) - L2));
    }
  }
  record(report, "|l+-_phi| = 1", azimuthal, opts.moduliTol);
  record(report, "|sigma+-_theta|^2 = |A+-|^2 = L^2 - L_z^2", polarShift, opts.moduliTol);
  record(report, "|lambda+-_theta|^2 = L^2 - L_z^2", polarLadder, opts.moduliTol);
  record(report,
         ho ? "|a+|^2 = H + omega l, |b+|^2 = H - omega l"
            : "|sigma+_r|^2 = H + k^2/(4 L^2)",
         radialShift, opts.moduliTol);
  record(report,
         ho ? "|lambda+-_r|^2 = H^2 - omega^2 L^2"
            : "|lambda+-_r|^2 = k^2/(4(-H)) - L^2",
         radialLadder, opts.moduliTol);
}

void bracketChecks(VerificationReport& report, const SystemKind& sys,
                   const ClassicalVerifyOptions& opts, std::mt19937_64& rng) {
  const bool ho = sys.tag == SystemKind::Tag::Ho;
  double azimuthal = 0.0, polarLadder = 0.0, radialShift = 0.0, radialLadder = 0.0;
  double mutual = 0.0, sBracket = 0.0;
  for (int it = 0; it < opts.samples; ++it) {
    const PhasePoint pt = samplePoint(rng, sys, !ho);
    const double H = observableValue(ObservableId::H, pt, sys).real();
    const double ell = std::sqrt(observableValue(ObservableId::L2, pt, sys).real());

    auto rel = [](Complex got, Complex want) {
      return std::abs(got - want) / (1.0 + std::abs(want));
    };

    // {L_z, l+-_phi} = -+ i l+-_phi
    const Complex lphi = observableValue(ObservableId::LPhiPlus, pt, sys);
    azimuthal = std::max(
        azimuthal, rel(fdBracket(ObservableId::Lz, ObservableId::LPhiPlus, pt, sys),
                       Complex(0.0, -1.0) * lphi));

    // {sqrt(L^2), lambda+-_theta} = -+ i lambda+-_theta
    const Complex lth = observableValue(ObservableId::LambdaThetaPlus, pt, sys);
    polarLadder = std::max(
        polarLadder, rel(fdBracket(ObservableId::SqrtL2, ObservableId::LambdaThetaPlus, pt, sys),
                         Complex(0.0, -1.0) * lth));

    // {H, sigma+-_r} = +- i (c l / r^2) sigma+-_r, c = 2 (KC) or 4 (HO)
    const Complex sr = observableValue(ObservableId::SigmaRPlus, pt, sys);
    const double c = ho ? 4.0 : 2.0;
    radialShift = std::max(
        radialShift, rel(fdBracket(ObservableId::H, ObservableId::SigmaRPlus, pt, sys),
                         Complex(0.0, c * ell / (pt.r * pt.r)) * sr));

    // {H, lambda+-_r} = -+ i a lambda+-_r with a = 2 omega (HO), 4(-H)^{3/2}/k (KC)
    const Complex lr = observableValue(ObservableId::LambdaRPlus, pt, sys);
    const double a = ho ? 2.0 * sys.param : 4.0 * std::pow(-H, 1.5) / sys.param;
    radialLadder = std::max(
        radialLadder, rel(fdBracket(ObservableId::H, ObservableId::LambdaRPlus, pt, sys),
                          Complex(0.0, -a) * lr));

    if (!ho) {
      // {lambda+_r, lambda-_r} = i k / sqrt(-H)
      mutual = std::max(
          mutual,
          std::abs(fdBracket(ObservableId::LambdaRPlus, ObservableId::LambdaRMinus, pt, sys) -
                   Complex(0.0, sys.param / std::sqrt(-H))));
    }

    // {sqrt(L^2), S+-} = -+ c i S+- with c = 2 (HO, squared polar factor), 1 (KC);
    // S+- also commutes with H.
    const Complex S = observableValue(ObservableId::SPlus, pt, sys);
    const double cs = ho ? 2.0 : 1.0;
    sBracket = std::max(
        sBracket, rel(fdBracket(ObservableId::SqrtL2, ObservableId::SPlus, pt, sys),
                      Complex(0.0, -cs) * S));
    sBracket = std::max(sBracket,
                        std::abs(fdBracket(ObservableId::H, ObservableId::SPlus, pt, sys)) /
                            (1.0 + std::abs(S)));
  }
  record(report, "{L_z, l+_phi} = -i l+_phi", azimuthal, opts.bracketTol);
  record(report, "{sqrt(L^2), lambda+_theta} = -i lambda+_theta", polarLadder, opts.bracketTol);
  record(report, "{H, sigma+_r} shift bracket", radialShift, opts.bracketTol);
  record(report, "{H, lambda+_r} ladder bracket", radialLadder, opts.bracketTol);
  if (!ho)
    record(report, "{lambda+_r, lambda-_r} = i k / sqrt(-H)", mutual, 1e-5);
  record(report, "{sqrt(L^2), S+} and {H, S+} = 0", sBracket, opts.bracketTol);

  // Polynomial constants of motion commute with H along random points.
  double poly = 0.0;
  for (int it = 0; it < opts.samples / 4; ++it) {
    const PhasePoint pt = samplePoint(rng, sys, !ho);
    for (ObservableId id : {ObservableId::Xsym, ObservableId::Xanti}) {
      const Complex x = observableValue(id, pt, sys);
      const double hval = std::abs(observableValue(ObservableId::H, pt, sys));
      poly = std::max(poly, std::abs(fdBracket(ObservableId::H, id, pt, sys)) /
                                ((1.0 + hval) * (1.0 + std::abs(x))));
    }
  }
  record(report, "{H, X_sym} = {H, X_anti} = 0", poly, 1e-7);
}

}  // namespace

VerificationReport verifyClassical(const SystemKind& sys, const ClassicalVerifyOptions& opts) {
  VerificationReport report;
  std::mt19937_64 rng(opts.seed);
  moduliChecks(report, sys, opts, rng);
  bracketChecks(report, sys, opts, rng);
  return report;
}

}  // namespace symfact
