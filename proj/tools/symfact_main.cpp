#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symfact/json_io.hpp"
#include "symfact/qm_angular.hpp"
#include "symfact/qm_radial_ho.hpp"
#include "symfact/qm_radial_kc.hpp"
#include "symfact/verify.hpp"

namespace {

using namespace symfact;

unsigned long long effectiveSeed(unsigned long long cliSeed) {
  if (const char* env = std::getenv("SUPERFACTOR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("SUPERFACTOR_SEED", "must be a non-negative integer");
    }
  }
  return cliSeed;
}

SystemKind makeSystem(const std::string& name, double omega, double k) {
  if (name == "ho") return SystemKind::ho(omega);
  if (name == "kc") return SystemKind::kc(k);
  throw CLI::ValidationError("--system", "must be ho or kc");
}

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << j.dump(2) << '\n';
}

PhasePoint parseInit(const std::string& text) {
  std::istringstream in(text);
  PhasePoint pt;
  double* fields[6] = {&pt.r, &pt.pr, &pt.theta, &pt.ptheta, &pt.phi, &pt.pphi};
  char comma = ',';
  for (int i = 0; i < 6; ++i) {
    if (!(in >> *fields[i]))
      throw CLI::ValidationError("--init", "expected r,pr,theta,ptheta,phi,pphi");
    if (i < 5) in >> comma;
  }
  return pt;
}

int runVerifyQuantum(const SystemKind& sys, const QuantumVerifyOptions& opts,
                     const std::string& outPath) {
  const VerificationReport report = verifyQuantum(sys, opts);
  emit(reportJson("quantum", report), outPath);
  return report.allPass() ? 0 : 1;
}

int runVerifyClassical(const SystemKind& sys, const ClassicalVerifyOptions& opts,
                       const std::string& outPath) {
  const VerificationReport report = verifyClassical(sys, opts);
  emit(reportJson("classical", report), outPath);
  return report.allPass() ? 0 : 1;
}

int runSpectrumHo(double omega, int nmax, const std::string& outPath) {
  const HoParams p{omega};
  Json rows = Json::array();
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n)
    for (int l = n % 2; l <= n; l += 2) {
      const SeparatedState st = buildState(n, l, 0, p);
      const double resid = maxRelDiff(applyHl(st.radial, l, p), Complex(energy(n, p)) * st.radial);
      worst = std::max(worst, resid);
      rows.push_back(Json{{"n", n}, {"l", l}, {"E", energy(n, p)}, {"residual", resid}});
    }
  Json j{{"schema", "1"}, {"system", "ho"}, {"omega", omega}, {"levels", rows}};
  emit(j, outPath);
  return worst <= 1e-10 ? 0 : 1;
}

int runSpectrumKc(double k, int nmax, const std::string& outPath) {
  const KcParams p{k};
  Json rows = Json::array();
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    double resid = 0.0;
    int degeneracy = 0;
    for (int l = 0; l <= n; ++l) {
      const SeparatedState st = buildState(n, l, 0, p);
      for (int m = -l; m <= l; ++m) ++degeneracy;
      const auto ratio = radialProportional(applyHl(st.radial, l, p), st.radial, 1e-6);
      resid = std::max(resid, ratio ? std::abs(*ratio - Complex(energy(n, p))) /
                                          std::abs(energy(n, p))
                                    : 1.0);
    }
    worst = std::max(worst, resid);
    rows.push_back(Json{{"n", n},
                        {"E", energy(n, p)},
                        {"residual", resid},
                        {"degeneracy", degeneracy}});
  }
  Json j{{"schema", "1"}, {"system", "kc"}, {"k", k}, {"levels", rows}};
  emit(j, outPath);
  return worst <= 1e-10 ? 0 : 1;
}

int runHarmonics(int lmax, const std::string& outPath) {
  Json rows = Json::array();
  double worst = 0.0;
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) {
      const AngularPair ylm = buildSphericalHarmonic(l, m, true);
      const AngularFunction resid =
          applyL2m(ylm.theta, m) - Complex(static_cast<double>(l) * (l + 1)) * ylm.theta;
      const double rel = resid.maxCoeffMagnitude() /
                         (std::max(1.0, static_cast<double>(l) * (l + 1)) *
                          ylm.theta.maxCoeffMagnitude());
      worst = std::max(worst, rel);
      rows.push_back(Json{{"l", l}, {"m", m}, {"theta", toJson(ylm.theta)}, {"residual", rel}});
    }
  Json j{{"schema", "1"}, {"lmax", lmax}, {"harmonics", rows}};
  emit(j, outPath);
  return worst <= 1e-12 ? 0 : 1;
}

int runOrbit(const SystemKind& sys, const PhasePoint& init, double time, double dt,
             double tol, const std::string& outPath, const std::string& reportPath) {
  IntegratorControls ctrl;
  ctrl.dt = dt;
  ctrl.tolerance = tol;
  const Trajectory traj = hamiltonFlow(init, sys, time, ctrl);
  if (outPath.empty()) {
    writeOrbitCsv(std::cout, traj);
  } else {
    std::ofstream out(outPath);
    if (!out) throw std::runtime_error("cannot open output file: " + outPath);
    writeOrbitCsv(out, traj);
  }
  const DriftReport drift =
      driftReport(traj, {ObservableId::H, ObservableId::L2, ObservableId::Lz,
                         ObservableId::Xsym, ObservableId::Xanti});
  Json entries = Json::array();
  bool ok = true;
  for (const auto& e : drift.entries) {
    entries.push_back(Json{{"initial", e.initial}, {"maxRelDrift", e.maxRelDrift}});
    ok = ok && e.maxRelDrift <= 1e-8;
  }
  const Json j{{"schema", "1"}, {"dt", traj.dt}, {"drift", entries}};
  if (reportPath.empty() && outPath.empty())
    std::cerr << j.dump(2) << '\n';
  else
    emit(j, reportPath.empty() ? outPath + ".drift.json" : reportPath);
  return ok ? 0 : 1;
}

int runActions(const SystemKind& sys, const std::string& orbitPath,
               const std::string& outPath) {
  std::ifstream in(orbitPath);
  if (!in) throw std::runtime_error("cannot open orbit CSV: " + orbitPath);
  const Trajectory traj = readOrbitCsv(in, sys);
  if (traj.samples.size() < 2)
    throw std::runtime_error("orbit CSV holds fewer than two samples");

  const std::vector<double> xiPhi = unwrapAlong(traj, 0);
  const std::vector<double> xiTheta = unwrapAlong(traj, 1);
  const std::vector<double> xiR = unwrapAlong(traj, 2);
  Json rows = Json::array();
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const ActionAngleSet aa = actionsOnly(traj.samples[i].pt, sys);
    rows.push_back(Json{{"t", traj.samples[i].t},
                        {"J_phi", aa.Jphi},
                        {"J_theta", aa.Jtheta},
                        {"J_r", aa.Jr},
                        {"xi_phi", xiPhi[i]},
                        {"xi_theta", xiTheta[i]},
                        {"xi_r", xiR[i]}});
  }
  const SlopeFit fit = fitSlope(traj, xiR);
  const Json j{{"schema", "1"},
               {"series", rows},
               {"xi_r_fit", Json{{"slope", fit.slope}, {"maxResidual", fit.maxResidual}}}};
  emit(j, outPath);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorization-method symmetries of the 3D oscillator and Kepler problem"};
  app.require_subcommand(1);

  std::string system = "ho", outPath, reportPath, initText = "1,0,1.5707963267948966,0,0,1";
  std::string orbitPath;
  double omega = 1.0, k = 1.0, time = 10.0, dt = 1e-2, hTol = 1e-9;
  int lmax = 4, nmax = 6, samples = 200;
  unsigned long long seed = 7;

  auto* verify = app.add_subcommand("verify", "Run an identity verification suite");
  verify->require_subcommand(1);
  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--system", system, "System: ho or kc")->capture_default_str();
    cmd->add_option("--omega", omega, "Oscillator frequency")->check(CLI::PositiveNumber);
    cmd->add_option("--k", k, "Coulomb strength")->check(CLI::PositiveNumber);
    cmd->add_option("--out", outPath, "Write JSON here instead of stdout");
  };
  auto* vq = verify->add_subcommand("quantum", "Quantum operator identities");
  addCommon(vq);
  vq->add_option("--lmax", lmax, "Angular momentum range")->capture_default_str();
  vq->add_option("--nmax", nmax, "Principal quantum number range")->capture_default_str();
  vq->add_option("--samples", samples, "Random functions per identity")->capture_default_str();
  vq->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* vc = verify->add_subcommand("classical", "Classical moduli and Poisson brackets");
  addCommon(vc);
  vc->add_option("--samples", samples, "Random phase-space points")->capture_default_str();
  vc->add_option("--seed", seed, "RNG seed")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Exact spectrum with residuals");
  spectrum->require_subcommand(1);
  auto* sho = spectrum->add_subcommand("ho", "Oscillator levels");
  sho->add_option("--omega", omega, "Frequency")->check(CLI::PositiveNumber);
  sho->add_option("--nmax", nmax, "Highest level")->capture_default_str();
  sho->add_option("--out", outPath, "Write JSON here instead of stdout");
  auto* skc = spectrum->add_subcommand("kc", "Kepler-Coulomb levels");
  skc->add_option("--k", k, "Coulomb strength")->check(CLI::PositiveNumber);
  skc->add_option("--nmax", nmax, "Highest level")->capture_default_str();
  skc->add_option("--out", outPath, "Write JSON here instead of stdout");

  auto* harm = app.add_subcommand("harmonics", "Generate spherical harmonics");
  harm->add_option("--lmax", lmax, "Highest degree")->capture_default_str();
  harm->add_option("--out", outPath, "Write JSON here instead of stdout");

  auto* orbit = app.add_subcommand("orbit", "Integrate a bound orbit to CSV");
  orbit->add_option("--system", system, "System: ho or kc")->capture_default_str();
  orbit->add_option("--omega", omega, "Oscillator frequency")->check(CLI::PositiveNumber);
  orbit->add_option("--k", k, "Coulomb strength")->check(CLI::PositiveNumber);
  orbit->add_option("--init", initText, "r,pr,theta,ptheta,phi,pphi")->capture_default_str();
  orbit->add_option("--time", time, "Integration time")->check(CLI::PositiveNumber);
  orbit->add_option("--dt", dt, "Base step")->check(CLI::PositiveNumber);
  orbit->add_option("--tol", hTol, "Relative H drift contract")->check(CLI::PositiveNumber);
  orbit->add_option("--out", outPath, "CSV path (default stdout)");
  orbit->add_option("--report", reportPath, "Drift JSON path");

  auto* actions = app.add_subcommand("actions", "Action-angle series for an orbit CSV");
  actions->add_option("--system", system, "System: ho or kc")->capture_default_str();
  actions->add_option("--omega", omega, "Oscillator frequency")->check(CLI::PositiveNumber);
  actions->add_option("--k", k, "Coulomb strength")->check(CLI::PositiveNumber);
  actions->add_option("--orbit", orbitPath, "Input orbit CSV")->required();
  actions->add_option("--out", outPath, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (vq->parsed()) {
      QuantumVerifyOptions opts;
      opts.lmax = lmax;
      opts.nmax = nmax;
      opts.samples = std::min(samples, 200);
      opts.seed = effectiveSeed(seed);
      return runVerifyQuantum(makeSystem(system, omega, k), opts, outPath);
    }
    if (vc->parsed()) {
      ClassicalVerifyOptions opts;
      opts.samples = samples;
      opts.seed = effectiveSeed(seed);
      return runVerifyClassical(makeSystem(system, omega, k), opts, outPath);
    }
    if (sho->parsed()) return runSpectrumHo(omega, nmax, outPath);
    if (skc->parsed()) return runSpectrumKc(k, nmax, outPath);
    if (harm->parsed()) return runHarmonics(lmax, outPath);
    if (orbit->parsed())
      return runOrbit(makeSystem(system, omega, k), parseInit(initText), time, dt, hTol,
                      outPath, reportPath);
    if (actions->parsed())
      return runActions(makeSystem(system, omega, k), orbitPath, outPath);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
