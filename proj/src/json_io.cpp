#include "symfact/json_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace symfact {

namespace {

Json complexPairs(const std::vector<Complex>& cs) {
  Json arr = Json::array();
  for (const Complex& c : cs) arr.push_back(Json::array({c.real(), c.imag()}));
  return arr;
}

}  // namespace

Json toJson(const RadialFunction& f) {
  Json j;
  j["s"] = std::to_string(f.s().num) +
           (f.s().den == 1 ? std::string() : "/" + std::to_string(f.s().den));
  j["coeffs"] = complexPairs(f.coeffs());
  j["alpha"] = f.alpha();
  j["beta"] = f.beta();
  return j;
}

Json toJson(const AngularFunction& g) {
  Json j;
  j["a"] = g.sinPower();
  j["coeffs"] = complexPairs(g.poly());
  return j;
}

Json toJson(const SeparatedState& st) {
  Json j;
  j["n"] = st.n;
  j["l"] = st.l;
  j["m"] = st.m;
  j["radial"] = toJson(st.radial);
  j["angular"] = toJson(st.angular);
  return j;
}

Json toJson(const VerificationCheck& check) {
  Json j;
  j["name"] = check.name;
  j["residual"] = check.residual;
  j["tolerance"] = check.tolerance;
  j["pass"] = check.pass;
  return j;
}

Json reportJson(const std::string& suite, const VerificationReport& report) {
  Json j;
  j["schema"] = "1";
  j["suite"] = suite;
  j["pass"] = report.allPass();
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(toJson(c));
  j["checks"] = std::move(checks);
  return j;
}

void writeOrbitCsv(std::ostream& out, const Trajectory& traj) {
  out << "t,r,p_r,theta,p_theta,phi,p_phi,H,L2,Lz,Xsym,Xanti\n";
  out << std::setprecision(17);
  for (const auto& s : traj.samples) {
    const PhasePoint& p = s.pt;
    out << s.t << ',' << p.r << ',' << p.pr << ',' << p.theta << ',' << p.ptheta << ','
        << p.phi << ',' << p.pphi;
    for (ObservableId id : {ObservableId::H, ObservableId::L2, ObservableId::Lz,
                            ObservableId::Xsym, ObservableId::Xanti})
      out << ',' << observableValue(id, p, traj.system).real();
    out << '\n';
  }
}

Trajectory readOrbitCsv(std::istream& in, const SystemKind& sys) {
  Trajectory traj;
  traj.system = sys;
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,r,p_r", 0) != 0)
    throw std::runtime_error("orbit CSV: missing header row");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    TrajectorySample s;
    double* fields[7] = {&s.t,        &s.pt.r,   &s.pt.pr,  &s.pt.theta,
                         &s.pt.ptheta, &s.pt.phi, &s.pt.pphi};
    char comma = ',';
    for (int i = 0; i < 7; ++i) {
      if (!(row >> *fields[i])) throw std::runtime_error("orbit CSV: malformed row");
      if (i < 6) row >> comma;
    }
    traj.samples.push_back(s);
  }
  if (traj.samples.size() >= 2) traj.dt = traj.samples[1].t - traj.samples[0].t;
  return traj;
}

}  // namespace symfact
