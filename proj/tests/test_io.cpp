#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "symfact/json_io.hpp"
#include "symfact/qm_radial_ho.hpp"

using namespace symfact;

TEST_CASE("function serialization carries the full representation") {
  const RadialFunction f{Rational(3, 2), {Complex(1.0, -2.0), Complex(0.5, 0.0)}, -0.25, -0.1};
  const Json j = toJson(f);
  CHECK(j["s"] == "3/2");
  CHECK(j["alpha"] == doctest::Approx(-0.25));
  CHECK(j["beta"] == doctest::Approx(-0.1));
  REQUIRE(j["coeffs"].size() == 2);
  CHECK(j["coeffs"][0][0] == doctest::Approx(1.0));
  CHECK(j["coeffs"][0][1] == doctest::Approx(-2.0));

  const AngularFunction g{2, {Complex(0.0, 1.0)}};
  const Json ja = toJson(g);
  CHECK(ja["a"] == 2);
  CHECK(ja["coeffs"][0][1] == doctest::Approx(1.0));

  const SeparatedState st = buildState(2, 2, 1, HoParams{1.0});
  const Json js = toJson(st);
  CHECK(js["n"] == 2);
  CHECK(js["l"] == 2);
  CHECK(js["m"] == 1);
  CHECK(js["radial"]["coeffs"].size() == st.radial.coeffs().size());
}

TEST_CASE("verification report envelope is schema versioned") {
  VerificationReport report;
  report.checks.push_back({"sample check", 1e-12, 1e-10, true});
  const Json j = reportJson("quantum", report);
  CHECK(j["schema"] == "1");
  CHECK(j["suite"] == "quantum");
  CHECK(j["pass"] == true);
  CHECK(j["checks"][0]["name"] == "sample check");
  CHECK(j["checks"][0]["pass"] == true);
}

TEST_CASE("orbit CSV round trip preserves the phase-space columns") {
  const SystemKind kc = SystemKind::kc(1.0);
  const PhasePoint pt{1.4, 0.25, 1.0, 0.35, 0.3, 0.5};
  const Trajectory traj = hamiltonFlow(pt, kc, 1.0);

  std::stringstream buffer;
  writeOrbitCsv(buffer, traj);

  const std::string header = buffer.str().substr(0, buffer.str().find('\n'));
  CHECK(header == "t,r,p_r,theta,p_theta,phi,p_phi,H,L2,Lz,Xsym,Xanti");

  const Trajectory back = readOrbitCsv(buffer, kc);
  REQUIRE(back.samples.size() == traj.samples.size());
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    CHECK(back.samples[i].t == traj.samples[i].t);
    CHECK(back.samples[i].pt.r == traj.samples[i].pt.r);
    CHECK(back.samples[i].pt.pphi == traj.samples[i].pt.pphi);
  }
  CHECK(back.dt == doctest::Approx(traj.dt));

  std::stringstream bad("not,a,header\n1,2,3\n");
  CHECK_THROWS_AS(readOrbitCsv(bad, kc), std::runtime_error);
}
