#include "symfact/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace symfact {

namespace {

constexpr Complex kI{0.0, 1.0};

CDual constant(Complex c) { return {c, {}}; }

CDual coordinate(double value, int slot) {
  CDual out{Complex(value), {}};
  out.d[static_cast<std::size_t>(slot)] = 1.0;
  return out;
}

CDual operator+(const CDual& a, const CDual& b) {
  CDual out{a.v + b.v, a.d};
  for (int i = 0; i < 6; ++i) out.d[i] += b.d[i];
  return out;
}

CDual operator-(const CDual& a, const CDual& b) {
  CDual out{a.v - b.v, a.d};
  for (int i = 0; i < 6; ++i) out.d[i] -= b.d[i];
  return out;
}

CDual operator*(const CDual& a, const CDual& b) {
  CDual out{a.v * b.v, {}};
  for (int i = 0; i < 6; ++i) out.d[i] = a.d[i] * b.v + a.v * b.d[i];
  return out;
}

CDual operator/(const CDual& a, const CDual& b) {
  CDual out{a.v / b.v, {}};
  for (int i = 0; i < 6; ++i) out.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / (b.v * b.v);
  return out;
}

CDual operator*(Complex c, const CDual& a) {
  CDual out{c * a.v, {}};
  for (int i = 0; i < 6; ++i) out.d[i] = c * a.d[i];
  return out;
}

CDual operator+(Complex c, const CDual& a) { return constant(c) + a; }
CDual operator-(Complex c, const CDual& a) { return constant(c) - a; }
CDual operator-(const CDual& a, Complex c) { return a - constant(c); }

CDual sinD(const CDual& a) {
  CDual out{std::sin(a.v), {}};
  const Complex c = std::cos(a.v);
  for (int i = 0; i < 6; ++i) out.d[i] = c * a.d[i];
  return out;
}

CDual cosD(const CDual& a) {
  CDual out{std::cos(a.v), {}};
  const Complex s = -std::sin(a.v);
  for (int i = 0; i < 6; ++i) out.d[i] = s * a.d[i];
  return out;
}

CDual expD(const CDual& a) {
  CDual out{std::exp(a.v), {}};
  for (int i = 0; i < 6; ++i) out.d[i] = out.v * a.d[i];
  return out;
}

CDual sqrtD(const CDual& a) {
  CDual out{std::sqrt(a.v), {}};
  const Complex half = 0.5 / out.v;
  for (int i = 0; i < 6; ++i) out.d[i] = half * a.d[i];
  return out;
}

CDual sq(const CDual& a) { return a * a; }

struct Coords {
  CDual r, pr, theta, ptheta, phi, pphi;
};

Coords liftPoint(const PhasePoint& pt) {
  return {coordinate(pt.r, 0),     coordinate(pt.pr, 1),  coordinate(pt.theta, 2),
          coordinate(pt.ptheta, 3), coordinate(pt.phi, 4), coordinate(pt.pphi, 5)};
}

CDual evalL2(const Coords& c) { return sq(c.ptheta) + sq(c.pphi) / sq(sinD(c.theta)); }

CDual evalH(const Coords& c, const SystemKind& sys) {
  const CDual kinetic = sq(c.pr) + evalL2(c) / sq(c.r);
  if (sys.tag == SystemKind::Tag::Ho)
    return kinetic + Complex(sys.param * sys.param / 4.0) * sq(c.r);
  return kinetic - constant(Complex(sys.param)) / c.r;
}

// sigma^{sign}_theta = sign * i p_theta - p_phi cot(theta)
CDual evalSigmaTheta(const Coords& c, int sign) {
  return (double(sign) * kI) * c.ptheta - c.pphi * cosD(c.theta) / sinD(c.theta);
}

// lambda^{sign}_{l,theta} = sign * i sin(theta) p_theta + l cos(theta)
CDual evalLambdaTheta(const Coords& c, int sign, double ell) {
  return (double(sign) * kI) * sinD(c.theta) * c.ptheta + Complex(ell) * cosD(c.theta);
}

// a^{sign}_l = -sign * i p_r + l/r + (w/2) r ; b with -(w/2) r
CDual evalHoFactor(const Coords& c, int sign, bool isA, double ell, double omega) {
  const double vSign = isA ? +1.0 : -1.0;
  return (-double(sign) * kI) * c.pr + constant(Complex(ell)) / c.r +
         Complex(vSign * omega / 2.0) * c.r;
}

CDual evalSigmaR(const Coords& c, int sign, const SystemKind& sys, double ell) {
  if (sys.tag == SystemKind::Tag::Ho)
    return evalHoFactor(c, sign, false, ell, sys.param) *
           evalHoFactor(c, sign, true, ell, sys.param);
  return (-double(sign) * kI) * c.pr + constant(Complex(ell)) / c.r -
         constant(Complex(sys.param / (2.0 * ell)));
}

CDual evalLambdaR(const Coords& c, int sign, const SystemKind& sys, const FrozenParams& fr) {
  if (sys.tag == SystemKind::Tag::Ho)
    return evalHoFactor(c, sign, true, fr.ell, sys.param) *
           evalHoFactor(c, -sign, false, fr.ell, sys.param);
  if (fr.energy >= 0.0)
    throw std::domain_error("lambda_r (Kepler) requires a bound point (H < 0)");
  // sqrt(-H) enters as a live phase-space function; the mutual bracket
  // {lambda+, lambda-} = i k / sqrt(-H) closes only with its H-dependence
  // differentiated (the extra terms cancel in every bracket against H itself).
  const CDual rootE = sqrtD(Complex(-1.0) * evalH(c, sys));
  const CDual pre = (-double(sign) * kI) * c.r * c.pr + rootE * c.r -
                    constant(Complex(sys.param / 2.0)) / rootE;
  const CDual phase =
      expD((-double(sign) * 2.0 * kI / sys.param) * c.r * c.pr * rootE);
  return pre * phase;
}

struct Cartesian {
  CDual x, y, z, px, py, pz;
};

Cartesian cartesianOf(const Coords& c) {
  const CDual st = sinD(c.theta), ct = cosD(c.theta);
  const CDual sp = sinD(c.phi), cp = cosD(c.phi);
  Cartesian out;
  out.x = c.r * st * cp;
  out.y = c.r * st * sp;
  out.z = c.r * ct;
  const CDual pTheta = c.ptheta / c.r;           // theta-hat component
  const CDual pPhi = c.pphi / (c.r * st);        // phi-hat component
  out.px = c.pr * st * cp + pTheta * ct * cp - pPhi * sp;
  out.py = c.pr * st * sp + pTheta * ct * sp + pPhi * cp;
  out.pz = c.pr * ct - pTheta * st;
  return out;
}

CDual angularMomentum(const Cartesian& q, int axis) {
  switch (axis) {
    case 0: return q.y * q.pz - q.z * q.py;
    case 1: return q.z * q.px - q.x * q.pz;
    default: return q.x * q.py - q.y * q.px;
  }
}

CDual fradkin(const Cartesian& q, int i, int j, double omega) {
  const CDual* xs[3] = {&q.x, &q.y, &q.z};
  const CDual* ps[3] = {&q.px, &q.py, &q.pz};
  return (*ps[i]) * (*ps[j]) + Complex(omega * omega / 4.0) * (*xs[i]) * (*xs[j]);
}

// Runge-Lenz A = p x L - (k/2) r-hat
CDual rungeLenz(const Coords& c, const Cartesian& q, int axis, double k) {
  const CDual L[3] = {angularMomentum(q, 0), angularMomentum(q, 1), angularMomentum(q, 2)};
  const CDual p[3] = {q.px, q.py, q.pz};
  const CDual x[3] = {q.x, q.y, q.z};
  const int i = (axis + 1) % 3, j = (axis + 2) % 3;
  return p[i] * L[j] - p[j] * L[i] - Complex(k / 2.0) * x[axis] / c.r;
}

CDual evalImpl(ObservableId id, const Coords& c, const SystemKind& sys,
               const FrozenParams& fr) {
  const bool ho = sys.tag == SystemKind::Tag::Ho;
  switch (id) {
    case ObservableId::H: return evalH(c, sys);
    case ObservableId::L2: return evalL2(c);
    case ObservableId::Lz: return c.pphi;
    case ObservableId::SqrtL2: return sqrtD(evalL2(c));
    case ObservableId::LPhiPlus: return expD(kI * c.phi);
    case ObservableId::LPhiMinus: return expD(-kI * c.phi);
    case ObservableId::SigmaThetaPlus: return evalSigmaTheta(c, +1);
    case ObservableId::SigmaThetaMinus: return evalSigmaTheta(c, -1);
    case ObservableId::APlus: return expD(kI * c.phi) * evalSigmaTheta(c, +1);
    case ObservableId::AMinus: return expD(-kI * c.phi) * evalSigmaTheta(c, -1);
    case ObservableId::LambdaThetaPlus: return evalLambdaTheta(c, +1, fr.ell);
    case ObservableId::LambdaThetaMinus: return evalLambdaTheta(c, -1, fr.ell);
    case ObservableId::HoAPlus: return evalHoFactor(c, +1, true, fr.ell, sys.param);
    case ObservableId::HoAMinus: return evalHoFactor(c, -1, true, fr.ell, sys.param);
    case ObservableId::HoBPlus: return evalHoFactor(c, +1, false, fr.ell, sys.param);
    case ObservableId::HoBMinus: return evalHoFactor(c, -1, false, fr.ell, sys.param);
    case ObservableId::SigmaRPlus: return evalSigmaR(c, +1, sys, fr.ell);
    case ObservableId::SigmaRMinus: return evalSigmaR(c, -1, sys, fr.ell);
    case ObservableId::LambdaRPlus: return evalLambdaR(c, +1, sys, fr);
    case ObservableId::LambdaRMinus: return evalLambdaR(c, -1, sys, fr);
    case ObservableId::SPlus: {
      const CDual lam = evalLambdaTheta(c, +1, fr.ell);
      const CDual sig = evalSigmaR(c, +1, sys, fr.ell);
      return ho ? sig * sq(lam) : sig * lam;
    }
    case ObservableId::SMinus: {
      const CDual lam = evalLambdaTheta(c, -1, fr.ell);
      const CDual sig = evalSigmaR(c, -1, sys, fr.ell);
      return ho ? sig * sq(lam) : sig * lam;
    }
    case ObservableId::Xsym: {
      if (!ho) return rungeLenz(c, cartesianOf(c), 2, sys.param);
      const CDual l2 = evalL2(c);
      return (l2 - sq(c.pphi)) * evalH(c, sys) -
             Complex(2.0) * l2 * fradkin(cartesianOf(c), 2, 2, sys.param);
    }
    case ObservableId::Xanti: {
      const Cartesian q = cartesianOf(c);
      const CDual lx = angularMomentum(q, 0), ly = angularMomentum(q, 1);
      if (!ho) return lx * rungeLenz(c, q, 1, sys.param) - ly * rungeLenz(c, q, 0, sys.param);
      return Complex(2.0) * (lx * fradkin(q, 1, 2, sys.param) - ly * fradkin(q, 2, 0, sys.param));
    }
    case ObservableId::Qxx: return fradkin(cartesianOf(c), 0, 0, sys.param);
    case ObservableId::Qyy: return fradkin(cartesianOf(c), 1, 1, sys.param);
    case ObservableId::Qzz: return fradkin(cartesianOf(c), 2, 2, sys.param);
    case ObservableId::Qxy: return fradkin(cartesianOf(c), 0, 1, sys.param);
    case ObservableId::Qyz: return fradkin(cartesianOf(c), 1, 2, sys.param);
    case ObservableId::Qzx: return fradkin(cartesianOf(c), 2, 0, sys.param);
    case ObservableId::Ax: return rungeLenz(c, cartesianOf(c), 0, sys.param);
    case ObservableId::Ay: return rungeLenz(c, cartesianOf(c), 1, sys.param);
    case ObservableId::Az: return rungeLenz(c, cartesianOf(c), 2, sys.param);
  }
  throw std::invalid_argument("unknown observable id");
}

void checkPoint(const PhasePoint& pt) {
  if (!(pt.r > 0.0)) throw std::domain_error("phase point requires r > 0");
  if (!(pt.theta > 0.0) || !(pt.theta < 3.141592653589793))
    throw std::domain_error("phase point requires theta strictly inside (0, pi)");
}

}  // namespace

FrozenParams freezeAt(const PhasePoint& pt, const SystemKind& sys) {
  checkPoint(pt);
  const Coords c = liftPoint(pt);
  return {std::sqrt(evalL2(c).v.real()), evalH(c, sys).v.real()};
}

CDual evalObservable(ObservableId id, const PhasePoint& pt, const SystemKind& sys,
                     const FrozenParams& frozen) {
  checkPoint(pt);
  return evalImpl(id, liftPoint(pt), sys, frozen);
}

Complex observableValue(ObservableId id, const PhasePoint& pt, const SystemKind& sys) {
  return evalObservable(id, pt, sys, freezeAt(pt, sys)).v;
}

std::array<Complex, 6> analyticGradient(ObservableId id, const PhasePoint& pt,
                                        const SystemKind& sys) {
  return evalObservable(id, pt, sys, freezeAt(pt, sys)).d;
}

Complex poissonBracket(const CDual& f, const CDual& g) {
  Complex out = 0.0;
  for (int q = 0; q < 6; q += 2) out += f.d[q] * g.d[q + 1] - f.d[q + 1] * g.d[q];
  return out;
}

Complex poissonBracket(ObservableId f, ObservableId g, const PhasePoint& pt,
                       const SystemKind& sys) {
  const FrozenParams fr = freezeAt(pt, sys);
  return poissonBracket(evalObservable(f, pt, sys, fr), evalObservable(g, pt, sys, fr));
}

PhaseFn observableFn(ObservableId id, const SystemKind& sys, const PhasePoint& freezeBase) {
  const FrozenParams fr = freezeAt(freezeBase, sys);
  return [id, sys, fr](const PhasePoint& pt) { return evalObservable(id, pt, sys, fr).v; };
}

namespace {

double& slot(PhasePoint& pt, int i) {
  switch (i) {
    case 0: return pt.r;
    case 1: return pt.pr;
    case 2: return pt.theta;
    case 3: return pt.ptheta;
    case 4: return pt.phi;
    default: return pt.pphi;
  }
}

std::array<Complex, 6> gradFDStep(const PhaseFn& f, const PhasePoint& pt, double h) {
  std::array<Complex, 6> g{};
  for (int i = 0; i < 6; ++i) {
    PhasePoint plus = pt, minus = pt;
    slot(plus, i) += h;
    slot(minus, i) -= h;
    g[i] = (f(plus) - f(minus)) / (2.0 * h);
  }
  return g;
}

Complex bracketFDStep(const PhaseFn& f, const PhaseFn& g, const PhasePoint& pt, double h) {
  const auto gf = gradFDStep(f, pt, h);
  const auto gg = gradFDStep(g, pt, h);
  Complex out = 0.0;
  for (int q = 0; q < 6; q += 2) out += gf[q] * gg[q + 1] - gf[q + 1] * gg[q];
  return out;
}

void checkGuard(const PhasePoint& pt, double h) {
  if (pt.r < 10.0 * h || pt.theta < 10.0 * h || 3.141592653589793 - pt.theta < 10.0 * h)
    throw std::domain_error("finite-difference stencil too close to a coordinate singularity");
}

}  // namespace

Complex poissonBracketFD(const PhaseFn& f, const PhaseFn& g, const PhasePoint& pt, double h) {
  checkGuard(pt, h);
  const Complex coarse = bracketFDStep(f, g, pt, h);
  const Complex fine = bracketFDStep(f, g, pt, h / 2.0);
  return (4.0 * fine - coarse) / 3.0;
}

std::array<Complex, 6> gradientFD(const PhaseFn& f, const PhasePoint& pt, double h) {
  checkGuard(pt, h);
  const auto coarse = gradFDStep(f, pt, h);
  const auto fine = gradFDStep(f, pt, h / 2.0);
  std::array<Complex, 6> out{};
  for (int i = 0; i < 6; ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

std::array<double, 6> toCartesian(const PhasePoint& pt) {
  const Coords c = liftPoint(pt);
  const Cartesian q = cartesianOf(c);
  return {q.x.v.real(),  q.y.v.real(),  q.z.v.real(),
          q.px.v.real(), q.py.v.real(), q.pz.v.real()};
}

}  // namespace symfact
