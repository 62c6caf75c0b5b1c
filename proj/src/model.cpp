#include "wga/model.hpp"

#include <cmath>

#include "wga/error.hpp"

namespace wga {

namespace {

const double kSqrt2 = std::sqrt(2.0);

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, name);
}

void require_finite(cplx v, const char* name) {
  if (!finite(v)) throw Error(ErrorCode::NonFiniteValue, name);
}

}  // namespace

cplx ModelParams::V_R() const { return std::polar(std::sqrt(Gamma), phase_VR); }
cplx ModelParams::V_L() const { return std::polar(std::sqrt(Gamma), phase_VL); }

double ModelParams::G_plus() const { return std::sqrt(std::norm(g_a) + std::norm(g_b)); }

double ModelParams::theta0() const {
  if (g_a == cplx{} || g_b == cplx{}) return 0.0;
  return std::arg(g_b / g_a);
}

ModelParams validate_params(const ModelParams& raw) {
  require_finite(raw.omega_c, "omega_c");
  require_finite(raw.Omega, "Omega");
  require_finite(raw.Gamma, "Gamma");
  require_finite(raw.g_a, "g_a");
  require_finite(raw.g_b, "g_b");
  require_finite(raw.h, "h");
  require_finite(raw.gamma_a, "gamma_a");
  require_finite(raw.gamma_c, "gamma_c");
  require_finite(raw.phase_VR, "phase_VR");
  require_finite(raw.phase_VL, "phase_VL");
  if (!(raw.Gamma > 0.0))
    throw Error(ErrorCode::NonPositiveGamma, "Gamma = " + std::to_string(raw.Gamma));
  if (raw.gamma_a < 0.0) throw Error(ErrorCode::NegativeDissipation, "gamma_a < 0");
  if (raw.gamma_c < 0.0) throw Error(ErrorCode::NegativeDissipation, "gamma_c < 0");

  const double unit = raw.Gamma;
  ModelParams p = raw;
  p.omega_c /= unit;
  p.Omega /= unit;
  p.Gamma = 1.0;
  p.g_a /= unit;
  p.g_b /= unit;
  p.h /= unit;
  p.gamma_a /= unit;
  p.gamma_c /= unit;
  return p;
}

EffectiveParams lossless(const ModelParams& p) {
  return EffectiveParams{cplx{p.Omega, 0.0}, cplx{p.omega_c, 0.0}, p.Gamma, p.g_a, p.g_b, p.h,
                         p.V_R(), p.V_L()};
}

EffectiveParams apply_dissipation(const ModelParams& p) {
  EffectiveParams e = lossless(p);
  e.Omega -= kI * p.gamma_a;
  e.omega_c -= kI * p.gamma_c;
  return e;
}

Matrix3c heff1_matrix(const EffectiveParams& p) {
  const cplx a = p.alpha();
  Matrix3c m;
  m << p.Omega, p.g_a, p.g_b,
       std::conj(p.g_a), a, std::conj(p.h),
       std::conj(p.g_b), p.h, a;
  return m;
}

Matrix5c heff2_matrix(const EffectiveParams& p) {
  const cplx a = p.alpha();
  const cplx z{};
  const cplx ga = p.g_a, gb = p.g_b, h = p.h;
  const cplx gac = std::conj(ga), gbc = std::conj(gb), hc = std::conj(h);
  const double s = kSqrt2;
  Matrix5c m;
  m << 2.0 * a,  s * gac,     s * hc,  z,           z,
       s * ga,   a + p.Omega, gb,      hc,          z,
       s * h,    gbc,         2.0 * a, gac,         s * hc,
       z,        h,           ga,      a + p.Omega, s * gb,
       z,        z,           s * h,   s * gbc,     2.0 * a;
  return m;
}

EffectiveHamiltonian build_heff1(const EffectiveParams& p) {
  return {3, heff1_matrix(p), {"|e,0,0>", "|g,1,0>", "|g,0,1>"}};
}

EffectiveHamiltonian build_heff2(const EffectiveParams& p) {
  return {5, heff2_matrix(p), {"|g,2,0>", "|e,1,0>", "|g,1,1>", "|e,0,1>", "|g,0,2>"}};
}

const Eigen::Matrix<double, 5, 3>& raise_a() {
  // a^dag|e00> = |e10>, a^dag|g10> = sqrt2 |g20>, a^dag|g01> = |g11>
  static const Eigen::Matrix<double, 5, 3> m = [] {
    Eigen::Matrix<double, 5, 3> r = Eigen::Matrix<double, 5, 3>::Zero();
    r(1, 0) = 1.0;
    r(0, 1) = kSqrt2;
    r(2, 2) = 1.0;
    return r;
  }();
  return m;
}

const Eigen::Matrix<double, 5, 3>& raise_b() {
  // b^dag|e00> = |e01>, b^dag|g10> = |g11>, b^dag|g01> = sqrt2 |g02>
  static const Eigen::Matrix<double, 5, 3> m = [] {
    Eigen::Matrix<double, 5, 3> r = Eigen::Matrix<double, 5, 3>::Zero();
    r(3, 0) = 1.0;
    r(2, 1) = 1.0;
    r(4, 2) = kSqrt2;
    return r;
  }();
  return m;
}

Vector3c mode_a_state() { return Vector3c(0.0, 1.0, 0.0); }
Vector3c mode_b_state() { return Vector3c(0.0, 0.0, 1.0); }

Regime classify_regime(const ModelParams& p, double tol) {
  Regime r;
  const double G = p.G_plus();
  const bool no_h = std::abs(p.h) == 0.0;

  if (no_h) {
    r.tag = RegimeTag::SingleModeDecoupled;
    r.branch_sign = +1;
    return r;
  }
  if (G == 0.0) {
    r.tag = RegimeTag::TwoMode;
    r.zero_coupling = true;
    return r;
  }

  const double G2 = G * G;
  r.cross_coupling = std::abs(p.h * p.g_b * p.g_b - std::conj(p.h) * p.g_a * p.g_a) / G2;
  const bool equal_moduli = std::abs(std::abs(p.g_a) - std::abs(p.g_b)) < tol;
  r.tag = (equal_moduli && r.cross_coupling < tol) ? RegimeTag::SingleModeDecoupled
                                                   : RegimeTag::TwoMode;

  // Diagonal shift of the A mode: 2 Re(h g_a* g_b) / G_+^2.
  const double shift = 2.0 * std::real(p.h * std::conj(p.g_a) * p.g_b) / G2;
  r.branch_sign = shift >= 0.0 ? +1 : -1;

  const cplx phase = std::polar(1.0, -p.theta_h());
  if (p.g_a != cplx{}) r.ratio_gb_over_ga = std::abs(p.g_b / p.g_a - phase) < tol;
  if (p.g_b != cplx{}) {
    const cplx q = p.g_a / p.g_b;
    r.ratio_ga_over_gb = std::abs(q - phase) < tol || std::abs(q + phase) < tol;
  }
  return r;
}

JcModes jc_transform(const ModelParams& p) {
  const Regime r = classify_regime(p);
  if (r.tag != RegimeTag::SingleModeDecoupled)
    throw Error(ErrorCode::NotSingleMode, "no atom-decoupled resonator mode exists");
  const double G = p.G_plus();
  if (G == 0.0) throw Error(ErrorCode::NotSingleMode, "G_+ = 0, the JC mode is undefined");

  const cplx alpha = apply_dissipation(p).alpha();
  const double shift = r.branch_sign * std::abs(p.h);
  return JcModes{alpha + shift, alpha - shift, G};
}

}  // namespace wga
