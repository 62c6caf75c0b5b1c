#include "wga/jc.hpp"

#include <cmath>

#include "wga/error.hpp"
#include "wga/linalg.hpp"
#include "wga/onephoton.hpp"

namespace wga::jc {

namespace {

std::array<cplx, 2> eigenvalues_2x2(cplx a, cplx b, cplx c, cplx d) {
  MatrixXc m(2, 2);
  m << a, b, c, d;
  const linalg::Eigensystem es = linalg::eig_general(m);
  return {es.values[0], es.values[1]};
}

// Common factor -2 (E - wA - Omega)[(E - 2 Omega)(E - 2 wA) - 4 G+^2] / prod_s (E - l2s)
// divided by prod_{s,i} (k_i - l1s).
cplx energy_factor(const JcSpectrum& s, const EffectiveParams& e, double E, double k1, double k2) {
  const cplx wA = s.omega_A;
  const double G2 = s.G_plus * s.G_plus;
  const cplx num = -2.0 * (E - wA - e.Omega) * ((E - 2.0 * e.Omega) * (E - 2.0 * wA) - 4.0 * G2);
  cplx den = (E - s.lambda_2[0]) * (E - s.lambda_2[1]);
  for (const cplx l : s.lambda_1) den *= (k1 - l) * (k2 - l);
  return num / den;
}

}  // namespace

JcSpectrum jc_spectrum(const ModelParams& p) {
  const JcModes modes = jc_transform(p);
  const EffectiveParams e = apply_dissipation(p);
  const double G = modes.G_plus;
  const double s2G = std::sqrt(2.0) * G;
  JcSpectrum s;
  s.omega_A = modes.omega_A;
  s.omega_B = modes.omega_B;
  s.G_plus = G;
  s.lambda_1 = eigenvalues_2x2(e.Omega, G, G, modes.omega_A);
  s.lambda_2 = eigenvalues_2x2(2.0 * modes.omega_A, s2G, s2G, modes.omega_A + e.Omega);
  return s;
}

cplx kernel_U_closed(const ModelParams& p, double E, double delta_k, cplx delta_p) {
  const JcSpectrum s = jc_spectrum(p);
  const EffectiveParams e = apply_dissipation(p);
  const double k1 = 0.5 * E + delta_k, k2 = 0.5 * E - delta_k;
  const cplx p1 = -(0.5 * E - delta_p), p2 = -(0.5 * E + delta_p);
  cplx out_den{1.0, 0.0};
  for (const cplx l : s.lambda_1) out_den *= (p1 + l) * (p2 + l);
  if (std::abs(out_den) == 0.0) throw Error(ErrorCode::OnShellPole, "U closed form pole");
  const cplx g = std::conj(e.g_b) * std::conj(e.g_b) * e.g_a * e.g_a;
  return g * energy_factor(s, e, E, k1, k2) / out_den;
}

cplx kernel_W_closed(const ModelParams& p, double E, double delta_k, cplx delta_p) {
  const JcSpectrum s = jc_spectrum(p);
  const EffectiveParams e = apply_dissipation(p);
  const double k1 = 0.5 * E + delta_k, k2 = 0.5 * E - delta_k;
  const cplx p1 = 0.5 * E + delta_p, p2 = 0.5 * E - delta_p;
  cplx out_den{1.0, 0.0};
  for (const cplx l : s.lambda_1) out_den *= (p1 - l) * (p2 - l);
  if (std::abs(out_den) == 0.0) throw Error(ErrorCode::OnShellPole, "W closed form pole");
  const double g = std::norm(e.g_a) * std::norm(e.g_a);
  return g * energy_factor(s, e, E, k1, k2) / out_den;
}

cplx profile_F(const ModelParams& p, const TwoPhotonConfig& cfg, double x) {
  const JcSpectrum s = jc_spectrum(p);
  const cplx lp = s.lambda_1[1], lm = s.lambda_1[0];
  if (std::abs(lp - lm) < 1e-10) throw Error(ErrorCode::DegenerateJC, "lambda_1+ == lambda_1-");
  const double E = cfg.E, ax = std::abs(x);
  // s = +: (E - 2 l+) e^{i(E/2 - l-)|x|};  s = -: -(E - 2 l-) e^{i(E/2 - l+)|x|}
  const cplx num = (E - 2.0 * lp) * std::exp(kI * (0.5 * E - lm) * ax) -
                   (E - 2.0 * lm) * std::exp(kI * (0.5 * E - lp) * ax);
  cplx den = (E - s.lambda_2[0]) * (E - s.lambda_2[1]) * (lp - lm);
  for (const cplx l : s.lambda_1) den *= (cfg.k1() - l) * (cfg.k2() - l);
  return num / den;
}

cplx wavefunction_closed(const ModelParams& p, const TwoPhotonConfig& cfg, double x) {
  const EffectiveParams e = apply_dissipation(p);
  const OnePhotonAmps a1 = amplitudes_closed(p, cfg.k1());
  const OnePhotonAmps a2 = amplitudes_closed(p, cfg.k2());
  const cplx F = profile_F(p, cfg, x);
  const double c = std::cos(cfg.delta_k * x);
  cplx psi;
  if (cfg.channel == Channel::Reflected) {
    const cplx pre = e.V_L * e.V_L * std::conj(e.V_R * e.V_R);
    const cplx g = std::conj(e.g_b * e.g_b) * e.g_a * e.g_a;
    psi = a1.R * a2.R * c - pre * g * F;
  } else {
    const double pre = std::norm(e.V_R) * std::norm(e.V_R);
    psi = a1.T * a2.T * c - pre * std::norm(e.g_a) * std::norm(e.g_a) * F;
  }
  return psi / (2.0 * kPi);
}

}  // namespace wga::jc
