#pragma once

// Closed forms for the effective single-mode case, where one resonator
// superposition (the free mode B) decouples from the atom and the other (A)
// forms a Jaynes-Cummings ladder with coupling G_+.

#include <array>

#include "wga/model.hpp"
#include "wga/twophoton.hpp"

namespace wga::jc {

struct JcSpectrum {
  std::array<cplx, 2> lambda_1;  // single-excitation JC eigenvalues
  std::array<cplx, 2> lambda_2;  // two-excitation JC eigenvalues
  cplx omega_A;
  cplx omega_B;
  double G_plus;
};

/// Eigenvalues of [[Omega, G+], [G+, omega_A]] and
/// [[2 omega_A, sqrt2 G+], [sqrt2 G+, omega_A + Omega]], sorted by real part.
/// Throws NotSingleMode outside the decoupled regime.
JcSpectrum jc_spectrum(const ModelParams& p);

/// Closed-form U (reflection) and W (transmission).
cplx kernel_U_closed(const ModelParams& p, double E, double delta_k, cplx delta_p);
cplx kernel_W_closed(const ModelParams& p, double E, double delta_k, cplx delta_p);

/// The spatial profile F(x) of the correlated part.
cplx profile_F(const ModelParams& p, const TwoPhotonConfig& cfg, double x);

/// Outgoing wavefunction from the closed form, center-of-mass phase dropped:
///   reflected:   (1/2pi)[R R cos(dk x) - V_L^2 V_R*^2 g_b*^2 g_a^2 F(x)]
///   transmitted: (1/2pi)[T T cos(dk x) - |V_R|^4 |g_a|^4 F(x)]
cplx wavefunction_closed(const ModelParams& p, const TwoPhotonConfig& cfg, double x);

}  // namespace wga::jc
