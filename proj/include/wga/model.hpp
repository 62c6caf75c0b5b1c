#pragma once

// Waveguide + whispering-gallery resonator + two-level atom.
//
// Energies are in units of the waveguide-resonator decay rate Gamma. The two
// resonator modes are a (co-propagating with right movers, couples to V_R)
// and b (left movers, V_L), with |V_R|^2 = |V_L|^2 = Gamma.

#include <array>
#include <string>
#include <vector>

#include "wga/types.hpp"

namespace wga {

struct ModelParams {
  double omega_c = 0.0;  // resonator frequency
  double Omega = 0.0;    // atomic transition frequency
  double Gamma = 1.0;    // resonator -> waveguide decay rate
  cplx g_a{0.0, 0.0};    // atom <-> mode a
  cplx g_b{0.0, 0.0};    // atom <-> mode b
  cplx h{0.0, 0.0};      // intermodal (backscattering) coupling
  double gamma_a = 0.0;  // intrinsic atomic loss
  double gamma_c = 0.0;  // intrinsic cavity loss
  double phase_VR = 0.0;
  double phase_VL = 0.0;

  cplx V_R() const;
  cplx V_L() const;
  double G_plus() const;
  double theta_h() const { return std::arg(h); }
  // arg(g_b / g_a); 0 when either coupling vanishes.
  double theta0() const;
};

/// Checks the invariants and rescales every energy by Gamma so that the
/// returned parameters have Gamma == 1. Throws NonPositiveGamma,
/// NonFiniteValue or NegativeDissipation.
ModelParams validate_params(const ModelParams& raw);

/// Parameters with intrinsic losses folded into complex frequencies:
/// Omega -> Omega - i gamma_a, omega_c -> omega_c - i gamma_c.
struct EffectiveParams {
  cplx Omega;
  cplx omega_c;
  double Gamma;
  cplx g_a, g_b, h;
  cplx V_R, V_L;

  // omega_c - i Gamma/2, the dressed single-photon resonator frequency.
  cplx alpha() const { return omega_c - kI * (0.5 * Gamma); }
};

EffectiveParams apply_dissipation(const ModelParams& p);

/// Same as apply_dissipation but ignores gamma_a and gamma_c.
EffectiveParams lossless(const ModelParams& p);

struct EffectiveHamiltonian {
  int dim = 0;
  MatrixXc entries;
  std::vector<std::string> basis_labels;
};

/// Single-excitation block, basis (|e,0,0>, |g,1,0>, |g,0,1>).
EffectiveHamiltonian build_heff1(const EffectiveParams& p);

/// Two-excitation block, basis (|g,2,0>, |e,1,0>, |g,1,1>, |e,0,1>, |g,0,2>).
EffectiveHamiltonian build_heff2(const EffectiveParams& p);

// Fixed-size versions used on hot paths.
Matrix3c heff1_matrix(const EffectiveParams& p);
Matrix5c heff2_matrix(const EffectiveParams& p);

// Ladder operators between the excitation subspaces, in the basis orders
// above. raise_* maps 1 -> 2 excitations (5x3); lower_* = raise_*^T.
const Eigen::Matrix<double, 5, 3>& raise_a();
const Eigen::Matrix<double, 5, 3>& raise_b();

// |g,1,0> and |g,0,1>: a^dag|0> and b^dag|0> in the single-excitation basis.
Vector3c mode_a_state();
Vector3c mode_b_state();

enum class RegimeTag { SingleModeDecoupled, TwoMode };

struct Regime {
  RegimeTag tag = RegimeTag::TwoMode;
  int branch_sign = +1;             // sign of the A-mode shift, omega_A = alpha +/- |h|
  double cross_coupling = 0.0;      // |h g_b^2 - h* g_a^2| / G_+^2
  bool zero_coupling = false;       // G_+ = 0 with h != 0: A/B transform undefined
  // Diagnostics for the two printed forms of the decoupling condition.
  bool ratio_gb_over_ga = false;    // g_b/g_a = e^{-i theta_h}
  bool ratio_ga_over_gb = false;    // g_a/g_b = +/- e^{-i theta_h}
};

inline constexpr double kDecouplingTolerance = 1e-9;

Regime classify_regime(const ModelParams& p, double tol = kDecouplingTolerance);

struct JcModes {
  cplx omega_A;  // mode coupled to the atom
  cplx omega_B;  // free mode
  double G_plus;
};

/// Rewrites the resonator in terms of A = (g_a a + g_b b)/G_+ and
/// B = (g_b* a - g_a* b)/G_+. Throws NotSingleMode in the two-mode regime.
JcModes jc_transform(const ModelParams& p);

}  // namespace wga
