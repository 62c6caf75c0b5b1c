#pragma once

// Two-photon scattering: the correlated (bound) part of the two-photon
// S-matrix, built from resolvents of the one- and two-excitation effective
// Hamiltonians.
//
// Kinematics. E = k1 + k2 is the conserved total energy, delta_k = (k1-k2)/2
// and delta_p = (p1-p2)/2 the incident and outgoing relative momenta.
// Reflected photons have p1 = -(E/2 - delta_p), p2 = -(E/2 + delta_p);
// transmitted photons p1 = E/2 + delta_p, p2 = E/2 - delta_p.
//
// As a function of delta_p the symmetrised kernels U (reflection) and
// W (transmission) are even, decay like 1/delta_p^2 and have exactly three
// poles in the upper half plane, at p_l = E/2 - alpha_l with alpha_l the
// eigenvalues of H_eff^(1). The apparent real-axis poles at
// delta_p = +/- delta_k cancel between the four symmetrised terms.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "wga/linalg.hpp"
#include "wga/model.hpp"

namespace wga {

enum class Channel { Reflected, Transmitted };

const char* to_string(Channel c);

struct TwoPhotonConfig {
  double E = 0.0;
  double delta_k = 0.0;
  Channel channel = Channel::Reflected;

  double k1() const { return 0.5 * E + delta_k; }
  double k2() const { return 0.5 * E - delta_k; }
};

/// Literal reflection matrix element
///   <0|b G1(-p1) b G2(k1+k2) a^dag G1(k2) a^dag|0>
///   + <0|b G1(-p1) a^dag b G1(k2) a^dag|0> / (-p1 - k1),
/// with G_n(z) = (z - H_eff^(n))^{-1}. p2 only enters through energy
/// conservation and is accepted for symmetry of the signature.
/// Throws OnShellPole when |p1 + k1| < 1e-12.
cplx f1(const ModelParams& p, cplx p1, cplx p2, cplx k1, cplx k2);

/// Transmission counterpart of f1 with a in place of b and 1/(p1 - k1).
cplx f2(const ModelParams& p, cplx p1, cplx p2, cplx k1, cplx k2);

struct KernelResidues {
  std::array<cplx, 3> eigenvalues;  // alpha_l of H_eff^(1), sorted by real part
  std::array<cplx, 3> poles;        // E/2 - alpha_l (upper half plane)
  std::array<cplx, 3> residues;     // Res_{delta_p = pole_l} of the kernel
};

/// Symmetrised U or W for one incident configuration. Everything that does
/// not depend on delta_p (the two-excitation resolvent and the incoming
/// legs) is computed once in the constructor.
class TwoPhotonKernel {
 public:
  TwoPhotonKernel(const ModelParams& p, const TwoPhotonConfig& cfg);

  /// Kernel at (complex) delta_p. Within 1e-8 of the removable points
  /// +/- delta_k the value is the average of the two sides at 1e-6 offset.
  cplx operator()(cplx delta_p) const;

  /// Residues at the three upper-half-plane poles, from spectral projectors
  /// of H_eff^(1). Throws DefectiveMatrix if H_eff^(1) is not diagonalisable.
  KernelResidues residues() const;

  const TwoPhotonConfig& config() const { return cfg_; }

  /// R_{k1} R_{k2} or T_{k1} T_{k2}.
  cplx background_amplitude() const { return background_; }

  /// V_L^2 V_R*^2 (reflected) or |V_R|^4 (transmitted).
  cplx prefactor() const { return prefactor_; }

 private:
  cplx evaluate_regular(cplx delta_p) const;

  TwoPhotonConfig cfg_;
  Matrix3c h1_;
  Vector3c out_;                  // e_b (reflected) or e_a (transmitted)
  std::array<double, 2> k_first_; // k appearing in 1/(q - k)
  std::array<Vector3c, 2> chain_; // lower G2(E) raise_a G1(k_second) e_a
  std::array<cplx, 2> leg_;       // out^T G1(k_second) e_a
  cplx background_;
  cplx prefactor_;
};

cplx kernel_U(const ModelParams& p, double E, double delta_k, cplx delta_p);
cplx kernel_W(const ModelParams& p, double E, double delta_k, cplx delta_p);

KernelResidues kernel_residues(const ModelParams& p, const TwoPhotonConfig& cfg);

/// psi(x) = (1/2pi) [A_{k1} A_{k2} cos(delta_k x)
///                   + (1/2) prefactor sum_l Res_l e^{i p_l |x|}],
/// center-of-mass phase dropped.
struct TwoPhotonWavefunction {
  TwoPhotonConfig config;
  cplx background_amplitude;
  cplx prefactor;
  KernelResidues residues;

  cplx background(double x) const;
  cplx bound(double x) const;
  cplx operator()(double x) const { return background(x) + bound(x); }
};

TwoPhotonWavefunction two_photon_wavefunction(const ModelParams& p, const TwoPhotonConfig& cfg);

cplx wavefunction_residue(const ModelParams& p, const TwoPhotonConfig& cfg, double x);

struct QuadratureOptions {
  double window = 200.0;
  std::size_t n_points = 200001;
  // Adds the analytic integral of the C/delta_p^2 asymptote beyond the window.
  bool tail_correction = true;
};

struct QuadratureResult {
  cplx value;
  bool converged = true;         // false = ConvergenceWarning
  double relative_change = 0.0;  // |I(2n) - I(n)| / |I(2n)|
};

/// Direct trapezoid evaluation of the Fourier integral over delta_p.
/// Test oracle for wavefunction_residue; it never touches the residues.
QuadratureResult wavefunction_quadrature(const ModelParams& p, const TwoPhotonConfig& cfg,
                                         double x, const QuadratureOptions& opts = {});

struct FluorescenceRow {
  double delta_k;
  double delta_p;
  double B_R;
};

/// B_R = |V_R|^4 |V_L|^4 |U|^2 / 4pi^2 at fixed E over the (delta_k, delta_p)
/// lattice, delta_k-major order. OpenMP-parallel over delta_k rows.
std::vector<FluorescenceRow> fluorescence_map(const ModelParams& p, double E,
                                              std::span<const double> dk_grid,
                                              std::span<const double> dp_grid);

namespace reference {
std::vector<FluorescenceRow> fluorescence_map(const ModelParams& p, double E,
                                              std::span<const double> dk_grid,
                                              std::span<const double> dp_grid);
}  // namespace reference

}  // namespace wga
