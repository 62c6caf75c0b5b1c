#pragma once

// Second-order correlations of the outgoing photon pair, g2(0) maps over
// (E/2, theta0), and peak detection on 1D scans and 2D lattices.
//
// Normalization: plane-wave input makes the integral over the second
// coordinate diverge, so g2(tau) = |psi(tau)|^2 / |psi_bg(tau)|^2 with
// psi_bg(tau) = A_k1 A_k2 cos(delta_k tau) / 2pi. For delta_k != 0 the
// background has nodes and g2 is infinite there.

#include <cstddef>
#include <span>
#include <vector>

#include "wga/model.hpp"
#include "wga/twophoton.hpp"

namespace wga {

enum class Normalization { BackgroundNormalized };

const char* to_string(Normalization n);

inline constexpr double kVanishingBackground = 1e-12;

struct CorrelationTrace {
  Channel channel = Channel::Reflected;
  double E = 0.0;
  double delta_k = 0.0;
  std::vector<double> tau_grid;
  std::vector<double> g2;
  Normalization normalization = Normalization::BackgroundNormalized;
};

/// Throws VanishingBackground when |A_k1 A_k2| < kVanishingBackground.
CorrelationTrace g2_trace(const ModelParams& p, const TwoPhotonConfig& cfg,
                          std::span<const double> tau_grid);

double g2_zero(const ModelParams& p, const TwoPhotonConfig& cfg);

std::vector<double> default_tau_grid();  // 501 points on [0, 5]

struct G2MapRow {
  double E_half;
  double theta0;
  double ln_g2_0;  // NaN when vanishing
  bool vanishing;
};

struct ContourPoint {
  double E_half;
  double theta0;
};

struct G2Map {
  std::vector<G2MapRow> rows;          // E_half-major
  std::vector<ContourPoint> unit_contour;  // g2(0) = 1 crossings along lattice edges
};

/// Reflected ln g2(0) at delta_k = 0 on the (E/2, theta0) lattice with
/// g_b = |g_b| e^{i theta0} g_a/|g_a|. E_half values are absolute (not
/// detunings). OpenMP-parallel over cells.
G2Map g2_zero_map(const ModelParams& p_base, std::span<const double> E_half_grid,
                  std::span<const double> theta0_grid);

/// p_base with g_b rotated to relative phase theta0.
ModelParams with_theta0(const ModelParams& p_base, double theta0);

std::vector<ContourPoint> unit_contour(std::span<const double> E_half_grid,
                                       std::span<const double> theta0_grid,
                                       std::span<const G2MapRow> rows);

namespace reference {
G2Map g2_zero_map(const ModelParams& p_base, std::span<const double> E_half_grid,
                  std::span<const double> theta0_grid);
}  // namespace reference

enum class ExtremumKind { Minimum, Maximum };

struct Extremum {
  double location;
  double value;
  ExtremumKind kind;
  double prominence;
};

inline constexpr double kDefaultProminence = 0.01;

/// Interior strict three-point extrema whose topographic prominence exceeds
/// min_prominence, in grid order. x must be sorted.
std::vector<Extremum> find_extrema(std::span<const double> x, std::span<const double> y,
                                   double min_prominence = kDefaultProminence);

struct Peak2D {
  double x;
  double y;
  double value;
};

/// Interior points strictly above all 8 neighbours and at least
/// rel_floor * (global maximum). values is x-major: values[i * ny + j].
std::vector<Peak2D> find_maxima_2d(std::span<const double> xs, std::span<const double> ys,
                                   std::span<const double> values, double rel_floor = 0.01);

}  // namespace wga
