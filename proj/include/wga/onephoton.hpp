#pragma once

#include <span>
#include <vector>

#include "wga/model.hpp"

namespace wga {

struct OnePhotonAmps {
  double k = 0.0;
  cplx T{1.0, 0.0};
  cplx R{};
};

/// Closed-form T_k, R_k (the D(k) route). Intrinsic losses are folded in
/// through apply_dissipation.
OnePhotonAmps amplitudes_closed(const ModelParams& p, double k);

/// T_k = 1 - i|V_R|^2 <0|a (k - H1)^{-1} a^dag|0>,
/// R_k = -i V_L V_R* <0|b (k - H1)^{-1} a^dag|0>.
OnePhotonAmps amplitudes_resolvent(const ModelParams& p, double k);

struct SpectrumRow {
  double k;
  double T2;
  double R2;
  double argT;
  double argR;
};

/// Closed-form amplitudes on every grid point, in grid order. OpenMP-parallel.
std::vector<SpectrumRow> spectrum_scan(const ModelParams& p, std::span<const double> k_grid);

namespace reference {
// Single-threaded version of spectrum_scan; must agree bit for bit.
std::vector<SpectrumRow> spectrum_scan(const ModelParams& p, std::span<const double> k_grid);
}  // namespace reference

inline constexpr std::size_t kDefaultSpectrumPoints = 2001;
inline constexpr double kDefaultSpectrumHalfWidth = 15.0;

}  // namespace wga
