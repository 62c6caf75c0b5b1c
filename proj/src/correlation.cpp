#include "wga/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wga/error.hpp"
#include "wga/grid.hpp"
#include "wga/parallel.hpp"

namespace wga {

const char* to_string(Normalization) { return "BackgroundNormalized"; }

namespace {

double g2_ratio(const TwoPhotonWavefunction& psi, double tau) {
  return std::norm(psi(tau)) / std::norm(psi.background(tau));
}

TwoPhotonWavefunction checked_wavefunction(const ModelParams& p, const TwoPhotonConfig& cfg) {
  // Background first: a decoupled model can have a degenerate H_eff^(1).
  const TwoPhotonKernel kernel(p, cfg);
  if (std::abs(kernel.background_amplitude()) < kVanishingBackground)
    throw Error(ErrorCode::VanishingBackground, "background amplitude underflow");
  return {cfg, kernel.background_amplitude(), kernel.prefactor(), kernel.residues()};
}

G2MapRow map_cell(const ModelParams& p_base, double e_half, double theta0) {
  const ModelParams p = with_theta0(p_base, theta0);
  const TwoPhotonConfig cfg{2.0 * e_half, 0.0, Channel::Reflected};
  try {
    return {e_half, theta0, std::log(g2_zero(p, cfg)), false};
  } catch (const Error& e) {
    if (e.code() != ErrorCode::VanishingBackground) throw;
    return {e_half, theta0, std::numeric_limits<double>::quiet_NaN(), true};
  }
}

}  // namespace

CorrelationTrace g2_trace(const ModelParams& p, const TwoPhotonConfig& cfg,
                          std::span<const double> tau_grid) {
  const TwoPhotonWavefunction psi = checked_wavefunction(p, cfg);
  CorrelationTrace t;
  t.channel = cfg.channel;
  t.E = cfg.E;
  t.delta_k = cfg.delta_k;
  t.tau_grid.assign(tau_grid.begin(), tau_grid.end());
  t.g2.reserve(tau_grid.size());
  for (double tau : tau_grid) t.g2.push_back(g2_ratio(psi, tau));
  return t;
}

double g2_zero(const ModelParams& p, const TwoPhotonConfig& cfg) {
  return g2_ratio(checked_wavefunction(p, cfg), 0.0);
}

std::vector<double> default_tau_grid() { return uniform_grid(0.0, 5.0, 501); }

ModelParams with_theta0(const ModelParams& p_base, double theta0) {
  ModelParams p = p_base;
  const double ga = std::abs(p.g_a);
  const cplx unit_a = ga > 0.0 ? p.g_a / ga : cplx{1.0, 0.0};
  p.g_b = std::abs(p.g_b) * std::polar(1.0, theta0) * unit_a;
  return p;
}

std::vector<ContourPoint> unit_contour(std::span<const double> E_half_grid,
                                       std::span<const double> theta0_grid,
                                       std::span<const G2MapRow> rows) {
  const std::size_t nE = E_half_grid.size(), nt = theta0_grid.size();
  std::vector<ContourPoint> out;
  auto at = [&](std::size_t i, std::size_t j) { return rows[i * nt + j].ln_g2_0; };
  auto crossing = [](double a, double b) { return std::isfinite(a) && std::isfinite(b) && (a < 0.0) != (b < 0.0); };
  for (std::size_t i = 0; i < nE; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      const double v = at(i, j);
      if (j + 1 < nt && crossing(v, at(i, j + 1))) {
        const double s = v / (v - at(i, j + 1));
        out.push_back({E_half_grid[i], theta0_grid[j] + s * (theta0_grid[j + 1] - theta0_grid[j])});
      }
      if (i + 1 < nE && crossing(v, at(i + 1, j))) {
        const double s = v / (v - at(i + 1, j));
        out.push_back({E_half_grid[i] + s * (E_half_grid[i + 1] - E_half_grid[i]), theta0_grid[j]});
      }
    }
  }
  return out;
}

G2Map g2_zero_map(const ModelParams& p_base, std::span<const double> E_half_grid,
                  std::span<const double> theta0_grid) {
  const std::size_t nt = theta0_grid.size();
  G2Map map;
  map.rows.resize(E_half_grid.size() * nt);
  parallel_for(static_cast<std::ptrdiff_t>(map.rows.size()), [&](std::ptrdiff_t c) {
    map.rows[c] = map_cell(p_base, E_half_grid[c / nt], theta0_grid[c % nt]);
  });
  map.unit_contour = unit_contour(E_half_grid, theta0_grid, map.rows);
  return map;
}

namespace reference {

G2Map g2_zero_map(const ModelParams& p_base, std::span<const double> E_half_grid,
                  std::span<const double> theta0_grid) {
  G2Map map;
  map.rows.reserve(E_half_grid.size() * theta0_grid.size());
  for (double e : E_half_grid)
    for (double t : theta0_grid) map.rows.push_back(map_cell(p_base, e, t));
  map.unit_contour = unit_contour(E_half_grid, theta0_grid, map.rows);
  return map;
}

}  // namespace reference

namespace {

// Height of peak i above the higher of the two lowest points reached before
// the signal climbs above y[i] on each side.
double prominence(std::span<const double> y, std::size_t i) {
  double left_min = y[i];
  for (std::size_t j = i; j-- > 0;) {
    if (y[j] > y[i]) break;
    left_min = std::min(left_min, y[j]);
  }
  double right_min = y[i];
  for (std::size_t j = i + 1; j < y.size(); ++j) {
    if (y[j] > y[i]) break;
    right_min = std::min(right_min, y[j]);
  }
  return y[i] - std::max(left_min, right_min);
}

}  // namespace

std::vector<Extremum> find_extrema(std::span<const double> x, std::span<const double> y,
                                   double min_prominence) {
  std::vector<Extremum> out;
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 3) return out;
  std::vector<double> neg(y.begin(), y.begin() + n);
  for (double& v : neg) v = -v;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (y[i] > y[i - 1] && y[i] > y[i + 1]) {
      const double prom = prominence(y.first(n), i);
      if (prom > min_prominence) out.push_back({x[i], y[i], ExtremumKind::Maximum, prom});
    } else if (y[i] < y[i - 1] && y[i] < y[i + 1]) {
      const double prom = prominence(neg, i);
      if (prom > min_prominence) out.push_back({x[i], y[i], ExtremumKind::Minimum, prom});
    }
  }
  return out;
}

std::vector<Peak2D> find_maxima_2d(std::span<const double> xs, std::span<const double> ys,
                                   std::span<const double> values, double rel_floor) {
  const std::size_t nx = xs.size(), ny = ys.size();
  std::vector<Peak2D> out;
  if (nx < 3 || ny < 3 || values.size() != nx * ny) return out;
  const double top = *std::max_element(values.begin(), values.end());
  const double floor = rel_floor * top;
  for (std::size_t i = 1; i + 1 < nx; ++i) {
    for (std::size_t j = 1; j + 1 < ny; ++j) {
      const double v = values[i * ny + j];
      if (v < floor) continue;
      bool peak = true;
      for (int di = -1; di <= 1 && peak; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (values[(i + di) * ny + (j + dj)] >= v) {
            peak = false;
            break;
          }
        }
      if (peak) out.push_back({xs[i], ys[j], v});
    }
  }
  return out;
}

}  // namespace wga
