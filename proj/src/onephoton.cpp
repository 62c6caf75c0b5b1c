#include "wga/onephoton.hpp"

#include <cmath>

#include "wga/error.hpp"
#include "wga/linalg.hpp"
#include "wga/parallel.hpp"

namespace wga {

OnePhotonAmps amplitudes_closed(const ModelParams& p, double k) {
  const EffectiveParams e = apply_dissipation(p);
  const cplx ga = e.g_a, gb = e.g_b, h = e.h;
  const double G2 = std::norm(ga) + std::norm(gb);
  const cplx q = k - e.alpha();  // k - omega_c + i Gamma/2
  const cplx kd = k - e.Omega;

  const cplx D = q * (kd * q - G2) - std::conj(ga) * gb * h - std::conj(gb) * ga * std::conj(h) -
                 std::norm(h) * kd;
  if (std::abs(D) < 1e-14) throw Error(ErrorCode::DivergentAmplitude, "|D(k)| underflow");

  OnePhotonAmps out;
  out.k = k;
  out.R = -kI * e.V_L * std::conj(e.V_R) / D * (ga * std::conj(gb) + h * kd);
  out.T = 1.0 - kI * e.Gamma / D * (kd * q - std::norm(gb));
  return out;
}

OnePhotonAmps amplitudes_resolvent(const ModelParams& p, double k) {
  const EffectiveParams e = apply_dissipation(p);
  const MatrixXc h1 = build_heff1(e).entries;
  const VectorXc ket = mode_a_state();
  const VectorXc g = linalg::solve_resolvent(h1, cplx{k, 0.0}, ket);

  OnePhotonAmps out;
  out.k = k;
  out.T = 1.0 - kI * std::norm(e.V_R) * mode_a_state().dot(g);
  out.R = -kI * e.V_L * std::conj(e.V_R) * g[2];
  return out;
}

namespace {

SpectrumRow spectrum_row(const ModelParams& p, double k) {
  const OnePhotonAmps a = amplitudes_closed(p, k);
  return {k, std::norm(a.T), std::norm(a.R), std::arg(a.T), std::arg(a.R)};
}

}  // namespace

std::vector<SpectrumRow> spectrum_scan(const ModelParams& p, std::span<const double> k_grid) {
  std::vector<SpectrumRow> rows(k_grid.size());
  parallel_for(static_cast<std::ptrdiff_t>(rows.size()),
               [&](std::ptrdiff_t i) { rows[i] = spectrum_row(p, k_grid[i]); });
  return rows;
}

namespace reference {

std::vector<SpectrumRow> spectrum_scan(const ModelParams& p, std::span<const double> k_grid) {
  std::vector<SpectrumRow> rows;
  rows.reserve(k_grid.size());
  for (double k : k_grid) rows.push_back(spectrum_row(p, k));
  return rows;
}

}  // namespace reference

}  // namespace wga
