#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "wga/model.hpp"
#include "wga/types.hpp"

namespace wga::test {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx polar_draw(Rng& rng, double rmin, double rmax) {
  return std::polar(uniform(rng, rmin, rmax), uniform(rng, -kPi, kPi));
}

// Entries uniform in the unit disc.
inline MatrixXc random_disc_matrix(Rng& rng, int n) {
  MatrixXc m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::polar(std::sqrt(uniform(rng, 0, 1)), uniform(rng, -kPi, kPi));
  return m;
}

inline ModelParams random_params(Rng& rng, bool lossy = false) {
  ModelParams p;
  p.omega_c = uniform(rng, -1.0, 1.0);
  p.Omega = uniform(rng, -3.0, 3.0);
  p.Gamma = 1.0;
  p.g_a = polar_draw(rng, 0.5, 5.0);
  p.g_b = polar_draw(rng, 0.5, 5.0);
  p.h = polar_draw(rng, 0.0, 5.0);
  if (lossy) {
    p.gamma_a = uniform(rng, 0.0, 0.5);
    p.gamma_c = uniform(rng, 0.0, 0.5);
  }
  return p;
}

// Single-mode draw: |g_a| = |g_b|, g_b/g_a = e^{-i theta_h}.
inline ModelParams random_single_mode(Rng& rng, bool with_h = true) {
  ModelParams p;
  p.omega_c = uniform(rng, -1.0, 1.0);
  p.Omega = p.omega_c + uniform(rng, -3.0, 3.0);
  const double g = uniform(rng, 1.0, 5.0);
  p.g_a = std::polar(g, uniform(rng, -kPi, kPi));
  if (with_h) {
    p.h = polar_draw(rng, 0.5, 4.0);
    p.g_b = p.g_a * std::polar(1.0, -std::arg(p.h));
  } else {
    p.g_b = std::polar(g, uniform(rng, -kPi, kPi));
  }
  return p;
}

inline ModelParams preset_a() {
  ModelParams p;
  p.g_a = 5.0;
  p.g_b = 5.0;
  return p;
}

inline ModelParams preset_b() {
  ModelParams p;
  p.Omega = 2.0;
  p.h = cplx{0.0, 2.0};
  p.g_a = 5.0;
  p.g_b = cplx{0.0, -5.0};
  return p;
}

inline ModelParams preset_twomode() {
  ModelParams p;
  p.Omega = 2.0;
  p.h = cplx{0.0, 5.0};
  p.g_a = 5.0;
  p.g_b = 5.0;
  return p;
}

// Faddeev-LeVerrier: coefficients c with det(z - M) = sum_k c[k] z^(n-k).
inline std::vector<cplx> characteristic_polynomial(const MatrixXc& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<cplx> c(n + 1);
  c[0] = 1.0;
  MatrixXc mk = MatrixXc::Zero(n, n);
  const MatrixXc id = MatrixXc::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk + c[k - 1] * id;
    c[k] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

inline cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx v{};
  for (const cplx ck : c) v = v * z + ck;
  return v;
}

inline double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace wga::test
