#include "wga/twophoton.hpp"

#include <algorithm>
#include <cmath>

#include "wga/error.hpp"
#include "wga/onephoton.hpp"
#include "wga/parallel.hpp"

namespace wga {

namespace {

constexpr double kRemovableRadius = 1e-8;
constexpr double kRemovableOffset = 1e-6;

Vector3c resolvent_apply(const Matrix3c& h1, cplx z, const Vector3c& v) {
  Matrix3c m = -h1;
  m.diagonal().array() += z;
  return m.partialPivLu().solve(v);
}

// Row vector bra^T (z - H)^{-1}, returned as a column.
Vector3c resolvent_bra(const Matrix3c& h1, cplx z, const Vector3c& bra) {
  Matrix3c m = -h1;
  m.diagonal().array() += z;
  return m.transpose().partialPivLu().solve(bra);
}

Vector5c resolvent_apply(const Matrix5c& h2, cplx z, const Vector5c& v) {
  Matrix5c m = -h2;
  m.diagonal().array() += z;
  return m.partialPivLu().solve(v);
}

// Generic literal evaluation shared by f1 and f2.
//   <0|out G1(q) L G2(k1+k2) a^dag G1(k2) a^dag|0>
//   + <0|out G1(q) a^dag|0> <0|out G1(k2) a^dag|0> / (q - k1)
cplx literal_matrix_element(const ModelParams& p, bool reflected, cplx q, cplx k1, cplx k2) {
  const EffectiveParams e = apply_dissipation(p);
  const MatrixXc h1 = build_heff1(e).entries;
  const MatrixXc h2 = build_heff2(e).entries;
  const Eigen::Matrix<double, 5, 3>& lower_op = reflected ? raise_b() : raise_a();
  const VectorXc out = reflected ? mode_b_state() : mode_a_state();
  const VectorXc in = mode_a_state();

  if (std::abs(q - k1) < 1e-12)
    throw Error(ErrorCode::OnShellPole, "outgoing and incoming momenta coincide on shell");

  const VectorXc leg = linalg::solve_resolvent(h1, k2, in);
  const VectorXc two = linalg::solve_resolvent(h2, k1 + k2, raise_a().cast<cplx>() * leg);
  const VectorXc back = lower_op.transpose().cast<cplx>() * two;
  const VectorXc first = linalg::solve_resolvent(h1, q, back);
  const cplx connected = out.dot(first);

  // a^dag b (or a^dag a) inside the one-excitation block: |g10><g01| or |g10><g10|.
  const cplx leg_amp = out.dot(leg);
  const cplx out_amp = out.dot(linalg::solve_resolvent(h1, q, in));
  return connected + out_amp * leg_amp / (q - k1);
}

}  // namespace

const char* to_string(Channel c) {
  return c == Channel::Reflected ? "reflected" : "transmitted";
}

cplx f1(const ModelParams& p, cplx p1, cplx /*p2*/, cplx k1, cplx k2) {
  return literal_matrix_element(p, true, -p1, k1, k2);
}

cplx f2(const ModelParams& p, cplx p1, cplx /*p2*/, cplx k1, cplx k2) {
  return literal_matrix_element(p, false, p1, k1, k2);
}

TwoPhotonKernel::TwoPhotonKernel(const ModelParams& p, const TwoPhotonConfig& cfg)
    : cfg_(cfg) {
  const EffectiveParams e = apply_dissipation(p);
  h1_ = heff1_matrix(e);
  const Matrix5c h2 = heff2_matrix(e);
  const bool reflected = cfg.channel == Channel::Reflected;
  out_ = reflected ? mode_b_state() : mode_a_state();
  const Eigen::Matrix<cplx, 3, 5> lower =
      (reflected ? raise_b() : raise_a()).transpose().cast<cplx>();
  const Eigen::Matrix<cplx, 5, 3> raise = raise_a().cast<cplx>();
  const Vector3c in = mode_a_state();

  // Term (k_first, k_second) = (k1, k2) and its k1 <-> k2 partner.
  const std::array<double, 2> ks{cfg.k1(), cfg.k2()};
  for (int j = 0; j < 2; ++j) {
    k_first_[j] = ks[j];
    const double k_second = ks[1 - j];
    const Vector3c leg = resolvent_apply(h1_, cplx{k_second, 0.0}, in);
    const Vector5c two = resolvent_apply(h2, cplx{cfg.E, 0.0}, Vector5c(raise * leg));
    chain_[j] = lower * two;
    leg_[j] = out_.dot(leg);
  }

  const OnePhotonAmps a1 = amplitudes_closed(p, cfg.k1());
  const OnePhotonAmps a2 = amplitudes_closed(p, cfg.k2());
  if (reflected) {
    background_ = a1.R * a2.R;
    prefactor_ = e.V_L * e.V_L * std::conj(e.V_R) * std::conj(e.V_R);
  } else {
    background_ = a1.T * a2.T;
    prefactor_ = std::norm(e.V_R) * std::norm(e.V_R);
  }
}

cplx TwoPhotonKernel::evaluate_regular(cplx delta_p) const {
  const Vector3c in = mode_a_state();
  cplx sum{};
  for (const double sigma : {-1.0, 1.0}) {
    const cplx q = 0.5 * cfg_.E + sigma * delta_p;
    // Plain transpose products; Eigen's dot() would conjugate the bra.
    const Vector3c bra = resolvent_bra(h1_, q, out_);
    const cplx out_amp = bra.transpose() * in;
    for (int j = 0; j < 2; ++j) {
      const cplx connected = bra.transpose() * chain_[j];
      // q - k_first without forming E/2 twice; keeps digits near the cancellation.
      const cplx gap = sigma * delta_p - (j == 0 ? cfg_.delta_k : -cfg_.delta_k);
      sum += connected + out_amp * leg_[j] / gap;
    }
  }
  return sum;
}

cplx TwoPhotonKernel::operator()(cplx delta_p) const {
  const double dk = cfg_.delta_k;
  const double d = std::min(std::abs(delta_p - dk), std::abs(delta_p + dk));
  if (d < kRemovableRadius) {
    return 0.5 * (evaluate_regular(delta_p + kRemovableOffset) +
                  evaluate_regular(delta_p - kRemovableOffset));
  }
  return evaluate_regular(delta_p);
}

KernelResidues TwoPhotonKernel::residues() const {
  const linalg::Eigensystem es = linalg::eig_general(h1_);
  const VectorXc out = out_;
  const VectorXc in = mode_a_state();
  const VectorXc c_in = linalg::residue_weights(es, out, in);
  std::array<VectorXc, 2> c_chain{linalg::residue_weights(es, out, VectorXc(chain_[0])),
                                  linalg::residue_weights(es, out, VectorXc(chain_[1]))};

  // Near delta_p = E/2 - alpha_l the q = E/2 - delta_p resolvent behaves as
  // -P_l / (delta_p - pole_l); the q = E/2 + delta_p terms are regular there.
  KernelResidues r;
  for (int l = 0; l < 3; ++l) {
    const cplx alpha = es.values[l];
    cplx acc{};
    for (int j = 0; j < 2; ++j) acc += c_chain[j][l] + c_in[l] * leg_[j] / (alpha - k_first_[j]);
    r.eigenvalues[l] = alpha;
    r.poles[l] = 0.5 * cfg_.E - alpha;
    r.residues[l] = -acc;
  }
  return r;
}

cplx kernel_U(const ModelParams& p, double E, double delta_k, cplx delta_p) {
  return TwoPhotonKernel(p, {E, delta_k, Channel::Reflected})(delta_p);
}

cplx kernel_W(const ModelParams& p, double E, double delta_k, cplx delta_p) {
  return TwoPhotonKernel(p, {E, delta_k, Channel::Transmitted})(delta_p);
}

KernelResidues kernel_residues(const ModelParams& p, const TwoPhotonConfig& cfg) {
  return TwoPhotonKernel(p, cfg).residues();
}

cplx TwoPhotonWavefunction::background(double x) const {
  return background_amplitude * std::cos(config.delta_k * x) / (2.0 * kPi);
}

cplx TwoPhotonWavefunction::bound(double x) const {
  const double ax = std::abs(x);
  cplx sum{};
  for (int l = 0; l < 3; ++l) sum += residues.residues[l] * std::exp(kI * residues.poles[l] * ax);
  return 0.5 * prefactor * sum / (2.0 * kPi);
}

TwoPhotonWavefunction two_photon_wavefunction(const ModelParams& p, const TwoPhotonConfig& cfg) {
  const TwoPhotonKernel kernel(p, cfg);
  return {cfg, kernel.background_amplitude(), kernel.prefactor(), kernel.residues()};
}

cplx wavefunction_residue(const ModelParams& p, const TwoPhotonConfig& cfg, double x) {
  return two_photon_wavefunction(p, cfg)(x);
}

namespace {

// Trapezoid rule for int_{-W}^{W} e^{i t x} K(t) dt on n points.
cplx trapezoid(const TwoPhotonKernel& kernel, double x, double window, std::size_t n) {
  const double h = 2.0 * window / static_cast<double>(n - 1);
  cplx sum{};
  for (std::size_t i = 0; i < n; ++i) {
    const double t = -window + h * static_cast<double>(i);
    const double w = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    sum += w * std::exp(kI * (t * x)) * kernel(cplx{t, 0.0});
  }
  return h * sum;
}

// int_{|t| > W} e^{i t x} / t^2 dt for the asymptote K ~ C / t^2. For x > 0
// the contour t = W + i s rotates into the upper half plane, where the
// integrand decays like e^{-s x}.
cplx tail_integral(double x, double window) {
  const double ax = std::abs(x);
  if (ax == 0.0) return cplx{2.0 / window, 0.0};
  // (i e^{iWx} / x) int_0^inf e^{-u} / (W + i u/x)^2 du, Simpson on [0, 60].
  constexpr int n = 6000;
  constexpr double umax = 60.0;
  const double h = umax / n;
  cplx s{};
  for (int i = 0; i <= n; ++i) {
    const double u = h * i;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const cplx den = window + kI * (u / ax);
    s += w * std::exp(-u) / (den * den);
  }
  s *= h / 3.0;
  const cplx one_side = kI * std::exp(kI * (window * ax)) / ax * s;
  return 2.0 * one_side.real();
}

}  // namespace

QuadratureResult wavefunction_quadrature(const ModelParams& p, const TwoPhotonConfig& cfg,
                                         double x, const QuadratureOptions& opts) {
  if (opts.n_points < 3 || !(opts.window > 0.0))
    throw Error(ErrorCode::InvalidConfig, "quadrature needs window > 0 and >= 3 points");
  const TwoPhotonKernel kernel(p, cfg);

  cplx tail{};
  if (opts.tail_correction) {
    // C = lim t^2 K(t), one Richardson step to remove the 1/t^4 term.
    const double far = 100.0 * opts.window;
    const cplx c1 = far * far * kernel(cplx{far, 0.0});
    const cplx c2 = 4.0 * far * far * kernel(cplx{2.0 * far, 0.0});
    const cplx c = (4.0 * c2 - c1) / 3.0;
    tail = c * tail_integral(x, opts.window);
  }

  const cplx coarse = trapezoid(kernel, x, opts.window, opts.n_points) + tail;
  const cplx fine = trapezoid(kernel, x, opts.window, 2 * opts.n_points - 1) + tail;

  QuadratureResult r;
  const cplx integral = fine / (2.0 * kPi * kI);
  const cplx bg = kernel.background_amplitude() * std::cos(cfg.delta_k * x);
  r.value = (bg + 0.5 * kernel.prefactor() * integral) / (2.0 * kPi);

  const cplx psi_coarse =
      (bg + 0.5 * kernel.prefactor() * coarse / (2.0 * kPi * kI)) / (2.0 * kPi);
  const double scale = std::max(std::abs(r.value), 1e-300);
  r.relative_change = std::abs(r.value - psi_coarse) / scale;
  r.converged = r.relative_change <= 1e-5;
  return r;
}

namespace {

void fluorescence_row(const ModelParams& p, double E, double dk, std::span<const double> dp_grid,
                      FluorescenceRow* out) {
  const TwoPhotonKernel kernel(p, {E, dk, Channel::Reflected});
  const double scale = std::pow(p.Gamma, 4) / (4.0 * kPi * kPi);
  for (std::size_t j = 0; j < dp_grid.size(); ++j) {
    const double dp = dp_grid[j];
    out[j] = {dk, dp, scale * std::norm(kernel(cplx{dp, 0.0}))};
  }
}

}  // namespace

std::vector<FluorescenceRow> fluorescence_map(const ModelParams& p, double E,
                                              std::span<const double> dk_grid,
                                              std::span<const double> dp_grid) {
  std::vector<FluorescenceRow> rows(dk_grid.size() * dp_grid.size());
  parallel_for(static_cast<std::ptrdiff_t>(dk_grid.size()), [&](std::ptrdiff_t i) {
    fluorescence_row(p, E, dk_grid[i], dp_grid, rows.data() + i * dp_grid.size());
  });
  return rows;
}

namespace reference {

std::vector<FluorescenceRow> fluorescence_map(const ModelParams& p, double E,
                                              std::span<const double> dk_grid,
                                              std::span<const double> dp_grid) {
  std::vector<FluorescenceRow> rows(dk_grid.size() * dp_grid.size());
  for (std::size_t i = 0; i < dk_grid.size(); ++i)
    fluorescence_row(p, E, dk_grid[i], dp_grid, rows.data() + i * dp_grid.size());
  return rows;
}

}  // namespace reference

}  // namespace wga
