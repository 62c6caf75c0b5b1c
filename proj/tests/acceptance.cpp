// Acceptance run: one PASS/FAIL line per criterion, runtime limit included.
// Exit status is the number of failed criteria (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "wga/cli.hpp"
#include "wga/correlation.hpp"
#include "wga/error.hpp"
#include "wga/grid.hpp"
#include "wga/jc.hpp"
#include "wga/linalg.hpp"
#include "wga/onephoton.hpp"
#include "wga/twophoton.hpp"

using namespace wga;
using namespace wga::test;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& s) {
    if (!detail.empty()) detail += "; ";
    detail += s;
  }
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<Extremum> maxima(std::span<const double> x, std::span<const double> y) {
  std::vector<Extremum> out;
  for (const Extremum& e : find_extrema(x, y))
    if (e.kind == ExtremumKind::Maximum) out.push_back(e);
  return out;
}

std::vector<double> reflection(const std::vector<SpectrumRow>& rows) {
  std::vector<double> r;
  for (const SpectrumRow& s : rows) r.push_back(s.R2);
  return r;
}

const std::vector<double>& spectrum_grid() {
  static const std::vector<double> g = uniform_grid(-15.0, 15.0, 3001);
  return g;
}

Verdict spectrum_a() {
  Verdict v;
  const ModelParams p = preset_a();
  const auto& k = spectrum_grid();
  const auto peaks = maxima(k, reflection(spectrum_scan(p, k)));
  v.require(peaks.size() == 3, std::to_string(peaks.size()) + " peaks");
  const double r0 = std::norm(amplitudes_closed(p, 0.0).R);
  v.require(std::abs(r0 - 1.0) <= 1e-6, "|R|^2(0) = " + fmt("%.9f", r0));
  if (peaks.size() == 3) {
    v.require(std::abs(peaks[1].location) < 0.3, "central at " + fmt("%.3f", peaks[1].location));
    const auto es = linalg::eig_general(heff1_matrix(apply_dissipation(p)));
    for (int s = 0; s < 2; ++s) {
      const double at = peaks[s == 0 ? 0 : 2].location;
      const double target = (s == 0 ? -1 : 1) * std::sqrt(50.0);
      v.require(std::abs(at - target) < 0.3, "side peak " + fmt("%.3f", at));
      v.require(std::abs(at - es.values[s == 0 ? 0 : 2].real()) < 0.3, "side peak off Re eig");
    }
    v.note("peaks " + fmt("%.3f", peaks[0].location) + ", " + fmt("%.3f", peaks[1].location) + ", " +
           fmt("%.3f", peaks[2].location));
  }
  return v;
}

Verdict spectrum_b() {
  Verdict v;
  const auto& k = spectrum_grid();
  const auto peaks = maxima(k, reflection(spectrum_scan(preset_b(), k)));
  v.require(peaks.size() == 3, std::to_string(peaks.size()) + " peaks");
  if (peaks.size() == 3) {
    v.require(std::abs(peaks[1].location + 2.0) <= 0.1, "free-mode peak " + fmt("%.3f", peaks[1].location));
    v.require(std::abs(peaks[0].location + 5.07) < 0.3, "lower JC peak " + fmt("%.3f", peaks[0].location));
    v.require(std::abs(peaks[2].location - 9.07) < 0.3, "upper JC peak " + fmt("%.3f", peaks[2].location));
    v.note("peaks " + fmt("%.3f", peaks[0].location) + ", " + fmt("%.3f", peaks[1].location) + ", " +
           fmt("%.3f", peaks[2].location));
  }
  return v;
}

Verdict unitarity() {
  Verdict v;
  Rng rng(1001);
  double worst = 0.0, lossy_max = 0.0;
  for (int n = 0; n < 200; ++n) {
    const ModelParams p = random_params(rng, false);
    const ModelParams q = random_params(rng, true);
    for (int t = 0; t < 20; ++t) {
      const double k = uniform(rng, -15.0, 15.0);
      const OnePhotonAmps a = amplitudes_closed(p, k);
      worst = std::max(worst, std::abs(std::norm(a.T) + std::norm(a.R) - 1.0));
      const OnePhotonAmps b = amplitudes_closed(q, k);
      lossy_max = std::max(lossy_max, std::norm(b.T) + std::norm(b.R));
    }
  }
  v.require(worst < 1e-9, "lossless deviation " + fmt("%.2e", worst));
  v.require(lossy_max <= 1.0 + 1e-12, "lossy max " + fmt("%.12f", lossy_max));
  v.note("max ||T|^2+|R|^2-1| = " + fmt("%.2e", worst));
  return v;
}

Verdict fluorescence() {
  Verdict v;
  const auto g = uniform_grid(-15.0, 15.0, 201);
  for (double E : {-14.0, 13.0}) {
    const auto map = fluorescence_map(preset_a(), E, g, g);
    std::vector<double> vals;
    for (const FluorescenceRow& r : map) vals.push_back(r.B_R);
    const auto peaks = find_maxima_2d(g, g, vals);
    const std::size_t want = E < 0 ? 1 : 4;
    v.require(peaks.size() == want, "E=" + fmt("%g", E) + ": " + std::to_string(peaks.size()) + " maxima");
    if (E < 0 && peaks.size() == 1)
      v.require(std::abs(peaks[0].x) < 1e-12 && std::abs(peaks[0].y) < 1e-12, "maximum off (0,0)");
    v.note("E=" + fmt("%g", E) + ": " + std::to_string(peaks.size()) + " maxima");
  }
  return v;
}

Verdict quadrature() {
  Verdict v;
  Rng rng(1005);
  double worst = 0.0;
  for (int n = 0; n < 5; ++n) {
    const ModelParams p = random_params(rng, n % 2 == 1);
    for (Channel ch : {Channel::Reflected, Channel::Transmitted}) {
      const TwoPhotonConfig cfg{2.0 * uniform(rng, -8, 8), uniform(rng, -3, 3), ch};
      for (double x : {0.1, 1.0, 5.0}) {
        const cplx res = wavefunction_residue(p, cfg, x);
        const QuadratureResult q = wavefunction_quadrature(p, cfg, x);
        worst = std::max(worst, std::abs(q.value - res) / std::abs(res));
        v.require(q.converged, "quadrature not converged");
      }
    }
  }
  v.require(worst < 1e-4, "relative error " + fmt("%.2e", worst));
  v.note("max relative error " + fmt("%.2e", worst));
  return v;
}

Verdict closed_forms() {
  Verdict v;
  Rng rng(1006);
  std::vector<ModelParams> presets{preset_a(), preset_b()};
  for (int n = 0; n < 10; ++n) presets.push_back(random_single_mode(rng, n % 3 != 0));
  double kern = 0.0, wave = 0.0, amp = 0.0, free_res = 0.0;
  for (const ModelParams& p : presets) {
    v.require(classify_regime(p).tag == RegimeTag::SingleModeDecoupled, "preset not single-mode");
    for (int t = 0; t < 20; ++t) {
      const double E = 2.0 * uniform(rng, -8, 8), dk = uniform(rng, -3, 3);
      const cplx dp = t % 2 ? cplx{uniform(rng, -8, 8), 0.0} : polar_draw(rng, 0.1, 6.0);
      const cplx uc = jc::kernel_U_closed(p, E, dk, dp), wc = jc::kernel_W_closed(p, E, dk, dp);
      kern = std::max(kern, std::abs(kernel_U(p, E, dk, dp) - uc) / std::max(1.0, std::abs(uc)));
      kern = std::max(kern, std::abs(kernel_W(p, E, dk, dp) - wc) / std::max(1.0, std::abs(wc)));
      const OnePhotonAmps a = amplitudes_closed(p, dk), b = amplitudes_resolvent(p, dk);
      amp = std::max({amp, std::abs(a.R - b.R), std::abs(a.T - b.T)});
    }
    const JcModes jm = jc_transform(p);
    for (Channel ch : {Channel::Reflected, Channel::Transmitted}) {
      const TwoPhotonConfig cfg{2.0 * uniform(rng, -8, 8), uniform(rng, -2, 2), ch};
      const TwoPhotonWavefunction psi = two_photon_wavefunction(p, cfg);
      for (double x : {0.0, 0.3, 1.0, 2.5, 6.0}) {
        const cplx c = jc::wavefunction_closed(p, cfg, x);
        wave = std::max(wave, std::abs(psi(x) - c) / std::max(1.0, std::abs(c)));
      }
      int free = 0;
      for (int l = 1; l < 3; ++l)
        if (std::abs(psi.residues.eigenvalues[l] - jm.omega_B) <
            std::abs(psi.residues.eigenvalues[free] - jm.omega_B))
          free = l;
      if (std::abs(psi.residues.eigenvalues[free] - jm.omega_B) < 1e-6)
        free_res = std::max(free_res, std::abs(psi.residues.residues[free]));
    }
  }
  v.require(kern < 1e-8, "kernel mismatch " + fmt("%.2e", kern));
  v.require(wave < 1e-8, "wavefunction mismatch " + fmt("%.2e", wave));
  v.require(amp < 1e-8, "single-photon mismatch " + fmt("%.2e", amp));
  v.require(free_res < 1e-9, "free-mode residue " + fmt("%.2e", free_res));
  v.note("kernels " + fmt("%.1e", kern) + ", wavefunctions " + fmt("%.1e", wave) + ", free residue " +
         fmt("%.1e", free_res));
  return v;
}

Verdict blockade_single() {
  Verdict v;
  auto tau = uniform_grid(0.0, 3.0, 3001);
  const CorrelationTrace t = g2_trace(preset_a(), {-14.0, 0.0, Channel::Reflected}, tau);
  const double g0 = t.g2[0];
  v.require(g0 < 1.0, "g2(0) = " + fmt("%.4f", g0));
  std::size_t below = 0, imin = 1;
  double gmax = 0.0;
  for (std::size_t i = 1; i < tau.size(); ++i) {
    if (!(g0 < t.g2[i])) ++below;
    if (t.g2[i] < t.g2[imin]) imin = i;
    gmax = std::max(gmax, t.g2[i]);
  }
  v.require(below == 0, std::to_string(below) + " delays with g2(tau) <= g2(0), min " +
                            fmt("%.6f", t.g2[imin]) + " at tau=" + fmt("%.3f", tau[imin]) +
                            " vs g2(0)=" + fmt("%.6f", g0));
  v.require(gmax <= 1.0 + 0.02, "g2 max " + fmt("%.4f", gmax));
  const CorrelationTrace flat = g2_trace(preset_a(), {0.0, 0.0, Channel::Reflected}, tau);
  double dev = 0.0;
  for (double g : flat.g2) dev = std::max(dev, std::abs(g - 1.0));
  v.require(dev < 0.05, "free-mode deviation " + fmt("%.4f", dev));
  v.note("g2(0)=" + fmt("%.5f", g0) + ", free-mode max|g2-1|=" + fmt("%.4f", dev));
  return v;
}

Verdict blockade_twomode() {
  Verdict v;
  const ModelParams p = with_theta0(preset_twomode(), 0.0);
  const auto& k = spectrum_grid();
  const auto peaks = maxima(k, reflection(spectrum_scan(p, k)));
  const double targets[] = {-7.39, 1.0, 10.84};
  std::string found;
  for (const Extremum& e : peaks) found += (found.empty() ? "" : ", ") + fmt("%.3f", e.location);
  v.require(peaks.size() == 3, std::to_string(peaks.size()) + " maxima");
  for (double target : targets) {
    double best = 1e300;
    for (const Extremum& e : peaks) best = std::min(best, std::abs(e.location - target));
    v.require(best < 0.3, "no maximum within 0.3 of " + fmt("%.2f", target));
    const double g0 = g2_zero(p, {2.0 * target, 0.0, Channel::Reflected});
    v.require(g0 < 0.1, "g2(0) at " + fmt("%.2f", target) + " = " + fmt("%.3f", g0));
  }
  std::string at_peaks;
  for (const Extremum& e : peaks)
    at_peaks += (at_peaks.empty() ? "" : ", ") +
                fmt("%.3f", g2_zero(p, {2.0 * e.location, 0.0, Channel::Reflected}));
  v.note("maxima at " + found + "; g2(0) there " + at_peaks);
  return v;
}

Verdict theta_invariance() {
  Verdict v;
  Rng rng(1009);
  const auto k = uniform_grid(-12.0, 12.0, 241);
  const auto th = uniform_grid(-kPi, kPi, 25);
  double worst_r = 0.0, worst_g = 0.0;
  for (int n = 0; n < 4; ++n) {
    const ModelParams base = n == 0 ? preset_twomode() : random_params(rng, n == 3);
    const double phi = uniform(rng, -kPi, kPi);
    ModelParams shifted = base;
    shifted.h *= std::polar(1.0, -phi);
    for (double t : th) {
      const ModelParams a = with_theta0(base, t), b = with_theta0(shifted, t + phi);
      for (double kk : k)
        worst_r = std::max(worst_r, std::abs(std::abs(amplitudes_closed(a, kk).R) -
                                             std::abs(amplitudes_closed(b, kk).R)));
    }
    std::vector<double> th_shift(th);
    for (double& t : th_shift) t += phi;
    const G2Map ma = g2_zero_map(base, k, th), mb = g2_zero_map(shifted, k, th_shift);
    for (std::size_t i = 0; i < ma.rows.size(); ++i) {
      if (ma.rows[i].vanishing || mb.rows[i].vanishing) {
        v.require(ma.rows[i].vanishing == mb.rows[i].vanishing, "vanishing flags differ");
        continue;
      }
      const double ga = std::exp(ma.rows[i].ln_g2_0), gb = std::exp(mb.rows[i].ln_g2_0);
      worst_g = std::max(worst_g, std::abs(ga - gb) / std::max(1.0, std::abs(ga)));
    }
  }
  v.require(worst_r < 1e-9, "|R| deviation " + fmt("%.2e", worst_r));
  v.require(worst_g < 1e-9, "g2(0) deviation " + fmt("%.2e", worst_g));
  v.note("|R| " + fmt("%.1e", worst_r) + ", g2(0) " + fmt("%.1e", worst_g));
  return v;
}

std::string run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"wga"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return code == 0 ? "" : "exit " + std::to_string(code) + ": " + err.str();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict properties() {
  Verdict v;
  Rng rng(1010);
  int done = 0, rejected = 0;
  double worst = 0.0;
  while (done < 100) {
    const int dim = 2 + done % 7;
    const MatrixXc m = random_disc_matrix(rng, dim);
    linalg::Eigensystem es;
    try {
      es = linalg::eig_general(m);
    } catch (const Error&) {
      ++rejected;
      continue;
    }
    const MatrixXc id = MatrixXc::Identity(dim, dim);
    MatrixXc sum = MatrixXc::Zero(dim, dim), rebuilt = sum;
    for (int l = 0; l < dim; ++l) {
      sum += es.projectors[l];
      rebuilt += es.values[l] * es.projectors[l];
      worst = std::max(worst, (es.projectors[l] * es.projectors[l] - es.projectors[l]).norm());
    }
    worst = std::max({worst, (sum - id).norm(), (rebuilt - m).norm(),
                      (MatrixXc(es.left.transpose() * es.right) - id).norm()});
    ++done;
  }
  v.require(worst < 1e-9, "eigensystem defect " + fmt("%.2e", worst));

  double even = 0.0, jump = 0.0;
  bool finite = true;
  for (int n = 0; n < 30; ++n) {
    const ModelParams p = random_params(rng, n % 2 == 1);
    for (Channel ch : {Channel::Reflected, Channel::Transmitted}) {
      const TwoPhotonConfig cfg{2.0 * uniform(rng, -8, 8), uniform(rng, -3, 3), ch};
      const TwoPhotonKernel kp(p, cfg), km(p, {cfg.E, -cfg.delta_k, ch});
      for (int t = 0; t < 10; ++t) {
        const cplx dp{uniform(rng, -10, 10), 0.0};
        const cplx a = kp(dp);
        const double s = std::max(1.0, std::abs(a));
        even = std::max({even, std::abs(a - kp(-dp)) / s, std::abs(a - km(dp)) / s});
      }
      for (double sgn : {-1.0, 1.0}) {
        const double at = sgn * cfg.delta_k;
        const cplx c = kp(at);
        finite = finite && std::isfinite(c.real()) && std::isfinite(c.imag());
        const double s = std::max(1.0, std::abs(c));
        jump = std::max({jump, std::abs(kp(at - 1e-7) - kp(at + 1e-7)) / s,
                         std::abs(c - 0.5 * (kp(at - 1e-7) + kp(at + 1e-7))) / s});
      }
    }
  }
  v.require(even < 1e-10, "evenness " + fmt("%.2e", even));
  v.require(finite, "non-finite kernel at +-delta_k");
  v.require(jump < 1e-6, "two-sided limits differ by " + fmt("%.2e", jump));

  const fs::path dir = fs::temp_directory_path() / "wga_acceptance";
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> jobs{
      {"spectrum", "--preset", "fig_spectrum_b"},
      {"g2map", "--preset", "fig_twomode", "--E-points", "61", "--theta-points", "37"},
      {"fluorescence", "--preset", "fig_spectrum_a", "--E", "13", "--dk-points", "61", "--dp-points", "61"},
      {"g2trace", "--preset", "fig_spectrum_a", "--E-half", "-7"}};
  bool same = true;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    std::string first;
    for (const char* threads : {"1", "4", "1"}) {
      setenv("WGA_THREADS", threads, 1);
      auto args = jobs[j];
      const fs::path out = dir / ("job" + std::to_string(j) + ".csv");
      args.insert(args.end(), {"--out", out.string()});
      const std::string err = run_cli(args);
      v.require(err.empty(), err);
      const std::string body = slurp(out);
      if (first.empty()) first = body;
      same = same && body == first && !body.empty();
    }
  }
  unsetenv("WGA_THREADS");
  fs::remove_all(dir);
  v.require(same, "CSV output differs between runs");
  v.note("eig defect " + fmt("%.1e", worst) + " (" + std::to_string(rejected) +
         " defective draws skipped), evenness " + fmt("%.1e", even) + ", limit gap " + fmt("%.1e", jump));
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Verdict()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "single-photon spectrum, single-mode preset", 1, spectrum_a},
      {2, "single-photon spectrum, free-mode preset", 1, spectrum_b},
      {3, "unitarity", 1, unitarity},
      {4, "fluorescence topology", 120, fluorescence},
      {5, "residue wavefunction vs quadrature", 60, quadrature},
      {6, "closed forms vs general machinery", 10, closed_forms},
      {7, "photon blockade, single-mode", 10, blockade_single},
      {8, "photon blockade, two-mode", 30, blockade_twomode},
      {9, "theta0 + theta_h invariance", 60, theta_invariance},
      {10, "property suites and determinism", 60, properties},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.require(false, std::string("threw ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    v.require(dt < c.limit_s, "over the runtime limit");
    if (!v.ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s, limit %g s) %s\n", v.ok ? "PASS" : "FAIL", c.id, c.name,
                dt, c.limit_s, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
