#include "wga/cli.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <optional>

#include "CLI11.hpp"
#include "wga/correlation.hpp"
#include "wga/error.hpp"
#include "wga/grid.hpp"
#include "wga/io.hpp"
#include "wga/linalg.hpp"
#include "wga/onephoton.hpp"
#include "wga/parallel.hpp"
#include "wga/twophoton.hpp"

namespace wga::cli {

namespace {

struct Source {
  std::string preset;
  std::string params_file;
  std::string out;
  bool emit_plot = false;
};

struct Options {
  Source src;
  // spectrum
  double k_min = -kDefaultSpectrumHalfWidth, k_max = kDefaultSpectrumHalfWidth;
  std::size_t k_points = kDefaultSpectrumPoints;
  // fluorescence
  double E = 0.0;
  double dk_max = 15.0, dp_max = 15.0;
  std::size_t dk_points = 201, dp_points = 201;
  // wavefunction / g2trace
  double E_half = 0.0, delta_k = 0.0;
  std::string channel = "reflected";
  double x_min = -5.0, x_max = 5.0;
  std::size_t x_points = 501;
  double tau_max = 5.0;
  std::size_t tau_points = 501;
  // g2map
  double e_min = -15.0, e_max = 15.0;
  std::size_t e_points = 301;
  double theta_min = -kPi, theta_max = kPi;
  std::size_t theta_points = 181;
  // eigen
  int sector = 1;
};

Error config_error(const std::string& what) { return Error(ErrorCode::InvalidConfig, what); }

void add_source(CLI::App* sub, Source& s, bool out_required) {
  auto* preset = sub->add_option("--preset", s.preset, "Bundled parameter set")
                     ->check(CLI::IsMember(io::preset_names()));
  auto* params = sub->add_option("--params", s.params_file, "JSON parameter file")
                     ->check(CLI::ExistingFile);
  preset->excludes(params);
  params->excludes(preset);
  auto* out = sub->add_option("--out", s.out,
                              out_required ? "Output CSV path" : "Output CSV path (default: stdout)");
  if (out_required) out->required();
  sub->add_flag("--emit-plot", s.emit_plot, "Also write a matplotlib script next to the CSV");
}

void add_grid(CLI::App* sub, const std::string& name, double& lo, double& hi, std::size_t& n,
              const std::string& what) {
  sub->add_option("--" + name + "-min", lo, "Lower end of the " + what + " grid")->capture_default_str();
  sub->add_option("--" + name + "-max", hi, "Upper end of the " + what + " grid")->capture_default_str();
  sub->add_option("--" + name + "-points", n, "Number of " + what + " grid points")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void add_channel(CLI::App* sub, Options& o) {
  sub->add_option("--channel", o.channel, "Outgoing channel")
      ->capture_default_str()
      ->check(CLI::IsMember({"reflected", "transmitted"}));
}

Channel parse_channel(const std::string& s) {
  return s == "transmitted" ? Channel::Transmitted : Channel::Reflected;
}

// Shifts every energy so that omega_c is the origin.
ModelParams rebase(ModelParams p) {
  p.Omega -= p.omega_c;
  p.omega_c = 0.0;
  return p;
}

struct Loaded {
  ModelParams params;
  io::Metadata meta;
};

Loaded load(const std::string& kind, const Source& s) {
  if (s.preset.empty() == s.params_file.empty())
    throw config_error("exactly one of --preset or --params is required");
  const ModelParams raw = s.preset.empty() ? io::load_params_file(s.params_file)
                                           : io::load_preset(s.preset);
  const ModelParams p = validate_params(raw);
  Loaded l{rebase(p), {}};
  l.meta.emplace_back("tool", std::string("wga ") + kVersion);
  l.meta.emplace_back("kind", kind);
  l.meta.emplace_back("source", s.preset.empty() ? "params:" + s.params_file : "preset:" + s.preset);
  l.meta.emplace_back("params", io::params_to_json(p).dump());
  l.meta.emplace_back("units", "energies in Gamma, origin omega_c; lengths and times in 1/Gamma");
  const Regime r = classify_regime(p);
  l.meta.emplace_back("regime", r.tag == RegimeTag::SingleModeDecoupled ? "SingleModeDecoupled" : "TwoMode");
  return l;
}

void check_grid(double lo, double hi, std::size_t n, const char* what) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || (n > 1 && !(hi > lo)) || n == 0)
    throw config_error(std::string("invalid ") + what + " grid");
}

void finish(const io::Table& t, const Source& s, std::ostream& out) {
  if (s.out.empty()) {
    io::write_csv(out, t);
    return;
  }
  io::write_csv_file(s.out, t);
  out << s.out << ": " << t.rows.size() << " rows\n";
  if (s.emit_plot) out << emit_plot_script(s.out).string() << ": plot script\n";
}

void run_spectrum(const Options& o, std::ostream& out) {
  check_grid(o.k_min, o.k_max, o.k_points, "k");
  Loaded l = load("spectrum", o.src);
  const auto grid = uniform_grid(o.k_min, o.k_max, o.k_points);
  io::Table t{std::move(l.meta), {"k", "T2", "R2", "argT", "argR"}, {}};
  std::vector<double> r2;
  for (const SpectrumRow& r : spectrum_scan(l.params, grid)) {
    t.rows.push_back({r.k, r.T2, r.R2, r.argT, r.argR});
    r2.push_back(r.R2);
  }
  finish(t, o.src, out);
  for (const Extremum& e : find_extrema(grid, r2))
    if (e.kind == ExtremumKind::Maximum)
      out << "R2 maximum at k = " << io::format_number(e.location) << " (" << io::format_number(e.value) << ")\n";
}

void run_fluorescence(const Options& o, std::ostream& out) {
  check_grid(-o.dk_max, o.dk_max, o.dk_points, "dk");
  check_grid(-o.dp_max, o.dp_max, o.dp_points, "dp");
  if (!std::isfinite(o.E)) throw config_error("--E must be finite");
  Loaded l = load("fluorescence", o.src);
  l.meta.emplace_back("E", io::format_number(o.E));
  const auto dk = uniform_grid(-o.dk_max, o.dk_max, o.dk_points);
  const auto dp = uniform_grid(-o.dp_max, o.dp_max, o.dp_points);
  io::Table t{std::move(l.meta), {"dk", "dp", "B_R"}, {}};
  std::vector<double> values;
  for (const FluorescenceRow& r : fluorescence_map(l.params, o.E, dk, dp)) {
    t.rows.push_back({r.delta_k, r.delta_p, r.B_R});
    values.push_back(r.B_R);
  }
  finish(t, o.src, out);
  for (const Peak2D& pk : find_maxima_2d(dk, dp, values))
    out << "B_R maximum at (" << io::format_number(pk.x) << ", " << io::format_number(pk.y)
        << ") = " << io::format_number(pk.value) << "\n";
}

TwoPhotonConfig pair_config(const Options& o) {
  if (!std::isfinite(o.E_half) || !std::isfinite(o.delta_k))
    throw config_error("--E-half and --delta-k must be finite");
  return {2.0 * o.E_half, o.delta_k, parse_channel(o.channel)};
}

void add_pair_meta(io::Metadata& m, const TwoPhotonConfig& cfg) {
  m.emplace_back("E_half", io::format_number(0.5 * cfg.E));
  m.emplace_back("delta_k", io::format_number(cfg.delta_k));
  m.emplace_back("channel", to_string(cfg.channel));
}

void run_wavefunction(const Options& o, std::ostream& out) {
  check_grid(o.x_min, o.x_max, o.x_points, "x");
  const TwoPhotonConfig cfg = pair_config(o);
  Loaded l = load("wavefunction", o.src);
  add_pair_meta(l.meta, cfg);
  l.meta.emplace_back("phase", "center-of-mass factor exp(+-iE x_c) dropped");
  const TwoPhotonWavefunction psi = two_photon_wavefunction(l.params, cfg);
  io::Table t{std::move(l.meta), {"x", "re_psi", "im_psi", "abs2"}, {}};
  for (double x : uniform_grid(o.x_min, o.x_max, o.x_points)) {
    const cplx v = psi(x);
    t.rows.push_back({x, v.real(), v.imag(), std::norm(v)});
  }
  finish(t, o.src, out);
}

void run_g2trace(const Options& o, std::ostream& out) {
  if (!(o.tau_max > 0.0) || !std::isfinite(o.tau_max)) throw config_error("--tau-max must be > 0");
  if (o.tau_points < 2) throw config_error("--tau-points must be >= 2");
  const TwoPhotonConfig cfg = pair_config(o);
  Loaded l = load("g2trace", o.src);
  add_pair_meta(l.meta, cfg);
  l.meta.emplace_back("normalization", to_string(Normalization::BackgroundNormalized));
  l.meta.emplace_back("normalization_note",
                      "|psi(tau)|^2 / |psi_bg(tau)|^2; the integral over the second photon diverges for plane waves");
  const auto tau = uniform_grid(0.0, o.tau_max, o.tau_points);
  const CorrelationTrace tr = g2_trace(l.params, cfg, tau);
  io::Table t{std::move(l.meta), {"tau", "g2"}, {}};
  for (std::size_t i = 0; i < tau.size(); ++i) t.rows.push_back({tau[i], tr.g2[i]});
  finish(t, o.src, out);
  out << "g2(0) = " << io::format_number(tr.g2.front()) << "\n";
}

void run_g2map(const Options& o, std::ostream& out) {
  check_grid(o.e_min, o.e_max, o.e_points, "E-half");
  check_grid(o.theta_min, o.theta_max, o.theta_points, "theta0");
  Loaded l = load("g2map", o.src);
  l.meta.emplace_back("channel", "reflected");
  l.meta.emplace_back("delta_k", "0");
  l.meta.emplace_back("normalization", to_string(Normalization::BackgroundNormalized));
  l.meta.emplace_back("flag", "1 = vanishing background, ln_g2_0 is nan");
  const auto eh = uniform_grid(o.e_min, o.e_max, o.e_points);
  const auto th = uniform_grid(o.theta_min, o.theta_max, o.theta_points);
  const G2Map map = g2_zero_map(l.params, eh, th);

  io::Table contour{l.meta, {"E_half", "theta0"}, {}};
  contour.metadata.emplace_back("contour", "g2(0) = 1");
  for (const ContourPoint& c : map.unit_contour) contour.rows.push_back({c.E_half, c.theta0});

  io::Table t{std::move(l.meta), {"E_half", "theta0", "ln_g2_0", "flag"}, {}};
  for (const G2MapRow& r : map.rows) t.rows.push_back({r.E_half, r.theta0, r.ln_g2_0, r.vanishing ? 1.0 : 0.0});
  finish(t, o.src, out);

  std::filesystem::path cpath = o.src.out;
  cpath.replace_extension(".contour.csv");
  io::write_csv_file(cpath, contour);
  out << cpath.string() << ": " << contour.rows.size() << " contour points\n";
}

void run_eigen(const Options& o, std::ostream& out) {
  Loaded l = load("eigen", o.src);
  l.meta.emplace_back("sector", std::to_string(o.sector));
  const EffectiveParams e = apply_dissipation(l.params);
  const MatrixXc h = o.sector == 1 ? build_heff1(e).entries : build_heff2(e).entries;
  const linalg::Eigensystem es = linalg::eig_general(h);
  io::Table t{std::move(l.meta), {"index", "re", "im"}, {}};
  for (int i = 0; i < es.dim(); ++i)
    t.rows.push_back({static_cast<double>(i), es.values[i].real(), es.values[i].imag()});
  finish(t, o.src, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon scattering in a waveguide coupled to a whispering-gallery resonator with a "
               "two-level atom.\nEnergies are in units of Gamma measured from omega_c. "
               "WGA_THREADS caps the number of worker threads.",
               "wga"};
  app.set_version_flag("--version", std::string("wga ") + kVersion);
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 2 invalid configuration, 3 numerical failure.");

  Options o;
  std::function<void(const Options&, std::ostream&)> action;

  auto* spec = app.add_subcommand("spectrum", "Single-photon |T|^2, |R|^2 and phases versus k");
  add_source(spec, o.src, true);
  add_grid(spec, "k", o.k_min, o.k_max, o.k_points, "incident energy");
  spec->callback([&] { action = run_spectrum; });

  auto* fl = app.add_subcommand("fluorescence", "Reflected two-photon background fluorescence B_R(dk, dp)");
  add_source(fl, o.src, true);
  fl->add_option("--E", o.E, "Total two-photon energy E - 2 omega_c")->required();
  fl->add_option("--dk-max", o.dk_max, "Half-width of the Delta_k axis")->capture_default_str();
  fl->add_option("--dp-max", o.dp_max, "Half-width of the Delta_p axis")->capture_default_str();
  fl->add_option("--dk-points", o.dk_points, "Delta_k grid points")->capture_default_str()->check(CLI::PositiveNumber);
  fl->add_option("--dp-points", o.dp_points, "Delta_p grid points")->capture_default_str()->check(CLI::PositiveNumber);
  fl->callback([&] { action = run_fluorescence; });

  auto* wf = app.add_subcommand("wavefunction", "Outgoing two-photon wavefunction psi(x), x = x1 - x2");
  add_source(wf, o.src, true);
  wf->add_option("--E-half", o.E_half, "Mean photon energy E/2 - omega_c")->required();
  wf->add_option("--delta-k", o.delta_k, "Incident relative momentum")->capture_default_str();
  add_channel(wf, o);
  add_grid(wf, "x", o.x_min, o.x_max, o.x_points, "relative coordinate");
  wf->callback([&] { action = run_wavefunction; });

  auto* g2 = app.add_subcommand("g2trace", "Second-order correlation g2(tau)");
  add_source(g2, o.src, true);
  g2->add_option("--E-half", o.E_half, "Mean photon energy E/2 - omega_c")->required();
  g2->add_option("--delta-k", o.delta_k, "Incident relative momentum")->capture_default_str();
  add_channel(g2, o);
  g2->add_option("--tau-max", o.tau_max, "Largest delay")->capture_default_str();
  g2->add_option("--tau-points", o.tau_points, "Number of delays on [0, tau-max]")->capture_default_str();
  g2->callback([&] { action = run_g2trace; });

  auto* gm = app.add_subcommand("g2map",
                                "Reflected ln g2(0) over (E/2, theta0), theta0 = arg(g_b/g_a); "
                                "also writes the g2(0) = 1 contour to <out>.contour.csv");
  add_source(gm, o.src, true);
  add_grid(gm, "E", o.e_min, o.e_max, o.e_points, "E/2 - omega_c");
  add_grid(gm, "theta", o.theta_min, o.theta_max, o.theta_points, "theta0");
  gm->callback([&] { action = run_g2map; });

  auto* eg = app.add_subcommand("eigen", "Eigenvalues of the one- or two-excitation effective Hamiltonian");
  add_source(eg, o.src, false);
  eg->add_option("--sector", o.sector, "Excitation number")->capture_default_str()->check(CLI::IsMember({1, 2}));
  eg->callback([&] { action = run_eigen; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidConfig;
  }

  try {
    if (o.src.emit_plot && o.src.out.empty()) throw config_error("--emit-plot requires --out");
    action(o, out);
  } catch (const Error& e) {
    err << "wga: " << e.what() << "\n";
    return is_config_error(e.code()) ? kExitInvalidConfig : kExitNumerical;
  } catch (const std::exception& e) {
    err << "wga: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace wga::cli
