#include <fstream>

#include "wga/cli.hpp"
#include "wga/error.hpp"
#include "wga/io.hpp"

namespace wga::cli {

namespace {

using Columns = std::vector<std::string>;

const char* kHeader = R"py(import sys
import numpy as np
import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

csv = sys.argv[1] if len(sys.argv) > 1 else "{CSV}"
with open(csv) as fh:
    lines = [l for l in fh if not l.startswith("#")]
d = np.genfromtxt(lines, delimiter=",", names=True)
)py";

// Lattice tables are written first-column-major.
const char* kGrid = R"py(def grid(x, y, z):
    xs, ys = np.unique(x), np.unique(y)
    return xs, ys, z.reshape(len(xs), len(ys)).T

)py";

const char* kSpectrum = R"py(fig, ax = plt.subplots()
ax.plot(d["k"], d["T2"], label="|T|^2")
ax.plot(d["k"], d["R2"], label="|R|^2")
ax.set_xlabel("delta_k (Gamma)")
ax.legend()
)py";

const char* kFluorescence = R"py(xs, ys, z = grid(d["dk"], d["dp"], d["B_R"])
fig, ax = plt.subplots()
m = ax.pcolormesh(xs, ys, z, shading="auto")
fig.colorbar(m, label="B_R")
ax.set_xlabel("Delta_k (Gamma)")
ax.set_ylabel("Delta_p (Gamma)")
)py";

const char* kWavefunction = R"py(fig, ax = plt.subplots()
ax.plot(d["x"], d["abs2"])
ax.set_xlabel("x")
ax.set_ylabel("|psi|^2")
)py";

const char* kG2Trace = R"py(fig, ax = plt.subplots()
ax.plot(d["tau"], d["g2"])
ax.axhline(1.0, color="k", lw=0.5)
ax.set_xlabel("tau (1/Gamma)")
ax.set_ylabel("g2(tau)")
)py";

const char* kG2Map = R"py(xs, ys, z = grid(d["E_half"], d["theta0"], d["ln_g2_0"])
fig, ax = plt.subplots()
m = ax.pcolormesh(xs, ys / np.pi, z, shading="auto")
fig.colorbar(m, label="ln g2(0)")
ax.contour(xs, ys / np.pi, z, levels=[0.0], colors="k")
ax.set_xlabel("E/2 (Gamma)")
ax.set_ylabel("theta0 / pi")
)py";

const char* kEigen = R"py(fig, ax = plt.subplots()
ax.scatter(d["re"], d["im"])
ax.set_xlabel("Re")
ax.set_ylabel("Im")
)py";

const char* kFooter = R"py(fig.tight_layout()
fig.savefig(csv.rsplit(".", 1)[0] + ".png", dpi=150)
)py";

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
}

}  // namespace

std::string plot_script(const Columns& columns, const std::string& csv_name) {
  const char* body = nullptr;
  bool lattice = false;
  if (columns == Columns{"k", "T2", "R2", "argT", "argR"}) {
    body = kSpectrum;
  } else if (columns == Columns{"dk", "dp", "B_R"}) {
    body = kFluorescence;
    lattice = true;
  } else if (columns == Columns{"x", "re_psi", "im_psi", "abs2"}) {
    body = kWavefunction;
  } else if (columns == Columns{"tau", "g2"}) {
    body = kG2Trace;
  } else if (columns == Columns{"E_half", "theta0", "ln_g2_0", "flag"}) {
    body = kG2Map;
    lattice = true;
  } else if (columns == Columns{"index", "re", "im"}) {
    body = kEigen;
  } else {
    std::string got;
    for (const auto& c : columns) got += (got.empty() ? "" : ",") + c;
    throw Error(ErrorCode::UnknownColumns, "unrecognized CSV columns: " + got);
  }
  std::string s = kHeader;
  replace_all(s, "{CSV}", csv_name);
  if (lattice) s += kGrid;
  return s + body + kFooter;
}

std::filesystem::path emit_plot_script(const std::filesystem::path& csv) {
  const std::string text = plot_script(io::read_csv_columns(csv), csv.filename().string());
  std::filesystem::path script = csv;
  script.replace_extension(".py");
  std::ofstream out(script, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write " + script.string());
  out << text;
  return script;
}

}  // namespace wga::cli
