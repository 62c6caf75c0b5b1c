#include "wga/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "wga/error.hpp"
#include "wga/presets_data.hpp"

namespace wga::io {

namespace {

using nlohmann::json;

Error bad(const std::string& what) { return Error(ErrorCode::InvalidConfig, what); }

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw bad(std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number()) throw bad(std::string("key '") + key + "' must be a number");
  return v.get<double>();
}

cplx polar_entry(const json& j, const char* key) {
  if (!j.contains(key)) throw bad(std::string("missing key '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_object()) throw bad(std::string("key '") + key + "' must be {mod, arg}");
  for (const auto& item : v.items())
    if (item.key() != "mod" && item.key() != "arg")
      throw bad(std::string("unknown key '") + item.key() + "' in '" + key + "'");
  const double mod = number(v, "mod"), arg = number(v, "arg");
  if (mod < 0.0) throw bad(std::string("'") + key + ".mod' must be >= 0");
  return std::polar(mod, arg);
}

nlohmann::ordered_json polar_json(cplx z) {
  nlohmann::ordered_json o;
  const double mod = round_sig(std::abs(z));
  o["mod"] = mod;
  o["arg"] = mod == 0.0 ? 0.0 : round_sig(std::arg(z));
  return o;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), round_sig(v));
  return std::string(buf.data(), res.ptr);
}

double round_sig(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific,
                           kSignificantDigits - 1);
  double out = 0.0;
  std::from_chars(buf.data(), res.ptr, out);
  return out;
}

ModelParams params_from_json(const json& j) {
  if (!j.is_object()) throw bad("parameter file must be a JSON object");
  static const std::set<std::string> known = {"omega_c", "Omega",   "Gamma",   "g_a",
                                              "g_b",     "h",       "gamma_a", "gamma_c"};
  for (const auto& item : j.items())
    if (!known.count(item.key())) throw bad("unknown key '" + item.key() + "'");
  ModelParams p;
  p.omega_c = number(j, "omega_c");
  p.Omega = number(j, "Omega");
  p.Gamma = number(j, "Gamma");
  p.g_a = polar_entry(j, "g_a");
  p.g_b = polar_entry(j, "g_b");
  p.h = polar_entry(j, "h");
  p.gamma_a = number(j, "gamma_a");
  p.gamma_c = number(j, "gamma_c");
  return p;
}

nlohmann::ordered_json params_to_json(const ModelParams& p) {
  nlohmann::ordered_json j;
  j["omega_c"] = round_sig(p.omega_c);
  j["Omega"] = round_sig(p.Omega);
  j["Gamma"] = round_sig(p.Gamma);
  j["g_a"] = polar_json(p.g_a);
  j["g_b"] = polar_json(p.g_b);
  j["h"] = polar_json(p.h);
  j["gamma_a"] = round_sig(p.gamma_a);
  j["gamma_c"] = round_sig(p.gamma_c);
  return j;
}

std::string canonical_json(const ModelParams& p) { return params_to_json(p).dump(2) + "\n"; }

ModelParams load_params_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bad("cannot open parameter file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw bad(path.string() + ": " + e.what());
  }
  return params_from_json(j);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& entry : detail::kPresets) out.emplace_back(entry.name);
  return out;
}

std::string_view preset_text(std::string_view name) {
  for (const auto& entry : detail::kPresets)
    if (entry.name == name) return entry.text;
  throw bad("unknown preset '" + std::string(name) + "'");
}

ModelParams load_preset(std::string_view name) {
  try {
    return params_from_json(json::parse(preset_text(name)));
  } catch (const json::exception& e) {
    throw bad(std::string(name) + ": " + e.what());
  }
}

void write_csv(std::ostream& os, const Table& t) {
  for (const auto& [k, v] : t.metadata) os << "# " << k << ": " << v << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << '\n';
  }
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

void write_csv_file(const std::filesystem::path& path, const Table& t) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw bad("cannot write " + path.string());
  out << to_csv(t);
  if (!out) throw bad("write failed for " + path.string());
}

std::vector<std::string> read_csv_columns(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bad("cannot open " + path.string());
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string c;
    while (std::getline(ss, c, ',')) cols.push_back(c);
    return cols;
  }
  return {};
}

}  // namespace wga::io
