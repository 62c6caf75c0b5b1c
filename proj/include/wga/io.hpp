#pragma once

// Parameter files, bundled presets and the CSV format shared by every CLI
// experiment. Numbers are written with 12 significant digits, '.' as the
// decimal separator and '\n' line endings, independent of the C locale.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wga/model.hpp"

namespace wga::io {

inline constexpr int kSignificantDigits = 12;

/// Shortest text that round-trips the value rounded to 12 significant digits.
std::string format_number(double v);

/// v rounded to 12 significant digits.
double round_sig(double v);

/// Keys: omega_c, Omega, Gamma, g_a/g_b/h as {mod, arg}, gamma_a, gamma_c.
/// Missing or unknown keys and wrong types throw InvalidConfig. The result is
/// not validated; call validate_params.
ModelParams params_from_json(const nlohmann::json& j);

nlohmann::ordered_json params_to_json(const ModelParams& p);

/// Two-space indented JSON with a trailing newline; numbers rounded to 12
/// significant digits.
std::string canonical_json(const ModelParams& p);

ModelParams load_params_file(const std::filesystem::path& path);

std::vector<std::string> preset_names();
/// Raw bundled file content. Throws InvalidConfig for unknown names.
std::string_view preset_text(std::string_view name);
ModelParams load_preset(std::string_view name);

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Table {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& t);
std::string to_csv(const Table& t);
void write_csv_file(const std::filesystem::path& path, const Table& t);

/// Column names of a CSV written by write_csv (first line not starting with '#').
std::vector<std::string> read_csv_columns(const std::filesystem::path& path);

}  // namespace wga::io
