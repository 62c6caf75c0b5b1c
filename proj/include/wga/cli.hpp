#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace wga::cli {

inline constexpr const char* kVersion = "1.0.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Entry point of the wga tool. Diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Matplotlib script for a CSV with one of the known column sets.
/// Throws UnknownColumns otherwise.
std::string plot_script(const std::vector<std::string>& columns, const std::string& csv_name);

/// Writes the script next to the CSV (same stem, .py) and returns its path.
std::filesystem::path emit_plot_script(const std::filesystem::path& csv);

}  // namespace wga::cli
