#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace isospec::cli {

/// Exit codes. Comparisons use Same/Differ/Inconclusive; computations
/// return Same on success. InputError covers every failure.
enum ExitCode : int { Same = 0, Differ = 1, Inconclusive = 2, InputError = 3 };

/// Resolves a data path: as given, then under $ISOSPEC_DATA_DIR, then under
/// the bundled data directory. A leading "data/" component is also tried
/// stripped against both directories.
std::filesystem::path resolve_data_path(const std::string& path);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace isospec::cli
