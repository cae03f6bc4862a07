#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ptsech/model.hpp"
#include "ptsech_cli/emit.hpp"

namespace ptsech::cli {

enum class Command { Spectrum, Scatter, Wavefunction, Verify, Sweep };

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numeric = 3;

/// Largest analytic/oracle deviation `verify` accepts.
inline constexpr double verify_threshold = 1e-6;

struct RunConfig {
  Command command = Command::Spectrum;
  PotentialSpec spec{0.0, 1.0};
  /// Empty means both branches (verify only).
  std::optional<Branch> branch = Branch::ConjK;
  /// Energy grid; a single entry for --E.
  std::vector<double> energies;
  int n_max = 1;
  std::vector<double> xs;
  cplx c1{1.0, 0.0};
  cplx c2{0.0, 0.0};
  double X = 0.0;
  double tol = 1e-13;
  Format format = Format::Json;
  std::string output;
};

/// Result of argument parsing: a config, or the exit code to return at once
/// (0 after --help, 2 after a usage error, with the message already written).
struct Parsed {
  std::optional<RunConfig> config;
  int exit_code = exit_ok;
};

Parsed parse_arguments(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The records a command produces. Numerical failures propagate as
/// ptsech::Error.
Table build_table(const RunConfig& config);

/// Largest deviation column of a verify table.
double max_deviation(const Table& verify_table);

/// Parses, computes and writes; returns the process exit code.
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptsech::cli
