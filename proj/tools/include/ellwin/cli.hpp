#pragma once

// Command-line front end: solve, sweep, bounds, check.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellwin/matcher.hpp"
#include "ellwin/result.hpp"

namespace ellwin::cli {

enum ExitCode : int { kOk = 0, kSolverFailure = 2, kInvalidArguments = 3, kIoFailure = 4 };

enum class SweepMode { surface, fixed_a, fixed_b, fixed_b_vs_r0, circular };

SweepMode parse_sweep_mode(const std::string &name);
const char *to_string(SweepMode mode);

/// "x", "x1,x2,..." or "start:stop:count" (inclusive, count >= 2).
std::vector<double> parse_grid(const std::string &text);

struct SweepSpec {
  SweepMode mode = SweepMode::surface;
  std::vector<double> a_values;
  std::vector<double> b_values;
  int m = 0;
  SolverOptions solver;
  std::string out;
  int jobs = 1;
  bool absolute = false;
};

/// Throws UsageError unless both grids (a only for circular) are nonempty,
/// strictly increasing and positive.
void validate(const SweepSpec &spec);

/// (a, b) pairs in output order.
std::vector<std::pair<double, double>> sweep_points(const SweepSpec &spec);

struct SweepRow {
  double a = 0.0, b = 0.0;
  double e = 0.0, r0 = 0.0;
  std::optional<EnergyResult> result;
  std::string diagnostic;
};

/// Shape columns of a row: eccentricity and r0 of the oriented window
/// (r0 = inf for a circle).
SweepRow describe_point(double a, double b);

std::vector<SweepRow> run_sweep(const SweepSpec &spec);

std::string csv_header();
void write_csv(std::ostream &os, const std::vector<SweepRow> &rows, bool absolute);
void write_failures(std::ostream &os, const std::vector<SweepRow> &rows);

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckLine> run_check_bounds(const SolverOptions &opts, int jobs);
std::vector<CheckLine> run_check_oracle(const SolverOptions &opts, int jobs);

/// Parses argv and runs one subcommand; returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace ellwin::cli
