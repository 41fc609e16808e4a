#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "circulus/bounds.hpp"
#include "circulus/enclosure.hpp"

namespace circulus::cli {

enum class Command { compute, ladder, order, barycenter, segment, appendix_f, verify };
enum class Format { plain, csv, json };

struct RunConfig {
  Command command = Command::compute;
  std::optional<Method> method;
  int seed_sides = 6;
  int doublings = 4;
  int digits = 10;
  Format format = Format::plain;
  std::string theta = "pi/2";
  std::string radius = "1";
  std::string x = "1";
  int samples = 100;
  std::uint64_t rng_seed = 1;
};

enum ExitCode : int { ok = 0, verify_failure = 1, indeterminate = 2, usage = 64, domain = 65 };

/// Parses argv (argv[0] is the program name), runs the command and writes
/// its report to out and diagnostics to err. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Working precision for `digits`, or the CIRCULUS_PRECISION_BITS override.
/// Throws std::invalid_argument for a malformed or too small override.
Precision working_precision(int digits);

/// Angle such as "1.25", "pi", "pi/3", "2pi/3" or "3/4*pi".
Enclosure parse_angle(const std::string& text, Precision p);

/// CSV and JSON cells of a bounds row, rendered at `digits` significant digits.
struct RowCells {
  std::string method;
  long n;
  std::string side;
  std::string lo;  // rounded down
  std::string hi;  // rounded up
  std::string width;
  int correct_digits;
  std::string rendered;
};
RowCells row_cells(const BoundsRow& row, int digits);

}  // namespace circulus::cli
