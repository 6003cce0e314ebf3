#ifndef QUENCH_FIGURES_HPP
#define QUENCH_FIGURES_HPP

// Tabulated figure data and the single-quantity tables behind the CLI. Every
// table is a header plus rows of doubles, written as CSV with 12 significant
// digits.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "quench/core.hpp"

namespace quench::figures {

enum class Command {
  Fig1,
  Fig2,
  Fig3,
  Fig4,
  Fig5,
  Fig6,
  Fig7,
  Density,
  Wigner,
  Classical,
  Moments,
};

std::string_view to_string(Command c);

/// Overrides of the defaults in quench/defaults.hpp. Which keys a command
/// accepts is given by accepted_keys().
struct FigureParams {
  std::optional<double> k0a;
  std::optional<double> omega_ratio;
  std::optional<double> t;
  std::optional<double> xmax;
  std::optional<std::size_t> nx;
};

/// Keys (CLI flag names without dashes) that `c` accepts besides "out".
std::vector<std::string_view> accepted_keys(Command c);

/// Column schema of `c`, one line per column.
std::string_view schema(Command c);

/// Throws InvalidParams naming the offending key.
void validate(const FigureParams& p);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table make_table(Command c, const FigureParams& p = {}, const Tolerances& tol = {},
                 Exec exec = Exec::Serial);

void write_csv(std::ostream& out, const Table& table);

/// Parses "1.2", "pi/2", "pi/2.5", "2*pi/5", "pi": a real number optionally
/// containing the token `pi`. Throws InvalidParams on anything else.
double parse_real(std::string_view text, std::string_view key);

}  // namespace quench::figures

#endif  // QUENCH_FIGURES_HPP
