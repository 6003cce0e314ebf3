// quench: command-line front end writing figure data and the property report.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quench/figures.hpp"
#include "quench/report.hpp"

namespace {

using quench::figures::Command;

struct Options {
  std::map<std::string, std::string> raw;
  std::string out;
};

std::size_t parse_count(const std::string& text, const std::string& key) {
  std::size_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw quench::Error(quench::ErrorCode::InvalidParams,
                        key + ": cannot parse '" + text + "' as a positive integer");
  }
  return v;
}

quench::figures::FigureParams to_params(const Options& o) {
  quench::figures::FigureParams p;
  for (const auto& [key, text] : o.raw) {
    if (key == "nx") {
      p.nx = parse_count(text, key);
    } else {
      const double v = quench::figures::parse_real(text, key);
      if (key == "k0a") p.k0a = v;
      if (key == "omega-ratio") p.omega_ratio = v;
      if (key == "t") p.t = v;
      if (key == "xmax") p.xmax = v;
    }
  }
  return p;
}

// Writes `text` to the requested path (stdout when empty) in one piece.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw quench::Error(quench::ErrorCode::InvalidParams, "out: cannot open '" + path + "' for writing");
  }
  file << text;
  if (!file.flush()) {
    throw quench::Error(quench::ErrorCode::InvalidParams, "out: failed writing '" + path + "'");
  }
}

const char* flag_help(std::string_view key) {
  if (key == "k0a") return "k0 a of the initial well, in (0, pi/2]; accepts forms like pi/2.5";
  if (key == "omega-ratio") return "omega_f / omega_i (> 0)";
  if (key == "t") return "time in units of t0 = m a^2 / hbar (>= 0)";
  if (key == "xmax") return "grid half-width (x/a, or u for fig5)";
  if (key == "nx") return "number of grid samples";
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum quench toolkit: figure data as CSV (12 significant digits) and a property report.\n"
      "Units: hbar = m = 1; lengths in a, times in t0 = m a^2 / hbar (fig1: oscillator units).\n"
      "Thread count: OMP_NUM_THREADS."};
  app.require_subcommand(1);

  const Command commands[] = {Command::Fig1,    Command::Fig2,   Command::Fig3,      Command::Fig4,
                              Command::Fig5,    Command::Fig6,   Command::Fig7,      Command::Density,
                              Command::Wigner,  Command::Classical, Command::Moments};
  std::map<CLI::App*, Command> which;
  std::map<Command, Options> options;
  for (Command c : commands) {
    const std::string name(quench::figures::to_string(c));
    auto* sub = app.add_subcommand(name, "write the " + name + " table");
    sub->footer("CSV columns:\n" + std::string(quench::figures::schema(c)));
    auto& o = options[c];
    for (auto key : quench::figures::accepted_keys(c)) {
      const std::string k(key);
      sub->add_option_function<std::string>(
          "--" + k, [&o, k](const std::string& v) { o.raw[k] = v; }, flag_help(key));
    }
    sub->add_option("--out", o.out, "output file (default: stdout)");
    which[sub] = c;
  }

  std::string report_out;
  auto* report = app.add_subcommand("report", "evaluate the acceptance criteria and invariant suites");
  report->add_option("--out", report_out, "output file (default: stdout)");
  report->footer("CSV columns:\ncheck: criterion_<n> or <module>/<property>\nstatus: PASS or FAIL\n"
                 "seconds: wall time of the check\ndetail: measured values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) {
      const auto results = quench::report::run_report(quench::Exec::Parallel);
      std::ostringstream text;
      quench::report::write_report(text, results);
      emit(report_out, text.str());
      for (const auto& r : results) {
        if (!r.pass) return 1;
      }
      return 0;
    }
    for (const auto& [sub, c] : which) {
      if (!sub->parsed()) continue;
      const auto& o = options[c];
      const auto table = quench::figures::make_table(c, to_params(o), {}, quench::Exec::Parallel);
      std::ostringstream text;
      quench::figures::write_csv(text, table);
      emit(o.out, text.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
