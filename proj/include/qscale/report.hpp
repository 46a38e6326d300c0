#pragma once

// Command-line front end.  Subcommands:
//
//   analyze  <file.qrm> [--format F] [--exact] [--drift-rel X] [--drift-abs X]
//            [--growth-trigger X] [--field-cutoff X]
//   curve    <file.qrm> [--law NAME] [--n-start N] [--n-end N] [--points P] [--format F]
//   hydrogen --n-qubits N [--format F]
//   tile     --dims a,b,... [--format F]
//   compare  --n-qubits N [--format F] [--exact]
//
// F is one of table, json, csv.  Data goes to `out`, diagnostics to `err`.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qscale::cli {

enum class ReportFormat { Table, Json, Csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_parse_error = 2;
inline constexpr int exit_domain_error = 3;
inline constexpr int exit_usage = 64;

struct RunOptions {
  /// ANSI bold table headers.
  bool color = false;
};

/// argv[0] is the program name.  Never throws; every failure maps to an exit
/// code.
int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err, const RunOptions& options = {});

/// Up to `points` distinct integers from start to end inclusive, roughly
/// evenly spaced in log N, ascending.
std::vector<std::uint64_t> geometric_grid(std::uint64_t start, std::uint64_t end, std::size_t points);

}  // namespace qscale::cli
