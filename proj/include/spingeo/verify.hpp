#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spingeo::verify {

struct RunReport {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  double elapsed_ms = 0.0;
};

/// Runs the full claims suite: octonion table, Fano plane, hypercomplex
/// identities, Pauli/matrix agreement, degree table, line census, heptads,
/// pentads/decads, the polar-space quadrangle, the 15-line census search,
/// and the so(4) suite. Deterministic for a fixed seed.
std::vector<RunReport> verify_all(std::uint64_t seed = 0x5eed);

bool all_passed(const std::vector<RunReport>& reports);

/// One line per report: "PASS name (expected vs actual)".
/// with_timing appends the elapsed milliseconds.
std::string format_reports(const std::vector<RunReport>& reports, bool with_timing);

}  // namespace spingeo::verify
