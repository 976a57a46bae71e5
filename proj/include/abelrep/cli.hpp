#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "abelrep/group_model.hpp"
#include "abelrep/oracle.hpp"
#include "abelrep/render.hpp"

namespace abelrep {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;        // parse / input errors
inline constexpr int kExitNotCoprime = 3;   // gcd(q, |G|) > 1
inline constexpr int kExitOracleBound = 4;  // |G| above the oracle bound
inline constexpr int kExitMismatch = 5;     // verification failed

enum class OutputFormat { kTable, kJson, kCsv };

/// Range of extension degrees over a fixed characteristic; a single field is
/// the degenerate range m_lo == m_hi.
struct FieldRange {
  Int p;
  unsigned long m_lo = 1;
  unsigned long m_hi = 1;
  bool is_range = false;
};

/// Resolves the mutually exclusive field options: --q N alone, or --p P with
/// exactly one of --m M / --m-range LO:HI. Throws InputError on conflicting
/// or missing options, NotAPrimePower on invalid q or p.
FieldRange parse_field(const std::optional<std::string>& q,
                       const std::optional<std::string>& p,
                       const std::optional<std::string>& m,
                       const std::optional<std::string>& m_range);

struct RunRequest {
  CyclicFactorList group;
  FieldRange field;
  OutputFormat format = OutputFormat::kTable;
  bool verify = false;
  bool show_divisors = false;
  std::uint64_t oracle_bound = kDefaultOracleBound;
};

/// Maps a thrown error to the process exit code.
int exit_code_for(const std::exception& error);

/// Executes a request: computes the degree table for every field in the
/// range, optionally cross-checks each against the brute-force enumeration,
/// and writes the rendered output to `out`. Diagnostics go to `err`. Returns
/// the process exit code.
int run(const RunRequest& request, std::ostream& out, std::ostream& err);

/// Full command-line entry point (flag parsing + run).
int run_main(int argc, const char* const* argv);

}  // namespace abelrep
