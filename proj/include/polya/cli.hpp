#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "polya/caps.hpp"

namespace polya {

enum class Command {
  characters,
  cycle_index,
  orbits,
  gn,
  verify,
  verify_product,
  verify_plethysm,
  verify_basis,
};

enum class Format { text, json, tsv };

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2,
  exit_cap = 3,
};

/// One unit of work. verify-product takes (W, chi) then (V, theta);
/// verify-plethysm takes the inner (V, theta) then the outer (W, chi), in the
/// same order as wreath(V, W).
struct JobSpec {
  Command command = Command::verify;
  std::vector<std::string> groups;
  std::vector<std::string> chars;
  std::uint32_t n = 0;
  Format format = Format::text;
  Caps caps;
  bool unchecked = false;  // skip homomorphism validation of characters

  /// "verify group=C(4) char=index:1 n=1"
  std::string describe() const;
};

std::string_view command_name(Command c);
Command parse_command(std::string_view name);

/// Parses and validates every group and character, then executes. Output is
/// deterministic for a fixed spec.
int run(JobSpec const &spec, std::ostream &out, std::ostream &err);

/// Catalog: one job per line, "command; key=value; ...", '#' comments.
/// Keys: group, char (both repeatable, in positional order), n (k, k-l or
/// a,b,c), maxpoints, unchecked. char=* expands to every linear character of
/// the corresponding group; expansions whose hypercube exceeds maxpoints are
/// dropped.
std::vector<JobSpec> parse_catalog(std::string_view text, Caps const &caps);

struct SuiteOptions {
  Format format = Format::text;
  unsigned jobs = 1;
};

/// Runs every job (concurrently up to options.jobs) and prints one line per
/// job in catalog order plus a summary. Returns 2 for an empty catalog or a
/// malformed job, else 3 if a cap was hit, else 1 on any mismatch, else 0.
int run_suite(std::vector<JobSpec> const &jobs, SuiteOptions const &options,
              std::ostream &out, std::ostream &err);

int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace polya
