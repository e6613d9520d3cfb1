#pragma once

#include "hcert/cli/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace hcert::cli {

/// Invalid configuration; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One CLI invocation. Parameters that a subcommand does not use stay unset.
struct RunConfig {
    /// gm, ec, ss-primes, galois, matgrp or height.
    std::string subcommand;

    std::optional<long> n, n_max, p, samples, bound, root, zeta, primes, steps;
    std::optional<std::string> a4, a6, poly, mode, x, y;

    std::uint64_t seed = 1;
    unsigned precision = 64;
    /// Worker threads; never affects the report.
    unsigned jobs = 1;
    /// Report file; stdout when empty.
    std::string out;
    /// Suppress the human summary on stderr.
    bool json_only = false;

    /// Echo of everything that determines the report (not jobs or out).
    nlohmann::json echo() const;
};

/// HCERT_PRECISION when it holds a positive integer, else 64.
unsigned default_precision();

/// Validates the config and runs the subcommand. Throws UsageError for an
/// invalid config. Resource errors are caught and recorded in the report.
Report run(const RunConfig& config);

/// Parses the command line, runs, writes the report and returns the exit
/// code: 0 ok, 1 some record failed, 2 usage error, 3 resource error.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hcert::cli
