#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bchden/bch.hpp"

namespace bchden::cli {

enum class OutputFormat { Plain, Json, Csv };

/// Exit codes of the bchden executable.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_budget = 3,
};

struct RunConfig {
    std::size_t max_degree = ScanOptions::default_max_degree;
    unsigned alphabet_size = 2;
    Backend backend = Backend::WordDp;
    OutputFormat output_format = OutputFormat::Plain;
    /// 0 means auto (hardware concurrency).
    unsigned parallelism = 0;
    std::uint64_t enumeration_bound = EnumerationBound::default_max;

    /// Throws std::invalid_argument when an invariant is broken.
    void validate() const;
    ScanOptions scan_options() const;
    unsigned workers() const;
};

/// Environment variable consulted for the default --parallelism.
inline constexpr const char* parallelism_env = "BCHDEN_PARALLELISM";

/// Runs the tool; returns the process exit code. Never calls std::exit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// RFC-4180 field quoting: fields containing ',', '"', CR or LF are quoted and
/// embedded quotes doubled.
std::string csv_field(std::string_view field);
std::string csv_row(const std::vector<std::string>& fields);
/// Inverse of csv_row for a single record.
std::vector<std::string> parse_csv_row(std::string_view line);

} // namespace bchden::cli
