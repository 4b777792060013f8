#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dahaknots/invariants.hpp"

namespace dahaknots {

enum class Command { Macdonald, Torus, Iterated, CD, Oracle, Verify, Selftest };
enum class OutputFormat { Text, Json };

struct RunConfig {
    Command command = Command::Selftest;
    std::int64_t n = 1;
    CableSpec pairs;
    Family family = Family::Cherednik;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> output_path;
    std::int64_t torus_r = 0, torus_s = 1;
    // Test fixture: multiplies the compared value by -q before verifying,
    // exercising the mismatch exit path.
    bool corrupt_prefactor = false;
};

// Parses argv (without the program name); throws usage_error with the
// offending token on malformed input.
RunConfig parse_args(const std::vector<std::string>& args);

// "2,3;2,5" -> pair list; validates coprimality.
std::vector<std::pair<std::int64_t, std::int64_t>> parse_pairs(const std::string& text);

// Executes the configured command, writing the report to out.
// Returns the process exit code: 0 success, 1 verification mismatch,
// 2 usage error (thrown instead), 3 internal assertion failure (thrown
// instead).
int execute(const RunConfig& cfg, std::ostream& out);

std::string usage_text();

}  // namespace dahaknots
