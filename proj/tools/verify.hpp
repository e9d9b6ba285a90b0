#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace zsw::cli {

struct VerifyOptions {
    std::string suite;
    std::int64_t max_order = 8;
    int m_max = 2;
    std::string pairs = "builtin";
    /// Per-search node budget; a case whose search runs out is skipped.
    std::uint64_t budget = 2'000'000;
    unsigned workers = 1;
};

struct VerifySummary {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

const std::vector<std::string>& verify_suites();

/// Prints one PASS/FAIL/SKIP line per case and a summary line. Throws
/// std::invalid_argument for an unknown suite.
VerifySummary run_verify(const VerifyOptions& options, std::ostream& out);

} // namespace zsw::cli
