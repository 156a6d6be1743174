#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "vcq/oracle_io.hpp"

namespace vcq::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kNotKConnected = 3,
    kMismatch = 4,
};

// Entry point shared by the vcq binary and the tests.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

struct BenchResult {
    std::size_t queries = 0;
    std::size_t con_answers = 0;
    // Best mean over the repetitions, nanoseconds per query (con + cut).
    double mean_ns = 0.0;
};

// Times query_cut over `queries` uniformly random pairs s != t.
BenchResult bench_queries(const Oracle& oracle, std::size_t queries, std::uint64_t seed, unsigned repetitions = 5);

// Human-readable space accounting with the bounds each count must meet.
std::string describe(const Oracle& oracle);

}  // namespace vcq::cli
