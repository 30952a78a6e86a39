#ifndef ROOMMATES_BENCH_HPP
#define ROOMMATES_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "roommates/model.hpp"

namespace roommates {

struct BenchRecord {
    int n = 0;
    int rep = 0;
    double elapsed_ms = 0.0;
    int iterations = 0;
    bool efficient = false;
};

struct BenchOptions {
    std::vector<int> sizes;
    int reps = 5;
    std::uint64_t seed = 0;
    double solo_prob = 0.2;
};

/// Per-record seed: base + splitmix64(n << 32 | rep).
std::uint64_t bench_seed(std::uint64_t base, int n, int rep);

/// Generates one instance per (size, rep) and times check() alone —
/// generation and setup stay outside the clock. Irrational pairs are
/// dissolved from the generated matching first so every timed run
/// exercises the graph pipeline instead of the O(n) early exit.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Least-squares slope of log(median elapsed) against log(n); NaN when
/// fewer than two distinct sizes are present.
double fit_loglog_slope(const std::vector<BenchRecord>& records);

/// CSV with header n,rep,elapsed_ms,iterations,verdict.
std::string bench_csv(const std::vector<BenchRecord>& records);

/// The instance a bench record timed (regenerates deterministically).
Instance bench_instance(const BenchOptions& options, int n, int rep);

} // namespace roommates

#endif
