#include "roommates/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "roommates/checker.hpp"
#include "roommates/gen.hpp"

namespace roommates {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t bench_seed(std::uint64_t base, int n, int rep) {
    return base + splitmix64((static_cast<std::uint64_t>(n) << 32) |
                             static_cast<std::uint32_t>(rep));
}

Instance bench_instance(const BenchOptions& options, int n, int rep) {
    Instance inst = generate_instance({n, bench_seed(options.seed, n, rep), options.solo_prob});
    auto pairs = find_irrational_pairs(inst);
    if (pairs.empty())
        return inst;
    Matching cleaned = improve_from_irrational(inst.matching, pairs);
    return Instance(std::move(inst.profile), std::move(cleaned));
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
    if (options.sizes.empty())
        raise(Errc::BadArgs, "bench needs at least one size");
    for (int n : options.sizes)
        if (n < 3)
            raise(Errc::BadArgs, "bench sizes must be >= 3");
    if (options.reps < 1)
        raise(Errc::BadArgs, "bench needs reps >= 1");

    std::vector<BenchRecord> records;
    records.reserve(options.sizes.size() * options.reps);
    for (int n : options.sizes) {
        for (int rep = 0; rep < options.reps; ++rep) {
            Instance inst = bench_instance(options, n, rep);
            auto t0 = std::chrono::steady_clock::now();
            Verdict verdict = check(inst);
            auto t1 = std::chrono::steady_clock::now();
            double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            records.push_back({n, rep, ms, verdict.iterations, verdict.efficient});
        }
    }
    return records;
}

double fit_loglog_slope(const std::vector<BenchRecord>& records) {
    std::map<int, std::vector<double>> by_size;
    for (const auto& r : records)
        by_size[r.n].push_back(r.elapsed_ms);
    if (by_size.size() < 2)
        return std::numeric_limits<double>::quiet_NaN();

    std::vector<double> xs, ys;
    for (auto& [n, times] : by_size) {
        std::sort(times.begin(), times.end());
        double median = times.size() % 2 == 1
                            ? times[times.size() / 2]
                            : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
        median = std::max(median, 1e-6); // clock-resolution floor
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(median));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    return num / den;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream os;
    os << "n,rep,elapsed_ms,iterations,verdict\n";
    for (const auto& r : records)
        os << r.n << "," << r.rep << "," << r.elapsed_ms << "," << r.iterations << ","
           << (r.efficient ? "true" : "false") << "\n";
    return os.str();
}

} // namespace roommates
