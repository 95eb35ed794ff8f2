#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stmod::bench {

struct BenchRecord {
    std::string family;
    std::size_t n = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::int64_t nanos = 0;  // fastest of the repetitions, at least 1
    std::string result;      // modulus as num/den
};

struct BenchConfig {
    std::vector<std::string> families;
    std::vector<std::size_t> sizes;  // empty: the family's default desk sizes
    unsigned reps = 1;
    std::uint64_t seed = 1;
    std::optional<std::chrono::milliseconds> timeout;  // per instance
};

/// Desk-scale parameter sweep for a family (n for complete/gnp/geometric, k for
/// multipartite).
std::vector<std::size_t> default_sizes(const std::string& family);

/// Seed used for instance n of a random family.
std::uint64_t instance_seed(std::uint64_t seed, std::size_t n);

/// Times spanning_tree_modulus on each instance. Instances that time out are
/// left out of the result.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline const char* csv_header = "family,n,vertices,edges,nanos,result";
std::string to_csv(const std::vector<BenchRecord>& records);

/// Least-squares slope of log(nanos) against log(edges) over one family's
/// records; nullopt with fewer than two distinct edge counts.
std::optional<double> fit_loglog_slope(const std::vector<BenchRecord>& records,
                                       const std::string& family);

/// Exponent p such that |V|^2 |E|^(5/2) log|V| grows like |E|^p on the family,
/// taking |V| ~ |E|^a with a = 1/2 (complete), 2/3 (multipartite), 1 (gnp,
/// geometric) and dropping the logarithm.
double envelope_exponent(const std::string& family);

}  // namespace stmod::bench
