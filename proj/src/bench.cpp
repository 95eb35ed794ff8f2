#include "stmod/bench.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "stmod/errors.hpp"
#include "stmod/generators.hpp"
#include "stmod/modulus.hpp"

namespace stmod::bench {

std::vector<std::size_t> default_sizes(const std::string& family) {
    std::vector<std::size_t> out;
    if (family == "complete")
        for (std::size_t n = 4; n <= 40; n += 4) out.push_back(n);
    else if (family == "multipartite")
        for (std::size_t k = 3; k <= 16; ++k) out.push_back(k);
    else if (family == "gnp")
        for (std::size_t n = 20; n <= 200; n += 20) out.push_back(n);
    else if (family == "geometric")
        for (std::size_t n = 10; n <= 100; n += 10) out.push_back(n);
    else
        throw DomainError("unknown graph family '" + family + "'");
    return out;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t n) {
    return seed * 0x9E3779B97F4A7C15ULL + n;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRecord> out;
    for (const std::string& family : config.families) {
        const auto sizes = config.sizes.empty() ? default_sizes(family) : config.sizes;
        for (std::size_t n : sizes) {
            const MultiGraph g = gen::generate(family, n, instance_seed(config.seed, n));
            BenchRecord rec{family, n, g.vertex_count(), g.edge_count(), 0, {}};
            bool timed_out = false;
            for (unsigned rep = 0; rep < std::max(1u, config.reps); ++rep) {
                ModulusOptions opts;
                const auto start = clock::now();
                if (config.timeout) opts.deadline = start + *config.timeout;
                try {
                    const ModulusResult r = spanning_tree_modulus(g, opts);
                    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
                    const std::int64_t t = std::max<std::int64_t>(1, ns);
                    rec.nanos = rep == 0 ? t : std::min(rec.nanos, t);
                    rec.result = to_fraction_string(r.modulus);
                } catch (const Timeout&) {
                    timed_out = true;
                    break;
                }
            }
            if (!timed_out) out.push_back(std::move(rec));
        }
    }
    return out;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << csv_header << '\n';
    for (const auto& r : records)
        out << r.family << ',' << r.n << ',' << r.vertices << ',' << r.edges << ',' << r.nanos << ','
            << r.result << '\n';
    return out.str();
}

std::optional<double> fit_loglog_slope(const std::vector<BenchRecord>& records,
                                       const std::string& family) {
    std::vector<double> xs, ys;
    std::set<std::size_t> distinct;
    for (const auto& r : records) {
        if (r.family != family || r.edges == 0 || r.nanos <= 0) continue;
        xs.push_back(std::log(static_cast<double>(r.edges)));
        ys.push_back(std::log(static_cast<double>(r.nanos)));
        distinct.insert(r.edges);
    }
    if (distinct.size() < 2) return std::nullopt;

    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

double envelope_exponent(const std::string& family) {
    double vertex_power = 1.0;
    if (family == "complete")
        vertex_power = 0.5;
    else if (family == "multipartite")
        vertex_power = 2.0 / 3.0;
    else if (family != "gnp" && family != "geometric")
        throw DomainError("unknown graph family '" + family + "'");
    return 2.0 * vertex_power + 2.5;
}

}  // namespace stmod::bench
