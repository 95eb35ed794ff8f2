#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "stmod/graph.hpp"
#include "stmod/rational.hpp"

namespace stmod {

/// Small exact fraction num/den with positive denominator, kept as a pair of
/// machine integers so it can drive the integer basis computation.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational to_rational() const { return make_rational(num, den); }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

/// The finite set {p/q : 1 <= p <= min(|V|-1, q), 1 <= q <= |E|} holding theta(G).
class ThetaCandidates {
public:
    ThetaCandidates(std::size_t vertex_count, std::size_t edge_count);

    const std::vector<Ratio>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Ratio& operator[](std::size_t i) const { return values_[i]; }

private:
    std::vector<Ratio> values_;  // strictly increasing, lowest terms
};

inline ThetaCandidates theta_candidates(std::size_t vertex_count, std::size_t edge_count) {
    return ThetaCandidates(vertex_count, edge_count);
}

/// theta(G) <= p/q, decided by whether the integer basis reaches q(|V|-1).
bool is_theta_le(const MultiGraph& g, std::int64_t p, std::int64_t q);

struct ProbeRecord {
    Ratio threshold;
    std::int64_t basis_total;
    bool theta_le;
};

struct CriticalSetResult {
    Ratio theta_ratio;
    Rational theta;
    EdgeSubset critical;
    bool used_fallback = false;
    std::vector<ProbeRecord> probes;
};

struct VulnerabilityOptions {
    // Discard the set returned at y = theta(G) so the shifted rerun is exercised.
    bool force_fallback = false;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// theta(G) by binary search over the candidate set, plus a certified critical
/// set. When the basis run at theta(G) leaves J empty the computation is
/// repeated at theta(G) - 1/|E|^2, whose J is always critical.
CriticalSetResult vulnerability(const MultiGraph& g, const VulnerabilityOptions& options = {});

}  // namespace stmod
