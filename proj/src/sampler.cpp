#include "liftedmc/sampler.hpp"

#include <numeric>
#include <random>

#include "liftedmc/errors.hpp"

namespace liftedmc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Canonical 53-bit uniform in [0, 1); identical on every platform.
Real uniform01(std::mt19937_64& eng) {
    return static_cast<Real>(eng() >> 11) * 0x1.0p-53;
}

const Edge& sample_edge(const std::vector<Edge>& row, std::mt19937_64& eng) {
    const Real u = uniform01(eng);
    Real acc = 0;
    for (const Edge& e : row) {
        acc += e.p;
        if (u < acc) return e;
    }
    return row.back(); // residual rounding mass
}

} // namespace

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

ChainRun run(const TransitionKernel& k, Index start, long steps,
             std::uint64_t seed) {
    if (start < 0 || start >= k.state_count()) {
        throw DimensionMismatchError("start state out of range");
    }
    if (steps < 0) {
        throw DimensionMismatchError("steps must be non-negative");
    }
    ChainRun result;
    result.seed = seed;
    result.steps = steps;
    result.occupancy.assign(k.state_count(), 0);
    result.per_state_moves.assign(k.state_count(), {});

    std::mt19937_64 eng(stream_seed(seed, 0));
    Index state = start;
    result.occupancy[state]++;
    for (long t = 0; t < steps; ++t) {
        const Edge& e = sample_edge(k.row(state), eng);
        result.move_counts[static_cast<int>(e.kind)]++;
        result.per_state_moves[state][static_cast<int>(e.kind)]++;
        state = e.to;
        result.occupancy[state]++;
    }
    result.final_state = state;
    return result;
}

Real ExcursionStats::mean_length() const {
    if (lengths.empty()) return 0;
    const Real total = std::accumulate(lengths.begin(), lengths.end(), Real(0));
    return total / static_cast<Real>(lengths.size());
}

Real ExcursionStats::flip_fraction(long f) const {
    if (flips_per_excursion.empty()) return 0;
    long hits = 0;
    for (long v : flips_per_excursion) {
        if (v == f) ++hits;
    }
    return static_cast<Real>(hits) / static_cast<Real>(flips_per_excursion.size());
}

ExcursionStats excursions(const TransitionKernel& k, Index basepoint,
                          long count, std::uint64_t seed, long step_cap) {
    if (basepoint < 0 || basepoint >= k.state_count()) {
        throw DimensionMismatchError("basepoint out of range");
    }
    if (count < 1) {
        throw DimensionMismatchError("count must be >= 1");
    }
    ExcursionStats stats;
    stats.count = count;
    stats.step_cap = step_cap;
    stats.lengths.reserve(count);
    stats.flips_per_excursion.reserve(count);

    for (long i = 0; i < count; ++i) {
        std::mt19937_64 eng(stream_seed(seed, static_cast<std::uint64_t>(i) + 1));
        // Wait out stationary self-loops: the chain has not left yet.
        Index state = basepoint;
        long length = 0;
        long flips = 0;
        bool truncated = false;
        while (true) {
            const Edge& e = sample_edge(k.row(state), eng);
            if (length == 0 && e.to == basepoint) {
                stats.basepoint_hold_steps++;
                continue;
            }
            ++length;
            if (e.kind == MoveKind::Flip || e.kind == MoveKind::Stationary) {
                ++flips;
            }
            state = e.to;
            if (state == basepoint) break;
            if (length >= step_cap) {
                truncated = true;
                break;
            }
        }
        if (truncated) {
            stats.truncated++;
        } else {
            stats.lengths.push_back(length);
            stats.flips_per_excursion.push_back(flips);
        }
    }
    return stats;
}

Real empirical_tv(const ChainRun& r, const Vector& target) {
    if (static_cast<Index>(r.occupancy.size()) != target.size()) {
        throw DimensionMismatchError("occupancy size does not match target");
    }
    if (r.steps < 1) {
        throw DimensionMismatchError("run has no steps");
    }
    const Real total = static_cast<Real>(r.steps) + 1.0;
    Real sum = 0;
    for (Index s = 0; s < target.size(); ++s) {
        sum += std::abs(static_cast<Real>(r.occupancy[s]) / total - target[s]);
    }
    return 0.5 * sum;
}

} // namespace liftedmc
