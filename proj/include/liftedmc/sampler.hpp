#ifndef LIFTEDMC_SAMPLER_HPP
#define LIFTEDMC_SAMPLER_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "liftedmc/kernel.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

// RNG contract: mt19937_64 seeded through a splitmix64 scramble of
// (seed, stream). Uniform doubles are drawn as (engine() >> 11) * 2^-53 so
// runs are bit-reproducible across platforms.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream);

struct ChainRun {
    std::uint64_t seed = 0;
    long steps = 0;
    std::vector<std::uint64_t> occupancy;       // sums to steps + 1
    std::array<std::uint64_t, 6> move_counts{}; // indexed by MoveKind
    // move_counts broken down by the state the move was taken from
    std::vector<std::array<std::uint64_t, 6>> per_state_moves;
    Index final_state = 0;
};

ChainRun run(const TransitionKernel& k, Index start, long steps,
             std::uint64_t seed);

struct ExcursionStats {
    long count = 0;
    std::vector<long> lengths;             // all >= 2
    std::vector<long> flips_per_excursion; // F' observations
    long truncated = 0;                    // excursions cut at the step cap
    std::uint64_t basepoint_hold_steps = 0; // stationary moves while parked
    long step_cap = 0;

    Real mean_length() const;
    // Empirical P(F' = f).
    Real flip_fraction(long f) const;
};

// Simulates `count` first returns to the basepoint starting from it. A
// stationary self-loop at the basepoint means the chain has not left yet;
// such steps are tallied separately and belong to no excursion, so every
// recorded length is >= 2. Excursion i uses the derived stream (seed, i).
ExcursionStats excursions(const TransitionKernel& k, Index basepoint,
                          long count, std::uint64_t seed,
                          long step_cap = 1000000);

// TV between normalized occupancy and target.
Real empirical_tv(const ChainRun& run, const Vector& target);

} // namespace liftedmc

#endif // LIFTEDMC_SAMPLER_HPP
