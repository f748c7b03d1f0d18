#ifndef LIFTEDMC_EXACT_HPP
#define LIFTEDMC_EXACT_HPP

#include <utility>
#include <vector>

#include "liftedmc/kernel.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

// d * P^steps by repeated sparse row application.
Vector evolve(const TransitionKernel& k, const Vector& d, long steps);

// Half the L1 distance; in [0, 1].
Real tv_distance(const Vector& p, const Vector& q);

struct WorstTv {
    Real distance;
    Index start; // attaining start state, lowest index on ties
};

// d(t) = max over point-mass starts y of || delta_y P^t - target ||.
WorstTv worst_case_tv(const TransitionKernel& k, const Vector& target, long t);

struct MixingReport {
    Index n;           // line states of the underlying chain
    Index state_count; // states of the kernel (2n for the lifted chain)
    Real delta;
    long t_mix;
    Index worst_start;                       // slowest start at t_mix - 1 (or 0)
    std::vector<std::pair<long, Real>> curve; // (t, d(t)) for t = 0..t_mix
};

// Smallest t <= t_cap with d(t) < delta. Throws CapExceededError when the cap
// is reached first.
MixingReport mixing_time(const TransitionKernel& k, const Vector& target,
                         Real delta, long t_cap);

struct Minorization {
    Real nu_mass; // sum_s min_x P^m(x, s)
    Real rho;     // 1 - nu_mass
};

Minorization minorization(const TransitionKernel& k, long m);

struct MeynTweedieReport {
    long m;
    Real rho;
    long z_max;
    long violations;  // count of z with d(z) > rho^floor(z/m)
    Real min_slack;   // min over z of bound - d(z)
    long argmin_slack;
};

// Verifies d(z) <= rho^floor(z/m) for z in [0, z_max] with the exact
// pointwise-minimum minorization. Throws VacuousMinorizationError when
// rho = 1.
MeynTweedieReport meyn_tweedie_check(const TransitionKernel& k,
                                     const Vector& target, long m, long z_max);

// 1 / target(state); for the lifted basepoint this equals 2 z' / m_{j*}.
Real mean_recurrence_time(const Vector& target, Index state);

} // namespace liftedmc

#endif // LIFTEDMC_EXACT_HPP
