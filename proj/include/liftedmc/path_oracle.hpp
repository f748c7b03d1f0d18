#ifndef LIFTEDMC_PATH_ORACLE_HPP
#define LIFTEDMC_PATH_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "liftedmc/distributions.hpp"
#include "liftedmc/kernel.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

struct PathEnumeration {
    Index origin;
    Index destination;
    long length;
    Real total_probability; // equals the (y, j') entry of the L-step power
    std::uint64_t path_count;
};

// Depth-first sum over all length-L move sequences y -> j'. The budget counts
// visited tree nodes; BudgetExceededError when exhausted.
PathEnumeration enumerate_paths(const TransitionKernel& k, Index y, Index jp,
                                long length,
                                std::uint64_t budget = 50000000);

// Law of F' = number of flips or stationary moves in one first return to the
// basepoint (the excursion convention of sampler.hpp: the initial stationary
// self-loop is not an excursion). probabilities[f] for f <= f_cap, tail_mass
// for larger counts. truncation_mass is the mass still in flight at l_cap;
// basepoint_hold_mass is the stationary self-loop mass at the basepoint,
// which belongs to no excursion. probabilities + tail + truncation + hold
// account for everything.
struct FlipLaw {
    std::vector<Real> probabilities;
    Real tail_mass = 0;
    Real truncation_mass = 0;
    Real basepoint_hold_mass = 0;
    long l_cap = 0;
    Real mean_length = 0; // conditional on return within l_cap
    // Largest t <= l_cap at which an excursion with F' = f has positive mass.
    std::vector<long> max_length_per_count;

    Real total() const;
    Real p(std::size_t f) const {
        return f < probabilities.size() ? probabilities[f] : Real(0);
    }
};

FlipLaw flip_law_exact(const TransitionKernel& k, Index basepoint, long l_cap,
                       int f_cap = 8);

// Default cap 50 n: flip-free excursions end within 2n steps and flip-bearing
// mass decays geometrically.
FlipLaw flip_law_exact(const TransitionKernel& k, Index basepoint);

// Exact P(F' = 0): restrict to shift/jump edges and solve the first-passage
// linear system. Matches flip_law_exact's zero-flip mass to 1e-12.
Real no_flip_return_probability(const TransitionKernel& k, Index basepoint);

// Exact evaluation of the conditional-shortening inequality
// P(L1|A1) <= P(L2|A2) over excursion trajectories:
//   A1 = no flips or stationary moves in the intermediate return
//   L1 = A1, the +1 -> -1 move happens on step k0, and the -1 -> +1 move
//        departs from (-1, kp)
//   A2 = precisely one flip-or-stationary move, on step kf
//   L2 = the move on step kf is a flip, the path has exactly one
//        +1 -> -1 transition, no other flip or stationary move, and the
//        -1 -> +1 move departs from (-1, kp)
// The move kind of the -1 -> +1 transition is not pinned by the defining
// sentence, so both readings are evaluated: "jump" requires it to be a jump,
// "any" also admits the flip itself acting as the upward move.
struct ShorteningCheck {
    Real p_a1;
    Real p_a2;
    Real p_l1_given_a1;
    Real p_l2_given_a2_jump;
    Real p_l2_given_a2_any;
};

// Throws EmptyConditioningEventError when P(A1) or P(A2) vanishes and
// BudgetExceededError when enumeration exceeds the node budget.
ShorteningCheck conditional_shortening_check(const TransitionKernel& k,
                                             Index basepoint, long kf, long k0,
                                             Index kp,
                                             std::uint64_t budget = 50000000);

struct ChebyshevReturnCount {
    Real threshold; // tilde_c * d** * m_{j*} / (4 z')
    Real pivot;     // mu * threshold / (tilde_c * d**) -- must be < 1/2
};

// Requires tilde_c > 4 and odd n.
ChebyshevReturnCount chebyshev_return_count(const UnimodalWeights& w,
                                            Real tilde_c);

} // namespace liftedmc

#endif // LIFTEDMC_PATH_ORACLE_HPP
