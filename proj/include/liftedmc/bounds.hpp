#ifndef LIFTEDMC_BOUNDS_HPP
#define LIFTEDMC_BOUNDS_HPP

#include <vector>

#include "liftedmc/distributions.hpp"
#include "liftedmc/kernel.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

// Free constants of the bound formulas. None of them have closed forms; they
// are always explicit inputs. c_hat may be supplied directly or derived as
// 2 * c_tilde_tilde * c^(f1+f2) / f_tilde^f2.
struct BoundParams {
    Real c = 1;             // path-length multiplier, x = c n
    Real c_prime = 1;       // z = c' n, with c' >= c
    int f1 = 0;             // flips or stationary moves before shortening
    int f2 = 0;             // flips or stationary moves added while shortening
    Real f_tilde = 2;       // reciprocal of the shortenable-state fraction
    Real c_tilde_tilde = 1; // occurrence-probability constant
    Real c_hat = 0;         // derived unless set explicitly
    Index d_double_star = 1;

    static BoundParams with_derived_c_hat(BoundParams p);
    Real derived_c_hat() const;
};

// Per-factor breakdown of the occurrence lower bound
//   (c~~ m_j / z') C(cn, f1) C(floor(cn/f~), f2) (1/n)^(f1+f2)
//   ((n-1)/n)^(cn + 4n - f1 - (2 d** + 1) f2 - 2).
// Binomials are evaluated in log space (lgamma), so c n need not be an
// integer. path_scale is the exact-length multiplier c~~ m_{j*} / z'.
struct OccurrenceBreakdown {
    Real prefactor;       // c~~ m_j / z'
    Real path_scale;      // c~~ m_{j*} / z'
    Real binom_f1;        // C(cn, f1)
    Real binom_f2;        // C(floor(cn / f~), f2)
    Real flip_factor;     // (1/n)^(f1+f2)
    Real survival_factor; // ((n-1)/n)^exponent
    Real exponent;        // cn + 4n - f1 - (2 d** + 1) f2 - 2
    Real value;           // product of the above (without path_scale)
};

OccurrenceBreakdown occurrence_lower_bound(const BoundParams& p,
                                           const UnimodalWeights& w, Index j);

// The three per-component lower bounds of the constructed path:
//   first  (start to basepoint):      ((n-1)/n)^(2n-1)
//   third  (basepoint to target j):   (m_j/m_{j*}) ((n-1)/n)^(2n-1)
//   second (flip count at s = cn):    C(cn, f1) (1/n)^f1 ((n-1)/n)^(cn-f1)
struct ComponentBounds {
    Real first_component;
    Real third_component;
    Real flip_binomial;
};

ComponentBounds component_bounds(const UnimodalWeights& w, Index j, Real c,
                                 int f1);

// Binomial law b(trials, p) with log-space pmf.
struct BinomialLaw {
    long trials;
    Real p;

    Real mean() const { return trials * p; }
    Real pmf(long k) const;
};

// F'' ~ b(floor(cn / f~), 1/n): the flips added while shortening.
BinomialLaw f_double_prime_law(const BoundParams& p, Index n);

// 1 - c_hat ((n-1)/n)^(cn - f1 - f2). Throws RhoOutOfRangeError (reporting
// the value, not clamping it) when outside [0, 1].
Real rho_bound(const BoundParams& p, Index n);

// rho_bound ^ floor(c'/c).
Real tv_upper_bound(const BoundParams& p, Index n);

// Behaviour of C(n,a)/n^a over n <= n_max: bounded by 1/a!, monotone
// non-decreasing, converging to 1/a!; plus C(floor(cn/f~), f2) <= (cn/f~)^f2
// on a small (c, f~, f2) grid.
struct BinomGrowthReport {
    bool bounded;
    bool monotone;
    Real final_ratio; // C(n_max, a) / n_max^a
    Real limit;       // 1/a!
    bool floor_binom_bounded;
};

BinomGrowthReport binom_growth_check(Index n_max, int a);

// The largest c~~ for which the occurrence bound stays below the exact
// L = cn transition probability from y to jp (computed by dense power).
// The bound with any smaller c~~ is then dominated by the chain.
Real largest_admissible_c_tilde_tilde(const BoundParams& p,
                                      const UnimodalWeights& w, Index j,
                                      const TransitionKernel& k, Index y,
                                      Index jp);

} // namespace liftedmc

#endif // LIFTEDMC_BOUNDS_HPP
