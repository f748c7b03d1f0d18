#ifndef LIFTEDMC_EXPERIMENTS_HPP
#define LIFTEDMC_EXPERIMENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "liftedmc/distributions.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

// Theta given either as a literal value or symbolically as "1/n".
struct ThetaSpec {
    bool one_over_n = true;
    Real value = 0;

    static ThetaSpec parse(const std::string& text);
    Real resolve(Index n) const { return one_over_n ? Real(1) / Real(n) : value; }
    std::string str() const;
};

struct FitResult {
    Real slope;
    Real intercept;
    Real r_squared;
};

// Ordinary least squares on (ln n, ln t). Requires >= 2 distinct n and all
// t >= 1; throws DegenerateFitError otherwise.
FitResult fit_exponent(const std::vector<std::pair<Real, Real>>& points);

struct ScalingResult {
    std::string family;
    std::string sampler; // "metropolis" or "dhn"
    Real delta;
    std::vector<std::pair<Index, long>> points; // (n, t_mix)
    Real slope;
    Real intercept;
    Real r_squared;
};

// Exact mixing time per n (t_cap 200 n^2 for Metropolis, 200 n for the lifted
// sampler) followed by the log-log fit. Requires odd n >= 3. CapExceededError
// is rethrown with the offending n.
ScalingResult scaling_study(const std::string& family,
                            const std::string& sampler,
                            const std::vector<Index>& n_list, Real delta,
                            const FamilyParams& params = {},
                            const ThetaSpec& theta = {});

} // namespace liftedmc

#endif // LIFTEDMC_EXPERIMENTS_HPP
