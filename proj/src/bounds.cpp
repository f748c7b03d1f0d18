#include "liftedmc/bounds.hpp"

#include <cmath>
#include <sstream>

#include "liftedmc/errors.hpp"
#include "liftedmc/exact.hpp"

namespace liftedmc {

namespace {

// log C(x, k) for real x >= k >= 0; binomials are evaluated in log space so
// cn in the hundreds cannot overflow.
Real log_binomial(Real x, long kk) {
    const Real k = static_cast<Real>(kk);
    return std::lgamma(x + 1.0) - std::lgamma(k + 1.0) - std::lgamma(x - k + 1.0);
}

void check_occurrence_args(const BoundParams& p, Index n) {
    if (!(p.c > 0) || !(p.f_tilde > 0) || !(p.c_tilde_tilde > 0)) {
        throw InvalidCombinatoricsError("c, f_tilde, c_tilde_tilde must be positive");
    }
    if (p.f1 < 0 || p.f2 < 0) {
        throw InvalidCombinatoricsError("flip counts must be non-negative");
    }
    const Real x = p.c * static_cast<Real>(n);
    if (static_cast<Real>(p.f1) > x) {
        throw InvalidCombinatoricsError("f1 exceeds cn");
    }
    if (static_cast<Real>(p.f2) > std::floor(x / p.f_tilde)) {
        throw InvalidCombinatoricsError("f2 exceeds floor(cn / f_tilde)");
    }
}

} // namespace

Real BoundParams::derived_c_hat() const {
    return 2.0 * c_tilde_tilde * std::pow(c, static_cast<Real>(f1 + f2)) /
           std::pow(f_tilde, static_cast<Real>(f2));
}

BoundParams BoundParams::with_derived_c_hat(BoundParams p) {
    p.c_hat = p.derived_c_hat();
    return p;
}

OccurrenceBreakdown occurrence_lower_bound(const BoundParams& p,
                                           const UnimodalWeights& w, Index j) {
    const Index n = w.n();
    if (n % 2 == 0) {
        throw EvenNError("occurrence bound requires odd n");
    }
    if (j < 1 || j > n) {
        throw InvalidCombinatoricsError("target position out of [1, n]");
    }
    check_occurrence_args(p, n);

    const Real x = p.c * static_cast<Real>(n);
    const Real nn = static_cast<Real>(n);
    const Real dss = static_cast<Real>(p.d_double_star);

    OccurrenceBreakdown b{};
    b.prefactor = p.c_tilde_tilde * w.weight(j) / w.normalizer();
    b.path_scale = p.c_tilde_tilde * w.weight(w.mode_index()) / w.normalizer();
    b.binom_f1 = std::exp(log_binomial(x, p.f1));
    b.binom_f2 = std::exp(log_binomial(std::floor(x / p.f_tilde), p.f2));
    b.exponent = x + 4.0 * nn - static_cast<Real>(p.f1) -
                 (2.0 * dss + 1.0) * static_cast<Real>(p.f2) - 2.0;
    const Real log_flip = -static_cast<Real>(p.f1 + p.f2) * std::log(nn);
    const Real log_survival = b.exponent * std::log((nn - 1.0) / nn);
    b.flip_factor = std::exp(log_flip);
    b.survival_factor = std::exp(log_survival);
    b.value = b.prefactor * std::exp(log_binomial(x, p.f1) +
                                     log_binomial(std::floor(x / p.f_tilde), p.f2) +
                                     log_flip + log_survival);
    return b;
}

ComponentBounds component_bounds(const UnimodalWeights& w, Index j, Real c,
                                 int f1) {
    const Index n = w.n();
    if (n % 2 == 0) {
        throw EvenNError("component bounds require odd n");
    }
    if (j < 1 || j > n) {
        throw InvalidCombinatoricsError("target position out of [1, n]");
    }
    const Real nn = static_cast<Real>(n);
    const Real base = std::pow((nn - 1.0) / nn, 2.0 * nn - 1.0);
    const Real x = c * nn;
    if (f1 < 0 || static_cast<Real>(f1) > x) {
        throw InvalidCombinatoricsError("f1 out of [0, cn]");
    }
    ComponentBounds out{};
    out.first_component = base;
    out.third_component = w.weight(j) / w.weight(w.mode_index()) * base;
    out.flip_binomial =
        std::exp(log_binomial(x, f1) - static_cast<Real>(f1) * std::log(nn) +
                 (x - static_cast<Real>(f1)) * std::log((nn - 1.0) / nn));
    return out;
}

Real BinomialLaw::pmf(long k) const {
    if (k < 0 || k > trials) return 0.0;
    if (p <= 0) return k == 0 ? 1.0 : 0.0;
    if (p >= 1) return k == trials ? 1.0 : 0.0;
    return std::exp(log_binomial(static_cast<Real>(trials), k) +
                    static_cast<Real>(k) * std::log(p) +
                    static_cast<Real>(trials - k) * std::log1p(-p));
}

BinomialLaw f_double_prime_law(const BoundParams& p, Index n) {
    if (!(p.c > 0) || !(p.f_tilde > 0)) {
        throw InvalidCombinatoricsError("c and f_tilde must be positive");
    }
    const Real x = p.c * static_cast<Real>(n) / p.f_tilde;
    if (x < 1) {
        throw InvalidCombinatoricsError("cn / f_tilde must be >= 1");
    }
    return BinomialLaw{static_cast<long>(std::floor(x)),
                       1.0 / static_cast<Real>(n)};
}

Real rho_bound(const BoundParams& p, Index n) {
    check_occurrence_args(p, n);
    const Real c_hat = p.c_hat > 0 ? p.c_hat : p.derived_c_hat();
    const Real nn = static_cast<Real>(n);
    const Real exponent = p.c * nn - static_cast<Real>(p.f1 + p.f2);
    const Real rho = 1.0 - c_hat * std::pow((nn - 1.0) / nn, exponent);
    if (rho < 0.0 || rho > 1.0) {
        std::ostringstream os;
        os << "rho = " << rho << " outside [0, 1]; inconsistent parameters";
        throw RhoOutOfRangeError(os.str());
    }
    return rho;
}

Real tv_upper_bound(const BoundParams& p, Index n) {
    if (p.c_prime < p.c) {
        throw InvalidCombinatoricsError("requires c_prime >= c");
    }
    const Real rho = rho_bound(p, n);
    const Real reps = std::floor(p.c_prime / p.c);
    return std::pow(rho, reps);
}

BinomGrowthReport binom_growth_check(Index n_max, int a) {
    if (a < 0) {
        throw InvalidCombinatoricsError("a must be non-negative");
    }
    BinomGrowthReport report{};
    report.limit = std::exp(-std::lgamma(static_cast<Real>(a) + 1.0));
    report.bounded = true;
    report.monotone = true;
    Real prev = -1;
    for (Index n = std::max<Index>(a, 1); n <= n_max; ++n) {
        const Real ratio =
            std::exp(log_binomial(static_cast<Real>(n), a) -
                     static_cast<Real>(a) * std::log(static_cast<Real>(n)));
        if (ratio > report.limit * (1.0 + 1e-12)) report.bounded = false;
        if (ratio < prev * (1.0 - 1e-12)) report.monotone = false;
        prev = ratio;
        report.final_ratio = ratio;
    }
    report.floor_binom_bounded = true;
    for (Real c : {1.0, 2.0, 3.0}) {
        for (Real f_tilde : {1.5, 2.0, 3.0}) {
            for (long f2 = 0; f2 <= 3; ++f2) {
                for (Index n = 5; n <= n_max; n += 4) {
                    const Real x = c * static_cast<Real>(n) / f_tilde;
                    if (std::floor(x) < static_cast<Real>(f2)) continue;
                    const Real lhs = std::exp(log_binomial(std::floor(x), f2));
                    const Real rhs = std::pow(x, static_cast<Real>(f2));
                    // lgamma noise reaches ~1e-12 relative at these arguments
                    if (lhs > rhs * (1.0 + 1e-9)) {
                        report.floor_binom_bounded = false;
                    }
                }
            }
        }
    }
    return report;
}

Real largest_admissible_c_tilde_tilde(const BoundParams& p,
                                      const UnimodalWeights& w, Index j,
                                      const TransitionKernel& k, Index y,
                                      Index jp) {
    const OccurrenceBreakdown b = occurrence_lower_bound(p, w, j);
    const Real factor = b.value / p.c_tilde_tilde;
    if (!(factor > 0)) {
        throw InvalidCombinatoricsError("degenerate bound factor");
    }
    const long steps = static_cast<long>(std::llround(p.c * static_cast<Real>(w.n())));
    Vector d = Vector::Zero(k.state_count());
    d[y] = 1.0;
    const Vector reached = evolve(k, d, steps);
    return reached[jp] / factor;
}

} // namespace liftedmc
