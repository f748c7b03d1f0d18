#include "liftedmc/experiments.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "liftedmc/errors.hpp"
#include "liftedmc/exact.hpp"
#include "liftedmc/kernel.hpp"

namespace liftedmc {

ThetaSpec ThetaSpec::parse(const std::string& text) {
    ThetaSpec spec;
    if (text == "1/n") {
        spec.one_over_n = true;
        return spec;
    }
    std::size_t used = 0;
    Real value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ThetaOutOfRangeError("cannot parse theta '" + text + "'");
    }
    if (used != text.size()) {
        throw ThetaOutOfRangeError("cannot parse theta '" + text + "'");
    }
    if (!(value > 0) || !(value < 1)) {
        throw ThetaOutOfRangeError("theta must lie in (0, 1)");
    }
    spec.one_over_n = false;
    spec.value = value;
    return spec;
}

std::string ThetaSpec::str() const {
    if (one_over_n) return "1/n";
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

FitResult fit_exponent(const std::vector<std::pair<Real, Real>>& points) {
    if (points.size() < 2) {
        throw DegenerateFitError("need at least two points");
    }
    std::set<Real> distinct;
    for (const auto& [n, t] : points) {
        if (!(n > 0)) throw DegenerateFitError("n must be positive");
        if (!(t >= 1)) throw DegenerateFitError("t must be >= 1");
        distinct.insert(n);
    }
    if (distinct.size() < 2) {
        throw DegenerateFitError("need at least two distinct n");
    }
    const Index m = static_cast<Index>(points.size());
    Vector x(m), y(m);
    for (Index i = 0; i < m; ++i) {
        x[i] = std::log(points[i].first);
        y[i] = std::log(points[i].second);
    }
    const Real xbar = x.mean();
    const Real ybar = y.mean();
    const Vector xc = x.array() - xbar;
    const Vector yc = y.array() - ybar;
    const Real slope = xc.dot(yc) / xc.squaredNorm();
    const Real intercept = ybar - slope * xbar;
    const Real ss_res = (yc - slope * xc).squaredNorm();
    const Real ss_tot = yc.squaredNorm();
    Real r2;
    if (ss_tot > 1e-300) {
        r2 = 1.0 - ss_res / ss_tot;
    } else {
        r2 = ss_res < 1e-300 ? 1.0 : 0.0;
    }
    return FitResult{slope, intercept, r2};
}

ScalingResult scaling_study(const std::string& family,
                            const std::string& sampler,
                            const std::vector<Index>& n_list, Real delta,
                            const FamilyParams& params,
                            const ThetaSpec& theta) {
    if (!(delta > 0) || !(delta < 1)) {
        throw DimensionMismatchError("delta must lie in (0, 1)");
    }
    if (sampler != "metropolis" && sampler != "dhn") {
        throw UnknownFamilyError("sampler must be 'metropolis' or 'dhn'");
    }
    ScalingResult result;
    result.family = family;
    result.sampler = sampler;
    result.delta = delta;
    for (Index n : n_list) {
        if (n < 3 || n % 2 == 0) {
            throw EvenNError("scaling grid requires odd n >= 3");
        }
        const UnimodalWeights w = UnimodalWeights::family(family, n, params);
        const Vector pi = normalize(w);
        try {
            if (sampler == "metropolis") {
                const TransitionKernel k = metropolis_kernel(pi);
                const MixingReport report =
                    mixing_time(k, pi, delta, 200 * n * n);
                result.points.emplace_back(n, report.t_mix);
            } else {
                const TransitionKernel k = dhn_kernel(pi, theta.resolve(n));
                const MixingReport report =
                    mixing_time(k, lifted_stationary(pi), delta, 200 * n);
                result.points.emplace_back(n, report.t_mix);
            }
        } catch (const CapExceededError& e) {
            std::ostringstream os;
            os << "n = " << n << ": " << e.what();
            throw CapExceededError(os.str());
        }
    }
    std::vector<std::pair<Real, Real>> pts;
    for (const auto& [n, t] : result.points) {
        pts.emplace_back(static_cast<Real>(n),
                         static_cast<Real>(std::max<long>(t, 1)));
    }
    const FitResult fit = fit_exponent(pts);
    result.slope = fit.slope;
    result.intercept = fit.intercept;
    result.r_squared = fit.r_squared;
    return result;
}

} // namespace liftedmc
