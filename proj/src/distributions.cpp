#include "liftedmc/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "liftedmc/errors.hpp"

namespace liftedmc {

namespace {

Real get_param(const FamilyParams& params, const std::string& key,
               Real fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void check_known_params(const FamilyParams& params,
                        std::initializer_list<const char*> known,
                        const std::string& family) {
    for (const auto& [key, value] : params) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw InvalidParamError("family '" + family +
                                    "' does not take parameter '" + key + "'");
        }
    }
}

} // namespace

UnimodalWeights UnimodalWeights::from_weights(const Vector& raw) {
    const Index n = raw.size();
    if (n == 0) {
        throw NonPositiveWeightError("weight list is empty");
    }
    for (Index i = 0; i < n; ++i) {
        if (!(raw[i] > 0) || !std::isfinite(raw[i])) {
            std::ostringstream os;
            os << "weight m_" << (i + 1) << " = " << raw[i]
               << " is not strictly positive";
            throw NonPositiveWeightError(os.str());
        }
    }
    // j* = smallest index attaining the maximum.
    Index mode = 0;
    for (Index i = 1; i < n; ++i) {
        if (raw[i] > raw[mode]) mode = i;
    }
    for (Index i = 0; i + 1 < n; ++i) {
        const bool rising_required = i < mode;
        if (rising_required && raw[i] > raw[i + 1]) {
            throw NotUnimodalError("weights decrease before the mode");
        }
        if (!rising_required && raw[i] < raw[i + 1]) {
            std::ostringstream os;
            os << "weights rise after the mode at index " << (i + 2);
            throw NotUnimodalError(os.str());
        }
    }
    return UnimodalWeights(raw, mode + 1, raw.sum());
}

UnimodalWeights UnimodalWeights::family(const std::string& name, Index n,
                                        const FamilyParams& params) {
    if (n < 2) {
        throw InvalidParamError("family construction requires n >= 2");
    }
    Vector w(n);
    if (name == "uniform") {
        check_known_params(params, {}, name);
        w.setOnes();
    } else if (name == "symmetric-tent" || name == "tent") {
        check_known_params(params, {}, name);
        for (Index j = 1; j <= n; ++j) {
            w[j - 1] = static_cast<Real>(std::min(j, n + 1 - j));
        }
    } else if (name == "asymmetric-tent") {
        // Linear rise to the mode at roughly n/3, slower linear fall back to 1.
        const Index def_mode = std::max<Index>(1, static_cast<Index>(
                                   std::lround(static_cast<double>(n) / 3.0)));
        check_known_params(params, {"j_star"}, name);
        const Index mode = static_cast<Index>(
            get_param(params, "j_star", static_cast<Real>(def_mode)));
        if (mode < 1 || mode > n) {
            throw InvalidParamError("asymmetric-tent j_star out of [1, n]");
        }
        for (Index j = 1; j <= n; ++j) {
            if (j <= mode) {
                w[j - 1] = static_cast<Real>(j);
            } else if (mode == n) {
                w[j - 1] = static_cast<Real>(mode);
            } else {
                w[j - 1] = 1.0 + (static_cast<Real>(mode) - 1.0) *
                                     static_cast<Real>(n - j) /
                                     static_cast<Real>(n - mode);
            }
        }
    } else if (name == "geometric-peak") {
        check_known_params(params, {"r", "j_star"}, name);
        const Real r = get_param(params, "r", 0.9);
        if (!(r > 0) || r > 1) {
            throw InvalidParamError("geometric-peak requires 0 < r <= 1");
        }
        const Index mode = static_cast<Index>(
            get_param(params, "j_star", static_cast<Real>((n + 1) / 2)));
        if (mode < 1 || mode > n) {
            throw InvalidParamError("geometric-peak j_star out of [1, n]");
        }
        for (Index j = 1; j <= n; ++j) {
            w[j - 1] = std::pow(r, static_cast<Real>(std::abs(j - mode)));
        }
    } else if (name == "plateau") {
        check_known_params(params, {"height", "width"}, name);
        const Real height = get_param(params, "height", 2.0);
        if (!(height > 0)) {
            throw InvalidParamError("plateau height must be positive");
        }
        const Index def_width = std::max<Index>(1, n / 3);
        const Index width = static_cast<Index>(
            get_param(params, "width", static_cast<Real>(def_width)));
        if (width < 1 || width > n) {
            throw InvalidParamError("plateau width out of [1, n]");
        }
        const Index lo = (n + 1) / 2 - (width - 1) / 2;
        const Index hi = lo + width - 1;
        for (Index j = 1; j <= n; ++j) {
            w[j - 1] = (j >= lo && j <= hi) ? height : 1.0;
        }
    } else {
        throw UnknownFamilyError("unknown family '" + name + "'");
    }
    return from_weights(w);
}

Vector normalize(const UnimodalWeights& w) {
    return w.weights() / w.normalizer();
}

bool is_log_concave(const UnimodalWeights& w) {
    const Vector& m = w.weights();
    for (Index j = 1; j + 1 < w.n(); ++j) {
        // Relative slack so sequences log-concave with equality survive the
        // rounding of computed weights.
        if (m[j] * m[j] < m[j - 1] * m[j + 1] * (1.0 - 1e-12)) {
            return false;
        }
    }
    return true;
}

Real right_deficiency_sum(const UnimodalWeights& w, Index d2) {
    const Index jstar = w.mode_index();
    const Real peak = w.weight(jstar);
    Real sum = 0;
    for (Index t = jstar; t <= d2; ++t) {
        sum += static_cast<Real>(2 * (t - jstar) + 1) * (1.0 - w.weight(t) / peak);
    }
    return sum;
}

Real left_deficiency_sum(const UnimodalWeights& w, Index d1) {
    const Index jstar = w.mode_index();
    const Real peak = w.weight(jstar);
    Real sum = 0;
    for (Index t = d1; t <= jstar; ++t) {
        sum += static_cast<Real>(2 * (jstar - t) + 1) * (1.0 - w.weight(t) / peak);
    }
    return sum;
}

ShorteningRadii shortening_radii(const UnimodalWeights& w) {
    const Index n = w.n();
    if (n % 2 == 0) {
        throw EvenNError("shortening radii require odd n");
    }
    const Index jstar = w.mode_index();

    ShorteningRadii r{};
    if (jstar == n) {
        // No candidates above the mode; this side contributes zero to d**.
        r.d2 = jstar;
    } else {
        const Real half_total = 0.5 * right_deficiency_sum(w, n);
        Index d2 = 0;
        for (Index cand = jstar + 1; cand <= n; ++cand) {
            if (right_deficiency_sum(w, cand) <= half_total) d2 = cand;
        }
        r.d2 = d2 == 0 ? jstar + 1 : d2;
    }
    if (jstar == 1) {
        r.d1 = jstar;
    } else {
        const Real half_total = 0.5 * left_deficiency_sum(w, 1);
        Index d1 = 0;
        for (Index cand = jstar - 1; cand >= 1; --cand) {
            if (left_deficiency_sum(w, cand) <= half_total) d1 = cand;
        }
        r.d1 = d1 == 0 ? jstar - 1 : d1;
    }
    r.d_double_star = std::max(r.d2 - jstar, jstar - r.d1);
    return r;
}

} // namespace liftedmc
