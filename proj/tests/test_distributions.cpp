#include <doctest.h>

#include <random>

#include "liftedmc/distributions.hpp"
#include "liftedmc/errors.hpp"
#include "liftedmc/kernel.hpp"

using namespace liftedmc;

namespace {

Vector vec(std::initializer_list<Real> vals) {
    Vector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (Real x : vals) v[i++] = x;
    return v;
}

// Random strictly positive log-concave sequence: concave log-weights from
// non-increasing increments.
Vector random_log_concave(std::mt19937_64& eng, Index n) {
    std::uniform_real_distribution<Real> unif(0.05, 1.0);
    std::vector<Real> incr(n - 1);
    for (auto& x : incr) x = unif(eng);
    std::sort(incr.begin(), incr.end(), std::greater<>());
    std::uniform_real_distribution<Real> shift(-0.8, 0.8);
    const Real offset = shift(eng);
    Vector logw(n);
    logw[0] = 0;
    for (Index i = 1; i < n; ++i) {
        logw[i] = logw[i - 1] + incr[i - 1] + offset - 0.5;
    }
    return logw.array().exp();
}

Vector random_unimodal(std::mt19937_64& eng, Index n) {
    std::uniform_int_distribution<Index> mode_dist(1, n);
    std::uniform_real_distribution<Real> unif(0.1, 1.0);
    const Index mode = mode_dist(eng);
    Vector w(n);
    Real cur = unif(eng);
    for (Index j = mode; j >= 1; --j) {
        w[j - 1] = cur;
        cur *= unif(eng);
    }
    cur = w[mode - 1];
    for (Index j = mode + 1; j <= n; ++j) {
        cur *= unif(eng);
        w[j - 1] = cur;
    }
    return w;
}

} // namespace

TEST_CASE("from_weights validates and finds the mode") {
    const UnimodalWeights w = UnimodalWeights::from_weights(vec({1, 2, 3, 2, 1}));
    CHECK(w.n() == 5);
    CHECK(w.mode_index() == 3);
    CHECK(w.normalizer() == doctest::Approx(9).epsilon(1e-15));

    const UnimodalWeights plateau = UnimodalWeights::from_weights(vec({1, 1, 1}));
    CHECK(plateau.mode_index() == 1); // smallest argmax on a plateau

    CHECK_THROWS_AS(UnimodalWeights::from_weights(vec({2, 1, 2})),
                    NotUnimodalError);
    CHECK_THROWS_AS(UnimodalWeights::from_weights(vec({1, 0, 1})),
                    NonPositiveWeightError);
    CHECK_THROWS_AS(UnimodalWeights::from_weights(vec({1, -2, 3})),
                    NonPositiveWeightError);
    CHECK_THROWS_AS(UnimodalWeights::from_weights(Vector()),
                    NonPositiveWeightError);
}

TEST_CASE("built-in families") {
    const UnimodalWeights u = UnimodalWeights::family("uniform", 5);
    CHECK(u.weights().isApprox(vec({1, 1, 1, 1, 1})));

    const UnimodalWeights tent = UnimodalWeights::family("symmetric-tent", 5);
    CHECK(tent.weights().isApprox(vec({1, 2, 3, 2, 1})));
    CHECK(UnimodalWeights::family("tent", 5).weights().isApprox(tent.weights()));

    const UnimodalWeights geo =
        UnimodalWeights::family("geometric-peak", 3, {{"r", 0.5}, {"j_star", 2}});
    CHECK(geo.weights().isApprox(vec({0.5, 1, 0.5})));

    for (const char* name :
         {"uniform", "symmetric-tent", "asymmetric-tent", "geometric-peak",
          "plateau"}) {
        for (Index n : {2, 3, 5, 10, 21, 100, 201}) {
            const UnimodalWeights w = UnimodalWeights::family(name, n);
            CHECK(w.n() == n);
            CHECK(w.weights().minCoeff() > 0);
        }
    }

    CHECK_THROWS_AS(UnimodalWeights::family("nope", 5), UnknownFamilyError);
    CHECK_THROWS_AS(UnimodalWeights::family("uniform", 1), InvalidParamError);
    CHECK_THROWS_AS(UnimodalWeights::family("geometric-peak", 5, {{"r", 1.5}}),
                    InvalidParamError);
    CHECK_THROWS_AS(UnimodalWeights::family("uniform", 5, {{"bogus", 1.0}}),
                    InvalidParamError);
}

TEST_CASE("normalize") {
    const Vector p = normalize(UnimodalWeights::from_weights(vec({1, 2, 3, 2, 1})));
    CHECK(p.isApprox(vec({1.0 / 9, 2.0 / 9, 3.0 / 9, 2.0 / 9, 1.0 / 9})));
    CHECK(std::abs(p.sum() - 1.0) < 1e-12);

    CHECK(normalize(UnimodalWeights::from_weights(vec({1, 1, 1})))
              .isApprox(vec({1.0 / 3, 1.0 / 3, 1.0 / 3})));
    CHECK(normalize(UnimodalWeights::from_weights(vec({4}))).isApprox(vec({1})));
}

TEST_CASE("is_log_concave") {
    CHECK(is_log_concave(UnimodalWeights::from_weights(vec({1, 2, 3, 2, 1}))));
    CHECK(is_log_concave(UnimodalWeights::from_weights(vec({1, 1, 1}))));
    CHECK_FALSE(
        is_log_concave(UnimodalWeights::from_weights(vec({1, 1, 10, 1, 1}))));
}

TEST_CASE("basepoint") {
    auto bp = [](std::initializer_list<Real> w) {
        return basepoint(UnimodalWeights::from_weights(vec(w)));
    };
    CHECK(bp({1, 2, 3, 2, 1}) == LiftedState{+1, 3});
    CHECK(bp({1, 1, 1, 1, 1}) == LiftedState{+1, 1});
    CHECK(bp({3, 2, 1}) == LiftedState{+1, 1});
}

TEST_CASE("shortening radii: worked instances") {
    const ShorteningRadii tent =
        shortening_radii(UnimodalWeights::from_weights(vec({1, 2, 3, 2, 1})));
    CHECK(tent.d2 == 4);
    CHECK(tent.d1 == 2);
    CHECK(tent.d_double_star == 1);

    // Uniform: every deficiency term vanishes, so d2 runs to n; the mode sits
    // at 1, so the left side is empty.
    const ShorteningRadii uni =
        shortening_radii(UnimodalWeights::family("uniform", 5));
    CHECK(uni.d2 == 5);
    CHECK(uni.d1 == 1);
    CHECK(uni.d_double_star == 4);

    // Single candidate on each side, both failing the inequality: fallbacks.
    const ShorteningRadii spike =
        shortening_radii(UnimodalWeights::from_weights(vec({1, 3, 1})));
    CHECK(spike.d2 == 3);
    CHECK(spike.d1 == 1);
    CHECK(spike.d_double_star == 1);

    CHECK_THROWS_AS(shortening_radii(UnimodalWeights::family("uniform", 4)),
                    EvenNError);
}

TEST_CASE("properties over random sequences") {
    std::mt19937_64 eng(20250809);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = 3 + 2 * (trial % 8); // odd 3..17

        // Log-concavity implies unimodality and passes the predicate.
        const Vector lc = random_log_concave(eng, n);
        const UnimodalWeights wlc = UnimodalWeights::from_weights(lc);
        CHECK(is_log_concave(wlc));

        const Vector raw = random_unimodal(eng, n);
        const UnimodalWeights w = UnimodalWeights::from_weights(raw);
        const Vector pi = normalize(w);

        // Normalize preserves the ordering and the mode.
        Index pi_mode = 0;
        for (Index i = 1; i < n; ++i) {
            if (pi[i] > pi[pi_mode]) pi_mode = i;
        }
        CHECK(pi_mode + 1 == w.mode_index());
        CHECK(std::abs(pi.sum() - 1.0) < 1e-12);

        const ShorteningRadii r = shortening_radii(w);
        const Index jstar = w.mode_index();
        CHECK(r.d_double_star == std::max(r.d2 - jstar, jstar - r.d1));
        CHECK(2 * r.d_double_star >= r.d2 - r.d1);

        // The defining inequality holds at d2 and fails just beyond, unless a
        // fallback fired.
        if (jstar < n) {
            const Real half = 0.5 * right_deficiency_sum(w, n);
            if (right_deficiency_sum(w, jstar + 1) <= half) {
                CHECK(right_deficiency_sum(w, r.d2) <= half * (1 + 1e-12));
                if (r.d2 < n) {
                    CHECK(right_deficiency_sum(w, r.d2 + 1) > half);
                }
            } else {
                CHECK(r.d2 == jstar + 1);
            }
        }
        if (jstar > 1) {
            const Real half = 0.5 * left_deficiency_sum(w, 1);
            if (left_deficiency_sum(w, jstar - 1) <= half) {
                CHECK(left_deficiency_sum(w, r.d1) <= half * (1 + 1e-12));
                if (r.d1 > 1) {
                    CHECK(left_deficiency_sum(w, r.d1 - 1) > half);
                }
            } else {
                CHECK(r.d1 == jstar - 1);
            }
        }

        // Mirror symmetry for strictly peaked sequences.
        bool strict = true;
        for (Index i = 0; i < n; ++i) {
            if (i + 1 != jstar && raw[i] >= raw[jstar - 1]) strict = false;
        }
        if (strict && jstar > 1 && jstar < n) {
            const UnimodalWeights mirrored =
                UnimodalWeights::from_weights(raw.reverse());
            const ShorteningRadii rm = shortening_radii(mirrored);
            CHECK(mirrored.mode_index() == n + 1 - jstar);
            CHECK(rm.d2 == n + 1 - r.d1);
            CHECK(rm.d1 == n + 1 - r.d2);
            CHECK(rm.d_double_star == r.d_double_star);
        }
    }
}
