#include <doctest.h>

#include <cmath>

#include "dense_oracle.hpp"
#include "liftedmc/distributions.hpp"
#include "liftedmc/errors.hpp"
#include "liftedmc/kernel.hpp"
#include "liftedmc/path_oracle.hpp"

using namespace liftedmc;

namespace {

TransitionKernel family_dhn(const char* name, Index n) {
    return dhn_kernel(normalize(UnimodalWeights::family(name, n)),
                      1.0 / static_cast<Real>(n));
}

Index bp_of(const char* name, Index n) {
    return lifted_index(basepoint(UnimodalWeights::family(name, n)), n);
}

} // namespace

TEST_CASE("enumerate_paths basics") {
    const TransitionKernel k = family_dhn("uniform", 5);

    const PathEnumeration zero = enumerate_paths(k, 3, 3, 0);
    CHECK(zero.total_probability == 1.0);
    CHECK(zero.path_count == 1);
    CHECK(enumerate_paths(k, 3, 4, 0).total_probability == 0.0);

    // One step (+1,2) -> (+1,3): the single shift edge.
    const PathEnumeration one = enumerate_paths(
        k, lifted_index({+1, 2}, 5), lifted_index({+1, 3}, 5), 1);
    CHECK(one.total_probability == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(one.path_count == 1);

    CHECK_THROWS_AS(enumerate_paths(k, 0, 0, 8, 10), BudgetExceededError);
}

TEST_CASE("enumeration totals equal dense matrix-power entries") {
    for (const char* name : {"uniform", "symmetric-tent"}) {
        for (Index n : {3, 5}) {
            const UnimodalWeights w = UnimodalWeights::family(name, n);
            const Real theta = 1.0 / static_cast<Real>(n);
            const TransitionKernel k = dhn_kernel(normalize(w), theta);
            const Matrix dense = oracle::dhn_dense(w.weights(), theta);
            Matrix power = Matrix::Identity(2 * n, 2 * n);
            for (long len = 0; len <= 8; ++len) {
                for (Index y = 0; y < 2 * n; ++y) {
                    for (Index jp = 0; jp < 2 * n; ++jp) {
                        const PathEnumeration e = enumerate_paths(k, y, jp, len);
                        CHECK(std::abs(e.total_probability - power(y, jp)) <
                              1e-12);
                    }
                }
                power = power * dense;
            }
        }
    }
}

TEST_CASE("flip law: frozen instances") {
    // Uniform n=5: the only flip-free excursion runs the full loop of length
    // 2n, so P(F'=0) = (4/5)^10 exactly and the lower bound is attained.
    const TransitionKernel k = family_dhn("uniform", 5);
    const FlipLaw law = flip_law_exact(k, bp_of("uniform", 5), 250);
    CHECK(law.p(0) == doctest::Approx(std::pow(0.8, 10)).epsilon(1e-12));
    CHECK(law.basepoint_hold_mass == 0.0);
    CHECK(law.p(1) == doctest::Approx(0.400576824863621).epsilon(1e-12));
    CHECK(law.mean_length == doctest::Approx(10.0).epsilon(1e-9));
    CHECK(law.truncation_mass < 1e-12);

    // Tent n=5, frozen from an independent dynamic-programming computation.
    const TransitionKernel kt = family_dhn("symmetric-tent", 5);
    const FlipLaw lt = flip_law_exact(kt, bp_of("symmetric-tent", 5), 250);
    CHECK(lt.p(0) == doctest::Approx(0.2987278336).epsilon(1e-12));
    CHECK(lt.p(1) == doctest::Approx(0.338759319377237).epsilon(1e-12));
    CHECK(lt.basepoint_hold_mass ==
          doctest::Approx(1.0 / 15).epsilon(1e-12)); // theta (1 - 2/3)

    // Everything is accounted for.
    CHECK(lt.total() + lt.basepoint_hold_mass + lt.truncation_mass ==
          doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(flip_law_exact(kt, 0, 1), DimensionMismatchError);
}

TEST_CASE("flip law lower bounds across families") {
    for (const char* name :
         {"uniform", "symmetric-tent", "asymmetric-tent", "geometric-peak",
          "plateau"}) {
        for (Index n = 3; n <= 21; n += 2) {
            const UnimodalWeights w = UnimodalWeights::family(name, n);
            const TransitionKernel k =
                dhn_kernel(normalize(w), 1.0 / static_cast<Real>(n));
            const Index bp = lifted_index(basepoint(w), n);
            const FlipLaw law = flip_law_exact(k, bp, 120 * n);
            const Real nn = static_cast<Real>(n);
            const Real b0 = std::pow((nn - 1) / nn, 2 * nn);
            const Real b1 =
                std::pow((nn - 1) / nn, 4 * nn - 2 * w.mode_index() - 2) / nn;
            CHECK(law.p(0) >= b0 * (1 - 1e-12));
            CHECK(law.p(1) >= b1 * (1 - 1e-12));

            // Flip-free returns take at most 2n steps. A single flip can also
            // lengthen an excursion (one extra flip-free leg on each side of
            // it), so the one-flip support only obeys the coarser 4n + 2 cap.
            CHECK(law.max_length_per_count[0] <= 2 * n);
            CHECK(law.max_length_per_count[1] <= 4 * n + 2);
        }
    }
}

TEST_CASE("flip law deficiency vanishes as the cap grows") {
    const TransitionKernel k = family_dhn("symmetric-tent", 7);
    const Index bp = bp_of("symmetric-tent", 7);
    Real prev = 2;
    for (long cap : {20L, 60L, 200L, 600L}) {
        const FlipLaw law = flip_law_exact(k, bp, cap);
        CHECK(law.truncation_mass <= prev);
        prev = law.truncation_mass;
    }
    CHECK(prev < 1e-10);
}

TEST_CASE("no_flip_return_probability: two independent routes agree") {
    for (const char* name :
         {"uniform", "symmetric-tent", "asymmetric-tent", "geometric-peak"}) {
        for (Index n : {3, 5, 9, 13}) {
            const UnimodalWeights w = UnimodalWeights::family(name, n);
            const TransitionKernel k =
                dhn_kernel(normalize(w), 1.0 / static_cast<Real>(n));
            const Index bp = lifted_index(basepoint(w), n);
            const Real linear = no_flip_return_probability(k, bp);
            const FlipLaw law = flip_law_exact(k, bp, 100 * n);
            CHECK(std::abs(linear - law.p(0)) < 1e-12);
        }
    }
    CHECK(no_flip_return_probability(family_dhn("uniform", 5),
                                     bp_of("uniform", 5)) ==
          doctest::Approx(std::pow(0.8, 10)).epsilon(1e-12));

    const TransitionKernel k1 = dhn_kernel(Vector::Ones(1), 0.5);
    CHECK_THROWS_AS(no_flip_return_probability(k1, 0), SingularSystemError);
}

TEST_CASE("conditional shortening: frozen instances") {
    // Uniform n=5: the flip-free excursion is unique (down-jump at step 5,
    // upward move from (-1,1)); conditioning on a single early flip forces
    // the analogous one-flip path, so both sides are 1.
    const TransitionKernel k = family_dhn("uniform", 5);
    const Index bp = bp_of("uniform", 5);
    for (long kf = 1; kf <= 4; ++kf) {
        const ShorteningCheck c = conditional_shortening_check(k, bp, kf, 5, 1);
        CHECK(c.p_l1_given_a1 == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.p_l2_given_a2_jump == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.p_l2_given_a2_any == doctest::Approx(1.0).epsilon(1e-12));
    }

    // Tent n=5, frozen from an independent enumeration.
    const TransitionKernel kt = family_dhn("symmetric-tent", 5);
    const Index bpt = bp_of("symmetric-tent", 5);
    const ShorteningCheck c = conditional_shortening_check(kt, bpt, 1, 2, 1);
    CHECK(c.p_l1_given_a1 ==
          doctest::Approx(0.062402458071824984).epsilon(1e-12));
    CHECK(c.p_l2_given_a2_jump ==
          doctest::Approx(0.19984387197501952).epsilon(1e-12));

    // A flip step beyond any feasible excursion length empties A2.
    CHECK_THROWS_AS(conditional_shortening_check(k, bp, 40, 41, 1),
                    EmptyConditioningEventError);
}

TEST_CASE("conditional shortening inequality sweep at n = 3") {
    for (const char* name : {"uniform", "symmetric-tent"}) {
        const Index n = 3;
        const TransitionKernel k = family_dhn(name, n);
        const UnimodalWeights w = UnimodalWeights::family(name, n);
        const Index bp = lifted_index(basepoint(w), n);
        long tested = 0;
        for (long k0 = 2; k0 <= 2 * n; ++k0) {
            for (long kf = 1; kf < k0; ++kf) {
                for (Index kp = 1; kp <= n; ++kp) {
                    try {
                        const ShorteningCheck c =
                            conditional_shortening_check(k, bp, kf, k0, kp);
                        ++tested;
                        CHECK(c.p_l1_given_a1 <= c.p_l2_given_a2_jump + 1e-12);
                        CHECK(c.p_l1_given_a1 <= c.p_l2_given_a2_any + 1e-12);
                    } catch (const EmptyConditioningEventError&) {
                    }
                }
            }
        }
        CHECK(tested > 0);
    }
}

TEST_CASE("chebyshev_return_count") {
    const ChebyshevReturnCount uni =
        chebyshev_return_count(UnimodalWeights::family("uniform", 5), 5.0);
    CHECK(uni.threshold == doctest::Approx(1.0).epsilon(1e-15)); // 5*4*1/(4*5)
    CHECK(uni.pivot <= 0.5 + 1e-12);

    const ChebyshevReturnCount tent = chebyshev_return_count(
        UnimodalWeights::family("symmetric-tent", 5), 8.0);
    CHECK(tent.threshold == doctest::Approx(2.0 / 3).epsilon(1e-12)); // 8*1*3/36
    CHECK(tent.pivot == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(
        chebyshev_return_count(UnimodalWeights::family("uniform", 5), 4.0),
        TildeCTooSmallError);
}
