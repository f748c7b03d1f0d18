#include "liftedmc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "liftedmc/bounds.hpp"
#include "liftedmc/errors.hpp"
#include "liftedmc/exact.hpp"
#include "liftedmc/experiments.hpp"
#include "liftedmc/path_oracle.hpp"

namespace liftedmc {

namespace {

// Probability of hitting `target` within `horizon` steps from `start`.
Real first_passage_within(const TransitionKernel& k, Index target,
                          long horizon, Index start) {
    if (start == target) return 1.0;
    Vector d = Vector::Zero(k.state_count());
    d[start] = 1.0;
    Real absorbed = 0;
    Vector next(k.state_count());
    for (long t = 0; t < horizon; ++t) {
        next.setZero();
        for (Index s = 0; s < k.state_count(); ++s) {
            const Real mass = d[s];
            if (mass == 0) continue;
            for (const Edge& e : k.row(s)) {
                if (e.to == target) {
                    absorbed += mass * e.p;
                } else {
                    next[e.to] += mass * e.p;
                }
            }
        }
        d.swap(next);
    }
    return absorbed;
}

// From `from`: mass reaching `target` within `horizon` steps without
// revisiting `from` in between.
Real taboo_first_passage(const TransitionKernel& k, Index from, Index target,
                         long horizon) {
    Vector d = Vector::Zero(k.state_count());
    d[from] = 1.0;
    Real absorbed = 0;
    Vector next(k.state_count());
    for (long t = 0; t < horizon; ++t) {
        next.setZero();
        for (Index s = 0; s < k.state_count(); ++s) {
            const Real mass = d[s];
            if (mass == 0) continue;
            for (const Edge& e : k.row(s)) {
                if (e.to == target) {
                    absorbed += mass * e.p;
                } else if (e.to != from) {
                    next[e.to] += mass * e.p;
                }
            }
        }
        d.swap(next);
    }
    return absorbed;
}

struct CheckList {
    json checks = json::array();
    bool all_passed = true;

    void add(const std::string& name, bool pass, json detail = json::object()) {
        json entry;
        entry["name"] = name;
        entry["pass"] = pass;
        for (auto& [key, value] : detail.items()) {
            entry[key] = value;
        }
        checks.push_back(entry);
        all_passed = all_passed && pass;
    }
};

Real max_row_sum_error(const TransitionKernel& k) {
    Real worst = 0;
    for (Index s = 0; s < k.state_count(); ++s) {
        Real total = 0;
        for (const Edge& e : k.row(s)) total += e.p;
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

// Move probabilities per row keyed by kind; absent kinds are zero.
std::array<Real, 6> kind_masses(const TransitionKernel& k, Index s) {
    std::array<Real, 6> out{};
    for (const Edge& e : k.row(s)) out[static_cast<int>(e.kind)] += e.p;
    return out;
}

bool edges_match(const TransitionKernel& a, const TransitionKernel& b,
                 Real tol) {
    if (a.state_count() != b.state_count()) return false;
    for (Index s = 0; s < a.state_count(); ++s) {
        // Compare as (to, kind) -> p maps.
        for (int pass = 0; pass < 2; ++pass) {
            const TransitionKernel& x = pass == 0 ? a : b;
            const TransitionKernel& y = pass == 0 ? b : a;
            for (const Edge& e : x.row(s)) {
                Real other = 0;
                for (const Edge& f : y.row(s)) {
                    if (f.to == e.to && f.kind == e.kind) other = f.p;
                }
                if (std::abs(other - e.p) > tol) return false;
            }
        }
    }
    return true;
}

} // namespace

json verify_all(const VerifyOptions& opts) {
    const UnimodalWeights w = opts.dist.build();
    const Index n = w.n();
    if (n < 3 || n % 2 == 0) {
        throw EvenNError("verify-all requires odd n >= 3");
    }
    const Real theta = opts.theta.resolve(n);
    const Vector pi = normalize(w);
    const TransitionKernel dhn = dhn_kernel(pi, theta);
    const TransitionKernel metro = metropolis_kernel(pi);
    const Vector pi_lifted = lifted_stationary(pi);
    const Index jstar = w.mode_index();
    const Index bp = lifted_index(basepoint(w), n);
    const Real nn = static_cast<Real>(n);
    const Real survival = (nn - 1.0) / nn;

    CheckList cl;

    // Underlying probabilities pi(j) = m_j / z'.
    {
        const Real sum_err = std::abs(pi.sum() - 1.0);
        Real ratio_err = 0;
        for (Index j = 1; j <= n; ++j) {
            ratio_err = std::max(ratio_err,
                                 std::abs(pi[j - 1] - w.weight(j) / w.normalizer()));
        }
        cl.add("weight_normalization", sum_err < kProbTol && ratio_err < kProbTol,
               {{"sum_error", sum_err}, {"ratio_error", ratio_err}});
    }

    // Unimodality validation and the plateau tie-break.
    {
        bool valley_rejected = false;
        try {
            Vector bad(3);
            bad << 2, 1, 2;
            UnimodalWeights::from_weights(bad);
        } catch (const NotUnimodalError&) {
            valley_rejected = true;
        }
        Vector plateau(3);
        plateau << 1, 1, 1;
        const UnimodalWeights p = UnimodalWeights::from_weights(plateau);
        cl.add("unimodal_validation",
               valley_rejected && p.mode_index() == 1 && jstar >= 1 && jstar <= n,
               {{"j_star", jstar}});
    }

    // Basepoint (+1, j*) and the sector decomposition.
    {
        const LiftedState b = basepoint(w);
        bool sectors_ok = true;
        Index counts[4] = {0, 0, 0, 0};
        for (Index s = 0; s < 2 * n; ++s) {
            const LiftedState ls = lifted_state(s, n);
            const bool right = ls.position > jstar;
            const int sector = (ls.direction == +1 ? 0 : 2) + (right ? 1 : 0);
            counts[sector]++;
            if (lifted_index(ls, n) != s) sectors_ok = false;
        }
        const bool partition =
            counts[0] + counts[1] + counts[2] + counts[3] == 2 * n &&
            counts[0] == jstar && counts[1] == n - jstar;
        cl.add("basepoint_and_sectors",
               b.direction == +1 && b.position == jstar && sectors_ok && partition,
               {{"upper_left", counts[0]},
                {"upper_right", counts[1]},
                {"lower_left", counts[2]},
                {"lower_right", counts[3]}});
    }

    // Metropolis acceptance rule and row stochasticity.
    {
        Real worst = 0;
        for (Index j = 1; j <= n; ++j) {
            const auto masses = kind_masses(metro, j - 1);
            Real left = 0, right = 0;
            for (const Edge& e : metro.row(j - 1)) {
                if (e.kind == MoveKind::Step && e.to == j - 2) left = e.p;
                if (e.kind == MoveKind::Step && e.to == j) right = e.p;
            }
            const Real want_left =
                j > 1 ? 0.5 * std::min(1.0, pi[j - 2] / pi[j - 1]) : 0.0;
            const Real want_right =
                j < n ? 0.5 * std::min(1.0, pi[j] / pi[j - 1]) : 0.0;
            worst = std::max({worst, std::abs(left - want_left),
                              std::abs(right - want_right),
                              std::abs(masses[int(MoveKind::Hold)] -
                                       (1.0 - want_left - want_right))});
        }
        cl.add("metropolis_acceptance_rule",
               worst < kExactTol && max_row_sum_error(metro) < kProbTol,
               {{"max_error", worst}});
    }

    // Metropolis keeps pi stationary and is reversible.
    {
        const Vector after = evolve(metro, pi, 1);
        const Real err = (after - pi).lpNorm<1>();
        cl.add("metropolis_stationarity", err < kProbTol, {{"l1_error", err}});
        cl.add("metropolis_reversible", is_reversible(metro, pi));
    }

    // The four lifted move probabilities in closed form.
    {
        Real worst = 0;
        for (int eps : {+1, -1}) {
            for (Index j = 1; j <= n; ++j) {
                const Index s = lifted_index({eps, j}, n);
                const Index tgt = j + eps;
                const Real target_pi =
                    tgt >= 1 && tgt <= n ? pi[tgt - 1] : 0.0;
                const Real ratio = std::min(1.0, target_pi / pi[j - 1]);
                const auto masses = kind_masses(dhn, s);
                worst = std::max(
                    {worst,
                     std::abs(masses[int(MoveKind::Shift)] - (1 - theta) * ratio),
                     std::abs(masses[int(MoveKind::Jump)] -
                              (1 - theta) * (1 - ratio)),
                     std::abs(masses[int(MoveKind::Flip)] - theta * ratio),
                     std::abs(masses[int(MoveKind::Stationary)] -
                              theta * (1 - ratio))});
            }
        }
        cl.add("dhn_move_probabilities", worst < kExactTol,
               {{"max_error", worst}});
    }

    // p_s + p_j + p_f + p_f' = 1 at every state.
    {
        const Real err = max_row_sum_error(dhn);
        cl.add("dhn_move_completeness", err < kExactTol, {{"max_error", err}});
    }

    // One step = step 2 then step 3: the two-stage composition is the kernel.
    cl.add("dhn_two_stage_equivalence",
           edges_match(dhn, dhn_two_stage_oracle(pi, theta), kExactTol));

    // Stationary law pi~((eps,j)) = pi(j)/2, fixed by the kernel.
    {
        Real half_err = 0;
        for (Index j = 1; j <= n; ++j) {
            half_err = std::max(half_err,
                                std::abs(pi_lifted[lifted_index({+1, j}, n)] -
                                         0.5 * pi[j - 1]));
            half_err = std::max(half_err,
                                std::abs(pi_lifted[lifted_index({-1, j}, n)] -
                                         0.5 * pi[j - 1]));
        }
        const Real fix_err = (evolve(dhn, pi_lifted, 1) - pi_lifted).lpNorm<1>();
        cl.add("lifted_stationary_half_mass",
               half_err < kProbTol && fix_err < kProbTol,
               {{"half_error", half_err}, {"l1_error", fix_err}});
    }

    // The lifted chain is non-reversible.
    cl.add("dhn_nonreversible", !is_reversible(dhn, pi_lifted));

    // Variation distance: TV(delta_y, pi~) = 1 - pi~(y); disjoint masses at 1.
    {
        Real worst = 0;
        for (Index y = 0; y < 2 * n; ++y) {
            Vector d = Vector::Zero(2 * n);
            d[y] = 1.0;
            worst = std::max(worst, std::abs(tv_distance(d, pi_lifted) -
                                             (1.0 - pi_lifted[y])));
        }
        Vector a = Vector::Zero(2 * n), b = Vector::Zero(2 * n);
        a[0] = 1.0;
        b[2 * n - 1] = 1.0;
        const Real disjoint = tv_distance(a, b);
        cl.add("variation_distance_definition",
               worst < kProbTol && std::abs(disjoint - 1.0) < kProbTol,
               {{"pointmass_error", worst}, {"disjoint", disjoint}});
    }

    // delta-convergence: d(t_mix) < delta <= d(t_mix - 1), curve monotone.
    {
        const MixingReport report =
            mixing_time(dhn, pi_lifted, 0.25, 200 * n);
        bool monotone = true;
        for (std::size_t i = 1; i < report.curve.size(); ++i) {
            if (report.curve[i].second >
                report.curve[i - 1].second + kProbTol) {
                monotone = false;
            }
        }
        const bool boundary =
            report.curve.back().second < 0.25 &&
            (report.t_mix == 0 ||
             report.curve[report.curve.size() - 2].second >= 0.25);
        cl.add("delta_convergence_criterion", monotone && boundary,
               {{"t_mix", report.t_mix}, {"monotone", monotone}});
    }

    // Meyn-Tweedie with the halved-TV convention.
    {
        json detail;
        bool pass = true;
        try {
            const MeynTweedieReport r =
                meyn_tweedie_check(dhn, pi_lifted, 2 * n, 20 * n);
            detail["rho"] = r.rho;
            detail["violations"] = r.violations;
            detail["min_slack"] = r.min_slack;
            pass = r.violations == 0 && r.min_slack > -kProbTol;
        } catch (const VacuousMinorizationError&) {
            detail["vacuous"] = true; // rho = 1: the bound asserts nothing
        }
        cl.add("meyn_tweedie_contraction", pass, detail);
    }

    // Shortening radii: inequalities 3.3/3.4 at the radii, failing beyond.
    {
        const ShorteningRadii r = shortening_radii(w);
        bool ok = r.d_double_star == std::max(r.d2 - jstar, jstar - r.d1);
        ok = ok && 2 * r.d_double_star >= r.d2 - r.d1; // d** >= (d2-d1)/2
        if (r.d2 > jstar) {
            const Real half = 0.5 * right_deficiency_sum(w, n);
            if (right_deficiency_sum(w, jstar + 1) <= half) {
                // No fallback: the chosen d2 satisfies 3.3 and d2+1 fails.
                ok = ok && right_deficiency_sum(w, r.d2) <= half + kProbTol;
                if (r.d2 < n) {
                    ok = ok && right_deficiency_sum(w, r.d2 + 1) > half;
                }
            }
        }
        if (r.d1 < jstar) {
            const Real half = 0.5 * left_deficiency_sum(w, 1);
            if (left_deficiency_sum(w, jstar - 1) <= half) {
                ok = ok && left_deficiency_sum(w, r.d1) <= half + kProbTol;
                if (r.d1 > 1) {
                    ok = ok && left_deficiency_sum(w, r.d1 - 1) > half;
                }
            }
        }
        cl.add("shortening_radii_inequalities", ok,
               {{"d1", r.d1}, {"d2", r.d2}, {"d_double_star", r.d_double_star}});
    }

    // Ideal paths: some length x <= 8n connects every pair of states.
    {
        Matrix P = dhn.dense();
        Matrix power = Matrix::Identity(2 * n, 2 * n);
        long x = 0;
        bool found = false;
        for (long t = 1; t <= 8 * n; ++t) {
            power = power * P;
            if (power.minCoeff() > 0) {
                x = t;
                found = true;
                break;
            }
        }
        cl.add("ideal_path_exists", found, {{"x", x}});
    }

    // First component: P(hit basepoint within 2n-1 steps) >= ((n-1)/n)^(2n-1)
    // from every start.
    {
        const Real bound = std::pow(survival, 2.0 * nn - 1.0);
        Real worst_slack = 2;
        for (Index y = 0; y < 2 * n; ++y) {
            const Real prob = first_passage_within(dhn, bp, 2 * n - 1, y);
            worst_slack = std::min(worst_slack, prob - bound);
        }
        cl.add("first_component_bound", worst_slack > -kProbTol,
               {{"bound", bound}, {"min_slack", worst_slack}});
    }

    // Third component: taboo passage basepoint -> j' within 2n-1 steps
    // >= (m_j / m_{j*}) ((n-1)/n)^(2n-1).
    {
        Real worst_slack = 2;
        for (Index s = 0; s < 2 * n; ++s) {
            if (s == bp) continue;
            const LiftedState ls = lifted_state(s, n);
            const Real bound = w.weight(ls.position) / w.weight(jstar) *
                               std::pow(survival, 2.0 * nn - 1.0);
            const Real prob = taboo_first_passage(dhn, bp, s, 2 * n - 1);
            worst_slack = std::min(worst_slack, prob - bound);
        }
        cl.add("third_component_bound", worst_slack > -kProbTol,
               {{"min_slack", worst_slack}});
    }

    // Flip law: P(F'=0) >= ((n-1)/n)^(2n), P(F'=1) >= (1/n)((n-1)/n)^(4n-2j*-2),
    // and the two zero-flip routes agree.
    {
        const FlipLaw law = flip_law_exact(dhn, bp, 50 * n);
        const Real b0 = std::pow(survival, 2.0 * nn);
        const Real b1 =
            std::pow(survival, 4.0 * nn - 2.0 * static_cast<Real>(jstar) - 2.0) /
            nn;
        const Real no_flip = no_flip_return_probability(dhn, bp);
        cl.add("zero_flip_return_bound", law.p(0) >= b0 * (1.0 - kProbTol),
               {{"exact", law.p(0)}, {"bound", b0}});
        cl.add("one_flip_return_bound", law.p(1) >= b1 * (1.0 - kProbTol),
               {{"exact", law.p(1)}, {"bound", b1}});
        cl.add("zero_flip_two_routes",
               std::abs(no_flip - law.p(0)) < kProbTol,
               {{"linear_system", no_flip}, {"dp", law.p(0)}});
    }

    // Conditional shortening P(L1|A1) <= P(L2|A2), both readings.
    {
        long tested = 0, empty = 0, violations = 0;
        const long max_k0 = std::min<long>(2 * n, 12);
        for (long k0 = 2; k0 <= max_k0; ++k0) {
            for (long kf = 1; kf < k0; ++kf) {
                for (Index kp = 1; kp <= std::min<Index>(jstar + 1, n); ++kp) {
                    try {
                        const ShorteningCheck c =
                            conditional_shortening_check(dhn, bp, kf, k0, kp);
                        ++tested;
                        if (c.p_l1_given_a1 > c.p_l2_given_a2_jump + kProbTol ||
                            c.p_l1_given_a1 > c.p_l2_given_a2_any + kProbTol) {
                            ++violations;
                        }
                    } catch (const EmptyConditioningEventError&) {
                        ++empty;
                    }
                }
            }
        }
        cl.add("conditional_shortening_inequality",
               violations == 0 && tested > 0,
               {{"tested", tested}, {"empty", empty}, {"violations", violations}});
    }

    // The flip-count binomial factor is minimized at s = cn in the
    // regime f1 <= (cn - 4n + 2)/n.
    {
        const Real c = 6;
        bool ok = true;
        for (int f1 = 0; f1 <= 2; ++f1) {
            const long lo = static_cast<long>(c * nn - 4 * nn + 2);
            const long hi = static_cast<long>(c * nn);
            Real best = 2;
            long arg = -1;
            for (long s = lo; s <= hi; ++s) {
                const BinomialLaw lawb{s, 1.0 / nn};
                const Real v = lawb.pmf(f1);
                if (v < best) {
                    best = v;
                    arg = s;
                }
            }
            if (arg != hi) ok = false;
        }
        cl.add("flip_binomial_minimum", ok, {{"c", c}});
    }

    // F'' ~ b(floor(cn/f~), 1/n).
    {
        BoundParams p;
        p.c = 2;
        p.f_tilde = 2;
        const BinomialLaw law = f_double_prime_law(p, n);
        Real total = 0;
        for (long kk = 0; kk <= law.trials; ++kk) total += law.pmf(kk);
        const Real zero = law.pmf(0);
        const Real zero_want =
            std::pow(survival, static_cast<Real>(law.trials));
        cl.add("f_double_prime_law",
               std::abs(total - 1.0) < kProbTol &&
                   std::abs(law.mean() - static_cast<Real>(law.trials) / nn) <
                       kProbTol &&
                   std::abs(zero - zero_want) < kProbTol,
               {{"trials", law.trials}, {"pmf_total", total}});
    }

    // Mean recurrence: 1/pi~(basepoint) = 2 z'/m_{j*}.
    {
        const Real mu = mean_recurrence_time(pi_lifted, bp);
        const Real want = 2.0 * w.normalizer() / w.weight(jstar);
        cl.add("mean_recurrence_identity",
               std::abs(mu - want) < kProbTol * want,
               {{"mu", mu}, {"closed_form", want}});
    }

    // Chebyshev return-count threshold and its 1/2 pivot.
    {
        const ChebyshevReturnCount c = chebyshev_return_count(w, 5.0);
        const ShorteningRadii r = shortening_radii(w);
        const Real want = 5.0 * static_cast<Real>(r.d_double_star) *
                          w.weight(jstar) / (4.0 * w.normalizer());
        cl.add("chebyshev_return_count",
               std::abs(c.threshold - want) < kProbTol &&
                   c.pivot < 0.5 + kProbTol,
               {{"threshold", c.threshold}, {"pivot", c.pivot}});
    }

    // Occurrence bound: factor breakdown and oracle dominance.
    {
        BoundParams p;
        p.c = 4;
        p.f1 = 0;
        p.f2 = 0;
        p.c_tilde_tilde = 1;
        p.d_double_star = shortening_radii(w).d_double_star;
        const OccurrenceBreakdown b = occurrence_lower_bound(p, w, jstar);
        const Real recomputed =
            b.prefactor * b.binom_f1 * b.binom_f2 * b.flip_factor *
            b.survival_factor;
        const bool factors_ok =
            std::abs(b.value - recomputed) <= 1e-9 * std::abs(b.value) &&
            std::abs(b.path_scale -
                     p.c_tilde_tilde * w.weight(jstar) / w.normalizer()) <
                kProbTol;
        // Dominance at an enumerable instance: the exact cn-step transition
        // mass admits a positive c~~.
        const Real admissible = largest_admissible_c_tilde_tilde(
            p, w, jstar, dhn, bp, lifted_index({-1, jstar}, n));
        cl.add("occurrence_bound_breakdown",
               factors_ok && admissible > 0,
               {{"value", b.value}, {"largest_admissible_ctt", admissible}});
    }

    // Binomial growth (3.28-3.33).
    {
        const BinomGrowthReport r = binom_growth_check(200, 2);
        cl.add("binomial_growth",
               r.bounded && r.monotone && r.floor_binom_bounded &&
                   r.final_ratio <= r.limit,
               {{"final_ratio", r.final_ratio}, {"limit", r.limit}});
    }

    // Replacing binomials by their power bounds dominates the binomial form.
    {
        BoundParams p;
        p.c = 4;
        p.f1 = 1;
        p.f2 = 1;
        p.f_tilde = 2;
        p.c_tilde_tilde = 1;
        p.d_double_star = shortening_radii(w).d_double_star;
        const OccurrenceBreakdown b = occurrence_lower_bound(p, w, jstar);
        const Real growth_form =
            p.c_tilde_tilde *
            std::pow(p.c, static_cast<Real>(p.f1 + p.f2)) /
            std::pow(p.f_tilde, static_cast<Real>(p.f2)) * w.weight(jstar) /
            w.normalizer() * b.survival_factor;
        cl.add("occurrence_growth_form",
               b.value <= growth_form * (1.0 + 1e-12),
               {{"binomial_form", b.value}, {"growth_form", growth_form}});
    }

    // rho pipeline (3.35-3.37) and the TV bound (3.38-3.41).
    {
        BoundParams p;
        p.c = 2;
        p.c_prime = 20;
        p.f1 = 1;
        p.f2 = 1;
        p.f_tilde = 2;
        p.c_tilde_tilde = 0.25;
        p = BoundParams::with_derived_c_hat(p);
        const Real want_c_hat = 2.0 * 0.25 * std::pow(2.0, 2.0) / 2.0;
        const Real rho = rho_bound(p, n);
        const Real want_rho =
            1.0 - p.c_hat * std::pow(survival, p.c * nn - 2.0);
        const Real tv = tv_upper_bound(p, n);
        const Real want_tv = std::pow(rho, std::floor(p.c_prime / p.c));
        // Monotonicity in c'.
        BoundParams p2 = p;
        p2.c_prime = 40;
        const bool monotone = tv_upper_bound(p2, n) <= tv + kProbTol;
        cl.add("rho_pipeline",
               std::abs(p.c_hat - want_c_hat) < kProbTol &&
                   std::abs(rho - want_rho) < kProbTol &&
                   std::abs(tv - want_tv) < kProbTol && monotone,
               {{"c_hat", p.c_hat}, {"rho", rho}, {"tv_bound", tv}});
    }

    // Limit: rho_bound -> 1 - c_hat e^{-c} with O(1/n) error.
    {
        BoundParams p;
        p.c = 1;
        p.c_prime = 10;
        p.f1 = 0;
        p.f2 = 0;
        p.c_tilde_tilde = 0.5;
        p = BoundParams::with_derived_c_hat(p);
        const Real limit = 1.0 - p.c_hat * std::exp(-p.c);
        Real prev_err = 2;
        bool shrinking = true;
        for (Index big : {11, 111, 1111, 11111}) {
            const Real err = std::abs(rho_bound(p, big) - limit);
            if (err > prev_err) shrinking = false;
            prev_err = err;
        }
        const Real tv_limit =
            std::pow(limit, std::floor(p.c_prime / p.c));
        const Real tv_at = tv_upper_bound(p, 11111);
        cl.add("rho_tv_limit", shrinking && prev_err < 1e-3 &&
                                   std::abs(tv_at - tv_limit) < 1e-2,
               {{"limit", limit}, {"final_error", prev_err}});
    }

    // Order-n^2 Metropolis and order-n lifted mixing, smoke grids.
    {
        const std::vector<Index> grid{9, 11, 13, 15, 17};
        const ScalingResult metro_fit =
            scaling_study("uniform", "metropolis", grid, 0.25);
        cl.add("metropolis_order_n2_smoke",
               metro_fit.slope > 1.5 && metro_fit.slope < 2.5,
               {{"slope", metro_fit.slope}});
        const ScalingResult dhn_fit = scaling_study(
            opts.dist.family ? *opts.dist.family : "uniform", "dhn", grid,
            0.25, opts.dist.params, opts.theta);
        cl.add("main_result_order_n_smoke", dhn_fit.slope < 1.5,
               {{"slope", dhn_fit.slope}});
    }

    // Seeded determinism of the simulator.
    {
        const ChainRun a = run(dhn, bp, 5000, opts.seed);
        const ChainRun b = run(dhn, bp, 5000, opts.seed);
        const bool identical = a.occupancy == b.occupancy &&
                               a.final_state == b.final_state &&
                               a.move_counts == b.move_counts;
        const Real tv = empirical_tv(a, pi_lifted);
        cl.add("sampler_determinism_and_tv", identical && tv < 0.2,
               {{"empirical_tv", tv}});
    }

    json out;
    json config;
    config["distribution"] = opts.dist.to_json();
    config["theta"] = opts.theta.str();
    config["seed"] = opts.seed;
    out["config"] = config;
    out["checks"] = cl.checks;
    out["passed"] = cl.all_passed;
    return out;
}

} // namespace liftedmc
