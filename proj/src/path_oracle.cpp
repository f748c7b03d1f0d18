#include "liftedmc/path_oracle.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "liftedmc/errors.hpp"
#include "liftedmc/exact.hpp"

namespace liftedmc {

PathEnumeration enumerate_paths(const TransitionKernel& k, Index y, Index jp,
                                long length, std::uint64_t budget) {
    if (y < 0 || y >= k.state_count() || jp < 0 || jp >= k.state_count()) {
        throw DimensionMismatchError("state index out of range");
    }
    if (length < 0) {
        throw DimensionMismatchError("length must be non-negative");
    }
    PathEnumeration result{y, jp, length, 0.0, 0};
    std::uint64_t visited = 0;

    std::function<void(Index, long, Real)> dfs = [&](Index s, long remaining,
                                                     Real prob) {
        if (++visited > budget) {
            throw BudgetExceededError("path enumeration budget exhausted");
        }
        if (remaining == 0) {
            if (s == jp) {
                result.total_probability += prob;
                result.path_count++;
            }
            return;
        }
        for (const Edge& e : k.row(s)) {
            dfs(e.to, remaining - 1, prob * e.p);
        }
    };
    dfs(y, length, 1.0);
    return result;
}

Real FlipLaw::total() const {
    Real t = tail_mass;
    for (Real p : probabilities) t += p;
    return t;
}

FlipLaw flip_law_exact(const TransitionKernel& k, Index basepoint, long l_cap,
                       int f_cap) {
    if (basepoint < 0 || basepoint >= k.state_count()) {
        throw DimensionMismatchError("basepoint out of range");
    }
    if (l_cap < 2) {
        throw DimensionMismatchError("l_cap must be >= 2");
    }
    const Index states = k.state_count();
    const int bins = f_cap + 2; // last bin aggregates F' > f_cap

    FlipLaw law;
    law.l_cap = l_cap;
    law.probabilities.assign(f_cap + 1, 0.0);
    law.max_length_per_count.assign(f_cap + 1, 0);

    // alive(s, f): mass of excursions currently at state s with f flips or
    // stationary moves so far.
    Matrix alive = Matrix::Zero(states, bins);
    for (const Edge& e : k.row(basepoint)) {
        if (e.to == basepoint) {
            law.basepoint_hold_mass += e.p; // never left; not an excursion
            continue;
        }
        const int df = (e.kind == MoveKind::Flip ||
                        e.kind == MoveKind::Stationary)
                           ? 1
                           : 0;
        alive(e.to, df) += e.p;
    }

    Real length_mass = 0;
    Real length_weighted = 0;
    Matrix next = Matrix::Zero(states, bins);
    for (long t = 2; t <= l_cap; ++t) {
        next.setZero();
        for (Index s = 0; s < states; ++s) {
            for (int f = 0; f < bins; ++f) {
                const Real mass = alive(s, f);
                if (mass == 0) continue;
                for (const Edge& e : k.row(s)) {
                    const int df = (e.kind == MoveKind::Flip ||
                                    e.kind == MoveKind::Stationary)
                                       ? 1
                                       : 0;
                    const int nf = std::min(f + df, bins - 1);
                    const Real m = mass * e.p;
                    if (e.to == basepoint) {
                        if (nf <= f_cap) {
                            law.probabilities[nf] += m;
                            law.max_length_per_count[nf] = t;
                        } else {
                            law.tail_mass += m;
                        }
                        length_mass += m;
                        length_weighted += static_cast<Real>(t) * m;
                    } else {
                        next(e.to, nf) += m;
                    }
                }
            }
        }
        alive.swap(next);
    }
    law.truncation_mass = alive.sum();
    law.mean_length = length_mass > 0 ? length_weighted / length_mass : 0.0;
    return law;
}

FlipLaw flip_law_exact(const TransitionKernel& k, Index basepoint) {
    return flip_law_exact(k, basepoint, 50 * k.n());
}

Real no_flip_return_probability(const TransitionKernel& k, Index basepoint) {
    if (k.n() == 1) {
        throw SingularSystemError("n = 1 has a degenerate excursion structure");
    }
    if (basepoint < 0 || basepoint >= k.state_count()) {
        throw DimensionMismatchError("basepoint out of range");
    }
    const Index states = k.state_count();
    // Hitting probabilities u(s) for the shift/jump-restricted dynamics,
    // unknowns over the non-basepoint states: (I - Q) u = b.
    Matrix system = Matrix::Identity(states, states);
    Vector rhs = Vector::Zero(states);
    for (Index s = 0; s < states; ++s) {
        if (s == basepoint) continue;
        for (const Edge& e : k.row(s)) {
            if (e.kind != MoveKind::Shift && e.kind != MoveKind::Jump) continue;
            if (e.to == basepoint) {
                rhs[s] += e.p;
            } else {
                system(s, e.to) -= e.p;
            }
        }
    }
    // The basepoint row stays the identity with zero right-hand side.
    Eigen::FullPivLU<Matrix> lu(system);
    if (!lu.isInvertible()) {
        throw SingularSystemError("flip-free first-passage system is singular");
    }
    const Vector u = lu.solve(rhs);

    Real total = 0;
    for (const Edge& e : k.row(basepoint)) {
        if (e.kind != MoveKind::Shift && e.kind != MoveKind::Jump) continue;
        if (e.to == basepoint) continue;
        total += e.p * u[e.to];
    }
    return total;
}

namespace {

int copy_sign(Index state, Index n) { return state < n ? +1 : -1; }

struct ExcursionPath {
    Real prob;
    long length;
    long flip_steps;          // count of flip/stationary moves
    long single_flip_step;    // step index of the single one (when count == 1)
    bool flip_is_flip_kind;   // that move is a Flip (not Stationary)
    long down_count;          // +1 copy -> -1 copy transitions
    long single_down_step;    // step of the single one (when count == 1)
    long up_count;            // -1 copy -> +1 copy transitions
    Index up_source;          // source state of the single upward move
    MoveKind up_kind;
};

} // namespace

ShorteningCheck conditional_shortening_check(const TransitionKernel& k,
                                             Index basepoint, long kf, long k0,
                                             Index kp, std::uint64_t budget) {
    const Index n = k.n();
    if (kf < 1 || k0 <= kf) {
        throw DimensionMismatchError("requires 1 <= kf < k0");
    }
    if (kp < 1 || kp > n) {
        throw DimensionMismatchError("kp must be a position in [1, n]");
    }
    if (k.label() != KernelLabel::Dhn) {
        throw DimensionMismatchError("shortening check needs the lifted kernel");
    }
    if (basepoint < 0 || basepoint >= k.state_count()) {
        throw DimensionMismatchError("basepoint out of range");
    }
    const Index bp = basepoint;
    const Index up_source_state = lifted_index({-1, kp}, n);
    const long cap = 6 * n + 4;
    std::uint64_t visited = 0;

    Real p_a1 = 0, p_a2 = 0, p_l1a1 = 0, p_l2a2_jump = 0, p_l2a2_any = 0;

    ExcursionPath path{1.0, 0, 0, 0, false, 0, 0, 0, 0, MoveKind::Shift};
    std::function<void(Index)> dfs = [&](Index s) {
        if (++visited > budget) {
            throw BudgetExceededError("shortening enumeration budget exhausted");
        }
        for (const Edge& e : k.row(s)) {
            if (path.length == 0 && e.to == bp) continue; // basepoint hold
            const bool is_fs =
                e.kind == MoveKind::Flip || e.kind == MoveKind::Stationary;
            if (is_fs && path.flip_steps >= 1) continue; // only F' <= 1 matters
            ExcursionPath saved = path;
            path.prob *= e.p;
            path.length++;
            if (is_fs) {
                path.flip_steps++;
                path.single_flip_step = path.length;
                path.flip_is_flip_kind = e.kind == MoveKind::Flip;
            }
            const int from_copy = copy_sign(s, n);
            const int to_copy = copy_sign(e.to, n);
            if (from_copy == +1 && to_copy == -1) {
                path.down_count++;
                path.single_down_step = path.length;
            }
            if (from_copy == -1 && to_copy == +1) {
                path.up_count++;
                path.up_source = s;
                path.up_kind = e.kind;
            }
            if (e.to == bp) {
                // Completed excursion: classify.
                if (path.flip_steps == 0) {
                    p_a1 += path.prob;
                    if (path.down_count == 1 && path.single_down_step == k0 &&
                        path.up_count == 1 && path.up_source == up_source_state) {
                        p_l1a1 += path.prob;
                    }
                } else if (path.single_flip_step == kf) {
                    p_a2 += path.prob;
                    const bool one_down = path.down_count == 1;
                    const bool up_at_kp =
                        path.up_count == 1 && path.up_source == up_source_state;
                    if (path.flip_is_flip_kind && one_down && up_at_kp) {
                        if (path.up_kind == MoveKind::Jump) {
                            p_l2a2_jump += path.prob;
                            p_l2a2_any += path.prob;
                        } else if (path.up_kind == MoveKind::Flip) {
                            p_l2a2_any += path.prob;
                        }
                    }
                }
            } else if (path.length < cap) {
                dfs(e.to);
            } else if (path.flip_steps <= 1) {
                // Structurally unreachable: one-flip excursions are shorter
                // than the cap. Guard so silent mass loss cannot happen.
                throw BudgetExceededError(
                    "live one-flip mass at the length cap");
            }
            path = saved;
        }
    };
    dfs(bp);

    if (p_a1 <= 0 || p_a2 <= 0) {
        std::ostringstream os;
        os << "conditioning event empty: P(A1) = " << p_a1
           << ", P(A2) = " << p_a2 << " at kf=" << kf << " k0=" << k0
           << " kp=" << kp;
        throw EmptyConditioningEventError(os.str());
    }
    return ShorteningCheck{p_a1, p_a2, p_l1a1 / p_a1, p_l2a2_jump / p_a2,
                           p_l2a2_any / p_a2};
}

ChebyshevReturnCount chebyshev_return_count(const UnimodalWeights& w,
                                            Real tilde_c) {
    if (!(tilde_c > 4)) {
        throw TildeCTooSmallError("requires tilde_c > 4");
    }
    if (w.n() % 2 == 0) {
        throw EvenNError("return-count bound requires odd n");
    }
    const ShorteningRadii radii = shortening_radii(w);
    const Real dss = static_cast<Real>(radii.d_double_star);
    const Real peak = w.weight(w.mode_index());
    const Real threshold = tilde_c * dss * peak / (4.0 * w.normalizer());
    const Real mu = 2.0 * w.normalizer() / peak;
    const Real pivot = dss > 0 ? mu * threshold / (tilde_c * dss) : 0.0;
    return ChebyshevReturnCount{threshold, pivot};
}

} // namespace liftedmc
