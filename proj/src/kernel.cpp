#include "liftedmc/kernel.hpp"

#include <cmath>
#include <sstream>

#include "liftedmc/errors.hpp"

namespace liftedmc {

namespace {

void check_probability_vector(const Vector& pi) {
    if (pi.size() < 1) {
        throw DimensionMismatchError("probability vector is empty");
    }
    for (Index i = 0; i < pi.size(); ++i) {
        if (!(pi[i] > 0) || pi[i] > 1) {
            throw NonPositiveWeightError("pi entries must lie in (0, 1]");
        }
    }
    if (std::abs(pi.sum() - 1.0) > kProbTol) {
        throw NonPositiveWeightError("pi does not sum to 1 within 1e-12");
    }
}

// pi(j) with the boundary convention pi(0) = pi(n+1) = 0.
Real pi_at(const Vector& pi, Index j) {
    return (j >= 1 && j <= pi.size()) ? pi[j - 1] : 0.0;
}

} // namespace

Index lifted_index(const LiftedState& s, Index n) {
    return s.direction == +1 ? s.position - 1 : n + s.position - 1;
}

LiftedState lifted_state(Index idx, Index n) {
    return idx < n ? LiftedState{+1, idx + 1} : LiftedState{-1, idx - n + 1};
}

LiftedState basepoint(const UnimodalWeights& w) {
    return LiftedState{+1, w.mode_index()};
}

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Shift: return "shift";
        case MoveKind::Jump: return "jump";
        case MoveKind::Flip: return "flip";
        case MoveKind::Stationary: return "stationary";
        case MoveKind::Step: return "step";
        case MoveKind::Hold: return "hold";
    }
    return "?";
}

TransitionKernel::TransitionKernel(KernelLabel label, Index n, Real theta,
                                   std::vector<std::vector<Edge>> rows)
    : label_(label), n_(n), theta_(theta), rows_(std::move(rows)) {
    for (std::size_t s = 0; s < rows_.size(); ++s) {
        Real total = 0;
        for (const Edge& e : rows_[s]) {
            if (e.p < 0 || e.p > 1 || e.to < 0 ||
                e.to >= static_cast<Index>(rows_.size())) {
                std::ostringstream os;
                os << "malformed edge from state " << s;
                throw DimensionMismatchError(os.str());
            }
            total += e.p;
        }
        if (std::abs(total - 1.0) > kProbTol) {
            std::ostringstream os;
            os << "row " << s << " sums to " << total;
            throw DimensionMismatchError(os.str());
        }
    }
}

Matrix TransitionKernel::dense() const {
    Matrix P = Matrix::Zero(state_count(), state_count());
    for (Index s = 0; s < state_count(); ++s) {
        for (const Edge& e : rows_[s]) {
            P(s, e.to) += e.p;
        }
    }
    return P;
}

TransitionKernel metropolis_kernel(const Vector& pi) {
    check_probability_vector(pi);
    const Index n = pi.size();
    std::vector<std::vector<Edge>> rows(n);
    for (Index j = 1; j <= n; ++j) {
        Real hold = 0;
        std::vector<Edge>& row = rows[j - 1];
        for (int dir : {-1, +1}) {
            const Index k = j + dir;
            if (k < 1 || k > n) {
                hold += 0.5; // out-of-range proposal rejected
                continue;
            }
            const Real accept = 0.5 * std::min(1.0, pi[k - 1] / pi[j - 1]);
            if (accept > 0) row.push_back({k - 1, accept, MoveKind::Step});
            hold += 0.5 - accept;
        }
        if (hold > 0) row.push_back({j - 1, hold, MoveKind::Hold});
    }
    return TransitionKernel(KernelLabel::Metropolis, n, 0.0, std::move(rows));
}

TransitionKernel dhn_kernel(const Vector& pi, Real theta) {
    check_probability_vector(pi);
    if (!(theta > 0) || !(theta < 1)) {
        throw ThetaOutOfRangeError("theta must lie in (0, 1)");
    }
    const Index n = pi.size();
    std::vector<std::vector<Edge>> rows(2 * n);
    for (int eps : {+1, -1}) {
        for (Index j = 1; j <= n; ++j) {
            const Index s = lifted_index({eps, j}, n);
            const Index tgt = j + eps;
            const Real ratio = std::min(1.0, pi_at(pi, tgt) / pi[j - 1]);
            std::vector<Edge>& row = rows[s];
            const Real p_shift = (1.0 - theta) * ratio;
            const Real p_jump = (1.0 - theta) * (1.0 - ratio);
            const Real p_flip = theta * ratio;
            const Real p_stat = theta * (1.0 - ratio);
            if (p_shift > 0) {
                row.push_back({lifted_index({eps, tgt}, n), p_shift, MoveKind::Shift});
            }
            if (p_jump > 0) {
                row.push_back({lifted_index({-eps, j}, n), p_jump, MoveKind::Jump});
            }
            if (p_flip > 0) {
                row.push_back({lifted_index({-eps, tgt}, n), p_flip, MoveKind::Flip});
            }
            if (p_stat > 0) {
                row.push_back({s, p_stat, MoveKind::Stationary});
            }
        }
    }
    return TransitionKernel(KernelLabel::Dhn, n, theta, std::move(rows));
}

TransitionKernel dhn_two_stage_oracle(const Vector& pi, Real theta) {
    check_probability_vector(pi);
    if (!(theta > 0) || !(theta < 1)) {
        throw ThetaOutOfRangeError("theta must lie in (0, 1)");
    }
    const Index n = pi.size();
    std::vector<std::vector<Edge>> rows(2 * n);
    for (int eps : {+1, -1}) {
        for (Index j = 1; j <= n; ++j) {
            const Index s = lifted_index({eps, j}, n);
            const Index tgt = j + eps;
            const Real alpha = std::min(1.0, pi_at(pi, tgt) / pi[j - 1]);
            // Step 2 outcomes: advance to (-eps, j+eps) w.p. alpha, stay put.
            // Step 3 outcomes: change sign of the first coordinate w.p.
            // 1-theta, stay put. One step of the chain = step 2 then step 3.
            struct Outcome {
                Real p;
                LiftedState state;
                bool moved;
            };
            const Outcome after_step2[2] = {
                {alpha, {-eps, tgt}, true},
                {1.0 - alpha, {eps, j}, false},
            };
            std::vector<Edge>& row = rows[s];
            for (const Outcome& o : after_step2) {
                if (o.p <= 0) continue;
                const LiftedState flipped{-o.state.direction, o.state.position};
                const Real p_change = o.p * (1.0 - theta);
                const Real p_keep = o.p * theta;
                const MoveKind kind_change =
                    o.moved ? MoveKind::Shift : MoveKind::Jump;
                const MoveKind kind_keep =
                    o.moved ? MoveKind::Flip : MoveKind::Stationary;
                if (p_change > 0) {
                    row.push_back({lifted_index(flipped, n), p_change, kind_change});
                }
                if (p_keep > 0) {
                    row.push_back({lifted_index(o.state, n), p_keep, kind_keep});
                }
            }
        }
    }
    return TransitionKernel(KernelLabel::Dhn, n, theta, std::move(rows));
}

Vector lifted_stationary(const Vector& pi) {
    check_probability_vector(pi);
    const Index n = pi.size();
    Vector out(2 * n);
    out.head(n) = 0.5 * pi;
    out.tail(n) = 0.5 * pi;
    return out;
}

bool is_reversible(const TransitionKernel& k, const Vector& d) {
    if (d.size() != k.state_count()) {
        throw DimensionMismatchError("distribution size does not match kernel");
    }
    const Matrix P = k.dense();
    for (Index x = 0; x < k.state_count(); ++x) {
        for (const Edge& e : k.row(x)) {
            const Real forward = d[x] * e.p;
            const Real backward = d[e.to] * P(e.to, x);
            if (std::abs(forward - backward) > kProbTol) return false;
        }
    }
    return true;
}

} // namespace liftedmc
