#ifndef LIFTEDMC_KERNEL_HPP
#define LIFTEDMC_KERNEL_HPP

#include <string>
#include <vector>

#include "liftedmc/distributions.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

// A state of the lifted chain: direction eps in {+1,-1}, position j in [1,n].
struct LiftedState {
    int direction;
    Index position;

    bool operator==(const LiftedState& o) const {
        return direction == o.direction && position == o.position;
    }
};

// Fixed file-format indexing: (+1,j) -> j-1, (-1,j) -> n+j-1.
Index lifted_index(const LiftedState& s, Index n);
LiftedState lifted_state(Index idx, Index n);

// Basepoint (+1, j*).
LiftedState basepoint(const UnimodalWeights& w);

enum class MoveKind {
    Shift,      // lifted: advance within the current copy
    Jump,       // lifted: switch copy at the same position
    Flip,       // lifted: switch copy while advancing
    Stationary, // lifted: hold
    Step,       // Metropolis: accepted proposal
    Hold        // Metropolis: rejection / out-of-range proposal
};

const char* move_kind_name(MoveKind k);

struct Edge {
    Index to;
    Real p;
    MoveKind kind;
};

enum class KernelLabel { Metropolis, Dhn };

// Row-stochastic kernel stored as per-state outgoing edges (at most 4 for the
// lifted chain, at most 3 for Metropolis). Zero-probability edges are not
// stored. Immutable after construction.
class TransitionKernel {
public:
    TransitionKernel(KernelLabel label, Index n, Real theta,
                     std::vector<std::vector<Edge>> rows);

    Index state_count() const { return static_cast<Index>(rows_.size()); }
    Index n() const { return n_; }
    Real theta() const { return theta_; }
    KernelLabel label() const { return label_; }
    const std::vector<Edge>& row(Index s) const { return rows_[s]; }

    // Dense view, materialized on demand.
    Matrix dense() const;

private:
    KernelLabel label_;
    Index n_;
    Real theta_;
    std::vector<std::vector<Edge>> rows_;
};

// Random walk with acceptance ratio min{1, pi(k)/pi(j)}; proposals outside
// [1,n] and rejections become holding mass.
TransitionKernel metropolis_kernel(const Vector& pi);

// Lifted sampler from the four closed-form move probabilities, with the
// boundary convention pi(0) = pi(n+1) = 0:
//   shift (eps, j+eps)    p_s  = (1-theta) * min{1, pi(j+eps)/pi(j)}
//   jump  (-eps, j)       p_j  = (1-theta) * (1 - min{...})
//   flip  (-eps, j+eps)   p_f  = theta * min{...}
//   stay                  p_f' = theta * (1 - min{...})
TransitionKernel dhn_kernel(const Vector& pi, Real theta);

// Same kernel built by literally composing the accept/reject move to
// (-eps, j+eps) with the subsequent sign change of probability 1-theta.
// Must match dhn_kernel edge-for-edge; kept as an independent oracle.
TransitionKernel dhn_two_stage_oracle(const Vector& pi, Real theta);

// Stationary law of the lifted chain: mass pi(j)/2 on each copy of j.
Vector lifted_stationary(const Vector& pi);

// Detailed balance d(x)P(x,y) = d(y)P(y,x) on every edge, within 1e-12.
bool is_reversible(const TransitionKernel& k, const Vector& d);

} // namespace liftedmc

#endif // LIFTEDMC_KERNEL_HPP
