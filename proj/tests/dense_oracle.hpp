#ifndef LIFTEDMC_TESTS_DENSE_ORACLE_HPP
#define LIFTEDMC_TESTS_DENSE_ORACLE_HPP

// Test-only oracle: dense transition matrices built directly from the move
// formulas, independent of the adjacency-list kernels under test.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "liftedmc/types.hpp"

namespace oracle {

using liftedmc::Index;
using liftedmc::Matrix;
using liftedmc::Real;
using liftedmc::Vector;

// (+1,j) -> j-1, (-1,j) -> n+j-1, 1-based j.
inline Index up(Index j, Index n) {
    (void)n;
    return j - 1;
}
inline Index down(Index j, Index n) { return n + j - 1; }

inline Matrix dhn_dense(const Vector& weights, Real theta) {
    const Index n = weights.size();
    auto m = [&](Index j) -> Real {
        return (j >= 1 && j <= n) ? weights[j - 1] : 0.0;
    };
    Matrix P = Matrix::Zero(2 * n, 2 * n);
    for (Index j = 1; j <= n; ++j) {
        // +1 copy moves right.
        Real r = std::min(1.0, m(j + 1) / m(j));
        if (j + 1 <= n) {
            P(up(j, n), up(j + 1, n)) += (1 - theta) * r;   // shift
            P(up(j, n), down(j + 1, n)) += theta * r;       // flip
        }
        P(up(j, n), down(j, n)) += (1 - theta) * (1 - r); // jump
        P(up(j, n), up(j, n)) += theta * (1 - r);         // stationary
        // -1 copy moves left.
        r = std::min(1.0, m(j - 1) / m(j));
        if (j - 1 >= 1) {
            P(down(j, n), down(j - 1, n)) += (1 - theta) * r;
            P(down(j, n), up(j - 1, n)) += theta * r;
        }
        P(down(j, n), up(j, n)) += (1 - theta) * (1 - r);
        P(down(j, n), down(j, n)) += theta * (1 - r);
    }
    return P;
}

inline Matrix metropolis_dense(const Vector& weights) {
    const Index n = weights.size();
    Matrix P = Matrix::Zero(n, n);
    for (Index j = 1; j <= n; ++j) {
        Real hold = 0;
        for (int dir : {-1, +1}) {
            const Index k = j + dir;
            if (k < 1 || k > n) {
                hold += 0.5;
                continue;
            }
            const Real a = 0.5 * std::min(1.0, weights[k - 1] / weights[j - 1]);
            P(j - 1, k - 1) += a;
            hold += 0.5 - a;
        }
        P(j - 1, j - 1) += hold;
    }
    return P;
}

inline Matrix power(const Matrix& P, long t) {
    Matrix out = Matrix::Identity(P.rows(), P.cols());
    for (long i = 0; i < t; ++i) out = out * P;
    return out;
}

inline Real worst_tv(const Matrix& Pt, const Vector& target) {
    Real worst = 0;
    for (Index y = 0; y < Pt.rows(); ++y) {
        worst = std::max(worst,
                         0.5 * (Pt.row(y).transpose() - target).lpNorm<1>());
    }
    return worst;
}

inline long t_mix(const Matrix& P, const Vector& target, Real delta,
                  long cap) {
    Matrix Pt = Matrix::Identity(P.rows(), P.cols());
    for (long t = 0; t <= cap; ++t) {
        if (worst_tv(Pt, target) < delta) return t;
        Pt = Pt * P;
    }
    return -1;
}

inline Real rho(const Matrix& P, long m) {
    const Matrix Pm = power(P, m);
    return 1.0 - Pm.colwise().minCoeff().sum();
}

} // namespace oracle

#endif // LIFTEDMC_TESTS_DENSE_ORACLE_HPP
