#include "liftedmc/exact.hpp"

#include <cmath>
#include <sstream>

#include "liftedmc/errors.hpp"

namespace liftedmc {

namespace {

void step_in_place(const TransitionKernel& k, const Vector& in, Vector& out) {
    out.setZero();
    for (Index s = 0; s < k.state_count(); ++s) {
        const Real mass = in[s];
        if (mass == 0) continue;
        for (const Edge& e : k.row(s)) {
            out[e.to] += mass * e.p;
        }
    }
}

// Evolves every point-mass start one step: rows of D are the start
// distributions.
void step_all(const TransitionKernel& k, const Matrix& in, Matrix& out) {
    out.setZero();
    for (Index s = 0; s < k.state_count(); ++s) {
        for (const Edge& e : k.row(s)) {
            out.col(e.to) += e.p * in.col(s);
        }
    }
}

WorstTv worst_row_tv(const Matrix& dists, const Vector& target) {
    WorstTv best{-1.0, 0};
    for (Index y = 0; y < dists.rows(); ++y) {
        const Real d = 0.5 * (dists.row(y).transpose() - target).lpNorm<1>();
        if (d > best.distance) {
            best = {d, y};
        }
    }
    return best;
}

} // namespace

Vector evolve(const TransitionKernel& k, const Vector& d, long steps) {
    if (d.size() != k.state_count()) {
        throw DimensionMismatchError("distribution size does not match kernel");
    }
    if (steps < 0) {
        throw DimensionMismatchError("steps must be non-negative");
    }
    Vector cur = d;
    Vector next(d.size());
    for (long t = 0; t < steps; ++t) {
        step_in_place(k, cur, next);
        cur.swap(next);
    }
    return cur;
}

Real tv_distance(const Vector& p, const Vector& q) {
    if (p.size() != q.size()) {
        throw DimensionMismatchError("tv_distance on different dimensions");
    }
    return 0.5 * (p - q).lpNorm<1>();
}

WorstTv worst_case_tv(const TransitionKernel& k, const Vector& target, long t) {
    if (target.size() != k.state_count()) {
        throw DimensionMismatchError("target size does not match kernel");
    }
    Matrix D = Matrix::Identity(k.state_count(), k.state_count());
    Matrix next(k.state_count(), k.state_count());
    for (long step = 0; step < t; ++step) {
        step_all(k, D, next);
        D.swap(next);
    }
    return worst_row_tv(D, target);
}

MixingReport mixing_time(const TransitionKernel& k, const Vector& target,
                         Real delta, long t_cap) {
    if (target.size() != k.state_count()) {
        throw DimensionMismatchError("target size does not match kernel");
    }
    if (!(delta > 0) || delta > 1) {
        throw DimensionMismatchError("delta must lie in (0, 1]");
    }
    if (t_cap < 0) {
        throw DimensionMismatchError("t_cap must be non-negative");
    }
    MixingReport report;
    report.n = k.n();
    report.state_count = k.state_count();
    report.delta = delta;

    Matrix D = Matrix::Identity(k.state_count(), k.state_count());
    Matrix next(k.state_count(), k.state_count());
    WorstTv prev{1.0, 0};
    for (long t = 0; t <= t_cap; ++t) {
        const WorstTv wt = worst_row_tv(D, target);
        report.curve.emplace_back(t, wt.distance);
        if (wt.distance < delta) {
            report.t_mix = t;
            report.worst_start = t == 0 ? wt.start : prev.start;
            return report;
        }
        prev = wt;
        step_all(k, D, next);
        D.swap(next);
    }
    std::ostringstream os;
    os << "no t <= " << t_cap << " reached d(t) < " << delta;
    throw CapExceededError(os.str());
}

Minorization minorization(const TransitionKernel& k, long m) {
    if (m < 1) {
        throw DimensionMismatchError("minorization requires m >= 1");
    }
    Matrix D = Matrix::Identity(k.state_count(), k.state_count());
    Matrix next(k.state_count(), k.state_count());
    for (long step = 0; step < m; ++step) {
        step_all(k, D, next);
        D.swap(next);
    }
    const Vector nu = D.colwise().minCoeff();
    const Real mass = nu.sum();
    return Minorization{mass, 1.0 - mass};
}

MeynTweedieReport meyn_tweedie_check(const TransitionKernel& k,
                                     const Vector& target, long m,
                                     long z_max) {
    const Minorization minor = minorization(k, m);
    if (!(minor.rho < 1.0)) {
        throw VacuousMinorizationError("rho = 1, bound is trivial");
    }
    MeynTweedieReport report{};
    report.m = m;
    report.rho = minor.rho;
    report.z_max = z_max;
    report.min_slack = 2.0;
    report.argmin_slack = 0;

    Matrix D = Matrix::Identity(k.state_count(), k.state_count());
    Matrix next(k.state_count(), k.state_count());
    for (long z = 0; z <= z_max; ++z) {
        const Real d = worst_row_tv(D, target).distance;
        const Real bound = std::pow(minor.rho, static_cast<Real>(z / m));
        const Real slack = bound - d;
        if (slack < report.min_slack) {
            report.min_slack = slack;
            report.argmin_slack = z;
        }
        if (d > bound + kProbTol) {
            ++report.violations;
        }
        if (z < z_max) {
            step_all(k, D, next);
            D.swap(next);
        }
    }
    return report;
}

Real mean_recurrence_time(const Vector& target, Index state) {
    if (state < 0 || state >= target.size()) {
        throw DimensionMismatchError("state index out of range");
    }
    if (!(target[state] > 0)) {
        throw ZeroMassError("target mass at state is zero");
    }
    return 1.0 / target[state];
}

} // namespace liftedmc
