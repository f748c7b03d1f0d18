#ifndef LIFTEDMC_TYPES_HPP
#define LIFTEDMC_TYPES_HPP

#include <Eigen/Core>
#include <cstdint>

namespace liftedmc {

typedef double Real;

typedef Eigen::Matrix<Real, Eigen::Dynamic, 1> Vector;
typedef Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> Matrix;
typedef Eigen::Index Index;

// Tolerances shared across validation and the exact-analysis checks.
inline constexpr Real kProbTol = 1e-12;
inline constexpr Real kExactTol = 1e-15;

} // namespace liftedmc

#endif // LIFTEDMC_TYPES_HPP
