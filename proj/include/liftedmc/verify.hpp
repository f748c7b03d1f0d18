#ifndef LIFTEDMC_VERIFY_HPP
#define LIFTEDMC_VERIFY_HPP

#include <cstdint>
#include <string>

#include "liftedmc/json_io.hpp"

namespace liftedmc {

struct VerifyOptions {
    DistributionSpec dist;
    ThetaSpec theta;
    std::uint64_t seed = 1;
};

// Runs the full invariant suite against the given distribution and returns a
// deterministic machine-readable report:
//   {"config": {...}, "checks": [{"name", "pass", ...detail...}, ...],
//    "passed": bool}
json verify_all(const VerifyOptions& opts);

} // namespace liftedmc

#endif // LIFTEDMC_VERIFY_HPP
