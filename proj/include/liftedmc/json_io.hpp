#ifndef LIFTEDMC_JSON_IO_HPP
#define LIFTEDMC_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liftedmc/exact.hpp"
#include "liftedmc/experiments.hpp"
#include "liftedmc/kernel.hpp"
#include "liftedmc/sampler.hpp"
#include "liftedmc/types.hpp"

namespace liftedmc {

using json = nlohmann::ordered_json;

// Distribution spec: {"family": <name>, "n": <int>, "params": {...}}
// or {"weights": [..]}. Field names are part of the file format.
struct DistributionSpec {
    std::optional<std::string> family;
    Index n = 0;
    FamilyParams params;
    std::optional<std::vector<Real>> weights;

    static DistributionSpec from_json(const json& j);
    json to_json() const;
    UnimodalWeights build() const;
    std::string family_name() const; // "weights" for inline lists
};

// {"label", "n", "theta", "rows": [[{"to","p","kind"},...],...]} with the
// fixed lifted indexing (+1,j) -> j-1, (-1,j) -> n+j-1.
json kernel_to_json(const TransitionKernel& k);

json mixing_report_to_json(const MixingReport& r);
std::string curve_to_csv(const MixingReport& r); // columns: t,d_t

json chain_run_to_json(const ChainRun& r, const TransitionKernel& k);
std::string occupancy_to_csv(const ChainRun& r, const TransitionKernel& k);

json excursion_stats_to_json(const ExcursionStats& s);

json scaling_result_to_json(const ScalingResult& r);
std::string scaling_points_to_csv(const std::vector<ScalingResult>& results);

} // namespace liftedmc

#endif // LIFTEDMC_JSON_IO_HPP
