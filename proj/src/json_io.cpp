#include "liftedmc/json_io.hpp"

#include <sstream>

#include "liftedmc/errors.hpp"

namespace liftedmc {

namespace {

std::string format_real(Real v) {
    // Shortest round-trip decimal; '.' separator, no locale.
    return json(v).dump();
}

} // namespace

DistributionSpec DistributionSpec::from_json(const json& j) {
    DistributionSpec spec;
    if (j.contains("weights")) {
        spec.weights = j.at("weights").get<std::vector<Real>>();
        spec.n = static_cast<Index>(spec.weights->size());
        if (j.contains("family") || j.contains("params")) {
            throw InvalidParamError(
                "distribution spec takes either weights or a family, not both");
        }
        return spec;
    }
    if (!j.contains("family") || !j.contains("n")) {
        throw InvalidParamError(
            "distribution spec needs \"family\" and \"n\" or \"weights\"");
    }
    spec.family = j.at("family").get<std::string>();
    spec.n = j.at("n").get<Index>();
    if (j.contains("params")) {
        for (const auto& [key, value] : j.at("params").items()) {
            spec.params[key] = value.get<Real>();
        }
    }
    return spec;
}

json DistributionSpec::to_json() const {
    json j;
    if (weights) {
        j["weights"] = *weights;
        return j;
    }
    j["family"] = *family;
    j["n"] = n;
    json params_json = json::object();
    for (const auto& [key, value] : params) params_json[key] = value;
    j["params"] = params_json;
    return j;
}

UnimodalWeights DistributionSpec::build() const {
    if (weights) {
        Vector w(static_cast<Index>(weights->size()));
        for (Index i = 0; i < w.size(); ++i) w[i] = (*weights)[i];
        return UnimodalWeights::from_weights(w);
    }
    return UnimodalWeights::family(*family, n, params);
}

std::string DistributionSpec::family_name() const {
    return weights ? "weights" : *family;
}

json kernel_to_json(const TransitionKernel& k) {
    json j;
    j["label"] = k.label() == KernelLabel::Metropolis ? "metropolis" : "dhn";
    j["n"] = k.n();
    j["theta"] = k.theta();
    json rows = json::array();
    for (Index s = 0; s < k.state_count(); ++s) {
        json row = json::array();
        for (const Edge& e : k.row(s)) {
            row.push_back(json{{"to", e.to},
                               {"p", e.p},
                               {"kind", move_kind_name(e.kind)}});
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

json mixing_report_to_json(const MixingReport& r) {
    json j;
    j["n"] = r.n;
    j["state_count"] = r.state_count;
    j["delta"] = r.delta;
    j["t_mix"] = r.t_mix;
    j["worst_start"] = r.worst_start;
    json curve = json::array();
    for (const auto& [t, d] : r.curve) {
        curve.push_back(json::array({t, d}));
    }
    j["curve"] = curve;
    return j;
}

std::string curve_to_csv(const MixingReport& r) {
    std::ostringstream os;
    os << "t,d_t\n";
    for (const auto& [t, d] : r.curve) {
        os << t << "," << format_real(d) << "\n";
    }
    return os.str();
}

json chain_run_to_json(const ChainRun& r, const TransitionKernel& k) {
    json j;
    j["seed"] = r.seed;
    j["steps"] = r.steps;
    j["final_state"] = r.final_state;
    json moves = json::object();
    for (int m = 0; m < 6; ++m) {
        if (r.move_counts[m] > 0) {
            moves[move_kind_name(static_cast<MoveKind>(m))] = r.move_counts[m];
        }
    }
    j["move_counts"] = moves;
    j["state_count"] = k.state_count();
    return j;
}

std::string occupancy_to_csv(const ChainRun& r, const TransitionKernel& k) {
    std::ostringstream os;
    const bool lifted = k.label() == KernelLabel::Dhn;
    os << (lifted ? "state,epsilon,j,count\n" : "state,j,count\n");
    for (Index s = 0; s < static_cast<Index>(r.occupancy.size()); ++s) {
        if (lifted) {
            const LiftedState ls = lifted_state(s, k.n());
            os << s << "," << ls.direction << "," << ls.position << ","
               << r.occupancy[s] << "\n";
        } else {
            os << s << "," << (s + 1) << "," << r.occupancy[s] << "\n";
        }
    }
    return os.str();
}

json excursion_stats_to_json(const ExcursionStats& s) {
    json j;
    j["count"] = s.count;
    j["completed"] = static_cast<long>(s.lengths.size());
    j["truncated"] = s.truncated;
    j["step_cap"] = s.step_cap;
    j["basepoint_hold_steps"] = s.basepoint_hold_steps;
    j["mean_length"] = s.mean_length();
    json flips = json::object();
    for (long f = 0; f <= 4; ++f) {
        flips[std::to_string(f)] = s.flip_fraction(f);
    }
    j["flip_fractions"] = flips;
    return j;
}

json scaling_result_to_json(const ScalingResult& r) {
    json j;
    j["family"] = r.family;
    j["sampler"] = r.sampler;
    j["delta"] = r.delta;
    json points = json::array();
    for (const auto& [n, t] : r.points) {
        points.push_back(json::array({n, t}));
    }
    j["points"] = points;
    j["slope"] = r.slope;
    j["intercept"] = r.intercept;
    j["r_squared"] = r.r_squared;
    return j;
}

std::string scaling_points_to_csv(const std::vector<ScalingResult>& results) {
    std::ostringstream os;
    os << "family,sampler,n,t_mix\n";
    for (const ScalingResult& r : results) {
        for (const auto& [n, t] : r.points) {
            os << r.family << "," << r.sampler << "," << n << "," << t << "\n";
        }
    }
    return os.str();
}

} // namespace liftedmc
