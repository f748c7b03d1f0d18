#include <doctest.h>

#include "liftedmc/errors.hpp"
#include "liftedmc/exact.hpp"
#include "liftedmc/json_io.hpp"
#include "liftedmc/verify.hpp"

using namespace liftedmc;

TEST_CASE("distribution spec round-trips to identical JSON") {
    const json family_spec = json::parse(
        R"({"family": "geometric-peak", "n": 7, "params": {"j_star": 3.0, "r": 0.5}})");
    const DistributionSpec spec = DistributionSpec::from_json(family_spec);
    CHECK(spec.to_json() == family_spec);
    CHECK(DistributionSpec::from_json(spec.to_json()).to_json() == spec.to_json());

    const UnimodalWeights w = spec.build();
    CHECK(w.n() == 7);
    CHECK(w.mode_index() == 3);

    const json weight_spec = json::parse(R"({"weights": [1.0, 2.0, 1.0]})");
    const DistributionSpec ws = DistributionSpec::from_json(weight_spec);
    CHECK(ws.to_json() == weight_spec);
    CHECK(ws.build().mode_index() == 2);
    CHECK(ws.family_name() == "weights");

    CHECK_THROWS_AS(DistributionSpec::from_json(json::parse(
                        R"({"weights": [1.0], "family": "uniform"})")),
                    InvalidParamError);
    CHECK_THROWS_AS(DistributionSpec::from_json(json::parse(R"({"n": 5})")),
                    InvalidParamError);
}

TEST_CASE("kernel dump schema and indexing") {
    const Vector pi = normalize(UnimodalWeights::family("uniform", 3));
    const TransitionKernel k = dhn_kernel(pi, 1.0 / 3);
    const json j = kernel_to_json(k);
    CHECK(j.at("label") == "dhn");
    CHECK(j.at("n") == 3);
    CHECK(j.at("theta").get<Real>() == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(j.at("rows").size() == 6);

    // Row of (+1,1) = index 0: shift to (+1,2) = 1, flip to (-1,2) = 4.
    const json& row0 = j.at("rows").at(0);
    REQUIRE(row0.size() == 2);
    CHECK(row0.at(0).at("to") == 1);
    CHECK(row0.at(0).at("kind") == "shift");
    CHECK(row0.at(1).at("to") == 4);
    CHECK(row0.at(1).at("kind") == "flip");

    const json jm = kernel_to_json(metropolis_kernel(pi));
    CHECK(jm.at("label") == "metropolis");
}

TEST_CASE("curve CSV format") {
    const Vector pi = normalize(UnimodalWeights::family("uniform", 3));
    const TransitionKernel k = dhn_kernel(pi, 1.0 / 3);
    const MixingReport r = mixing_time(k, lifted_stationary(pi), 0.25, 600);
    const std::string csv = curve_to_csv(r);
    CHECK(csv.rfind("t,d_t\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long>(r.curve.size()) + 1);
    CHECK(csv.find(',') != std::string::npos);
    CHECK(csv.find(';') == std::string::npos); // '.' decimal separator only
}

TEST_CASE("verify_all is deterministic") {
    VerifyOptions opts;
    opts.dist = DistributionSpec::from_json(
        json::parse(R"({"family": "symmetric-tent", "n": 5, "params": {}})"));
    opts.theta = ThetaSpec::parse("1/n");
    opts.seed = 12345;
    const std::string a = verify_all(opts).dump(2);
    const std::string b = verify_all(opts).dump(2);
    CHECK(a == b);
    CHECK(verify_all(opts).at("passed").get<bool>());
}
