// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "pointsp/weights.hpp"

using namespace pointsp;
using namespace pointsp::testing;

namespace {

WeightVector collinear_weights() {
    const auto cloud = make_collinear_fixture();
    return isolation_rates(build_neighbor_graph(cloud, 2));
}

} // namespace

TEST_CASE("isolation rates on the collinear fixture") {
    const auto wv = collinear_weights();
    // Distance sets {1,2} {1,1} {1,1} {1,2} {7,8} against median radius 2.
    CHECK(wv.isolation[0] == 0.5);
    CHECK(wv.isolation[1] == 0.0);
    CHECK(wv.isolation[2] == 0.0);
    CHECK(wv.isolation[3] == 0.5);
    CHECK(wv.isolation[4] == 1.0);
}

TEST_CASE("interior lattice points share one isolation value") {
    PointCloud cloud;
    for (int i = 0; i < 10; ++i) cloud.points.emplace_back(static_cast<double>(i), 0.0, 0.0);
    const auto wv = isolation_rates(build_neighbor_graph(cloud, 2));
    for (int i = 2; i < 8; ++i) CHECK(wv.isolation[static_cast<std::size_t>(i)] == wv.isolation[1]);
}

TEST_CASE("isolation rates are scale invariant") {
    const auto lattice = make_collinear_fixture();
    const auto base = isolation_rates(build_neighbor_graph(lattice, 2));
    for (const double s : {0.5, 2.0, 1024.0}) {
        const auto scaled_wv = isolation_rates(build_neighbor_graph(scaled(lattice, s), 2));
        CHECK(scaled_wv.isolation == base.isolation);
    }

    const auto cloud = make_cube_cloud(120, 1.0, 21);
    const auto ref = isolation_rates(build_neighbor_graph(cloud, 7));
    const auto wide = isolation_rates(build_neighbor_graph(scaled(cloud, 3.7), 7));
    CHECK(wide.isolation == ref.isolation);
}

TEST_CASE("a far outlier attains the strict isolation maximum") {
    auto cloud = make_sphere_surface(64, 13);
    cloud.points.emplace_back(6.0, 0.0, 0.0);
    const auto wv = isolation_rates(build_neighbor_graph(cloud, 20));
    const double outlier = wv.isolation.back();
    for (int i = 0; i < 64; ++i) CHECK(wv.isolation[static_cast<std::size_t>(i)] < outlier);
}

TEST_CASE("sampling weights from the collinear fixture") {
    const auto wv = sampling_weights(collinear_weights());
    CHECK(wv.sampling_weight[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(wv.sampling_weight[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(wv.sampling_weight[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(wv.sampling_weight[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(wv.sampling_weight[4] == 0.0);

    double sum = 0.0;
    for (const double w : wv.sampling_weight) sum += w;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("equal isolation gives uniform weights, including the all-ones case") {
    WeightVector wv;
    wv.isolation = {0.25, 0.25, 0.25, 0.25};
    auto out = sampling_weights(wv);
    for (const double w : out.sampling_weight) CHECK(w == doctest::Approx(0.25).epsilon(1e-12));

    wv.isolation = {1.0, 1.0, 1.0, 1.0, 1.0};
    out = sampling_weights(wv);
    for (const double w : out.sampling_weight) CHECK(w == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("the most isolated point gets the minimum sampling weight") {
    auto cloud = make_cube_cloud(80, 1.0, 3);
    cloud.points.emplace_back(9.0, 9.0, 9.0);
    const auto wv = sampling_weights(isolation_rates(build_neighbor_graph(cloud, 10)));
    const double w_outlier = wv.sampling_weight.back();
    for (const double w : wv.sampling_weight) CHECK(w_outlier <= w);
}

TEST_CASE("filter mask on the collinear fixture at omega 0.79") {
    const auto wv = filter_mask(collinear_weights(), 0.79);
    // Cross-check the threshold with the independent quantile oracle.
    const double q = oracle_quantile({0.5, 0.0, 0.0, 0.5, 1.0}, 0.79);
    CHECK(q > 0.5);
    CHECK(q < 1.0);
    CHECK(wv.mask == std::vector<std::uint8_t>{1, 1, 1, 1, 0});
    CHECK(wv.omega == 0.79);
}

TEST_CASE("omega one keeps everything") {
    const auto wv = filter_mask(collinear_weights(), 1.0);
    CHECK(wv.mask == std::vector<std::uint8_t>{1, 1, 1, 1, 1});
}

TEST_CASE("fully tied isolation filters nothing") {
    WeightVector wv;
    wv.isolation = {0.3, 0.3, 0.3, 0.3, 0.3, 0.3};
    const auto out = filter_mask(wv, 0.5);
    CHECK(out.unmasked_count() == 6);
}

TEST_CASE("omega outside (0,1] is rejected") {
    CHECK_THROWS_AS(filter_mask(collinear_weights(), 0.0), ParameterError);
    CHECK_THROWS_AS(filter_mask(collinear_weights(), -0.2), ParameterError);
    CHECK_THROWS_AS(filter_mask(collinear_weights(), 1.0001), ParameterError);
}

TEST_CASE("mask retains at least ceil(omega N) points") {
    Rng rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        WeightVector wv;
        const int n = 5 + static_cast<int>(rng.below(200));
        for (int i = 0; i < n; ++i) wv.isolation.push_back(rng.uniform01());
        const double omega = 0.05 + 0.95 * rng.uniform01();
        const auto out = filter_mask(wv, omega);
        const int floor_count = static_cast<int>(std::ceil(omega * n - 1e-9));
        CHECK(out.unmasked_count() >= floor_count);
        CHECK(out.unmasked_count() >= 1);
    }
}

TEST_CASE("mask grows monotonically with omega") {
    Rng rng(55);
    WeightVector wv;
    for (int i = 0; i < 157; ++i) {
        // Quantized values to force plenty of ties.
        wv.isolation.push_back(static_cast<double>(rng.below(21)) / 20.0);
    }
    const std::vector<double> omegas = {0.1, 0.3, 0.5, 0.8, 0.9, 0.95, 1.0};
    std::vector<std::uint8_t> prev;
    for (const double omega : omegas) {
        const auto out = filter_mask(wv, omega);
        if (!prev.empty()) {
            for (std::size_t i = 0; i < prev.size(); ++i) {
                CHECK(prev[i] <= out.mask[i]); // retained stays retained
            }
        }
        prev = out.mask;
    }
}
