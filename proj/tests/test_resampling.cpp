// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <set>

#include "fixtures.hpp"
#include "pointsp/metrics.hpp"
#include "pointsp/normals.hpp"
#include "pointsp/resample.hpp"

using namespace pointsp;
using namespace pointsp::testing;

namespace {

// p at the origin with normal +z, two neighbors: one off-plane, one in-plane.
PointCloud make_lgp_fixture() {
    PointCloud cloud;
    cloud.points.emplace_back(0.0, 0.0, 0.0);
    cloud.points.emplace_back(1.0, 0.0, 1.0);
    cloud.points.emplace_back(0.0, 2.0, 0.0);
    cloud.normals.assign(3, Eigen::Vector3d::UnitZ());
    return cloud;
}

} // namespace

TEST_CASE("tangent-plane interpolation, hand-evaluated") {
    const auto cloud = make_lgp_fixture();
    const auto graph = build_neighbor_graph(cloud, 2);
    // Neighbor distances of point 0: sqrt(2) and 2.
    const double delta_med = 0.5 * (std::sqrt(2.0) + 2.0);

    const auto rec = lgp_interpolate_with(cloud, graph, 0, 0); // q* = (1,0,1)
    CHECK(rec.source_index == 0);
    CHECK(rec.neighbor_index == 1);
    CHECK(rec.delta_med == doctest::Approx(delta_med).epsilon(1e-12));
    CHECK((rec.direction - Eigen::Vector3d::UnitX()).norm() <= 1e-12);
    CHECK((rec.new_point - Eigen::Vector3d(delta_med, 0.0, 0.0)).norm() <= 1e-12);

    // Record invariants.
    CHECK(std::abs(rec.direction.dot(cloud.normals[0])) <= 1e-6);
    CHECK((rec.new_point - cloud.points[0]).norm() == doctest::Approx(rec.delta_med).epsilon(1e-6));
}

TEST_CASE("an in-plane offset keeps its direction") {
    const auto cloud = make_lgp_fixture();
    const auto graph = build_neighbor_graph(cloud, 2);
    const auto rec = lgp_interpolate_with(cloud, graph, 0, 1); // q* = (0,2,0), already tangent
    const Eigen::Vector3d offset = cloud.points[2] - cloud.points[0];
    CHECK(rec.direction.cross(offset.normalized()).norm() <= 1e-12);
}

TEST_CASE("a normal-parallel offset is degenerate and redrawn") {
    PointCloud cloud;
    cloud.points.emplace_back(0.0, 0.0, 0.0);
    cloud.points.emplace_back(0.0, 0.0, 1.0);  // straight along the normal
    cloud.points.emplace_back(1.0, 0.0, 0.0);  // fine
    cloud.normals.assign(3, Eigen::Vector3d::UnitZ());
    const auto graph = build_neighbor_graph(cloud, 2);

    CHECK_THROWS_AS(lgp_interpolate_with(cloud, graph, 0, 0), DegenerateGeometryError);
    // The seeded variant must always land on the good neighbor.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(lgp_interpolate(cloud, graph, 0, seed).neighbor_index == 2);
    }
}

TEST_CASE("a fully degenerate query has no interpolant") {
    PointCloud cloud;
    cloud.points.emplace_back(0.0, 0.0, 0.0);
    cloud.points.emplace_back(0.0, 0.0, 1.0);
    cloud.points.emplace_back(0.0, 0.0, -1.0);
    cloud.normals.assign(3, Eigen::Vector3d::UnitZ());
    const auto graph = build_neighbor_graph(cloud, 2);
    CHECK_THROWS_AS(lgp_interpolate(cloud, graph, 0, 7), DegenerateGeometryError);
    CHECK(!try_lgp_interpolate(cloud, graph, 0, 7).has_value());
}

TEST_CASE("upsampling keeps the input as a bit-exact prefix") {
    const auto cloud = make_sphere_surface(512, 41); // no normals: estimated internally
    const auto graph = build_neighbor_graph(cloud, 20);
    const auto up = upsample(cloud, 512, graph, 9);
    REQUIRE(up.size() == 1024);
    for (int i = 0; i < 512; ++i) {
        REQUIRE(up.points[static_cast<std::size_t>(i)] == cloud.points[static_cast<std::size_t>(i)]);
    }
    CHECK_FALSE(up.has_normals()); // input had none
}

TEST_CASE("planar upsampling stays in the plane") {
    auto cloud = make_plane_grid(6);
    cloud.normals.assign(cloud.points.size(), Eigen::Vector3d::UnitZ());
    const auto graph = build_neighbor_graph(cloud, 8);
    const auto up = upsample(cloud, 20, graph, 3);
    REQUIRE(up.size() == 56);
    for (const auto& p : up.points) CHECK(std::abs(p.z()) <= 1e-9);
    CHECK(up.has_normals());
    CHECK(up.normals.size() == up.points.size());
}

TEST_CASE("upsampling a sphere moves the Chamfer distance toward a dense reference") {
    const auto cloud = make_sphere_surface(2048, 51);
    const auto reference = make_sphere_surface(8192, 52);
    const auto graph = build_neighbor_graph(cloud, 20);
    const auto up = upsample(cloud, 512, graph, 4);
    CHECK(chamfer_distance(up, reference) <= chamfer_distance(cloud, reference));
}

TEST_CASE("upsampling by more than N wraps into extra rounds") {
    const auto cloud = make_sphere_surface(40, 61);
    const auto graph = build_neighbor_graph(cloud, 8);
    const auto up = upsample(cloud, 130, graph, 5);
    REQUIRE(up.size() == 170);
    for (int i = 0; i < 40; ++i) {
        REQUIRE(up.points[static_cast<std::size_t>(i)] == cloud.points[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("upsampled points satisfy the interpolation invariants") {
    auto cloud = make_sphere_surface(256, 62);
    const auto graph = build_neighbor_graph(cloud, 12);
    const auto est = estimate_normals(cloud, graph);
    // Every candidate, checked via the seeded single-point API.
    for (int i = 0; i < cloud.size(); ++i) {
        const auto rec = lgp_interpolate(est.cloud, graph, i, derive_seed(99, static_cast<std::uint64_t>(i)));
        CHECK(std::abs(rec.direction.dot(est.cloud.normals[static_cast<std::size_t>(i)])) <= 1e-6);
        CHECK((rec.new_point - est.cloud.points[static_cast<std::size_t>(i)]).norm() ==
              doctest::Approx(rec.delta_med).epsilon(1e-6));
    }
}

TEST_CASE("flipping normal signs does not change the upsampled points") {
    auto cloud = make_sphere_surface(200, 63);
    const auto graph = build_neighbor_graph(cloud, 10);
    auto est = estimate_normals(cloud, graph).cloud;

    auto flipped = est;
    Rng rng(64);
    for (auto& n : flipped.normals) {
        if (rng.below(2) == 0) n = -n;
    }
    const auto a = upsample(est, 150, graph, 77);
    const auto b = upsample(flipped, 150, graph, 77);
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) REQUIRE(a.points[i] == b.points[i]);
}

TEST_CASE("lgb downsampling at k-tilde = |delta| removes one local patch") {
    const auto cloud = make_sphere_surface(60, 65);
    for (int trial = 0; trial < 10; ++trial) {
        const int center = trial * 6 % 60;
        const auto [down, plan] = lgb_downsample_with(cloud, -7, center, 7, static_cast<std::uint64_t>(trial));
        REQUIRE(down.size() == 53);
        // Expected patch: the center plus its 6 nearest neighbors.
        std::set<int> expected{center};
        for (const auto& nb : oracle_knn(cloud.points, center, 6)) expected.insert(nb.index);
        const std::set<int> got(plan.selected.begin(), plan.selected.end());
        REQUIRE(got == expected);
    }
}

TEST_CASE("lgb downsampling at k-tilde = N is global uniform removal") {
    PointCloud cloud = make_cube_cloud(10, 1.0, 66);
    std::vector<int> removed_count(10, 0);
    const int trials = 10000;
    for (int t = 0; t < trials; ++t) {
        const auto [down, plan] =
            lgb_downsample_with(cloud, -3, static_cast<int>(t % 10), 10, static_cast<std::uint64_t>(t));
        REQUIRE(down.size() == 7);
        for (const int r : plan.selected) ++removed_count[static_cast<std::size_t>(r)];
    }
    for (const int c : removed_count) {
        CHECK(std::abs(static_cast<double>(c) / trials - 0.3) <= 0.03);
    }
}

TEST_CASE("lgb removal plans stay inside the neighborhood") {
    Rng rng(67);
    const auto cloud = make_cube_cloud(50, 1.0, 68);
    for (int trial = 0; trial < 50; ++trial) {
        const int remove = 1 + static_cast<int>(rng.below(20));
        const auto [down, plan] = lgb_downsample(cloud, -remove, static_cast<std::uint64_t>(trial));
        REQUIRE(down.size() == 50 - remove);
        REQUIRE(static_cast<int>(plan.selected.size()) == remove);
        REQUIRE(plan.neighborhood_size >= remove);
        REQUIRE(plan.neighborhood_size <= 50);

        std::set<int> hood{plan.center_index};
        for (const auto& nb : oracle_knn(cloud.points, plan.center_index, plan.neighborhood_size - 1)) {
            hood.insert(nb.index);
        }
        for (const int r : plan.selected) REQUIRE(hood.contains(r));
    }
}

TEST_CASE("downsampling to a single point and over-removal rejection") {
    const auto cloud = make_cube_cloud(12, 1.0, 69);
    const auto [down, plan] = lgb_downsample(cloud, -11, 1);
    CHECK(down.size() == 1);
    CHECK_THROWS_AS(lgb_downsample(cloud, -12, 1), ParameterError);
    CHECK_THROWS_AS(lgb_downsample(cloud, 3, 1), ParameterError);
}

TEST_CASE("train_resample with rho zero is the identity") {
    const auto cloud = make_cube_cloud(30, 1.0, 70);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto out = train_resample(cloud, 0.0, seed);
        REQUIRE(out.points == cloud.points);
    }
}

TEST_CASE("train_resample sizes stay in range and cover it uniformly") {
    const auto cloud = make_sphere_surface(256, 71);
    const int bound = static_cast<int>(0.25 * 256); // 64
    std::vector<int> deltas;
    for (int seed = 0; seed < 2000; ++seed) {
        const auto out = train_resample(cloud, 0.25, static_cast<std::uint64_t>(seed), 10);
        const int delta = out.size() - 256;
        REQUIRE(delta >= -bound);
        REQUIRE(delta <= bound);
        deltas.push_back(delta);
    }
    // Four equal-width bins over the 129 possible values, each within 3 sigma
    // of its multinomial expectation.
    const double total = static_cast<double>(deltas.size());
    const auto expect_bin = [&](int lo, int hi) {
        const int count = static_cast<int>(std::count_if(
            deltas.begin(), deltas.end(), [&](int d) { return d >= lo && d <= hi; }));
        const double p = static_cast<double>(hi - lo + 1) / 129.0;
        const double sigma = std::sqrt(total * p * (1.0 - p));
        CHECK(std::abs(count - total * p) <= 3.0 * sigma);
    };
    expect_bin(-64, -33);
    expect_bin(-32, -1);
    expect_bin(0, 31);
    expect_bin(32, 64);
}

TEST_CASE("inference_resample contracts") {
    const auto cloud = make_sphere_surface(700, 72);

    const auto same = inference_resample(cloud, 700, 1);
    CHECK(same.points == cloud.points);

    const auto up = inference_resample(cloud, 1024, 1);
    REQUIRE(up.size() == 1024);
    for (int i = 0; i < 700; ++i) {
        REQUIRE(up.points[static_cast<std::size_t>(i)] == cloud.points[static_cast<std::size_t>(i)]);
    }

    const auto big = make_sphere_surface(1500, 73);
    const auto untouched = inference_resample(big, 1024, 1);
    CHECK(untouched.points == big.points); // no downsampling at inference
}

TEST_CASE("resampling is deterministic per seed") {
    const auto cloud = make_sphere_surface(128, 74);
    const auto a = train_resample(cloud, 0.25, 42, 10);
    const auto b = train_resample(cloud, 0.25, 42, 10);
    REQUIRE(a.points == b.points);

    const auto u1 = inference_resample(cloud, 200, 5, 10);
    const auto u2 = inference_resample(cloud, 200, 5, 10);
    REQUIRE(u1.points == u2.points);

    const auto [d1, p1] = lgb_downsample(cloud, -40, 8);
    const auto [d2, p2] = lgb_downsample(cloud, -40, 8);
    REQUIRE(d1.points == d2.points);
    REQUIRE(p1.selected == p2.selected);
    REQUIRE(p1.center_index == p2.center_index);
    REQUIRE(p1.neighborhood_size == p2.neighborhood_size);
}
