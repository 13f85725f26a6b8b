// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/weights.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

#include "pointsp/errors.hpp"

namespace pointsp {

int WeightVector::unmasked_count() const {
    return static_cast<int>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

WeightVector isolation_rates(const NeighborGraph& graph) {
    WeightVector wv;
    const int n = graph.size();
    wv.isolation.resize(static_cast<std::size_t>(n));
    const double r_bar = graph.median_radius();
    for (int i = 0; i < n; ++i) {
        const auto dists = graph.distances_of(i);
        int at_or_beyond = 0;
        for (const double d : dists) {
            if (d >= r_bar) ++at_or_beyond;
        }
        wv.isolation[static_cast<std::size_t>(i)] =
            static_cast<double>(at_or_beyond) / static_cast<double>(dists.size());
    }
    return wv;
}

WeightVector sampling_weights(WeightVector wv) {
    if (wv.isolation.empty()) throw ParameterError("isolation rates not populated");
    const auto n = wv.isolation.size();
    wv.sampling_weight.resize(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        wv.sampling_weight[i] = 1.0 - wv.isolation[i];
        total += wv.sampling_weight[i];
    }
    if (total <= 0.0) {
        // Every point fully isolated: uniform fallback.
        std::fill(wv.sampling_weight.begin(), wv.sampling_weight.end(),
                  1.0 / static_cast<double>(n));
    } else {
        for (auto& w : wv.sampling_weight) w /= total;
    }
    return wv;
}

double quantile_linear(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    const auto n = values.size();
    if (n == 1) return values[0];
    const double h = q * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return values[n - 1];
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

WeightVector filter_mask(WeightVector wv, double omega) {
    if (wv.isolation.empty()) throw ParameterError("isolation rates not populated");
    if (!(omega > 0.0) || omega > 1.0) {
        throw ParameterError("omega must lie in (0, 1], got " + std::to_string(omega));
    }
    const int n = wv.size();
    wv.omega = omega;
    wv.mask.assign(static_cast<std::size_t>(n), std::uint8_t{1});

    const double threshold = quantile_linear(wv.isolation, omega);
    int retained = 0;
    for (int i = 0; i < n; ++i) {
        if (wv.isolation[static_cast<std::size_t>(i)] > threshold) {
            wv.mask[static_cast<std::size_t>(i)] = 0;
        } else {
            ++retained;
        }
    }

    // Keep at least ceil(omega * N) points: un-filter the least isolated of
    // the filtered points (ties toward the lower index) until the floor holds.
    const int min_retained = static_cast<int>(
        std::ceil(omega * static_cast<double>(n) - 1e-9));
    if (retained < min_retained) {
        std::vector<int> filtered;
        for (int i = 0; i < n; ++i) {
            if (wv.mask[static_cast<std::size_t>(i)] == 0) filtered.push_back(i);
        }
        std::sort(filtered.begin(), filtered.end(), [&](int a, int b) {
            const double ia = wv.isolation[static_cast<std::size_t>(a)];
            const double ib = wv.isolation[static_cast<std::size_t>(b)];
            if (ia != ib) return ia < ib;
            return a < b;
        });
        for (int idx : filtered) {
            if (retained >= min_retained) break;
            wv.mask[static_cast<std::size_t>(idx)] = 1;
            ++retained;
        }
    }
    assert(retained >= 1);
    return wv;
}

} // namespace pointsp
