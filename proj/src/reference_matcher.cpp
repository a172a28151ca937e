/*
 * Copyright 2026 The StereoStream Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "stereostream/reference_matcher.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "stereostream/error.hpp"

namespace stereostream {

namespace {

SadValue sad_unchecked(const StereoPair& pair, int x, int y, int d, int r, OpCounts& counts) {
    SadValue sum = 0;
    std::uint64_t terms = 0;
    for (int j = -r; j <= r; ++j) {
        const auto left = pair.left().row(y + j);
        const auto right = pair.right().row(y + j);
        for (int i = -r; i <= r; ++i) {
            sum += static_cast<SadValue>(std::abs(int{left[x + i]} - int{right[x - d + i]}));
            ++terms;
        }
    }
    counts.abs_diff += terms;
    counts.additions += terms - 1;
    return sum;
}

Match best_unchecked(const StereoPair& pair, int x, int y, const MatchConfig& config, OpCounts& counts) {
    const int r = config.radius();
    Match best{0, sad_unchecked(pair, x, y, 0, r, counts)};
    for (int d = 1; d < config.max_disparity; ++d) {
        const SadValue sad = sad_unchecked(pair, x, y, d, r, counts);
        ++counts.comparisons;
        if (sad < best.sad) best = Match{d, sad};
    }
    return best;
}

void check_point(const StereoPair& pair, int x, int y, const MatchConfig& config) {
    config.validate();
    if (!valid_region(config, pair.width(), pair.height()).contains(x, y)) {
        throw OutOfRegion("pixel (" + std::to_string(x) + "," + std::to_string(y) + ") is outside the valid region");
    }
}

void match_rows(const StereoPair& pair, const MatchConfig& config, const Region& region, int y_begin, int y_end,
                DisparityMap& map, OpCounts& counts) {
    for (int y = y_begin; y < y_end; ++y) {
        for (int x = region.x_min; x <= region.x_max; ++x) {
            map.set(x, y, best_unchecked(pair, x, y, config, counts).disparity);
        }
    }
}

}  // namespace

SadValue window_sad(const StereoPair& pair, int x, int y, int d, const MatchConfig& config, OpCounts* counts) {
    check_point(pair, x, y, config);
    if (d < 0 || d >= config.max_disparity) {
        throw OutOfRegion("disparity " + std::to_string(d) + " is outside [0, " +
                          std::to_string(config.max_disparity - 1) + "]");
    }
    OpCounts local;
    const SadValue sad = sad_unchecked(pair, x, y, d, config.radius(), local);
    if (counts) *counts += local;
    return sad;
}

Match best_disparity(const StereoPair& pair, int x, int y, const MatchConfig& config, OpCounts* counts) {
    check_point(pair, x, y, config);
    OpCounts local;
    const Match best = best_unchecked(pair, x, y, config, local);
    if (counts) *counts += local;
    return best;
}

DisparityMap compute_disparity_map_reference(const StereoPair& pair, const MatchConfig& config, OpCounts* counts) {
    config.validate();
    DisparityMap map(pair.width(), pair.height(), config);
    const Region region = valid_region(config, pair.width(), pair.height());
    if (region.empty()) return map;

    OpCounts local;
    match_rows(pair, config, region, region.y_min, region.y_max + 1, map, local);
    if (counts) *counts += local;
    return map;
}

DisparityMap compute_disparity_map_parallel(const StereoPair& pair, const MatchConfig& config, int worker_count) {
    config.validate();
    if (worker_count < 1) throw InvalidConfig("worker count must be at least 1");

    DisparityMap map(pair.width(), pair.height(), config);
    const Region region = valid_region(config, pair.width(), pair.height());
    if (region.empty()) return map;

    // Contiguous row bands; workers beyond the row count stay idle.
    const int rows = region.y_max - region.y_min + 1;
    const int active = std::min(worker_count, rows);
    const int base = rows / active;
    const int extra = rows % active;

    std::vector<std::jthread> workers;
    workers.reserve(static_cast<std::size_t>(active));
    int y = region.y_min;
    for (int w = 0; w < active; ++w) {
        const int band = base + (w < extra ? 1 : 0);
        workers.emplace_back([&pair, &config, &region, &map, begin = y, end = y + band] {
            OpCounts unused;
            match_rows(pair, config, region, begin, end, map, unused);
        });
        y += band;
    }
    workers.clear();  // joins
    return map;
}

}  // namespace stereostream
