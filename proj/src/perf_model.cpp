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

#include "stereostream/perf_model.hpp"

#include <string>

#include "stereostream/error.hpp"

namespace stereostream {

CycleEstimate estimate_cycles(const MatchConfig& config, int width, int height, const ClockSpec& clock) {
    if (width < 1 || height < 1) throw InvalidConfig("frame dimensions must be positive");
    if (clock.pipeline_depth < 0) throw InvalidConfig("pipeline depth must be non-negative");
    return CycleEstimate{
        .cycles_per_frame = std::int64_t{width} * std::int64_t{height} + clock.pipeline_depth,
        .valid_outputs_per_frame = valid_region(config, width, height).area(),
    };
}

double estimate_fps(const CycleEstimate& est, const ClockSpec& clock) {
    if (!(clock.frequency_hz > 0.0)) throw InvalidConfig("clock frequency must be positive");
    if (est.cycles_per_frame <= 0) throw InvalidConfig("cycles per frame must be positive");
    return clock.frequency_hz / static_cast<double>(est.cycles_per_frame);
}

ResourceEstimate estimate_resources(const MatchConfig& config, int width) {
    config.validate();
    const std::int64_t n = config.window_size;
    const std::int64_t m = config.max_disparity;
    if (width < (m - 1) + n) {
        throw WidthTooSmall("width " + std::to_string(width) + " is smaller than (M - 1) + N = " +
                            std::to_string((m - 1) + n));
    }
    return ResourceEstimate{
        .local_memory_bytes = 2 * n * width,
        .pixel_register_count = n + m * n,
        .sad_register_count = m * (n + 1) + m,
        .abs_diff_unit_count = m * n,
        .adder_count = m * (n - 1) + m * (n - 1),
        .comparator_count = m - 1,
        .dsp_count = 0,
    };
}

std::vector<ConfigRow> compare_configs(const std::vector<MatchConfig>& configs, int width, int height,
                                       const ClockSpec& clock) {
    if (configs.empty()) throw InvalidConfig("no configurations to compare");
    std::vector<ConfigRow> rows;
    rows.reserve(configs.size());
    for (const auto& config : configs) {
        ConfigRow row;
        row.config = config;
        try {
            row.resources = estimate_resources(config, width);
            row.cycles = estimate_cycles(config, width, height, clock);
            row.fps = estimate_fps(row.cycles, clock);
        } catch (const Error& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace stereostream
