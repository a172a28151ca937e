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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stereostream/match_config.hpp"

namespace stereostream {

struct ClockSpec {
    double frequency_hz = 0.0;
    /// One-time latency added to every frame, in cycles.
    std::int64_t pipeline_depth = 0;
};

struct CycleEstimate {
    std::int64_t cycles_per_frame = 0;
    std::int64_t valid_outputs_per_frame = 0;

    bool operator==(const CycleEstimate&) const = default;
};

/// Absolute element counts of the streaming datapath. Pixels are one byte.
struct ResourceEstimate {
    std::int64_t local_memory_bytes = 0;    // 2 * N * w
    std::int64_t pixel_register_count = 0;  // N + M * N
    std::int64_t sad_register_count = 0;    // M * (N + 1) + M
    std::int64_t abs_diff_unit_count = 0;   // M * N
    std::int64_t adder_count = 0;           // 2 * M * (N - 1)
    std::int64_t comparator_count = 0;      // M - 1
    std::int64_t dsp_count = 0;             // SAD needs no multipliers

    bool operator==(const ResourceEstimate&) const = default;
};

CycleEstimate estimate_cycles(const MatchConfig& config, int width, int height, const ClockSpec& clock);

/// frequency / cycles_per_frame. Throws InvalidConfig for a non-positive
/// frequency or an empty frame.
double estimate_fps(const CycleEstimate& est, const ClockSpec& clock);

/// Throws WidthTooSmall if width < (M - 1) + N.
ResourceEstimate estimate_resources(const MatchConfig& config, int width);

struct ConfigRow {
    MatchConfig config;
    /// Empty when the row is valid.
    std::optional<std::string> error;
    CycleEstimate cycles;
    double fps = 0.0;
    ResourceEstimate resources;
};

/// One row per config, in input order. Configs the model cannot evaluate
/// produce a row carrying the error message.
std::vector<ConfigRow> compare_configs(const std::vector<MatchConfig>& configs, int width, int height,
                                       const ClockSpec& clock);

}  // namespace stereostream
