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

#include <optional>
#include <string>
#include <vector>

#include "stereostream/match_config.hpp"
#include "stereostream/perf_model.hpp"
#include "stereostream/streaming_engine.hpp"

namespace stereostream {

inline constexpr const char* kToolName = "stereostream";
inline constexpr const char* kToolVersion = "0.1.0";

struct EngineRun {
    std::string name;
    double wall_time_ms = 0.0;
    OpCounts op_counts;
    std::optional<CycleStats> cycle_stats;
};

struct ModeledPerf {
    ClockSpec clock;
    CycleEstimate cycles;
    double fps = 0.0;
    std::optional<ResourceEstimate> resources;
};

struct Mismatch {
    int x;
    int y;
    Disparity reference;
    Disparity streaming;
};

/// Summary of one CLI run. `equivalence` is set iff both engines ran.
struct RunReport {
    MatchConfig config;
    std::string engine;
    int width = 0;
    int height = 0;
    int workers = 1;
    int repeats = 1;
    std::vector<EngineRun> engines;
    std::optional<ModeledPerf> modeled;
    std::optional<bool> equivalence;
    std::optional<Mismatch> first_mismatch;
    /// reference wall time / streaming wall time.
    std::optional<double> speedup;
};

/// Serializes with keys
///   {tool, version, prng, config, engines:[{name, wall_time_ms, op_counts,
///   cycle_stats}], modeled:{fps, cycles_per_frame, clock_mhz,
///   pipeline_depth, resources}, equivalence, first_mismatch, speedup}
/// Optional members are omitted when unset. Keys are emitted sorted, so the
/// output is byte-stable apart from timing fields.
std::string report_to_json(const RunReport& report);

/// Human-readable table form of the same report.
std::string report_to_text(const RunReport& report);

/// First differing pixel in raster order, if any.
std::optional<Mismatch> first_mismatch(const DisparityMap& reference, const DisparityMap& streaming);

/// Median; the mean of the two middle samples for even counts, 0 if empty.
double median_of(std::vector<double> samples);

}  // namespace stereostream
