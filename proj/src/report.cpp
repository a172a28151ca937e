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

#include "stereostream/report.hpp"

#include <algorithm>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "stereostream/synth.hpp"

namespace stereostream {

namespace {

using nlohmann::json;

json to_json(const OpCounts& c) {
    return {{"abs_diff", c.abs_diff}, {"additions", c.additions}, {"comparisons", c.comparisons}};
}

json to_json(const CycleStats& s) {
    return {{"total_cycles", s.total_cycles},
            {"pixels_ingested", s.pixels_ingested},
            {"outputs_emitted", s.outputs_emitted},
            {"outputs_invalid", s.outputs_invalid}};
}

json to_json(const ResourceEstimate& r) {
    return {{"local_memory_bytes", r.local_memory_bytes},
            {"pixel_register_count", r.pixel_register_count},
            {"sad_register_count", r.sad_register_count},
            {"abs_diff_unit_count", r.abs_diff_unit_count},
            {"adder_count", r.adder_count},
            {"comparator_count", r.comparator_count},
            {"dsp_count", r.dsp_count}};
}

}  // namespace

double median_of(std::vector<double> samples) {
    if (samples.empty()) return 0.0;
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    return samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

std::optional<Mismatch> first_mismatch(const DisparityMap& reference, const DisparityMap& streaming) {
    if (reference.width() != streaming.width() || reference.height() != streaming.height()) {
        return Mismatch{-1, -1, reference.invalid_value(), streaming.invalid_value()};
    }
    for (int y = 0; y < reference.height(); ++y) {
        for (int x = 0; x < reference.width(); ++x) {
            if (reference.at(x, y) != streaming.at(x, y)) {
                return Mismatch{x, y, reference.at(x, y), streaming.at(x, y)};
            }
        }
    }
    return std::nullopt;
}

std::string report_to_json(const RunReport& report) {
    json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["prng"] = std::string(kSynthPrngName);
    j["config"] = {{"window", report.config.window_size},
                   {"max_disparity", report.config.max_disparity},
                   {"engine", report.engine},
                   {"width", report.width},
                   {"height", report.height},
                   {"workers", report.workers},
                   {"repeats", report.repeats}};

    json engines = json::array();
    for (const auto& e : report.engines) {
        engines.push_back({{"name", e.name},
                           {"wall_time_ms", e.wall_time_ms},
                           {"op_counts", to_json(e.op_counts)},
                           {"cycle_stats", e.cycle_stats ? to_json(*e.cycle_stats) : json(nullptr)}});
    }
    j["engines"] = std::move(engines);

    if (report.modeled) {
        const auto& m = *report.modeled;
        j["modeled"] = {{"fps", m.fps},
                        {"clock_mhz", m.clock.frequency_hz / 1e6},
                        {"pipeline_depth", m.clock.pipeline_depth},
                        {"cycles_per_frame", m.cycles.cycles_per_frame},
                        {"valid_outputs_per_frame", m.cycles.valid_outputs_per_frame},
                        {"resources", m.resources ? to_json(*m.resources) : json(nullptr)}};
    }
    if (report.equivalence) j["equivalence"] = *report.equivalence;
    if (report.first_mismatch) {
        const auto& mm = *report.first_mismatch;
        j["first_mismatch"] = {{"x", mm.x}, {"y", mm.y}, {"reference", mm.reference}, {"streaming", mm.streaming}};
    }
    if (report.speedup) j["speedup"] = *report.speedup;
    return j.dump(2) + "\n";
}

std::string report_to_text(const RunReport& report) {
    std::ostringstream os;
    os << kToolName << ' ' << kToolVersion << "  " << report.width << 'x' << report.height
       << "  N=" << report.config.window_size << " M=" << report.config.max_disparity << "  engine=" << report.engine
       << '\n';
    os << std::left << std::setw(12) << "engine" << std::right << std::setw(14) << "wall_ms" << std::setw(16)
       << "abs_diff" << std::setw(16) << "additions" << std::setw(14) << "comparisons" << std::setw(12) << "cycles"
       << '\n';
    for (const auto& e : report.engines) {
        os << std::left << std::setw(12) << e.name << std::right << std::setw(14) << std::fixed << std::setprecision(3)
           << e.wall_time_ms << std::setw(16) << e.op_counts.abs_diff << std::setw(16) << e.op_counts.additions
           << std::setw(14) << e.op_counts.comparisons << std::setw(12)
           << (e.cycle_stats ? std::to_string(e.cycle_stats->total_cycles) : std::string("-")) << '\n';
    }
    if (report.modeled) {
        const auto& m = *report.modeled;
        os << "modeled: " << std::setprecision(2) << m.fps << " fps at " << std::setprecision(3)
           << m.clock.frequency_hz / 1e6 << " MHz, " << m.cycles.cycles_per_frame << " cycles/frame\n";
        if (m.resources) {
            const auto& r = *m.resources;
            os << "resources: local_memory_bytes=" << r.local_memory_bytes
               << " pixel_registers=" << r.pixel_register_count << " sad_registers=" << r.sad_register_count
               << " abs_diff_units=" << r.abs_diff_unit_count << " adders=" << r.adder_count
               << " comparators=" << r.comparator_count << " dsp=" << r.dsp_count << '\n';
        }
    }
    if (report.speedup) os << "speedup (reference/streaming): " << std::setprecision(2) << *report.speedup << "x\n";
    if (report.equivalence) os << "equivalence: " << (*report.equivalence ? "identical" : "MISMATCH") << '\n';
    if (report.first_mismatch) {
        const auto& mm = *report.first_mismatch;
        os << "first mismatch at (" << mm.x << ", " << mm.y << "): reference=" << mm.reference
           << " streaming=" << mm.streaming << '\n';
    }
    return os.str();
}

}  // namespace stereostream
