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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "stereostream/error.hpp"
#include "stereostream/perf_model.hpp"
#include "stereostream/pgm_io.hpp"
#include "stereostream/reference_matcher.hpp"
#include "stereostream/streaming_engine.hpp"
#include "stereostream/synth.hpp"

namespace py = pybind11;
using namespace stereostream;

namespace {

using ImageArray = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

py::array_t<std::uint8_t> to_numpy(const GrayImage& img) {
    py::array_t<std::uint8_t> out({img.height(), img.width()});
    std::memcpy(out.mutable_data(), img.data().data(), img.size());
    return out;
}

GrayImage from_numpy(const ImageArray& a) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-D uint8 array");
    const auto* p = a.data();
    return GrayImage(static_cast<int>(a.shape(1)), static_cast<int>(a.shape(0)),
                     std::vector<Pixel>(p, p + a.size()));
}

StereoPair make_pair(const ImageArray& left, const ImageArray& right) {
    return StereoPair(from_numpy(left), from_numpy(right));
}

py::array_t<std::int32_t> map_to_numpy(const DisparityMap& map) {
    py::array_t<std::int32_t> out({map.height(), map.width()});
    std::memcpy(out.mutable_data(), map.values().data(), map.values().size() * sizeof(Disparity));
    return out;
}

py::dict counts_dict(const OpCounts& c) {
    py::dict d;
    d["abs_diff"] = c.abs_diff;
    d["additions"] = c.additions;
    d["comparisons"] = c.comparisons;
    return d;
}

py::dict resources_dict(const ResourceEstimate& r) {
    py::dict d;
    d["local_memory_bytes"] = r.local_memory_bytes;
    d["pixel_register_count"] = r.pixel_register_count;
    d["sad_register_count"] = r.sad_register_count;
    d["abs_diff_unit_count"] = r.abs_diff_unit_count;
    d["adder_count"] = r.adder_count;
    d["comparator_count"] = r.comparator_count;
    d["dsp_count"] = r.dsp_count;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SAD stereo block matching: brute-force reference and streaming line-buffer engine";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<MalformedHeader>(m, "MalformedHeader", base);
    py::register_exception<TruncatedData>(m, "TruncatedData", base);
    py::register_exception<UnsupportedMaxval>(m, "UnsupportedMaxval", base);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
    py::register_exception<ShiftTooLarge>(m, "ShiftTooLarge", base);
    py::register_exception<InvalidConfig>(m, "InvalidConfig", base);
    py::register_exception<OutOfRegion>(m, "OutOfRegion", base);
    py::register_exception<WidthTooSmall>(m, "WidthTooSmall", base);
    py::register_exception<StreamOverrun>(m, "StreamOverrun", base);

    py::class_<MatchConfig>(m, "MatchConfig")
        .def(py::init([](int window_size, int max_disparity, int invalid_value) {
                 MatchConfig c{window_size, max_disparity, invalid_value};
                 c.validate();
                 return c;
             }),
             py::arg("window_size") = 9, py::arg("max_disparity") = 64, py::arg("invalid_value") = kDefaultInvalid)
        .def_readonly("window_size", &MatchConfig::window_size)
        .def_readonly("max_disparity", &MatchConfig::max_disparity)
        .def_readonly("invalid_value", &MatchConfig::invalid_value)
        .def("__repr__", [](const MatchConfig& c) {
            return "MatchConfig(window_size=" + std::to_string(c.window_size) +
                   ", max_disparity=" + std::to_string(c.max_disparity) + ")";
        });

    py::class_<ClockSpec>(m, "ClockSpec")
        .def(py::init([](double frequency_hz, std::int64_t pipeline_depth) {
                 return ClockSpec{frequency_hz, pipeline_depth};
             }),
             py::arg("frequency_hz"), py::arg("pipeline_depth") = 0)
        .def_readonly("frequency_hz", &ClockSpec::frequency_hz)
        .def_readonly("pipeline_depth", &ClockSpec::pipeline_depth);

    m.def("load_pgm", [](py::bytes data) { return to_numpy(load_pgm(std::string_view(data))); }, py::arg("data"));
    m.def(
        "save_pgm",
        [](const ImageArray& img, bool binary) {
            const auto bytes = save_pgm(from_numpy(img), binary);
            return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
        },
        py::arg("image"), py::arg("binary") = true);
    m.def(
        "generate_synthetic_pair",
        [](int width, int height, int shift, std::uint64_t seed) {
            const StereoPair pair = generate_synthetic_pair(width, height, shift, seed);
            return py::make_tuple(to_numpy(pair.left()), to_numpy(pair.right()));
        },
        py::arg("width"), py::arg("height"), py::arg("shift"), py::arg("seed"));

    m.def(
        "valid_region",
        [](const MatchConfig& c, int width, int height) {
            const Region r = valid_region(c, width, height);
            return py::make_tuple(r.x_min, r.x_max, r.y_min, r.y_max);
        },
        py::arg("config"), py::arg("width"), py::arg("height"));
    m.def(
        "window_sad",
        [](const ImageArray& l, const ImageArray& r, int x, int y, int d, const MatchConfig& c) {
            return window_sad(make_pair(l, r), x, y, d, c);
        },
        py::arg("left"), py::arg("right"), py::arg("x"), py::arg("y"), py::arg("d"), py::arg("config"));
    m.def(
        "best_disparity",
        [](const ImageArray& l, const ImageArray& r, int x, int y, const MatchConfig& c) {
            const Match best = best_disparity(make_pair(l, r), x, y, c);
            return py::make_tuple(best.disparity, best.sad);
        },
        py::arg("left"), py::arg("right"), py::arg("x"), py::arg("y"), py::arg("config"));
    m.def(
        "compute_disparity_map_reference",
        [](const ImageArray& l, const ImageArray& r, const MatchConfig& c) {
            const StereoPair pair = make_pair(l, r);
            const DisparityMap map = [&] {
                py::gil_scoped_release release;
                return compute_disparity_map_reference(pair, c);
            }();
            return map_to_numpy(map);
        },
        py::arg("left"), py::arg("right"), py::arg("config"));
    m.def(
        "compute_disparity_map_parallel",
        [](const ImageArray& l, const ImageArray& r, const MatchConfig& c, int workers) {
            const StereoPair pair = make_pair(l, r);
            const DisparityMap map = [&] {
                py::gil_scoped_release release;
                return compute_disparity_map_parallel(pair, c, workers);
            }();
            return map_to_numpy(map);
        },
        py::arg("left"), py::arg("right"), py::arg("config"), py::arg("workers"));
    m.def(
        "run_stream",
        [](const ImageArray& l, const ImageArray& r, const MatchConfig& c, bool rolling) {
            const StereoPair pair = make_pair(l, r);
            EngineOptions options;
            options.row_sum_mode = rolling ? RowSumMode::Rolling : RowSumMode::FullSum;
            const StreamResult result = run_stream(pair, c, options);
            py::dict stats;
            stats["total_cycles"] = result.stats.total_cycles;
            stats["pixels_ingested"] = result.stats.pixels_ingested;
            stats["outputs_emitted"] = result.stats.outputs_emitted;
            stats["outputs_invalid"] = result.stats.outputs_invalid;
            return py::make_tuple(map_to_numpy(result.map), stats, counts_dict(result.ops));
        },
        py::arg("left"), py::arg("right"), py::arg("config"), py::arg("rolling") = false);
    m.def(
        "compute_column_sads",
        [](const ImageArray& lr, const ImageArray& rr) {
            // rr is (M, N): one row per candidate disparity.
            if (lr.ndim() != 1 || rr.ndim() != 2 || rr.shape(1) != lr.shape(0)) {
                throw py::value_error("expected lr of shape (N,) and rr of shape (M, N)");
            }
            return compute_column_sads(std::span<const Pixel>(lr.data(), static_cast<std::size_t>(lr.size())),
                                       std::span<const Pixel>(rr.data(), static_cast<std::size_t>(rr.size())));
        },
        py::arg("lr"), py::arg("rr"));
    m.def(
        "sad_op_counts",
        [](const MatchConfig& c, int width, int height) {
            const FrameOpCounts counts = sad_op_counts(c, width, height);
            py::dict d;
            d["reference"] = counts_dict(counts.reference);
            d["streaming"] = counts_dict(counts.streaming);
            d["valid_pixels"] = counts.valid_pixels;
            d["column_sad_cycles"] = counts.column_sad_cycles;
            return d;
        },
        py::arg("config"), py::arg("width"), py::arg("height"));

    m.def(
        "estimate_cycles",
        [](const MatchConfig& c, int width, int height, const ClockSpec& clock) {
            const CycleEstimate e = estimate_cycles(c, width, height, clock);
            return py::make_tuple(e.cycles_per_frame, e.valid_outputs_per_frame);
        },
        py::arg("config"), py::arg("width"), py::arg("height"), py::arg("clock"));
    m.def(
        "estimate_fps",
        [](const MatchConfig& c, int width, int height, const ClockSpec& clock) {
            return estimate_fps(estimate_cycles(c, width, height, clock), clock);
        },
        py::arg("config"), py::arg("width"), py::arg("height"), py::arg("clock"));
    m.def(
        "estimate_resources", [](const MatchConfig& c, int width) { return resources_dict(estimate_resources(c, width)); },
        py::arg("config"), py::arg("width"));
    m.def(
        "compare_configs",
        [](const std::vector<MatchConfig>& configs, int width, int height, const ClockSpec& clock) {
            py::list rows;
            for (const auto& row : compare_configs(configs, width, height, clock)) {
                py::dict d;
                d["window_size"] = row.config.window_size;
                d["max_disparity"] = row.config.max_disparity;
                if (row.error) {
                    d["error"] = *row.error;
                } else {
                    d["cycles_per_frame"] = row.cycles.cycles_per_frame;
                    d["fps"] = row.fps;
                    d["resources"] = resources_dict(row.resources);
                }
                rows.append(d);
            }
            return rows;
        },
        py::arg("configs"), py::arg("width"), py::arg("height"), py::arg("clock"));
}
