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

#include "stereostream/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <system_error>

#include "stereostream/error.hpp"
#include "stereostream/perf_model.hpp"
#include "stereostream/pgm_io.hpp"
#include "stereostream/reference_matcher.hpp"
#include "stereostream/report.hpp"
#include "stereostream/streaming_engine.hpp"
#include "stereostream/synth.hpp"

namespace stereostream {

GrayImage encode_disparity_image(const DisparityMap& map, bool raw) {
    const int m = map.max_disparity();
    if (raw && m > 255) throw InvalidConfig("--raw requires max disparity <= 255");
    GrayImage img(map.width(), map.height());
    auto out = img.data();
    const auto values = map.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const Disparity d = values[i];
        if (d == map.invalid_value()) {
            out[i] = 255;
        } else if (raw) {
            out[i] = static_cast<Pixel>(d);
        } else {
            out[i] = m == 1 ? 0 : static_cast<Pixel>((std::int64_t{d} * 254) / (m - 1));
        }
    }
    return img;
}

DisparityMap decode_disparity_image(const GrayImage& img, const MatchConfig& config, bool raw) {
    config.validate();
    const std::int64_t m = config.max_disparity;
    DisparityMap map(img.width(), img.height(), config);
    auto values = map.values();
    const auto in = img.data();
    for (std::size_t i = 0; i < in.size(); ++i) {
        const std::int64_t v = in[i];
        if (v == 255) continue;
        std::int64_t d = v;
        if (!raw) {
            if (m == 1) {
                d = 0;
            } else {
                // Smallest d with floor(d * 254 / (M - 1)) >= v.
                d = (v * (m - 1) + 253) / 254;
            }
        }
        if (d >= m || (!raw && m > 1 && (d * 254) / (m - 1) != v) || (!raw && m == 1 && v != 0)) {
            throw InvalidConfig("pixel value " + std::to_string(v) + " does not encode a disparity below " +
                                std::to_string(m));
        }
        values[i] = static_cast<Disparity>(d);
    }
    return map;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Flag-level failures reported with exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct Options {
    std::string left;
    std::string right;
    std::string output;
    int window = 9;
    int max_disparity = 64;
    std::string engine = "streaming";
    int workers = 1;
    int repeats = 1;
    std::optional<double> clock_mhz;
    std::int64_t pipeline_depth = 0;
    bool raw = false;
    bool json = false;

    // synth
    int width = 0;
    int height = 0;
    int shift = 0;
    std::uint64_t seed = 0;

    // model
    std::vector<std::string> setups;
};

MatchConfig make_config(const Options& o) {
    MatchConfig config{.window_size = o.window, .max_disparity = o.max_disparity};
    config.validate();
    if (o.workers < 1) throw UsageError("worker count must be at least 1");
    return config;
}

EngineOptions engine_options(std::ostream& err) {
    EngineOptions options;
    const char* trace = std::getenv("STEREOSTREAM_TRACE");
    if (trace && std::string(trace) == "1") options.trace = &err;
    return options;
}

struct Timed {
    DisparityMap map;
    EngineRun run;
};

Timed time_reference(const StereoPair& pair, const MatchConfig& config, int workers) {
    const auto start = Clock::now();
    OpCounts counts;
    DisparityMap map = workers > 1 ? compute_disparity_map_parallel(pair, config, workers)
                                   : compute_disparity_map_reference(pair, config, &counts);
    const double ms = elapsed_ms(start);
    if (workers > 1) compute_disparity_map_reference(pair, config, &counts);  // counts only
    return Timed{std::move(map), EngineRun{"reference", ms, counts, std::nullopt}};
}

Timed time_streaming(const StereoPair& pair, const MatchConfig& config, std::ostream& err, const CliHooks& hooks) {
    const auto start = Clock::now();
    StreamResult result = run_stream(pair, config, engine_options(err));
    const double ms = elapsed_ms(start);
    if (hooks.corrupt_streaming) hooks.corrupt_streaming(result.map);
    return Timed{std::move(result.map), EngineRun{"streaming", ms, result.ops, result.stats}};
}

RunReport base_report(const Options& o, const MatchConfig& config, const StereoPair& pair) {
    RunReport report;
    report.config = config;
    report.engine = o.engine;
    report.width = pair.width();
    report.height = pair.height();
    report.workers = o.workers;
    report.repeats = o.repeats;
    return report;
}

void emit(const RunReport& report, bool json, std::ostream& out) {
    out << (json ? report_to_json(report) : report_to_text(report));
}

int report_mismatch(const Mismatch& mm, std::ostream& err) {
    err << "stereostream: engines disagree at (" << mm.x << ", " << mm.y << "): reference=" << mm.reference
        << " streaming=" << mm.streaming << '\n';
    return kExitMismatch;
}

int cmd_disparity(const Options& o, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    const MatchConfig config = make_config(o);
    if (o.raw && config.max_disparity > 255) throw UsageError("--raw requires max disparity <= 255");
    const StereoPair pair(read_pgm_file(o.left), read_pgm_file(o.right));
    RunReport report = base_report(o, config, pair);

    std::optional<DisparityMap> map;
    std::optional<DisparityMap> reference;
    if (o.engine == "reference" || o.engine == "both") {
        Timed t = time_reference(pair, config, o.workers);
        report.engines.push_back(t.run);
        reference = std::move(t.map);
        map = reference;
    }
    if (o.engine == "streaming" || o.engine == "both") {
        Timed t = time_streaming(pair, config, err, hooks);
        report.engines.push_back(t.run);
        if (reference) {
            report.first_mismatch = first_mismatch(*reference, t.map);
            report.equivalence = !report.first_mismatch.has_value();
        }
        map = std::move(t.map);
    }
    if (report.first_mismatch) {
        if (o.json) emit(report, true, out);
        return report_mismatch(*report.first_mismatch, err);
    }
    write_pgm_file(o.output, encode_disparity_image(*map, o.raw));
    if (o.json) emit(report, true, out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    const MatchConfig config = make_config(o);
    const StereoPair pair(read_pgm_file(o.left), read_pgm_file(o.right));
    RunReport report = base_report(o, config, pair);
    report.engine = "both";

    const Timed ref = time_reference(pair, config, o.workers);
    const Timed stream = time_streaming(pair, config, err, hooks);
    report.engines = {ref.run, stream.run};
    report.first_mismatch = first_mismatch(ref.map, stream.map);
    report.equivalence = !report.first_mismatch.has_value();
    emit(report, o.json, out);
    return report.first_mismatch ? report_mismatch(*report.first_mismatch, err) : kExitOk;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    const MatchConfig config = make_config(o);
    if (o.repeats < 1) throw UsageError("repeats must be at least 1");
    if (o.clock_mhz && !(*o.clock_mhz > 0.0)) throw UsageError("clock frequency must be positive");
    if (o.pipeline_depth < 0) throw UsageError("pipeline depth must be non-negative");
    const StereoPair pair(read_pgm_file(o.left), read_pgm_file(o.right));
    RunReport report = base_report(o, config, pair);
    report.engine = "both";

    std::vector<double> ref_ms;
    std::vector<double> stream_ms;
    std::optional<Timed> ref;
    std::optional<Timed> stream;
    for (int i = 0; i < o.repeats; ++i) {
        ref = time_reference(pair, config, o.workers);
        stream = time_streaming(pair, config, err, hooks);
        ref_ms.push_back(ref->run.wall_time_ms);
        stream_ms.push_back(stream->run.wall_time_ms);
    }
    ref->run.wall_time_ms = median_of(ref_ms);
    stream->run.wall_time_ms = median_of(stream_ms);
    report.engines = {ref->run, stream->run};
    report.first_mismatch = first_mismatch(ref->map, stream->map);
    report.equivalence = !report.first_mismatch.has_value();
    if (stream->run.wall_time_ms > 0.0) report.speedup = ref->run.wall_time_ms / stream->run.wall_time_ms;

    if (o.clock_mhz) {
        ModeledPerf modeled;
        modeled.clock = ClockSpec{*o.clock_mhz * 1e6, o.pipeline_depth};
        modeled.cycles = estimate_cycles(config, pair.width(), pair.height(), modeled.clock);
        modeled.fps = estimate_fps(modeled.cycles, modeled.clock);
        modeled.resources = estimate_resources(config, pair.width());
        report.modeled = modeled;
    }
    emit(report, o.json, out);
    return report.first_mismatch ? report_mismatch(*report.first_mismatch, err) : kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out) {
    const StereoPair pair = generate_synthetic_pair(o.width, o.height, o.shift, o.seed);
    write_pgm_file(o.left, pair.left());
    write_pgm_file(o.right, pair.right());
    out << "wrote " << o.left << " and " << o.right << " (" << o.width << 'x' << o.height << ", shift " << o.shift
        << ", seed " << o.seed << ", prng " << kSynthPrngName << ")\n";
    return kExitOk;
}

MatchConfig parse_setup(const std::string& s) {
    // "<N>x<M>", e.g. "9x64"
    const auto sep = s.find('x');
    if (sep == std::string::npos) throw UsageError("setup '" + s + "' is not of the form <window>x<max-disparity>");
    try {
        std::size_t used_n = 0;
        std::size_t used_m = 0;
        const int n = std::stoi(s.substr(0, sep), &used_n);
        const int m = std::stoi(s.substr(sep + 1), &used_m);
        if (used_n != sep || used_m != s.size() - sep - 1) throw std::invalid_argument(s);
        return MatchConfig{.window_size = n, .max_disparity = m};
    } catch (const std::logic_error&) {
        throw UsageError("setup '" + s + "' is not of the form <window>x<max-disparity>");
    }
}

int cmd_model(const Options& o, std::ostream& out) {
    if (!o.clock_mhz || !(*o.clock_mhz > 0.0)) throw UsageError("--clock-mhz must be a positive frequency");
    if (o.pipeline_depth < 0) throw UsageError("pipeline depth must be non-negative");
    if (o.width < 1 || o.height < 1) throw UsageError("frame dimensions must be positive");
    std::vector<MatchConfig> configs;
    for (const auto& s : o.setups) configs.push_back(parse_setup(s));
    if (configs.empty()) configs = {{7, 80}, {9, 64}, {9, 78}, {9, 80}};

    const ClockSpec clock{*o.clock_mhz * 1e6, o.pipeline_depth};
    const auto rows = compare_configs(configs, o.width, o.height, clock);
    if (o.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = {{"window", row.config.window_size}, {"max_disparity", row.config.max_disparity}};
            if (row.error) {
                r["error"] = *row.error;
            } else {
                r["cycles_per_frame"] = row.cycles.cycles_per_frame;
                r["valid_outputs_per_frame"] = row.cycles.valid_outputs_per_frame;
                r["fps"] = row.fps;
                r["local_memory_bytes"] = row.resources.local_memory_bytes;
                r["pixel_register_count"] = row.resources.pixel_register_count;
                r["sad_register_count"] = row.resources.sad_register_count;
                r["abs_diff_unit_count"] = row.resources.abs_diff_unit_count;
                r["adder_count"] = row.resources.adder_count;
                r["comparator_count"] = row.resources.comparator_count;
                r["dsp_count"] = row.resources.dsp_count;
            }
            j.push_back(std::move(r));
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "setup      cycles/frame       fps   local_mem  pixel_regs  sad_regs  absdiff  adders  cmps\n";
    for (const auto& row : rows) {
        char line[256];
        const std::string setup =
            std::to_string(row.config.window_size) + "x" + std::to_string(row.config.max_disparity);
        if (row.error) {
            std::snprintf(line, sizeof line, "%-8s   error: %s\n", setup.c_str(), row.error->c_str());
        } else {
            const auto& r = row.resources;
            std::snprintf(line, sizeof line, "%-8s %14lld %9.2f %11lld %11lld %9lld %8lld %7lld %5lld\n",
                          setup.c_str(), static_cast<long long>(row.cycles.cycles_per_frame), row.fps,
                          static_cast<long long>(r.local_memory_bytes), static_cast<long long>(r.pixel_register_count),
                          static_cast<long long>(r.sad_register_count), static_cast<long long>(r.abs_diff_unit_count),
                          static_cast<long long>(r.adder_count), static_cast<long long>(r.comparator_count));
        }
        out << line;
    }
    return kExitOk;
}

// Everything except undecodable or unreadable input files is a usage error.
bool is_usage_error(const Error& e) {
    return dynamic_cast<const UsageError*>(&e) || dynamic_cast<const InvalidConfig*>(&e) ||
           dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const ShiftTooLarge*>(&e) ||
           dynamic_cast<const WidthTooSmall*>(&e);
}

void add_match_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--window", o.window, "Odd window size N (3..31)")->capture_default_str();
    cmd->add_option("--max-disparity", o.max_disparity, "Number of candidate disparities M")->capture_default_str();
    cmd->add_option("--workers", o.workers, "Threads for the reference engine")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks) {
    Options o;
    CLI::App app{"Stereo SAD block matching: reference and streaming engines", "stereostream"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    auto* disparity = app.add_subcommand("disparity", "Compute a disparity map and write it as PGM");
    disparity->add_option("left", o.left, "Left PGM")->required();
    disparity->add_option("right", o.right, "Right PGM")->required();
    add_match_flags(disparity, o);
    disparity->add_option("--engine", o.engine, "reference | streaming | both")
        ->check(CLI::IsMember({"reference", "streaming", "both"}))
        ->capture_default_str();
    disparity->add_flag("--raw", o.raw, "Write raw disparity indices instead of scaled values");
    disparity->add_flag("--json", o.json, "Print the run report as JSON");
    disparity->add_option("-o", o.output, "Output PGM")->required();

    auto* verify = app.add_subcommand("verify", "Run both engines and compare their maps");
    verify->add_option("left", o.left, "Left PGM")->required();
    verify->add_option("right", o.right, "Right PGM")->required();
    add_match_flags(verify, o);
    verify->add_flag("--json", o.json, "Print the run report as JSON");

    auto* bench = app.add_subcommand("bench", "Time both engines and report op counts and modeled throughput");
    bench->add_option("left", o.left, "Left PGM")->required();
    bench->add_option("right", o.right, "Right PGM")->required();
    add_match_flags(bench, o);
    bench->add_option("--repeats", o.repeats, "Timed runs per engine (median is reported)")->capture_default_str();
    bench->add_option("--clock-mhz", o.clock_mhz, "Clock for the throughput model");
    bench->add_option("--pipeline-depth", o.pipeline_depth, "One-time latency per frame, in cycles")
        ->capture_default_str();
    bench->add_flag("--json", o.json, "Print the run report as JSON");

    auto* synth = app.add_subcommand("synth", "Write a synthetic stereo pair with constant disparity");
    synth->add_option("width", o.width)->required();
    synth->add_option("height", o.height)->required();
    synth->add_option("shift", o.shift)->required();
    synth->add_option("seed", o.seed)->required();
    synth->add_option("out_left", o.left)->required();
    synth->add_option("out_right", o.right)->required();

    auto* model = app.add_subcommand("model", "Tabulate modeled cycles, fps and resources per setup");
    model->add_option("--setup", o.setups, "Setup as <window>x<max-disparity>; repeatable");
    model->add_option("--width", o.width, "Frame width")->required();
    model->add_option("--height", o.height, "Frame height")->required();
    model->add_option("--clock-mhz", o.clock_mhz, "Clock frequency")->required();
    model->add_option("--pipeline-depth", o.pipeline_depth, "One-time latency per frame, in cycles")
        ->capture_default_str();
    model->add_flag("--json", o.json, "Print rows as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolName << ' ' << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "stereostream: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*disparity) return cmd_disparity(o, out, err, hooks);
        if (*verify) return cmd_verify(o, out, err, hooks);
        if (*bench) return cmd_bench(o, out, err, hooks);
        if (*synth) return cmd_synth(o, out);
        return cmd_model(o, out);
    } catch (const Error& e) {
        err << "stereostream: " << e.what() << '\n';
        return is_usage_error(e) ? kExitUsage : kExitIoError;
    } catch (const std::system_error& e) {
        err << "stereostream: " << e.what() << '\n';
        return kExitIoError;
    }
}

}  // namespace stereostream
