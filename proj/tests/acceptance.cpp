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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>

#include "oracle/brute_force.hpp"
#include "stereostream/cli.hpp"
#include "stereostream/perf_model.hpp"
#include "stereostream/pgm_io.hpp"
#include "stereostream/reference_matcher.hpp"
#include "stereostream/streaming_engine.hpp"
#include "stereostream/synth.hpp"

using namespace stereostream;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

StereoPair random_pair(int w, int h, std::mt19937_64& rng) {
    if (rng() % 2 == 0) return StereoPair(oracle::random_image(w, h, rng), oracle::random_image(w, h, rng));
    return StereoPair(oracle::blocky_image(w, h, rng), oracle::blocky_image(w, h, rng));
}

// 1. run_stream == reference on >= 50 random cases, zero tolerance.
Outcome oracle_equivalence() {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> wdist(32, 128);
    std::uniform_int_distribution<int> hdist(24, 96);
    const int windows[] = {3, 5, 7, 9};
    const int disparities[] = {4, 8, 16, 32};
    const auto start = std::chrono::steady_clock::now();
    int cases = 0;
    while (cases < 60) {
        const MatchConfig config{windows[rng() % 4], disparities[rng() % 4]};
        const int w = wdist(rng);
        const int h = hdist(rng);
        if ((config.max_disparity - 1) + config.window_size > w) continue;
        const StereoPair pair = random_pair(w, h, rng);
        const DisparityMap reference = compute_disparity_map_reference(pair, config);
        const StreamResult streamed = run_stream(pair, config);
        if (!(streamed.map == reference)) {
            return {false, "mismatch at case " + std::to_string(cases) + " (" + std::to_string(w) + "x" +
                               std::to_string(h) + ", N=" + std::to_string(config.window_size) +
                               ", M=" + std::to_string(config.max_disparity) + ")"};
        }
        ++cases;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream os;
    os << cases << " cases bit-exact in " << seconds << " s";
    return {seconds < 60.0, os.str()};
}

// 2. Window SAD == sum of the N library column-SADs, every valid (x, y, d).
Outcome column_decomposition() {
    std::mt19937_64 rng(77);
    std::uint64_t checked = 0;
    for (int fixture = 0; fixture < 20; ++fixture) {
        const int n = 3 + 2 * (fixture % 4);
        const MatchConfig config{n, 4 + fixture % 5};
        const int w = 24 + fixture;
        const int h = 12 + fixture % 7;
        const StereoPair pair = random_pair(w, h, rng);
        const int r = config.radius();
        const int m = config.max_disparity;
        const Region region = valid_region(config, w, h);
        for (int y = region.y_min; y <= region.y_max; ++y) {
            for (int x = region.x_min; x <= region.x_max; ++x) {
                std::vector<SadValue> total(static_cast<std::size_t>(m), 0);
                for (int c = x - r; c <= x + r; ++c) {
                    std::vector<Pixel> lr;
                    std::vector<Pixel> rr;
                    for (int j = -r; j <= r; ++j) lr.push_back(pair.left().at(c, y + j));
                    for (int d = 0; d < m; ++d) {
                        for (int j = -r; j <= r; ++j) rr.push_back(pair.right().at(c - d, y + j));
                    }
                    const auto cols = compute_column_sads(lr, rr);
                    for (int d = 0; d < m; ++d) total[static_cast<std::size_t>(d)] += cols[static_cast<std::size_t>(d)];
                }
                for (int d = 0; d < m; ++d) {
                    if (window_sad(pair, x, y, d, config) != total[static_cast<std::size_t>(d)]) {
                        return {false, "decomposition fails at (" + std::to_string(x) + "," + std::to_string(y) +
                                           ") d=" + std::to_string(d)};
                    }
                    ++checked;
                }
            }
        }
    }
    return {true, std::to_string(checked) + " (x, y, d) triples exact over 20 fixtures"};
}

// 3. 640x480, shift 7, seed 42, N=9, M=64: every valid pixel reports 7.
Outcome synthetic_ground_truth() {
    const StereoPair pair = generate_synthetic_pair(640, 480, 7, 42);
    const MatchConfig config{9, 64};
    const auto brute = oracle::disparity_map(pair.left(), pair.right(), 9, 64);
    const DisparityMap reference = compute_disparity_map_reference(pair, config);
    const StreamResult streamed = run_stream(pair, config);
    const Region region = valid_region(config, 640, 480);
    std::int64_t sevens = 0;
    for (int y = region.y_min; y <= region.y_max; ++y) {
        for (int x = region.x_min; x <= region.x_max; ++x) {
            const auto i = static_cast<std::size_t>(y) * 640 + static_cast<std::size_t>(x);
            if (brute[i] != 7) return {false, "brute-force oracle disagrees at (" + std::to_string(x) + "," + std::to_string(y) + ")"};
            if (reference.at(x, y) == 7 && streamed.map.at(x, y) == 7) ++sevens;
        }
    }
    return {sevens == region.area(),
            std::to_string(sevens) + "/" + std::to_string(region.area()) + " valid pixels = 7 in both engines"};
}

// 4. Modeled fps identical across the VGA setups; 70.04 MHz -> 228.0 +- 0.5.
Outcome fps_invariance() {
    const ClockSpec clock{70.04e6, 0};
    const std::vector<MatchConfig> setups = {{7, 80}, {9, 64}, {9, 78}, {9, 80}};
    const auto rows = compare_configs(setups, 640, 480, clock);
    bool equal = true;
    for (const auto& row : rows) equal = equal && !row.error && row.fps == rows[0].fps;
    const double fps = rows[0].fps;
    std::ostringstream os;
    os << "fps " << fps << " for all four setups" << (equal ? "" : " (NOT equal)");
    return {equal && std::abs(fps - 228.0) <= 0.5, os.str()};
}

// 5. Resource formulas, exact.
Outcome resource_formulas() {
    const ResourceEstimate r = estimate_resources({9, 80}, 640);
    std::ostringstream os;
    os << "local_memory_bytes=" << r.local_memory_bytes << " pixel_registers=" << r.pixel_register_count
       << " sad_registers=" << r.sad_register_count;
    return {r.local_memory_bytes == 11520 && r.pixel_register_count == 729 && r.sad_register_count == 880, os.str()};
}

// 6. Streaming / naive abs-diff ratio within 10% of 1/N.
Outcome op_count_ratio() {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream os;
    bool ok = true;
    for (const MatchConfig config : {MatchConfig{3, 8}, MatchConfig{5, 16}, MatchConfig{9, 64}}) {
        const FrameOpCounts counts = sad_op_counts(config, 640, 480);
        const double ratio = double(counts.streaming.abs_diff) / double(counts.reference.abs_diff);
        const double rel = std::abs(ratio * config.window_size - 1.0);
        ok = ok && rel <= 0.10;
        os << "N=" << config.window_size << ": " << ratio << " (" << rel * 100 << "% off 1/N)  ";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    os << "in " << seconds << " s";
    return {ok && seconds < 120.0, os.str()};
}

// 7. Parallel maps bit-identical for workers {1, 3, 8, h + 10}.
Outcome parallel_determinism() {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 10; ++i) {
        const int w = 40 + 7 * i;
        const int h = 24 + 5 * i;
        const MatchConfig config{3 + 2 * (i % 4), 4 + 3 * i};
        if ((config.max_disparity - 1) + config.window_size > w) return {false, "bad generated case"};
        const StereoPair pair = random_pair(w, h, rng);
        const DisparityMap reference = compute_disparity_map_reference(pair, config);
        for (int workers : {1, 3, 8, h + 10}) {
            if (!(compute_disparity_map_parallel(pair, config, workers) == reference)) {
                return {false, "pair " + std::to_string(i) + " differs with " + std::to_string(workers) + " workers"};
            }
        }
    }
    return {true, "10 pairs x 4 worker counts bit-identical"};
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o;
    std::ostringstream e;
    std::vector<std::string> argv{"stereostream"};
    argv.insert(argv.end(), args.begin(), args.end());
    const int code = run_cli(argv, o, e);
    if (out) *out = o.str();
    if (code != 0) std::cerr << e.str();
    return code;
}

// 8. Streaming faster than naive at VGA, N=9, M=64, median of 5, via the
// bench report.
Outcome wall_clock(const fs::path& dir) {
    const std::string l = (dir / "bench_L.pgm").string();
    const std::string r = (dir / "bench_R.pgm").string();
    if (cli({"synth", "640", "480", "7", "42", l, r}) != 0) return {false, "synth failed"};
    std::string json;
    if (cli({"bench", l, r, "--window", "9", "--max-disparity", "64", "--repeats", "5", "--clock-mhz", "70.04",
             "--json"},
            &json) != 0) {
        return {false, "bench failed"};
    }
    const auto report = nlohmann::json::parse(json);
    const double naive = report["engines"][0]["wall_time_ms"];
    const double streaming = report["engines"][1]["wall_time_ms"];
    std::ostringstream os;
    os << "reference " << naive << " ms, streaming " << streaming << " ms, reported speedup "
       << report["speedup"].get<double>() << "x, modeled fps " << report["modeled"]["fps"].get<double>();
    return {streaming < naive && report.contains("speedup"), os.str()};
}

// 9. synth -> disparity --raw -> verify, with exact index recovery.
Outcome cli_pipeline(const fs::path& dir) {
    const std::string l = (dir / "L.pgm").string();
    const std::string r = (dir / "R.pgm").string();
    const std::string out = (dir / "raw.pgm").string();
    if (cli({"synth", "640", "480", "7", "42", l, r}) != 0) return {false, "synth exit != 0"};
    if (cli({"disparity", l, r, "--window", "9", "--max-disparity", "64", "--engine", "streaming", "--raw", "-o", out}) != 0) {
        return {false, "disparity exit != 0"};
    }
    if (cli({"verify", l, r, "--window", "9", "--max-disparity", "64"}) != 0) return {false, "verify exit != 0"};

    const MatchConfig config{9, 64};
    const StereoPair pair(read_pgm_file(l), read_pgm_file(r));
    const DisparityMap expected = compute_disparity_map_reference(pair, config);
    const DisparityMap recovered = decode_disparity_image(read_pgm_file(out), config, true);
    return {recovered == expected, recovered == expected ? "exit codes 0, recovered map identical"
                                                         : "recovered map differs from in-memory map"};
}

}  // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / "stereostream_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 oracle equivalence", oracle_equivalence},
        {"2 column-SAD decomposition", column_decomposition},
        {"3 synthetic ground truth", synthetic_ground_truth},
        {"4 one-pixel-per-cycle fps model", fps_invariance},
        {"5 resource formulas", resource_formulas},
        {"6 op-count reuse ratio", op_count_ratio},
        {"7 parallel determinism", parallel_determinism},
        {"8 wall-clock benefit", [&] { return wall_clock(dir); }},
        {"9 PGM round trip and CLI contract", [&] { return cli_pipeline(dir); }},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        failures += outcome.pass ? 0 : 1;
        std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail << std::endl;
    }
    fs::remove_all(dir);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
