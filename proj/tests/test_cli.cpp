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

#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <random>
#include <regex>
#include <sstream>

#include "stereostream/cli.hpp"
#include "stereostream/pgm_io.hpp"
#include "stereostream/reference_matcher.hpp"
#include "stereostream/report.hpp"
#include "stereostream/synth.hpp"

using namespace stereostream;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("stereostream_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    int run(std::vector<std::string> args, const CliHooks& hooks = {}) {
        out_.str("");
        err_.str("");
        args.insert(args.begin(), "stereostream");
        return run_cli(args, out_, err_, hooks);
    }

    void synth(int w, int h, int shift, int seed) {
        ASSERT_EQ(run({"synth", std::to_string(w), std::to_string(h), std::to_string(shift), std::to_string(seed),
                       path("L.pgm"), path("R.pgm")}),
                  kExitOk)
            << err_.str();
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, DisparityHappyPath) {
    synth(96, 40, 6, 3);
    EXPECT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "9", "--max-disparity", "16", "--engine",
                   "streaming", "-o", path("out.pgm")}),
              kExitOk)
        << err_.str();
    const GrayImage out = read_pgm_file(path("out.pgm"));
    EXPECT_EQ(out.width(), 96);
    // d = 6 scaled by 254 / 15.
    EXPECT_EQ(out.at(50, 20), 6 * 254 / 15);
    EXPECT_EQ(out.at(0, 0), 255);
}

TEST_F(CliTest, EvenWindowIsUsageError) {
    synth(64, 20, 2, 1);
    EXPECT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "8", "-o", path("out.pgm")}), kExitUsage);
    const std::string message = err_.str();
    EXPECT_NE(message.find("window size must be odd"), std::string::npos);
    EXPECT_EQ(std::count(message.begin(), message.end(), '\n'), 1);
}

TEST_F(CliTest, IdenticalInputsGiveZeroAndBorder) {
    synth(40, 20, 0, 5);
    ASSERT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "3", "--max-disparity", "4", "-o",
                   path("out.pgm")}),
              kExitOk);
    const GrayImage out = read_pgm_file(path("out.pgm"));
    const Region region = valid_region({3, 4}, 40, 20);
    for (int y = 0; y < 20; ++y) {
        for (int x = 0; x < 40; ++x) EXPECT_EQ(out.at(x, y), region.contains(x, y) ? 0 : 255);
    }
}

TEST_F(CliTest, BadFlagsAndEngines) {
    synth(40, 20, 0, 5);
    EXPECT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--engine", "gpu", "-o", path("o.pgm")}), kExitUsage);
    EXPECT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "3", "--max-disparity", "4"}), kExitUsage);
    EXPECT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "3", "--max-disparity", "300", "--raw",
                   "-o", path("o.pgm")}),
              kExitUsage);
    EXPECT_EQ(run({"verify", path("L.pgm"), path("R.pgm"), "--workers", "0"}), kExitUsage);
    EXPECT_EQ(run({"bogus"}), kExitUsage);
    EXPECT_EQ(run({}), kExitUsage);
    EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST_F(CliTest, IoErrors) {
    synth(40, 20, 0, 5);
    EXPECT_EQ(run({"verify", path("missing.pgm"), path("R.pgm")}), kExitIoError);
    write_file(path("bad.pgm"), std::vector<std::uint8_t>{'P', '5', '\n', '9'});
    EXPECT_EQ(run({"verify", path("bad.pgm"), path("R.pgm")}), kExitIoError);
    EXPECT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "3", "--max-disparity", "4", "-o",
                   path("no/such/dir/out.pgm")}),
              kExitIoError);
}

TEST_F(CliTest, VerifyAcceptsEquivalentEngines) {
    synth(80, 30, 4, 9);
    EXPECT_EQ(run({"verify", path("L.pgm"), path("R.pgm"), "--window", "5", "--max-disparity", "8"}), kExitOk);
    EXPECT_NE(out_.str().find("equivalence: identical"), std::string::npos);
    EXPECT_EQ(run({"verify", path("L.pgm"), path("R.pgm"), "--window", "5", "--max-disparity", "8", "--workers",
                   "3"}),
              kExitOk);
}

TEST_F(CliTest, VerifyCatchesCorruptedStreamingEngine) {
    synth(80, 30, 4, 9);
    CliHooks hooks;
    // Off-by-one in one output pixel.
    hooks.corrupt_streaming = [](DisparityMap& map) { map.set(40, 15, map.at(40, 15) + 1); };
    EXPECT_EQ(run({"verify", path("L.pgm"), path("R.pgm"), "--window", "5", "--max-disparity", "8"}, hooks),
              kExitMismatch);
    EXPECT_NE(err_.str().find("(40, 15)"), std::string::npos);
    EXPECT_NE(err_.str().find("reference=4 streaming=5"), std::string::npos);
}

TEST_F(CliTest, VerifyRejectsMismatchedDims) {
    synth(80, 30, 4, 9);
    write_pgm_file(path("small.pgm"), GrayImage(40, 30));
    EXPECT_EQ(run({"verify", path("L.pgm"), path("small.pgm")}), kExitUsage);
}

TEST_F(CliTest, BenchJsonSchema) {
    synth(100, 40, 5, 2);
    ASSERT_EQ(run({"bench", path("L.pgm"), path("R.pgm"), "--window", "5", "--max-disparity", "8", "--repeats", "5",
                   "--clock-mhz", "70.04", "--json"}),
              kExitOk)
        << err_.str();
    const auto j = nlohmann::json::parse(out_.str());
    ASSERT_TRUE(j.is_object());
    for (const char* key : {"config", "engines", "modeled", "equivalence", "speedup", "tool", "version", "prng"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["config"]["repeats"], 5);
    ASSERT_EQ(j["engines"].size(), 2u);
    for (const auto& e : j["engines"]) {
        for (const char* key : {"name", "wall_time_ms", "op_counts", "cycle_stats"}) EXPECT_TRUE(e.contains(key)) << key;
        EXPECT_GE(e["wall_time_ms"].get<double>(), 0.0);
    }
    EXPECT_EQ(j["engines"][1]["cycle_stats"]["total_cycles"], 4000);
    EXPECT_EQ(j["equivalence"], true);
    EXPECT_TRUE(j["modeled"].contains("fps"));
    EXPECT_TRUE(j["modeled"].contains("resources"));
    EXPECT_EQ(j["modeled"]["resources"]["local_memory_bytes"], 2 * 5 * 100);
}

TEST_F(CliTest, BenchWithoutClockHasNoModel) {
    synth(60, 20, 1, 2);
    ASSERT_EQ(run({"bench", path("L.pgm"), path("R.pgm"), "--window", "3", "--max-disparity", "4", "--json"}), kExitOk);
    const auto j = nlohmann::json::parse(out_.str());
    EXPECT_FALSE(j.contains("modeled"));
    EXPECT_EQ(run({"bench", path("L.pgm"), path("R.pgm"), "--repeats", "0"}), kExitUsage);
}

TEST_F(CliTest, JsonIsStableApartFromTimings) {
    synth(60, 20, 1, 2);
    auto scrub = [](std::string s) {
        s = std::regex_replace(s, std::regex(R"("wall_time_ms": [0-9.e+-]+)"), "\"wall_time_ms\": 0");
        return std::regex_replace(s, std::regex(R"("speedup": [0-9.e+-]+)"), "\"speedup\": 0");
    };
    std::vector<std::string> args{"bench",           path("L.pgm"), path("R.pgm"), "--window", "3", "--max-disparity",
                                  "4",               "--clock-mhz", "50",          "--json"};
    ASSERT_EQ(run(args), kExitOk);
    const std::string first = scrub(out_.str());
    ASSERT_EQ(run(args), kExitOk);
    EXPECT_EQ(scrub(out_.str()), first);
}

TEST_F(CliTest, SynthDeterminismAndZeroShift) {
    synth(50, 20, 0, 42);
    const auto l = read_file(path("L.pgm"));
    const auto r = read_file(path("R.pgm"));
    EXPECT_EQ(l, r);
    synth(50, 20, 3, 42);
    const auto a = read_file(path("L.pgm"));
    synth(50, 20, 3, 42);
    EXPECT_EQ(read_file(path("L.pgm")), a);
    EXPECT_EQ(run({"synth", "50", "20", "50", "1", path("a.pgm"), path("b.pgm")}), kExitUsage);
}

TEST_F(CliTest, RawExportRoundTrip) {
    synth(90, 30, 7, 42);
    ASSERT_EQ(run({"disparity", path("L.pgm"), path("R.pgm"), "--window", "5", "--max-disparity", "12", "--raw",
                   "--engine", "both", "-o", path("raw.pgm")}),
              kExitOk);
    const MatchConfig config{5, 12};
    const StereoPair pair(read_pgm_file(path("L.pgm")), read_pgm_file(path("R.pgm")));
    EXPECT_EQ(decode_disparity_image(read_pgm_file(path("raw.pgm")), config, true),
              compute_disparity_map_reference(pair, config));
}

TEST_F(CliTest, ModelTable) {
    ASSERT_EQ(run({"model", "--width", "640", "--height", "480", "--clock-mhz", "70.04", "--json"}), kExitOk);
    const auto rows = nlohmann::json::parse(out_.str());
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& row : rows) EXPECT_EQ(row["fps"], rows[0]["fps"]);
    EXPECT_EQ(rows[3]["local_memory_bytes"], 11520);
    ASSERT_EQ(run({"model", "--width", "64", "--height", "48", "--clock-mhz", "1", "--setup", "9x80", "--setup", "3x4"}),
              kExitOk);
    EXPECT_NE(out_.str().find("error"), std::string::npos);
    EXPECT_EQ(run({"model", "--width", "64", "--height", "48"}), kExitUsage);
    EXPECT_EQ(run({"model", "--width", "64", "--height", "48", "--clock-mhz", "1", "--setup", "nine"}), kExitUsage);
}

TEST(DisparityImage, ScaledExportInvertsExactly) {
    std::mt19937_64 rng(10);
    for (int m : {1, 2, 3, 16, 64, 80, 128, 255}) {
        const MatchConfig config{3, m};
        DisparityMap map(32, 8, config);
        std::uniform_int_distribution<int> d(-1, m - 1);
        for (auto& v : map.values()) v = d(rng);
        const GrayImage scaled = encode_disparity_image(map, false);
        for (Pixel p : scaled.data()) EXPECT_TRUE(p <= 254 || p == 255);
        EXPECT_EQ(decode_disparity_image(scaled, config, false), map) << "M=" << m;
        EXPECT_EQ(decode_disparity_image(encode_disparity_image(map, true), config, true), map);
    }
}

TEST(DisparityImage, ScalingFormula) {
    const MatchConfig config{3, 64};
    DisparityMap map(4, 1, config);
    map.set(0, 0, 0);
    map.set(1, 0, 63);
    map.set(2, 0, 10);
    const GrayImage img = encode_disparity_image(map, false);
    EXPECT_EQ(img.at(0, 0), 0);
    EXPECT_EQ(img.at(1, 0), 254);
    EXPECT_EQ(img.at(2, 0), 10 * 254 / 63);
    EXPECT_EQ(img.at(3, 0), 255);
}

TEST(Report, MedianOf) {
    EXPECT_EQ(median_of({5.0, 1.0, 3.0, 2.0, 4.0}), 3.0);
    EXPECT_EQ(median_of({4.0, 1.0}), 2.5);
    EXPECT_EQ(median_of({}), 0.0);
}
