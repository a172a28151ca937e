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

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "stereostream/image.hpp"
#include "stereostream/match_config.hpp"

namespace stereostream {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitIoError = 1,
    kExitUsage = 2,
    kExitMismatch = 3,
};

/// 8-bit export of a disparity map. Scaled mode writes floor(d * 254 / (M - 1))
/// (0 when M == 1); raw mode writes d itself and needs M <= 255. The invalid
/// sentinel is written as 255 in both modes.
GrayImage encode_disparity_image(const DisparityMap& map, bool raw);

/// Inverse of encode_disparity_image. Scaled values map back to the
/// smallest d of their bin, which is exact whenever M - 1 <= 254.
DisparityMap decode_disparity_image(const GrayImage& img, const MatchConfig& config, bool raw);

/// Test seams for the command-line driver.
struct CliHooks {
    /// Applied to the streaming engine's map before it is compared or written.
    std::function<void(DisparityMap&)> corrupt_streaming;
};

/// Runs the command-line tool with argv-style arguments (args[0] is the
/// program name). Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace stereostream
