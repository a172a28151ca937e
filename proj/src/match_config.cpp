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

#include "stereostream/match_config.hpp"

#include <string>

#include "stereostream/error.hpp"

namespace stereostream {

void MatchConfig::validate() const {
    if (window_size % 2 == 0) throw InvalidConfig("window size must be odd");
    if (window_size < 3) throw InvalidConfig("window size must be at least 3");
    if (window_size > kMaxWindowSize) {
        throw InvalidConfig("window size must be at most " + std::to_string(kMaxWindowSize));
    }
    if (max_disparity < 1) throw InvalidConfig("max disparity must be at least 1");
    if (invalid_value >= 0 && invalid_value < max_disparity) {
        throw InvalidConfig("invalid sentinel collides with a candidate disparity");
    }
}

Region valid_region(const MatchConfig& config, int width, int height) {
    const int r = config.radius();
    return Region{
        .x_min = (config.max_disparity - 1) + r,
        .x_max = width - 1 - r,
        .y_min = r,
        .y_max = height - 1 - r,
    };
}

DisparityMap::DisparityMap(int width, int height, const MatchConfig& config)
    : width_(width), height_(height), max_disparity_(config.max_disparity), invalid_(config.invalid_value) {
    if (width < 1 || height < 1) throw InvalidConfig("map dimensions must be positive");
    values_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), invalid_);
}

}  // namespace stereostream
