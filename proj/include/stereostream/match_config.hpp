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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace stereostream {

/// Window SAD value. N is capped at 31, so N * N * 255 stays below 2^31.
using SadValue = std::uint32_t;
using Disparity = std::int32_t;

inline constexpr int kMaxWindowSize = 31;
inline constexpr Disparity kDefaultInvalid = -1;

/// Block-matching parameters: an N x N window and candidate disparities
/// d in [0, max_disparity - 1].
struct MatchConfig {
    int window_size = 9;
    int max_disparity = 64;
    Disparity invalid_value = kDefaultInvalid;

    int radius() const { return (window_size - 1) / 2; }

    /// Throws InvalidConfig describing the first violated constraint.
    void validate() const;

    bool operator==(const MatchConfig&) const = default;
};

/// Inclusive pixel rectangle. Empty when x_min > x_max or y_min > y_max.
struct Region {
    int x_min;
    int x_max;
    int y_min;
    int y_max;

    bool empty() const { return x_min > x_max || y_min > y_max; }
    bool contains(int x, int y) const { return x >= x_min && x <= x_max && y >= y_min && y <= y_max; }
    std::int64_t area() const {
        return empty() ? 0 : std::int64_t{x_max - x_min + 1} * std::int64_t{y_max - y_min + 1};
    }

    bool operator==(const Region&) const = default;
};

/// Pixels whose full window and full disparity range lie inside both images.
Region valid_region(const MatchConfig& config, int width, int height);

/// Instrumented operation counters, filled in by both matchers.
struct OpCounts {
    std::uint64_t abs_diff = 0;
    std::uint64_t additions = 0;
    std::uint64_t comparisons = 0;

    OpCounts& operator+=(const OpCounts& o) {
        abs_diff += o.abs_diff;
        additions += o.additions;
        comparisons += o.comparisons;
        return *this;
    }
    bool operator==(const OpCounts&) const = default;
};

/// Per-pixel disparity indices; pixels outside the valid region hold the
/// config's invalid sentinel.
class DisparityMap {
   public:
    DisparityMap(int width, int height, const MatchConfig& config);

    int width() const { return width_; }
    int height() const { return height_; }
    int max_disparity() const { return max_disparity_; }
    Disparity invalid_value() const { return invalid_; }

    Disparity at(int x, int y) const { return values_[index(x, y)]; }
    void set(int x, int y, Disparity d) { values_[index(x, y)] = d; }
    bool is_valid(int x, int y) const { return at(x, y) != invalid_; }

    std::span<const Disparity> values() const { return values_; }
    std::span<Disparity> values() { return values_; }

    bool operator==(const DisparityMap&) const = default;

   private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    int max_disparity_;
    Disparity invalid_;
    std::vector<Disparity> values_;
};

}  // namespace stereostream
