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
#include <string_view>

#include "stereostream/image.hpp"

namespace stereostream {

/// SplitMix64 (Steele, Lea & Flood). Small, splittable and fully specified,
/// so synthetic fixtures are reproducible across implementations.
class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Independent child stream seeded from this one.
    SplitMix64 split() { return SplitMix64(next()); }

   private:
    std::uint64_t state_;
};

inline constexpr std::string_view kSynthPrngName = "splitmix64";

/// Builds a pair with ground-truth disparity `shift` everywhere it is
/// defined: the right image is uniform random texture, and
/// left(x, y) = right(x - shift, y) for x >= shift. Columns x < shift of the
/// left image are filled from an independent stream.
///
/// Throws ShiftTooLarge if shift >= width, InvalidConfig for a negative
/// shift or non-positive dimensions.
StereoPair generate_synthetic_pair(int width, int height, int shift, std::uint64_t seed);

}  // namespace stereostream
