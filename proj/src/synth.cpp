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

#include "stereostream/synth.hpp"

#include <string>

#include "stereostream/error.hpp"

namespace stereostream {

namespace {

Pixel draw(SplitMix64& rng) { return static_cast<Pixel>(rng.next() >> 56); }

}  // namespace

StereoPair generate_synthetic_pair(int width, int height, int shift, std::uint64_t seed) {
    if (width < 1 || height < 1) throw InvalidConfig("image dimensions must be positive");
    if (shift < 0) throw InvalidConfig("shift must be non-negative");
    if (shift >= width) {
        throw ShiftTooLarge("shift " + std::to_string(shift) + " must be smaller than width " + std::to_string(width));
    }

    SplitMix64 root(seed);
    SplitMix64 texture = root.split();
    SplitMix64 seam = root.split();

    GrayImage right(width, height);
    for (auto& p : right.data()) p = draw(texture);

    GrayImage left(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < shift; ++x) left.at(x, y) = draw(seam);
        for (int x = shift; x < width; ++x) left.at(x, y) = right.at(x - shift, y);
    }
    return StereoPair(std::move(left), std::move(right));
}

}  // namespace stereostream
