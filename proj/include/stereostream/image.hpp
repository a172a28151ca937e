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

using Pixel = std::uint8_t;

/// Row-major 8-bit grayscale raster. Width and height are at least 1 and
/// the sample buffer always holds exactly width * height pixels.
class GrayImage {
   public:
    GrayImage(int width, int height, Pixel fill = 0);
    GrayImage(int width, int height, std::vector<Pixel> data);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    Pixel at(int x, int y) const { return data_[index(x, y)]; }
    Pixel& at(int x, int y) { return data_[index(x, y)]; }

    std::span<const Pixel> row(int y) const {
        return {data_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
    }
    std::span<Pixel> row(int y) {
        return {data_.data() + static_cast<std::size_t>(y) * width_, static_cast<std::size_t>(width_)};
    }

    std::span<const Pixel> data() const { return data_; }
    std::span<Pixel> data() { return data_; }

    bool operator==(const GrayImage&) const = default;

   private:
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<Pixel> data_;
};

/// Rectified left/right images of identical size.
class StereoPair {
   public:
    /// Throws DimensionMismatch when the two images differ in shape.
    StereoPair(GrayImage left, GrayImage right);

    const GrayImage& left() const { return left_; }
    const GrayImage& right() const { return right_; }
    int width() const { return left_.width(); }
    int height() const { return left_.height(); }

    bool operator==(const StereoPair&) const = default;

   private:
    GrayImage left_;
    GrayImage right_;
};

}  // namespace stereostream
