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

#include "stereostream/image.hpp"

#include <string>

#include "stereostream/error.hpp"

namespace stereostream {

namespace {

void check_dims(int width, int height) {
    if (width < 1 || height < 1) {
        throw InvalidConfig("image dimensions must be positive, got " + std::to_string(width) + "x" +
                            std::to_string(height));
    }
}

}  // namespace

GrayImage::GrayImage(int width, int height, Pixel fill) : width_(width), height_(height) {
    check_dims(width, height);
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<Pixel> data)
    : width_(width), height_(height), data_(std::move(data)) {
    check_dims(width, height);
    if (data_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw InvalidConfig("image buffer holds " + std::to_string(data_.size()) + " samples, expected " +
                            std::to_string(static_cast<std::size_t>(width) * static_cast<std::size_t>(height)));
    }
}

StereoPair::StereoPair(GrayImage left, GrayImage right) : left_(std::move(left)), right_(std::move(right)) {
    if (left_.width() != right_.width() || left_.height() != right_.height()) {
        throw DimensionMismatch("stereo pair dimensions differ: left " + std::to_string(left_.width()) + "x" +
                                std::to_string(left_.height()) + ", right " + std::to_string(right_.width()) +
                                "x" + std::to_string(right_.height()));
    }
}

}  // namespace stereostream
