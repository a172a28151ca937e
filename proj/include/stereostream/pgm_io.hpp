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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stereostream/image.hpp"

namespace stereostream {

/// Decodes a binary (P5) or ASCII (P2) PGM with maxval <= 255.
/// Header comments starting with '#' are skipped.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);
GrayImage load_pgm(std::string_view bytes);

/// Encodes as P5 ("P5\n<w> <h>\n255\n" + samples) or P2 when binary is false.
std::vector<std::uint8_t> save_pgm(const GrayImage& img, bool binary = true);

StereoPair load_stereo_pair(std::span<const std::uint8_t> left_bytes, std::span<const std::uint8_t> right_bytes);

// File helpers. I/O failures raise std::system_error.
std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

GrayImage read_pgm_file(const std::string& path);
void write_pgm_file(const std::string& path, const GrayImage& img, bool binary = true);

}  // namespace stereostream
