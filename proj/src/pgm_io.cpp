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

#include "stereostream/pgm_io.hpp"

#include <cctype>
#include <cerrno>
#include <fstream>
#include <iterator>
#include <system_error>

#include "stereostream/error.hpp"

namespace stereostream {

namespace {

constexpr std::uint64_t kMaxDimension = 1u << 20;

// Netpbm header tokenizer: whitespace separated tokens, '#' starts a
// comment that runs to the end of the line.
class Reader {
   public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const auto c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(c)) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    // Returns false at end of input; throws on a non-numeric token.
    bool number(std::uint64_t& value, const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size()) return false;
        if (!std::isdigit(bytes_[pos_])) {
            throw MalformedHeader(std::string("expected a number for ") + what);
        }
        value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > (1ULL << 32)) throw MalformedHeader(std::string(what) + " is too large");
            ++pos_;
        }
        if (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
            throw MalformedHeader(std::string("expected a number for ") + what);
        }
        return true;
    }

    std::uint64_t header_number(const char* what) {
        std::uint64_t v = 0;
        if (!number(v, what)) throw MalformedHeader(std::string("header ends before ") + what);
        return v;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }
    std::size_t remaining() const { return bytes_.size() - pos_; }
    std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

   private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw MalformedHeader("bad magic, expected P5 or P2");
    }
    const bool binary = bytes[1] == '5';
    Reader in(bytes);
    in.advance(2);
    if (in.remaining() > 0 && !std::isspace(in.rest()[0]) && in.rest()[0] != '#') {
        throw MalformedHeader("bad magic, expected P5 or P2");
    }

    const auto width = in.header_number("width");
    const auto height = in.header_number("height");
    const auto maxval = in.header_number("maxval");
    if (width == 0 || height == 0 || width > kMaxDimension || height > kMaxDimension) {
        throw MalformedHeader("image dimensions out of range");
    }
    if (maxval == 0) throw MalformedHeader("maxval must be positive");
    if (maxval > 255) throw UnsupportedMaxval("maxval " + std::to_string(maxval) + " exceeds 255");

    const auto count = static_cast<std::size_t>(width * height);
    std::vector<Pixel> data;
    data.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (in.remaining() == 0) throw TruncatedData("no raster data");
        if (!std::isspace(in.rest()[0])) throw MalformedHeader("missing whitespace after maxval");
        in.advance(1);
        if (in.remaining() < count) {
            throw TruncatedData("expected " + std::to_string(count) + " samples, got " +
                                std::to_string(in.remaining()));
        }
        auto raster = in.rest().first(count);
        for (auto v : raster) {
            if (v > maxval) throw MalformedHeader("sample exceeds maxval");
        }
        data.assign(raster.begin(), raster.end());
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t v = 0;
            if (!in.number(v, "sample")) {
                throw TruncatedData("expected " + std::to_string(count) + " samples, got " + std::to_string(i));
            }
            if (v > maxval) throw MalformedHeader("sample exceeds maxval");
            data.push_back(static_cast<Pixel>(v));
        }
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(data));
}

GrayImage load_pgm(std::string_view bytes) {
    return load_pgm(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img, bool binary) {
    std::string header = std::string(binary ? "P5" : "P2") + "\n" + std::to_string(img.width()) + " " +
                         std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    if (binary) {
        out.insert(out.end(), img.data().begin(), img.data().end());
        return out;
    }
    // One image row per line.
    for (int y = 0; y < img.height(); ++y) {
        std::string line;
        for (int x = 0; x < img.width(); ++x) {
            if (x > 0) line += ' ';
            line += std::to_string(img.at(x, y));
        }
        line += '\n';
        out.insert(out.end(), line.begin(), line.end());
    }
    return out;
}

StereoPair load_stereo_pair(std::span<const std::uint8_t> left_bytes, std::span<const std::uint8_t> right_bytes) {
    return StereoPair(load_pgm(left_bytes), load_pgm(right_bytes));
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::system_error(errno ? errno : ENOENT, std::generic_category(), "cannot open " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::system_error(errno ? errno : EACCES, std::generic_category(), "cannot create " + path);
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::system_error(EIO, std::generic_category(), "write failed for " + path);
}

GrayImage read_pgm_file(const std::string& path) { return load_pgm(std::span<const std::uint8_t>(read_file(path))); }

void write_pgm_file(const std::string& path, const GrayImage& img, bool binary) {
    write_file(path, save_pgm(img, binary));
}

}  // namespace stereostream
