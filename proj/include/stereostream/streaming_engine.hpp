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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "stereostream/image.hpp"
#include "stereostream/match_config.hpp"

namespace stereostream {

/// Fixed-size table of register columns that shifts one column to the left
/// per cycle. Logical column 0 is the oldest, column `columns() - 1` the
/// newest. The shift is realized by rotating a head index, so it is O(1)
/// and every retained entry keeps its value.
template <typename T>
class ShiftRegisterTable {
   public:
    ShiftRegisterTable(int column_length, int columns)
        : column_length_(column_length),
          columns_(columns),
          storage_(static_cast<std::size_t>(column_length) * static_cast<std::size_t>(columns), T{}) {}

    int column_length() const { return column_length_; }
    int columns() const { return columns_; }

    std::span<const T> column(int k) const { return {storage_.data() + offset(k), static_cast<std::size_t>(column_length_)}; }
    std::span<T> column(int k) { return {storage_.data() + offset(k), static_cast<std::size_t>(column_length_)}; }

    std::span<T> newest() { return column(columns_ - 1); }
    std::span<const T> newest() const { return column(columns_ - 1); }

    /// Drops column 0, moves every other column one slot left and opens a
    /// zeroed newest column.
    void shift_left() {
        head_ = (head_ + 1) % columns_;
        auto fresh = newest();
        std::fill(fresh.begin(), fresh.end(), T{});
    }

    void clear() {
        std::fill(storage_.begin(), storage_.end(), T{});
        head_ = 0;
    }

   private:
    std::size_t offset(int k) const {
        return static_cast<std::size_t>((head_ + k) % columns_) * static_cast<std::size_t>(column_length_);
    }

    int column_length_;
    int columns_;
    int head_ = 0;
    std::vector<T> storage_;
};

struct CycleStats {
    std::uint64_t total_cycles = 0;
    std::uint64_t pixels_ingested = 0;
    std::uint64_t outputs_emitted = 0;
    std::uint64_t outputs_invalid = 0;

    bool operator==(const CycleStats&) const = default;
};

enum class RowSumMode {
    /// Sum the N newest col-SAD columns on every emission.
    FullSum,
    /// Add the newest column and subtract the evicted one every cycle.
    Rolling,
};

struct EngineOptions {
    RowSumMode row_sum_mode = RowSumMode::FullSum;
    /// Re-derives row sums and checks accumulator bounds on every cycle.
    bool debug_checks = false;
    /// When set, one line per cycle: "C<cycle> (<x>,<y>) -> <d|INV>".
    std::ostream* trace = nullptr;
};

/// Output of one cycle. (x, y) is the window center the cycle resolves;
/// it can lie outside the image during warm-up, where disparity is empty.
struct StepResult {
    int x;
    int y;
    std::optional<Disparity> disparity;
};

/// result[d] = sum_j |lr[j] - rr[d * N + j]| for d in [0, M), where
/// N = lr.size() and rr holds M columns of N pixels in disparity order.
std::vector<SadValue> compute_column_sads(std::span<const Pixel> lr, std::span<const Pixel> rr,
                                          OpCounts* counts = nullptr);

/// Cycle-level model of the line-buffer / shift-register SAD pipeline.
///
/// Every call to step() is one clock: one pixel from each image enters the
/// N-line buffers, the current buffer column is loaded into LR and into the
/// newest RR column, M column-SADs are written into the newest col-SAD
/// column, and the window SADs for all disparities are reduced to the
/// smallest-d argmin. The result for center (x, y) is produced on the cycle
/// that ingests (x + r, y + r).
///
/// Register tables:
///   lm, rm     N x w line buffers, row slot = y mod N
///   lr         N pixels
///   rr         M columns x N pixels; column for disparity d is M - 1 - d
///   col_sads   N + 1 columns x M values; columns 1..N form the window,
///              column 0 holds the column evicted by the last shift
///   row_sums   M window SADs
///
/// The shift registers are cleared at the start of every image row. Column
/// SADs are only evaluated once the line buffer holds N rows and all M RR
/// columns hold image data; other cycles leave a zero column.
class StreamingEngine {
   public:
    /// Throws WidthTooSmall if width < (M - 1) + N, InvalidConfig for a bad
    /// config or non-positive dimensions.
    StreamingEngine(const MatchConfig& config, int width, int height, EngineOptions options = {});

    /// Runs one cycle. Throws StreamOverrun once all width * height pixels
    /// have been ingested.
    StepResult step(Pixel left, Pixel right);

    /// Rewinds to pixel (0, 0) of a new frame with all storage zeroed.
    void reset();

    bool exhausted() const { return cursor_y_ >= height_; }

    const MatchConfig& config() const { return config_; }
    int width() const { return width_; }
    int height() const { return height_; }
    int cursor_x() const { return cursor_x_; }
    int cursor_y() const { return cursor_y_; }
    std::uint64_t cycle_count() const { return stats_.total_cycles; }
    const CycleStats& stats() const { return stats_; }
    const OpCounts& op_counts() const { return ops_; }
    /// Cycles on which column SADs were evaluated (not gated off).
    std::uint64_t column_sad_cycles() const { return column_sad_cycles_; }

    std::span<const Pixel> left_line_buffer() const { return lm_; }
    std::span<const Pixel> right_line_buffer() const { return rm_; }
    std::span<const Pixel> lr() const { return lr_; }
    const ShiftRegisterTable<Pixel>& rr() const { return rr_; }
    const ShiftRegisterTable<SadValue>& col_sads() const { return col_sads_; }
    std::span<const SadValue> row_sums() const { return row_sums_; }

   private:
    void restart_row();
    void load_column();
    void update_column_sads();
    void update_row_sums(bool emitting);
    Disparity select_disparity();
    void check_invariants() const;

    MatchConfig config_;
    EngineOptions options_;
    int width_;
    int height_;
    int n_;
    int m_;
    int r_;

    std::vector<Pixel> lm_;
    std::vector<Pixel> rm_;
    std::vector<Pixel> lr_;
    ShiftRegisterTable<Pixel> rr_;
    ShiftRegisterTable<SadValue> col_sads_;
    std::vector<SadValue> row_sums_;

    int cursor_x_ = 0;
    int cursor_y_ = 0;
    CycleStats stats_;
    OpCounts ops_;
    std::uint64_t column_sad_cycles_ = 0;
};

struct StreamResult {
    DisparityMap map;
    CycleStats stats;
    OpCounts ops;
    std::uint64_t column_sad_cycles = 0;
};

/// Streams the whole pair through a fresh engine in raster order.
StreamResult run_stream(const StereoPair& pair, const MatchConfig& config, EngineOptions options = {});

/// Per-frame operation counts of both matchers, measured by running each
/// instrumented engine on a synthetic width x height pair.
struct FrameOpCounts {
    OpCounts reference;
    OpCounts streaming;
    std::int64_t valid_pixels = 0;
    /// Cycles on which the streaming engine evaluated column SADs.
    std::uint64_t column_sad_cycles = 0;
};

FrameOpCounts sad_op_counts(const MatchConfig& config, int width, int height);

}  // namespace stereostream
