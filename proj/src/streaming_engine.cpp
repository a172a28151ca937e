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

#include "stereostream/streaming_engine.hpp"

#include <cstdlib>
#include <string>

#include "stereostream/error.hpp"
#include "stereostream/reference_matcher.hpp"
#include "stereostream/synth.hpp"

namespace stereostream {

namespace {

// out[d] = sum_j |lr[j] - column(d)[j]|
template <typename ColumnFor>
void column_sads_into(std::span<const Pixel> lr, int columns, ColumnFor column_for, std::span<SadValue> out,
                      OpCounts& counts) {
    const std::size_t n = lr.size();
    for (int d = 0; d < columns; ++d) {
        const std::span<const Pixel> rr = column_for(d);
        SadValue sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sum += static_cast<SadValue>(std::abs(int{lr[j]} - int{rr[j]}));
        }
        out[static_cast<std::size_t>(d)] = sum;
    }
    counts.abs_diff += static_cast<std::uint64_t>(columns) * n;
    counts.additions += static_cast<std::uint64_t>(columns) * (n - 1);
}

}  // namespace

std::vector<SadValue> compute_column_sads(std::span<const Pixel> lr, std::span<const Pixel> rr, OpCounts* counts) {
    const std::size_t n = lr.size();
    if (n == 0 || rr.size() % n != 0) {
        throw InvalidConfig("register table size " + std::to_string(rr.size()) + " is not a multiple of column length " +
                            std::to_string(n));
    }
    const int columns = static_cast<int>(rr.size() / n);
    std::vector<SadValue> out(static_cast<std::size_t>(columns));
    OpCounts local;
    column_sads_into(
        lr, columns, [&](int d) { return rr.subspan(static_cast<std::size_t>(d) * n, n); }, out, local);
    if (counts) *counts += local;
    return out;
}

StreamingEngine::StreamingEngine(const MatchConfig& config, int width, int height, EngineOptions options)
    : config_(config),
      options_(options),
      width_(width),
      height_(height),
      n_(config.window_size),
      m_(config.max_disparity),
      r_(config.radius()),
      lr_(static_cast<std::size_t>(config.window_size)),
      rr_(config.window_size, config.max_disparity),
      col_sads_(config.max_disparity, config.window_size + 1),
      row_sums_(static_cast<std::size_t>(config.max_disparity)) {
    config.validate();
    if (height < 1) throw InvalidConfig("frame height must be positive");
    if (width < (m_ - 1) + n_) {
        throw WidthTooSmall("width " + std::to_string(width) + " is smaller than (M - 1) + N = " +
                            std::to_string((m_ - 1) + n_));
    }
    lm_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(width_), 0);
    rm_.assign(lm_.size(), 0);
}

void StreamingEngine::reset() {
    std::fill(lm_.begin(), lm_.end(), 0);
    std::fill(rm_.begin(), rm_.end(), 0);
    restart_row();
    cursor_x_ = 0;
    cursor_y_ = 0;
    stats_ = {};
    ops_ = {};
    column_sad_cycles_ = 0;
}

void StreamingEngine::restart_row() {
    std::fill(lr_.begin(), lr_.end(), 0);
    rr_.clear();
    col_sads_.clear();
    std::fill(row_sums_.begin(), row_sums_.end(), 0);
}

// lr[j] and the newest RR column take line-buffer rows y - N + 1 + j at
// the cursor column, oldest row first.
void StreamingEngine::load_column() {
    auto newest = rr_.newest();
    const auto x = static_cast<std::size_t>(cursor_x_);
    const auto w = static_cast<std::size_t>(width_);
    for (int j = 0; j < n_; ++j) {
        const auto slot = static_cast<std::size_t>((cursor_y_ + 1 + j) % n_);
        lr_[static_cast<std::size_t>(j)] = lm_[slot * w + x];
        newest[static_cast<std::size_t>(j)] = rm_[slot * w + x];
    }
}

void StreamingEngine::update_column_sads() {
    // Gated until the line buffer holds N rows and every RR column holds a
    // real image column.
    if (cursor_y_ < n_ - 1 || cursor_x_ < m_ - 1) return;
    ++column_sad_cycles_;
    column_sads_into(
        lr_, m_, [this](int d) { return rr_.column(m_ - 1 - d); }, col_sads_.newest(), ops_);
}

void StreamingEngine::update_row_sums(bool emitting) {
    const auto m = static_cast<std::size_t>(m_);
    if (options_.row_sum_mode == RowSumMode::Rolling) {
        const auto added = col_sads_.newest();
        const auto evicted = col_sads_.column(0);
        for (std::size_t d = 0; d < m; ++d) row_sums_[d] = row_sums_[d] + added[d] - evicted[d];
        ops_.additions += 2 * m;
        return;
    }
    if (!emitting) return;
    const auto first = col_sads_.column(1);
    std::copy(first.begin(), first.end(), row_sums_.begin());
    for (int k = 2; k <= n_; ++k) {
        const auto col = col_sads_.column(k);
        for (std::size_t d = 0; d < m; ++d) row_sums_[d] += col[d];
    }
    ops_.additions += m * static_cast<std::size_t>(n_ - 1);
}

Disparity StreamingEngine::select_disparity() {
    Disparity best = 0;
    SadValue best_sum = row_sums_[0];
    for (int d = 1; d < m_; ++d) {
        if (row_sums_[static_cast<std::size_t>(d)] < best_sum) {
            best_sum = row_sums_[static_cast<std::size_t>(d)];
            best = d;
        }
    }
    ops_.comparisons += static_cast<std::uint64_t>(m_ - 1);
    return best;
}

void StreamingEngine::check_invariants() const {
    const auto column_bound = static_cast<SadValue>(n_) * 255u;
    for (int k = 0; k <= n_; ++k) {
        for (SadValue v : col_sads_.column(k)) {
            if (v > column_bound) throw Error("col-SAD entry exceeds N * 255");
        }
    }
    const SadValue window_bound = column_bound * static_cast<SadValue>(n_);
    for (int d = 0; d < m_; ++d) {
        SadValue sum = 0;
        for (int k = 1; k <= n_; ++k) sum += col_sads_.column(k)[static_cast<std::size_t>(d)];
        if (sum > window_bound) throw Error("window SAD exceeds N * N * 255");
        if (options_.row_sum_mode == RowSumMode::Rolling && row_sums_[static_cast<std::size_t>(d)] != sum) {
            throw Error("rolling row sum diverged from the col-SAD table at d = " + std::to_string(d));
        }
    }
}

StepResult StreamingEngine::step(Pixel left, Pixel right) {
    if (exhausted()) {
        throw StreamOverrun("frame of " + std::to_string(width_) + "x" + std::to_string(height_) +
                            " pixels already fully ingested");
    }
    if (cursor_x_ == 0) restart_row();

    rr_.shift_left();
    col_sads_.shift_left();

    const auto slot = static_cast<std::size_t>(cursor_y_ % n_) * static_cast<std::size_t>(width_) +
                      static_cast<std::size_t>(cursor_x_);
    lm_[slot] = left;
    rm_[slot] = right;

    load_column();
    update_column_sads();

    const bool emitting = cursor_y_ >= n_ - 1 && cursor_x_ >= (m_ - 1) + (n_ - 1);
    update_row_sums(emitting);

    StepResult result{cursor_x_ - r_, cursor_y_ - r_, std::nullopt};
    if (emitting) {
        if (options_.debug_checks && options_.row_sum_mode == RowSumMode::FullSum) {
            for (int d = 0; d < m_; ++d) {
                SadValue sum = 0;
                for (int k = 1; k <= n_; ++k) sum += col_sads_.column(k)[static_cast<std::size_t>(d)];
                if (row_sums_[static_cast<std::size_t>(d)] != sum) throw Error("row sum mismatch at emission");
            }
        }
        result.disparity = select_disparity();
        ++stats_.outputs_emitted;
    } else {
        ++stats_.outputs_invalid;
    }
    if (options_.debug_checks) check_invariants();

    if (options_.trace) {
        *options_.trace << 'C' << stats_.total_cycles << " (" << cursor_x_ << ',' << cursor_y_ << ") -> ";
        if (result.disparity) {
            *options_.trace << *result.disparity << '\n';
        } else {
            *options_.trace << "INV\n";
        }
    }

    ++stats_.total_cycles;
    ++stats_.pixels_ingested;
    if (++cursor_x_ == width_) {
        cursor_x_ = 0;
        ++cursor_y_;
    }
    return result;
}

StreamResult run_stream(const StereoPair& pair, const MatchConfig& config, EngineOptions options) {
    StreamingEngine engine(config, pair.width(), pair.height(), options);
    DisparityMap map(pair.width(), pair.height(), config);
    const auto left = pair.left().data();
    const auto right = pair.right().data();
    for (std::size_t i = 0; i < left.size(); ++i) {
        const StepResult out = engine.step(left[i], right[i]);
        if (out.disparity) map.set(out.x, out.y, *out.disparity);
    }
    return StreamResult{std::move(map), engine.stats(), engine.op_counts(), engine.column_sad_cycles()};
}

FrameOpCounts sad_op_counts(const MatchConfig& config, int width, int height) {
    config.validate();
    FrameOpCounts counts;
    counts.valid_pixels = valid_region(config, width, height).area();

    const StereoPair pair = generate_synthetic_pair(width, height, 0, 1);
    compute_disparity_map_reference(pair, config, &counts.reference);
    if (width >= (config.max_disparity - 1) + config.window_size) {
        const StreamResult streamed = run_stream(pair, config);
        counts.streaming = streamed.ops;
        counts.column_sad_cycles = streamed.column_sad_cycles;
    }
    return counts;
}

}  // namespace stereostream
