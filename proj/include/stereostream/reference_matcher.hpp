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

#include "stereostream/image.hpp"
#include "stereostream/match_config.hpp"

namespace stereostream {

struct Match {
    Disparity disparity;
    SadValue sad;

    bool operator==(const Match&) const = default;
};

/// Sum over the N x N window of |left(x+i, y+j) - right(x-d+i, y+j)|.
/// Throws OutOfRegion if (x, y) is outside the valid region or d is not a
/// candidate disparity.
SadValue window_sad(const StereoPair& pair, int x, int y, int d, const MatchConfig& config,
                    OpCounts* counts = nullptr);

/// Minimum window SAD over all candidates; ties go to the smallest d.
Match best_disparity(const StereoPair& pair, int x, int y, const MatchConfig& config, OpCounts* counts = nullptr);

/// Single-threaded brute-force disparity map.
DisparityMap compute_disparity_map_reference(const StereoPair& pair, const MatchConfig& config,
                                             OpCounts* counts = nullptr);

/// Same result as compute_disparity_map_reference, with rows split into
/// contiguous bands across worker_count threads.
DisparityMap compute_disparity_map_parallel(const StereoPair& pair, const MatchConfig& config, int worker_count);

}  // namespace stereostream
