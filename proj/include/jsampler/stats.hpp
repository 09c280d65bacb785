// Copyright 2026 The jsampler Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace jsampler {

struct SampleStats {
    std::size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0; ///< sample (n - 1) standard deviation, 0 for a single value
    double sem = 0.0;    ///< standard error of the mean
};

inline SampleStats sample_stats(std::span<const double> values) {
    SampleStats s;
    s.count = values.size();
    if (s.count == 0) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(s.count);
    if (s.count > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(s.count - 1));
        s.sem = s.stddev / std::sqrt(static_cast<double>(s.count));
    }
    return s;
}

} // namespace jsampler
