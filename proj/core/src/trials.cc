// Copyright 2026 The bellscope Authors
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

#include "bellscope/trials.h"

#include <algorithm>
#include <cmath>

namespace bellscope {

CorrelationEstimate OutcomeTally::estimate() const {
    CorrelationEstimate e;
    if (n == 0) {
        return e;
    }
    double dn = static_cast<double>(n);
    e.mean_a = static_cast<double>(sum_a) / dn;
    e.mean_b = static_cast<double>(sum_b) / dn;
    e.mean_ab = static_cast<double>(sum_ab) / dn;
    e.n_trials = n;
    if (n > 1) {
        // Every product is +-1, so sum of squares is n and the unbiased
        // variance is (n^2 - S^2) / (n (n - 1)), computed in exact integers first.
        double s = static_cast<double>(sum_ab);
        double variance = (dn * dn - s * s) / (dn * (dn - 1.0));
        e.std_error_ab = std::sqrt(std::max(variance, 0.0) / dn);
    }
    return e;
}

CorrelationEstimate summarize(const TrialRecord &record) {
    OutcomeTally tally;
    for (const auto &[a, b] : record.outcomes) {
        tally.add(a, b);
    }
    return tally.estimate();
}

}  // namespace bellscope
