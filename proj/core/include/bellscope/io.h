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

#ifndef BELLSCOPE_IO_H
#define BELLSCOPE_IO_H

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "bellscope/chsh.h"
#include "bellscope/projection.h"
#include "bellscope/tensor.h"
#include "bellscope/trials.h"

namespace bellscope {

/// Insertion-ordered so that identical inputs serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// Carried by every top-level JSON report.
inline constexpr int kSchemaVersion = 1;

Json to_json(const Vector3 &v);
Json to_json(const ChshSettings &s);
Json to_json(const CorrelationEstimate &e);
/// {"schema_version", "a", "b", "seed", "n_trials", "outcomes": [[a, b], ...], "summary"}.
Json to_json(const TrialRecord &record);
Json to_json(const ChshReport &report);
Json to_json(const ChshOptimum &optimum);
Json to_json(const BoundReport &report);
/// Diagnostic: {"schema_version", "error": "reduction", "model", "side", "setting", "state", "reason"}.
Json to_json(const ReductionError &error);

/// Wraps a report object with the schema version as its first key.
Json versioned(const Json &body);

/// Header `trial_index,a_outcome,b_outcome`, then one row per trial.
void write_trials_csv(std::ostream &out, const TrialRecord &record);

/// Header with the polar/azimuth angles (degrees) of a, a', b, b', the four
/// correlations and S; one row per report.
void write_sweep_csv(std::ostream &out, std::span<const ChshReport> reports);

/// Polar and azimuthal angle of v in degrees.
std::pair<double, double> spherical_deg(const Vector3 &v);

}  // namespace bellscope

#endif  // BELLSCOPE_IO_H
