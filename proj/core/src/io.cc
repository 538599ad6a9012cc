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

#include "bellscope/io.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace bellscope {

namespace {

// Shortest round-trip representation, same as the JSON writer uses.
std::string number(double x) { return Json(x).dump(); }

}  // namespace

Json to_json(const Vector3 &v) { return Json::array({v.x, v.y, v.z}); }

Json to_json(const ChshSettings &s) {
    Json j;
    j["a"] = to_json(s.a.vec());
    j["a_prime"] = to_json(s.a_prime.vec());
    j["b"] = to_json(s.b.vec());
    j["b_prime"] = to_json(s.b_prime.vec());
    return j;
}

Json to_json(const CorrelationEstimate &e) {
    Json j;
    j["mean_a"] = e.mean_a;
    j["mean_b"] = e.mean_b;
    j["mean_ab"] = e.mean_ab;
    j["n_trials"] = e.n_trials;
    j["std_error_ab"] = e.std_error_ab;
    j["exact"] = e.is_exact();
    return j;
}

Json versioned(const Json &body) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    for (auto it = body.begin(); it != body.end(); ++it) {
        if (it.key() != "schema_version") {
            j[it.key()] = it.value();
        }
    }
    return j;
}

Json to_json(const TrialRecord &record) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["a"] = to_json(record.a.vec());
    j["b"] = to_json(record.b.vec());
    j["seed"] = record.seed;
    j["n_trials"] = record.outcomes.size();
    Json outcomes = Json::array();
    for (const auto &[a, b] : record.outcomes) {
        outcomes.push_back(Json::array({value(a), value(b)}));
    }
    j["outcomes"] = std::move(outcomes);
    j["summary"] = to_json(summarize(record));
    return j;
}

Json to_json(const ChshReport &report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["source"] = report.source;
    j["settings"] = to_json(report.settings);
    j["e_ab"] = report.e_ab;
    j["e_ab_prime"] = report.e_ab_prime;
    j["e_a_prime_b"] = report.e_a_prime_b;
    j["e_a_prime_b_prime"] = report.e_a_prime_b_prime;
    j["s"] = report.s;
    j["bound"] = kClassicalBound;
    j["bound_satisfied"] = report.bound_satisfied;
    return j;
}

Json to_json(const ChshOptimum &optimum) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["settings"] = to_json(optimum.settings);
    j["coordinates_deg"] = optimum.coordinates_deg;
    j["s_max"] = optimum.s_max;
    j["correlator_evaluations"] = optimum.correlator_evaluations;
    return j;
}

Json to_json(const BoundReport &report) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["model"] = report.model;
    j["n_checked"] = report.n_checked;
    j["max_s"] = report.max_s;
    j["argmax"] = report.argmax ? to_json(*report.argmax) : Json(nullptr);
    j["tolerance"] = report.tolerance;
    j["n_trials"] = report.n_trials;
    j["satisfied"] = report.satisfied;
    return j;
}

Json to_json(const ReductionError &error) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = "reduction";
    j["model"] = error.model();
    j["side"] = error.side() == Side::alice ? "A" : "B";
    j["setting"] = to_json(error.setting());
    j["state"] = error.state();
    j["reason"] = error.reason();
    return j;
}

void write_trials_csv(std::ostream &out, const TrialRecord &record) {
    out << "trial_index,a_outcome,b_outcome\n";
    for (std::size_t i = 0; i < record.outcomes.size(); ++i) {
        out << i << ',' << value(record.outcomes[i].first) << ',' << value(record.outcomes[i].second) << '\n';
    }
}

std::pair<double, double> spherical_deg(const Vector3 &v) {
    double r = norm(v);
    double polar = r > 0.0 ? std::acos(std::clamp(v.z / r, -1.0, 1.0)) : 0.0;
    double azimuth = std::atan2(v.y, v.x);
    if (azimuth < 0.0) {
        azimuth += 2.0 * std::numbers::pi;
    }
    return {polar * 180.0 / std::numbers::pi, azimuth * 180.0 / std::numbers::pi};
}

void write_sweep_csv(std::ostream &out, std::span<const ChshReport> reports) {
    out << "a_polar_deg,a_azimuth_deg,a_prime_polar_deg,a_prime_azimuth_deg,"
           "b_polar_deg,b_azimuth_deg,b_prime_polar_deg,b_prime_azimuth_deg,"
           "e_ab,e_ab_prime,e_a_prime_b,e_a_prime_b_prime,s\n";
    for (const auto &r : reports) {
        for (const auto *u : {&r.settings.a, &r.settings.a_prime, &r.settings.b, &r.settings.b_prime}) {
            auto [polar, azimuth] = spherical_deg(u->vec());
            out << number(polar) << ',' << number(azimuth) << ',';
        }
        out << number(r.e_ab) << ',' << number(r.e_ab_prime) << ',' << number(r.e_a_prime_b) << ','
            << number(r.e_a_prime_b_prime) << ',' << number(r.s) << '\n';
    }
}

}  // namespace bellscope
