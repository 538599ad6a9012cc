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

#ifndef BELLSCOPE_TRIALS_H
#define BELLSCOPE_TRIALS_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bellscope/tensor.h"

namespace bellscope {

/// Which station: Alice measures particle A, Bob particle B.
enum class Side { alice, bob };

/// A recorded measurement result.
enum class Outcome : std::int8_t { down = -1, up = 1 };

constexpr int value(Outcome o) { return static_cast<int>(o); }
constexpr Outcome operator-(Outcome o) { return o == Outcome::up ? Outcome::down : Outcome::up; }
constexpr Outcome outcome_of(int s) { return s < 0 ? Outcome::down : Outcome::up; }
constexpr bool is_valid(Outcome o) { return o == Outcome::up || o == Outcome::down; }

/// A model or observable broke its contract (non +-1 output, correlation outside [-1, 1], ...).
class ContractViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Exact expectations were requested from a model that cannot provide them.
class UnsupportedExact : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Stateless random source: every draw is a pure function of
/// (seed, trial index, draw index). Trials can be generated in any order or
/// partitioned across threads with identical results.
class TrialRng {
   public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) : key_(mix(seed ^ mix(trial + 0x9e3779b97f4a7c15ULL))) {}

    std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        // splitmix64 finalizer
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Expectation values E(A), E(B), E(AB). Exact results carry n_trials == 0
/// and std_error_ab == 0.
struct CorrelationEstimate {
    double mean_a = 0.0;
    double mean_b = 0.0;
    double mean_ab = 0.0;
    std::size_t n_trials = 0;
    double std_error_ab = 0.0;

    bool is_exact() const { return n_trials == 0; }
    friend bool operator==(const CorrelationEstimate &, const CorrelationEstimate &) = default;
};

/// Integer tallies over a run of trials. Every estimator in the library goes
/// through `estimate()`, which is what makes estimates and trial records agree
/// bit for bit.
struct OutcomeTally {
    std::int64_t sum_a = 0;
    std::int64_t sum_b = 0;
    std::int64_t sum_ab = 0;
    std::size_t n = 0;

    void add(Outcome a, Outcome b) {
        sum_a += value(a);
        sum_b += value(b);
        sum_ab += value(a) * value(b);
        ++n;
    }
    void merge(const OutcomeTally &other) {
        sum_a += other.sum_a;
        sum_b += other.sum_b;
        sum_ab += other.sum_ab;
        n += other.n;
    }
    CorrelationEstimate estimate() const;
};

/// The +-1 record Alice and Bob produce for fixed settings.
struct TrialRecord {
    UnitVector3 a;
    UnitVector3 b;
    std::vector<std::pair<Outcome, Outcome>> outcomes;
    std::uint64_t seed = 0;
};

CorrelationEstimate summarize(const TrialRecord &record);

}  // namespace bellscope

#endif  // BELLSCOPE_TRIALS_H
