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

#ifndef BELLSCOPE_PARALLEL_H
#define BELLSCOPE_PARALLEL_H

#include <exception>
#include <thread>
#include <vector>

namespace bellscope {

/// Runs body(0) .. body(workers - 1), one thread each when workers > 1. The
/// first exception (lowest worker index) is rethrown after all threads join.
template <typename Body>
void run_partitioned(unsigned workers, Body &&body) {
    if (workers <= 1) {
        body(0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&body, &errors, w] {
                try {
                    body(w);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace bellscope

#endif  // BELLSCOPE_PARALLEL_H
