// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORENTZ_PARALLEL_HPP_
#define LORENTZ_PARALLEL_HPP_

#include <cstddef>
#include <functional>
#include <optional>

namespace lorentz {

// Worker count used by the parallel loops. Defaults to LORENTZ_JOBS from the
// environment, else 1.
int jobs();
void set_jobs(int n);

// Smallest index i in [0, count) with pred(i) true, or nullopt. The answer
// does not depend on the worker count.
std::optional<std::size_t> find_first(
    std::size_t count, const std::function<bool(std::size_t)>& pred);

// Calls fn(i) for every i in [0, count); fn must only write to slot i of
// caller-owned storage.
void for_each_index(std::size_t count,
                    const std::function<void(std::size_t)>& fn);

}  // namespace lorentz

#endif  // LORENTZ_PARALLEL_HPP_
