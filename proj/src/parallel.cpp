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

#include "lorentz/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lorentz {
namespace {

int jobs_from_env() {
  const char* v = std::getenv("LORENTZ_JOBS");
  if (v == nullptr) return 1;
  int n = std::atoi(v);
  return n > 0 ? n : 1;
}

std::atomic<int>& job_count() {
  static std::atomic<int> n{jobs_from_env()};
  return n;
}

// Runs body(worker) on `workers` threads and rethrows the first exception.
void run_workers(int workers, const std::function<void(int)>& body) {
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

int jobs() { return job_count().load(); }

void set_jobs(int n) { job_count().store(n > 0 ? n : 1); }

std::optional<std::size_t> find_first(
    std::size_t count, const std::function<bool(std::size_t)>& pred) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs()), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{count};
  run_workers(workers, [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < count;
         i += static_cast<std::size_t>(workers)) {
      if (i >= best.load()) return;
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  });
  if (best.load() == count) return std::nullopt;
  return best.load();
}

void for_each_index(std::size_t count,
                    const std::function<void(std::size_t)>& fn) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs()), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  run_workers(workers, [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < count;
         i += static_cast<std::size_t>(workers))
      fn(i);
  });
}

}  // namespace lorentz
