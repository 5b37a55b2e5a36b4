// Copyright 2026 The Selfreply Authors.
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

#ifndef SELFREPLY_PARALLEL_H_
#define SELFREPLY_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace selfreply {

// Applies fn to every item on up to `jobs` threads. Results keep input
// order. The first exception thrown by fn is rethrown after all workers
// have stopped.
template <typename In, typename Fn>
auto ParallelMap(const std::vector<In> &items, int jobs, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
  using Out = decltype(fn(items.front()));
  std::vector<Out> results(items.size());
  size_t workers =
      std::clamp<size_t>(jobs, 1, std::max<size_t>(items.size(), 1));
  if (workers == 1) {
    for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(items.size());
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (size_t w = 0; w < workers; ++w) threads.emplace_back(work);
  for (std::thread &t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace selfreply

#endif  // SELFREPLY_PARALLEL_H_
