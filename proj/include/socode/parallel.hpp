// Copyright 2026 The socode Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace socode {

// Splits [0, total) into contiguous chunks whose boundaries depend only on
// (total, threads) and runs fn(chunk_index, begin, end) on worker threads.
// Callers keep one accumulator per chunk and merge them in chunk order, so
// results never depend on scheduling.
inline void run_chunked(std::uint64_t total, int threads,
                        const std::function<void(std::size_t, std::uint64_t,
                                                 std::uint64_t)>& fn) {
  if (threads < 1) threads = 1;
  const std::uint64_t nchunks =
      std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                              total == 0 ? 1 : total);
  if (nchunks <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t lo = total * c / nchunks;
    const std::uint64_t hi = total * (c + 1) / nchunks;
    pool.emplace_back([&fn, c, lo, hi] { fn(static_cast<std::size_t>(c), lo, hi); });
  }
  for (auto& t : pool) t.join();
}

inline std::uint64_t chunk_count(std::uint64_t total, int threads) {
  if (threads < 1) threads = 1;
  return std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                 total == 0 ? 1 : total);
}

}  // namespace socode
