/*
   Copyright 2026 The ffdyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFDYN_PARALLEL_HPP
#define FFDYN_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ffdyn {

struct ParallelContext {
    unsigned jobs = 1;
};

/// Sum of fn(begin, end) over a fixed partition of [0, total). The partition
/// does not depend on ctx.jobs and partial results are combined in chunk
/// order, so the result is the same for any number of workers.
template <class T, class Fn>
T parallel_sum(const ParallelContext& ctx, std::uint64_t total, Fn&& fn, T zero = T{}) {
    constexpr std::uint64_t kChunks = 256;
    if (total == 0) return zero;
    const std::uint64_t chunks = std::min<std::uint64_t>(kChunks, total);
    std::vector<T> partial(chunks, zero);
    auto bounds = [&](std::uint64_t c) { return std::pair{total * c / chunks, total * (c + 1) / chunks}; };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, ctx.jobs), chunks));
    if (workers == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            auto [b, e] = bounds(c);
            partial[c] = fn(b, e);
        }
    } else {
        std::atomic<std::uint64_t> next{0};
        std::exception_ptr error;
        std::mutex error_mu;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < chunks; c = next++) {
                    try {
                        auto [b, e] = bounds(c);
                        partial[c] = fn(b, e);
                    } catch (...) {
                        const std::lock_guard lock(error_mu);
                        if (!error) error = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    T sum = zero;
    for (auto& x : partial) sum += x;
    return sum;
}

}  // namespace ffdyn

#endif
