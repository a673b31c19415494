// SPDX-License-Identifier: Apache-2.0
//
// coexist: radar / cellular spectrum-coexistence simulation library
// Copyright (C) 2026 The coexist authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef COEXIST_PARALLEL_HPP
#define COEXIST_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace coexist
{
    // Runs body(i) for i in [0, count) on up to `workers` threads using contiguous
    // index blocks. Callers write results by index, so output order never depends on
    // scheduling. If any body throws, the exception from the lowest block is rethrown.
    template <typename Body>
    void parallel_for(std::size_t count, std::size_t workers, Body &&body)
    {
        workers = std::max<std::size_t>(1, std::min(workers, count));
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }

        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (count + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = w * chunk, end = std::min(count, begin + chunk);
            pool.emplace_back([&, w, begin, end]
                              {
                                  try
                                  {
                                      for (std::size_t i = begin; i < end; ++i)
                                          body(i);
                                  }
                                  catch (...)
                                  {
                                      errors[w] = std::current_exception();
                                  } });
        }
        pool.clear(); // joins
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }
}

#endif
