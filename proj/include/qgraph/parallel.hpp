// Copyright 2026 The qgraph Authors
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

#ifndef QGRAPH_PARALLEL_HPP_
#define QGRAPH_PARALLEL_HPP_

#include <cstddef>
#include <exception>

namespace qgraph {

// Runs body(i) for i in [0, n), across OpenMP threads when parallel is set.
// Bodies must write only to their own slot. The first exception is rethrown
// after the loop.
template <class Body>
void parallel_for(std::size_t n, Body&& body, bool parallel = true) {
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(qgraph_parallel_for_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace qgraph

#endif  // QGRAPH_PARALLEL_HPP_
