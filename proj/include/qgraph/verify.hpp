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

#ifndef QGRAPH_VERIFY_HPP_
#define QGRAPH_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/magic.hpp"

namespace qgraph {

struct VerifyOptions {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  bool parallel = true;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  double seconds = 0.0;
};

// Classification results reproduced by exhaustive computation.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace qgraph

#endif  // QGRAPH_VERIFY_HPP_
