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

#ifndef QGRAPH_SCHMIDT_HPP_
#define QGRAPH_SCHMIDT_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qgraph/automorphisms.hpp"
#include "qgraph/canonical.hpp"
#include "qgraph/decomposition.hpp"

namespace qgraph {

using BigInt = boost::multiprecision::cpp_int;

struct SymmetrySummary {
  BigInt aut_order = 1;
  bool is_asymmetric = true;
  bool satisfies_schmidt = false;
  // "structural" or "bruteforce".
  std::string method;
};

// One group of pairwise isomorphic children of a sum.
struct SumPart {
  BigInt order;
  bool schmidt = false;
  int mult = 1;
};

// prod order_i^{a_i} * a_i!
BigInt sum_aut_order(const std::vector<SumPart>& parts);
// False exactly when some index l satisfies the four conditions: every other
// part is a single asymmetric copy, a_l <= 3, part l fails the criterion, and
// part l is asymmetric when a_l > 1.
bool sum_schmidt(const std::vector<SumPart>& parts);

BigInt aut_order_structural(const DecompTree& d);
bool schmidt_structural(const DecompTree& d);

BigInt rooted_aut_order(const RootedForest& f);
bool rooted_schmidt(const RootedForest& f);
BigInt rooted_tree_aut_order(const RootedTree& t);
bool rooted_tree_schmidt(const RootedTree& t);

// Structural when g decomposes into a supported class, brute force when small
// enough, otherwise Unsupported.
SymmetrySummary symmetry_summary(const Graph& g, const AutOptions& options = {});

}  // namespace qgraph

#endif  // QGRAPH_SCHMIDT_HPP_
