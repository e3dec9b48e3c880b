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

#ifndef QGRAPH_HOMCOUNT_HPP_
#define QGRAPH_HOMCOUNT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

struct CountOptions {
  // Upper bound on |V(h)|^|V(g)| for one enumeration.
  std::uint64_t budget = 100'000'000;
};

struct HomCounts {
  std::uint64_t hom = 0;
  std::uint64_t mon = 0;
  std::uint64_t quo = 0;
  std::uint64_t aut = 1;
};

// Graph morphisms g -> h: maps sending edges to edges.
std::uint64_t hom_count(const Graph& g, const Graph& h, const CountOptions& o = {});
// Injective morphisms.
std::uint64_t mon_count(const Graph& g, const Graph& h, const CountOptions& o = {});
// Morphisms surjective on vertices and on edges.
std::uint64_t quo_count(const Graph& g, const Graph& h, const CountOptions& o = {});

// Single-threaded references for the three counters above.
std::uint64_t hom_count_serial(const Graph& g, const Graph& h, const CountOptions& o = {});
std::uint64_t mon_count_serial(const Graph& g, const Graph& h, const CountOptions& o = {});
std::uint64_t quo_count_serial(const Graph& g, const Graph& h, const CountOptions& o = {});

// hom, mon, quo of g -> h and the automorphism count of g.
HomCounts count_all(const Graph& g, const Graph& h, const CountOptions& o = {});

struct LovaszTerm {
  Graph a;
  std::uint64_t quo = 0;
  std::uint64_t aut = 1;
  std::uint64_t mon = 0;
};

// Nonzero terms quo(g, A) / aut(A) * mon(A, h) over one graph A per
// isomorphism class with at most |V(g)| vertices. Throws InternalError when a
// quotient count is not divisible by aut(A).
std::vector<LovaszTerm> lovasz_terms(const Graph& g, const Graph& h,
                                     const CountOptions& o = {});
std::uint64_t lovasz_sum(const Graph& g, const Graph& h, const CountOptions& o = {});

// prod over components g_i of sum over components h_j of hom(g_i, h_j).
std::uint64_t hom_component_product(const Graph& g, const Graph& h,
                                    const CountOptions& o = {});

struct FIsoResult {
  bool equivalent = true;
  // First family member with hom(A, g) != hom(A, h).
  std::optional<Graph> witness;
};

FIsoResult f_isomorphic(const Graph& g, const Graph& h,
                        const std::vector<Graph>& family,
                        const CountOptions& o = {});

struct ColorPartition {
  std::vector<int> colors;
  int num_colors = 0;
  bool stable = true;
};

ColorPartition color_refinement(const Graph& g);
// Same stable color histogram on both sides of g + h.
bool fractionally_isomorphic(const Graph& g, const Graph& h);

}  // namespace qgraph

#endif  // QGRAPH_HOMCOUNT_HPP_
