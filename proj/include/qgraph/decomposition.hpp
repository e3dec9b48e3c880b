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

#ifndef QGRAPH_DECOMPOSITION_HPP_
#define QGRAPH_DECOMPOSITION_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/canonical.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

enum class BaseClass {
  kCograph,      // K_1 only
  kTreeCograph,  // trees, complements of trees, complete and edgeless graphs
  kG5,           // graphs on at most five vertices
  kSupported,    // union of the tree-cograph and G5 bases
};

const char* to_string(BaseClass base);
bool in_base(const Graph& g, BaseClass base);

struct DecompChild;

// Normalized sum/complement-sum tree. Sum children are the connected
// components; CoSum children are the components of the complement. Children
// are grouped by isomorphism and sorted by key.
struct DecompTree {
  enum class Kind { kLeaf, kSum, kCoSum };
  Kind kind = Kind::kLeaf;
  Graph graph;
  std::vector<DecompChild> children;
  CanonKey key;
};

struct DecompChild {
  DecompTree tree;
  int mult = 1;
};

// Splits disconnected graphs into Sum nodes and co-disconnected graphs into
// CoSum nodes; what remains is connected and co-connected and must be in base.
std::optional<DecompTree> decompose(const Graph& g, BaseClass base);
// Rebuilds a graph isomorphic to the decomposed one.
Graph evaluate(const DecompTree& d);
nlohmann::ordered_json to_json(const DecompTree& d);

bool has_induced_p4(const Graph& g);
// Checked two ways: decomposition and induced P_4 scan.
bool recognize_cograph(const Graph& g);
bool recognize_forest(const Graph& g);
bool recognize_tree_cograph(const Graph& g);
bool recognize_g5_cograph(const Graph& g);

// Z_1(G) = G, Z_{n+1}(G) = K_1 + Z_n(G)^c.
Graph build_Z(const Graph& g, int n);
Graph build_X(int n);
Graph build_Y(int n);

// One representative per isomorphism class, in canonical labeling, sorted by
// canonical key.
std::vector<Graph> enumerate_graphs(int n);
constexpr int kEnumerateGraphsLimit = 7;
std::vector<Graph> enumerate_trees(int n);
std::vector<Graph> enumerate_forests(int n);

}  // namespace qgraph

#endif  // QGRAPH_DECOMPOSITION_HPP_
