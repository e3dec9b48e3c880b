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

#ifndef QGRAPH_CANONICAL_HPP_
#define QGRAPH_CANONICAL_HPP_

#include <string>

#include "qgraph/graph.hpp"

namespace qgraph {

struct DecompTree;

// Equal keys mean isomorphic objects within the class the key was built for.
using CanonKey = std::string;

struct RootedTree {
  Graph tree;
  int root = 0;
};

// One root per connected component.
struct RootedForest {
  Graph forest;
  VertexSet roots;
};

void validate(const RootedTree& t);
void validate(const RootedForest& f);

// Components of f as rooted trees, ordered by least vertex.
std::vector<RootedTree> rooted_components(const RootedForest& f);
// The forest left after deleting the root, rooted at the root's neighbors.
RootedForest remove_root(const RootedTree& t);

// AHU string: "(" + sorted child strings + ")".
CanonKey rooted_tree_canonical(const RootedTree& t);
// Vertex count, then the AHU string of the center-rooted tree.
CanonKey tree_canonical(const Graph& t);

// Root at the center vertex, or subdivide the central edge with a new last
// vertex and root there.
RootedTree psi(const Graph& t);

// A tree containing f whose automorphisms are exactly the rooted
// automorphisms of f extended by the identity: a new vertex joined to every
// root and to pendant paths of pairwise distinct lengths.
Graph unroot_embed(const RootedForest& f);

// Least adjacency string over labelings compatible with the stable coloring.
// Complete isomorphism invariant; exponential, so limited to small graphs.
CanonKey brute_canonical(const Graph& g);
Graph canonical_relabel(const Graph& g);
constexpr int kBruteCanonicalLimit = 10;

// Key of a decomposition leaf. Trees, then complements of trees, then brute.
CanonKey leaf_key(const Graph& g);
CanonKey decomp_canonical(const DecompTree& d);

// Isomorphism by decomposition keys when both graphs decompose, by brute
// force up to 8 vertices, otherwise Unsupported.
bool iso_test(const Graph& g, const Graph& h);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

}  // namespace qgraph

#endif  // QGRAPH_CANONICAL_HPP_
