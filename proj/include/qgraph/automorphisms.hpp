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

#ifndef QGRAPH_AUTOMORPHISMS_HPP_
#define QGRAPH_AUTOMORPHISMS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Bijection of {0..n-1} stored as its image sequence.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int n() const { return static_cast<int>(image_.size()); }
  int operator[](int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }
  bool is_identity() const;
  Permutation inverse() const;
  // Cycle notation such as "(0 1)(2 3)"; "()" for the identity.
  std::string to_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
VertexSet support(const Permutation& p);
bool is_automorphism(const Graph& g, const Permutation& p);

struct AutOptions {
  int max_n = 11;
  // Cap on the number of stored group elements.
  std::size_t max_elements = std::size_t{1} << 22;
};

class AutGroup {
 public:
  AutGroup(int n, std::vector<Permutation> elements);

  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  // Sorted ascending; the identity comes first.
  const std::vector<Permutation>& elements() const { return elements_; }
  // Orbits ordered by least vertex.
  const std::vector<VertexSet>& orbits() const { return orbits_; }

 private:
  int n_;
  std::vector<Permutation> elements_;
  std::vector<VertexSet> orbits_;
};

// Stable coloring under iterated neighborhood refinement. Colors are ranks of
// canonical signatures, so isomorphic inputs get matching colorings.
std::vector<int> refine_colors(const Graph& g, std::vector<int> initial);
std::vector<int> refine_colors(const Graph& g);

// Calls visit on every automorphism preserving the given vertex colors, in
// lexicographic order of image sequences. Stops early when visit returns false.
void for_each_automorphism(const Graph& g, const std::vector<int>& colors,
                           const std::function<bool(const std::vector<int>&)>& visit,
                           const AutOptions& options = {});

AutGroup automorphisms(const Graph& g, const AutOptions& options = {});
AutGroup colored_automorphisms(const Graph& g, const std::vector<int>& colors,
                               const AutOptions& options = {});
std::uint64_t count_automorphisms(const Graph& g,
                                  const std::vector<int>& colors = {},
                                  const AutOptions& options = {});

struct SchmidtResult {
  bool holds = false;
  // Lexicographically least pair of nontrivial automorphisms with disjoint
  // supports, first < second.
  std::optional<std::pair<Permutation, Permutation>> witness;
};

SchmidtResult schmidt_bruteforce(const Graph& g, const AutOptions& options = {});

// Degrees are constant on each part, and for parts A, B either every vertex
// of A has a neighbor in B or none does.
bool is_star_partition(const Graph& g, const std::vector<VertexSet>& parts);

}  // namespace qgraph

#endif  // QGRAPH_AUTOMORPHISMS_HPP_
