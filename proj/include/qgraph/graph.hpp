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

#ifndef QGRAPH_GRAPH_HPP_
#define QGRAPH_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qgraph {

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Graph distance: a non-negative integer or infinity. Infinity compares
// greater than every finite value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t v) : value_(v), finite_(true) {}
  static constexpr Distance infinity() { return Distance(); }

  constexpr bool is_finite() const { return finite_; }
  // Only meaningful when is_finite().
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr bool operator==(Distance a, Distance b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint32_t value_ = 0;
  bool finite_ = false;
};

// Simple undirected graph on {0..n-1} with one bitset row per vertex.
// Mutators exist for construction only; once shared, a Graph is read-only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int num_edges() const;
  // Unchecked for speed; callers validate with check_vertex.
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  VertexSet neighbors(int v) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<std::vector<int>> adjacency_matrix() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Raw bitset row; words() 64-bit words per row.
  const std::uint64_t* row(int v) const { return bits_.data() + v * words_; }
  int words() const { return words_; }

  void check_vertex(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::uint64_t* mutable_row(int v) { return bits_.data() + v * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complement(const Graph& g);
Graph disjoint_sum(const std::vector<Graph>& gs);
Graph disjoint_sum(const Graph& a, const Graph& b);

struct Component {
  VertexSet vertices;
  Graph graph;
};

// Components ordered by least vertex; each vertex list ascending.
std::vector<Component> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

std::vector<Distance> bfs_distances(const Graph& g, int source);
Distance distance(const Graph& g, int u, int v);
Distance eccentricity(const Graph& g, int v);
std::vector<Distance> eccentricities(const Graph& g);
// Vertices of minimal eccentricity; every vertex when g is disconnected.
VertexSet center(const Graph& g);

// Subgraph induced on s, relabeled to 0..|s|-1 in the order of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
// Image of g under v -> perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);
// "n\nu v\n..." with 0-based vertices.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
// Edge list when the first non-blank character is a digit, else graph6.
Graph parse_graph(std::string_view text);

namespace graphs {
Graph complete(int n);
Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int leaves);
Graph bull();
// Four-cycle with one pendant vertex.
Graph pan();
}  // namespace graphs

}  // namespace qgraph

#endif  // QGRAPH_GRAPH_HPP_
