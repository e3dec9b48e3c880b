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

#include "qgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <deque>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

std::string Distance::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("inf");
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
}

int Graph::num_edges() const {
  std::size_t total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return static_cast<int>(total / 2);
}

bool Graph::adjacent(int u, int v) const {
  return (row(u)[v >> 6] >> (v & 63)) & 1U;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += std::popcount(row(v)[w]);
  return d;
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  VertexSet out;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t x = row(v)[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::vector<int>> Graph::adjacency_matrix() const {
  std::vector<std::vector<int>> a(n_, std::vector<int>(n_, 0));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) a[u][v] = 1;
  }
  return a;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  mutable_row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  mutable_row(v)[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
}

Graph complement(const Graph& g) {
  Graph h(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph disjoint_sum(const std::vector<Graph>& gs) {
  int total = 0;
  for (const auto& g : gs) total += g.n();
  Graph h(total);
  int offset = 0;
  for (const auto& g : gs) {
    for (const auto& [u, v] : g.edges()) h.add_edge(u + offset, v + offset);
    offset += g.n();
  }
  return h;
}

Graph disjoint_sum(const Graph& a, const Graph& b) {
  return disjoint_sum(std::vector<Graph>{a, b});
}

std::vector<Component> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<Component> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    VertexSet members{s};
    comp[s] = id;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (int w : g.neighbors(members[i])) {
        if (comp[w] < 0) {
          comp[w] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Graph sub = induced_subgraph(g, members);
    out.push_back({std::move(members), std::move(sub)});
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::all_of(d.begin(), d.end(),
                     [](Distance x) { return x.is_finite(); });
}

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return g.num_edges() + static_cast<int>(comps.size()) == g.n();
}

bool is_tree(const Graph& g) {
  return g.n() >= 1 && g.num_edges() == g.n() - 1 && is_connected(g);
}

std::vector<Distance> bfs_distances(const Graph& g, int source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.n());
  dist[source] = Distance(0);
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(u)) {
      if (!dist[w].is_finite()) {
        dist[w] = Distance(dist[u].value() + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, int u, int v) {
  g.check_vertex(v);
  return bfs_distances(g, u)[v];
}

Distance eccentricity(const Graph& g, int v) {
  if (g.n() == 0) throw InvalidArgument("eccentricity of the empty graph");
  auto d = bfs_distances(g, v);
  return *std::max_element(d.begin(), d.end());
}

std::vector<Distance> eccentricities(const Graph& g) {
  if (g.n() == 0) throw InvalidArgument("eccentricity of the empty graph");
  std::vector<Distance> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = eccentricity(g, v);
  return out;
}

VertexSet center(const Graph& g) {
  if (g.n() == 0) throw InvalidArgument("center of the empty graph");
  auto ecc = eccentricities(g);
  Distance best = *std::min_element(ecc.begin(), ecc.end());
  VertexSet out;
  for (int v = 0; v < g.n(); ++v) {
    if (ecc[v] == best) out.push_back(v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  std::vector<char> seen(g.n(), 0);
  for (int v : s) {
    g.check_vertex(v);
    if (seen[v]) throw InvalidArgument("repeated vertex in subset");
    seen[v] = 1;
  }
  const int k = static_cast<int>(s.size());
  Graph h(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(s[i], s[j])) h.add_edge(i, j);
    }
  }
  return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n()) {
    throw InvalidArgument("relabeling has wrong length");
  }
  std::vector<char> hit(g.n(), 0);
  for (int x : perm) {
    g.check_vertex(x);
    if (hit[x]) throw InvalidArgument("relabeling is not a bijection");
    hit[x] = 1;
  }
  Graph h(g.n());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace {

constexpr int kGraph6Offset = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text) {
    if (c < kGraph6Offset || c > 126) {
      throw ParseError("graph6: invalid character");
    }
  }
  if (text.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= text.size()) throw ParseError("graph6: truncated header");
    return text[pos++] - kGraph6Offset;
  };
  long long n = take();
  if (n == 63) {
    int first = take();
    if (first == 63) {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = first;
      for (int i = 0; i < 2; ++i) n = (n << 6) | take();
    }
  }
  if (n > 100000) throw ParseError("graph6: graph too large");
  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) +
                     " data bytes, found " + std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int byte = text[pos + k / 6] - kGraph6Offset;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    int last = text.back() - kGraph6Offset;
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const long long n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(((n >> s) & 63) + kGraph6Offset));
    }
  } else {
    out.append(2, 126);
    for (int s = 30; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(((n >> s) & 63) + kGraph6Offset));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Offset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Offset));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (!std::isdigit(c)) throw ParseError("edge list: unexpected character");
    long long value = 0;
    auto res = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (res.ec != std::errc()) throw ParseError("edge list: bad integer");
    nums.push_back(value);
    i = static_cast<std::size_t>(res.ptr - text.data());
  }
  if (nums.empty()) throw ParseError("edge list: missing vertex count");
  if (nums[0] > 100000) throw ParseError("edge list: graph too large");
  if (nums.size() % 2 != 1) throw ParseError("edge list: odd number of endpoints");
  const int n = static_cast<int>(nums[0]);
  Graph g(n);
  for (std::size_t k = 1; k < nums.size(); k += 2) {
    if (nums[k] >= n || nums[k + 1] >= n) {
      throw ParseError("edge list: vertex out of range");
    }
    if (nums[k] == nums[k + 1]) throw ParseError("edge list: self-loop");
    g.add_edge(static_cast<int>(nums[k]), static_cast<int>(nums[k + 1]));
  }
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty graph input");
  if (std::isdigit(static_cast<unsigned char>(t.front()))) {
    return parse_edge_list(t);
  }
  return parse_graph6(t);
}

namespace graphs {

Graph complete(int n) { return complement(Graph(n)); }

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph bull() {
  return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
}

Graph pan() {
  return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
}

}  // namespace graphs

}  // namespace qgraph
