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

// Independent brute-force oracles for tests. Nothing here calls the library
// beyond the Graph container, so expected values do not depend on the code
// under test.

#ifndef QGRAPH_TESTS_ORACLES_HPP_
#define QGRAPH_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace oracle {

using qgraph::Graph;

inline std::vector<std::vector<int>> matrix(const Graph& g) {
  std::vector<std::vector<int>> a(g.n(), std::vector<int>(g.n(), 0));
  for (int u = 0; u < g.n(); ++u) {
    for (int v = 0; v < g.n(); ++v) a[u][v] = g.adjacent(u, v) ? 1 : 0;
  }
  return a;
}

// Adjacency string under labeling perm (vertex perm[i] placed at i).
inline std::string labeled_string(const std::vector<std::vector<int>>& a,
                                  const std::vector<int>& perm) {
  std::string s;
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s.push_back(a[perm[i]][perm[j]] ? '1' : '0');
  }
  return s;
}

// Minimum adjacency string over all n! labelings.
inline std::string canonical(const Graph& g) {
  auto a = matrix(g);
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = labeled_string(a, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, labeled_string(a, perm));
  }
  return std::to_string(g.n()) + ":" + best;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  return g.n() == h.n() && g.num_edges() == h.num_edges() && canonical(g) == canonical(h);
}

// Automorphisms by plain backtracking over all partial bijections,
// optionally preserving a vertex coloring.
inline std::vector<std::vector<int>> automorphisms(const Graph& g,
                                                   std::vector<int> colors = {}) {
  const int n = g.n();
  if (colors.empty()) colors.assign(n, 0);
  auto a = matrix(g);
  std::vector<std::vector<int>> out;
  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      out.push_back(img);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || colors[w] != colors[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a[u][v] == a[img[u]][w];
      if (!ok) continue;
      used[w] = 1;
      img[v] = w;
      rec(v + 1);
      used[w] = 0;
    }
  };
  rec(0);
  return out;
}

inline std::uint64_t aut_count(const Graph& g, std::vector<int> colors = {}) {
  return automorphisms(g, std::move(colors)).size();
}

inline bool schmidt(const Graph& g) {
  auto auts = automorphisms(g);
  std::vector<std::uint64_t> masks;
  for (const auto& p : auts) {
    std::uint64_t m = 0;
    for (int i = 0; i < g.n(); ++i) {
      if (p[i] != i) m |= std::uint64_t{1} << i;
    }
    if (m) masks.push_back(m);
  }
  for (auto x : masks) {
    for (auto y : masks) {
      if ((x & y) == 0) return true;
    }
  }
  return false;
}

// All distances by Floyd-Warshall; -1 for infinity.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.n();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (g.adjacent(i, j)) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

// Counts of all maps g -> h by odometer; mode 0 hom, 1 mon, 2 quo.
inline std::uint64_t count_maps(const Graph& g, const Graph& h, int mode) {
  const int ng = g.n();
  const int nh = h.n();
  if (nh == 0) return ng == 0 ? 1 : 0;
  std::vector<int> f(ng, 0);
  std::uint64_t total = 0;
  auto ge = g.edges();
  auto he = h.edges();
  while (true) {
    bool ok = true;
    for (auto [u, v] : ge) {
      if (!h.adjacent(f[u], f[v])) {
        ok = false;
        break;
      }
    }
    if (ok && mode == 1) {
      std::set<int> s(f.begin(), f.end());
      ok = static_cast<int>(s.size()) == ng;
    }
    if (ok && mode == 2) {
      std::set<int> s(f.begin(), f.end());
      std::set<std::pair<int, int>> img;
      for (auto [u, v] : ge) img.insert({std::min(f[u], f[v]), std::max(f[u], f[v])});
      ok = static_cast<int>(s.size()) == nh && img.size() == he.size();
    }
    if (ok) ++total;
    int i = 0;
    while (i < ng && ++f[i] == nh) f[i++] = 0;
    if (i == ng) break;
  }
  return total;
}

// Rooted AHU computed directly; unrooted tree key = least over all roots.
inline std::string rooted_key(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w = 0; w < t.n(); ++w) {
    if (w != parent && t.adjacent(v, w)) kids.push_back(rooted_key(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "[";
  for (auto& k : kids) s += k;
  return s + "]";
}

inline std::string tree_key(const Graph& t) {
  std::string best;
  for (int r = 0; r < t.n(); ++r) {
    std::string k = rooted_key(t, r, -1);
    if (r == 0 || k < best) best = k;
  }
  return best;
}

inline std::vector<int> component_of(const Graph& g) {
  std::vector<int> c(g.n(), -1);
  int id = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (c[s] >= 0) continue;
    std::vector<int> stack{s};
    c[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < g.n(); ++w) {
        if (g.adjacent(u, w) && c[w] < 0) {
          c[w] = id;
          stack.push_back(w);
        }
      }
    }
    ++id;
  }
  return c;
}

// Forest key: sorted component tree keys.
inline std::string forest_key(const Graph& f) {
  auto c = component_of(f);
  int k = f.n() == 0 ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  std::vector<std::string> keys;
  for (int id = 0; id < k; ++id) {
    std::vector<int> vs;
    for (int v = 0; v < f.n(); ++v) {
      if (c[v] == id) vs.push_back(v);
    }
    keys.push_back(tree_key(qgraph::induced_subgraph(f, vs)));
  }
  std::sort(keys.begin(), keys.end());
  std::string s;
  for (auto& x : keys) s += x + ";";
  return s;
}

// Unlabeled trees on n vertices by leaf addition.
inline std::vector<Graph> trees(int n) {
  std::map<std::string, Graph> level{{tree_key(Graph(1)), Graph(1)}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (auto& [key, t] : level) {
      for (int v = 0; v < k - 1; ++v) {
        Graph h(k);
        for (auto [a, b] : t.edges()) h.add_edge(a, b);
        h.add_edge(v, k - 1);
        next.emplace(tree_key(h), h);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [k, t] : level) out.push_back(t);
  return out;
}

// Unlabeled forests on n vertices: add an isolated vertex or a leaf.
inline std::vector<Graph> forests(int n) {
  std::map<std::string, Graph> level{{forest_key(Graph(1)), Graph(1)}};
  for (int k = 2; k <= n; ++k) {
    std::map<std::string, Graph> next;
    for (auto& [key, f] : level) {
      for (int v = -1; v < k - 1; ++v) {
        Graph h(k);
        for (auto [a, b] : f.edges()) h.add_edge(a, b);
        if (v >= 0) h.add_edge(v, k - 1);
        next.emplace(forest_key(h), h);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [k, f] : level) out.push_back(f);
  return out;
}

// All graphs on n vertices up to isomorphism, by brute force over edge sets.
inline std::vector<Graph> graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::map<std::string, Graph> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
    }
    seen.emplace(canonical(g), g);
  }
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

// graph6 decoding written from the format description: n = c0 - 63 for
// n < 63, then the upper triangle column by column, six bits per byte.
inline std::vector<int> graph6_bits(const std::string& s) {
  std::vector<int> bits;
  for (std::size_t i = 1; i < s.size(); ++i) {
    int x = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((x >> b) & 1);
  }
  return bits;
}

inline std::vector<std::pair<int, int>> graph6_edges(const std::string& s) {
  int n = s[0] - 63;
  auto bits = graph6_bits(s);
  std::vector<std::pair<int, int>> e;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bits[k]) e.emplace_back(i, j);
    }
  }
  return e;
}

}  // namespace oracle

#endif  // QGRAPH_TESTS_ORACLES_HPP_
