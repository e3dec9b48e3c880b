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

#include "qgraph/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qgraph/errors.hpp"

namespace qgraph {

const char* to_string(BaseClass base) {
  switch (base) {
    case BaseClass::kCograph:
      return "cograph";
    case BaseClass::kTreeCograph:
      return "tree-cograph";
    case BaseClass::kG5:
      return "g5-cograph";
    case BaseClass::kSupported:
      return "supported";
  }
  return "?";
}

bool in_base(const Graph& g, BaseClass base) {
  const int n = g.n();
  if (n == 0) return false;
  const bool tiny = n <= 5;
  switch (base) {
    case BaseClass::kCograph:
      return n == 1;
    case BaseClass::kG5:
      return tiny;
    case BaseClass::kTreeCograph:
    case BaseClass::kSupported: {
      if (base == BaseClass::kSupported && tiny) return true;
      const int m = g.num_edges();
      if (m == 0 || 2 * m == n * (n - 1)) return true;
      return is_tree(g) || is_tree(complement(g));
    }
  }
  return false;
}

namespace {

std::optional<DecompTree> decompose_rec(const Graph& g, BaseClass base);

// Children grouped by key, sorted by key.
std::optional<DecompTree> group_node(DecompTree::Kind kind, const Graph& g,
                                     const std::vector<Component>& parts,
                                     BaseClass base) {
  std::map<CanonKey, DecompChild> groups;
  for (const auto& part : parts) {
    auto sub = decompose_rec(part.graph, base);
    if (!sub) return std::nullopt;
    auto it = groups.find(sub->key);
    if (it != groups.end()) {
      ++it->second.mult;
    } else {
      CanonKey k = sub->key;
      groups.emplace(std::move(k), DecompChild{std::move(*sub), 1});
    }
  }
  DecompTree node;
  node.kind = kind;
  node.graph = g;
  node.key = kind == DecompTree::Kind::kSum ? "S[" : "K[";
  bool first = true;
  for (auto& [key, child] : groups) {
    if (!first) node.key += ",";
    first = false;
    node.key += key + "*" + std::to_string(child.mult);
    node.children.push_back(std::move(child));
  }
  node.key += "]";
  return node;
}

std::optional<DecompTree> decompose_rec(const Graph& g, BaseClass base) {
  if (g.n() == 0) return std::nullopt;
  if (g.n() > 1) {
    auto comps = connected_components(g);
    if (comps.size() >= 2) {
      return group_node(DecompTree::Kind::kSum, g, comps, base);
    }
    auto cocomps = connected_components(complement(g));
    if (cocomps.size() >= 2) {
      return group_node(DecompTree::Kind::kCoSum, g, cocomps, base);
    }
  }
  if (!in_base(g, base)) return std::nullopt;
  DecompTree leaf;
  leaf.kind = DecompTree::Kind::kLeaf;
  leaf.graph = g;
  leaf.key = leaf_key(g);
  return leaf;
}

}  // namespace

std::optional<DecompTree> decompose(const Graph& g, BaseClass base) {
  return decompose_rec(g, base);
}

Graph evaluate(const DecompTree& d) {
  if (d.kind == DecompTree::Kind::kLeaf) return d.graph;
  std::vector<Graph> parts;
  for (const auto& c : d.children) {
    Graph sub = evaluate(c.tree);
    for (int i = 0; i < c.mult; ++i) parts.push_back(sub);
  }
  Graph sum = disjoint_sum(parts);
  return d.kind == DecompTree::Kind::kSum ? sum : complement(sum);
}

nlohmann::ordered_json to_json(const DecompTree& d) {
  nlohmann::ordered_json j;
  switch (d.kind) {
    case DecompTree::Kind::kLeaf:
      j["kind"] = "leaf";
      break;
    case DecompTree::Kind::kSum:
      j["kind"] = "sum";
      break;
    case DecompTree::Kind::kCoSum:
      j["kind"] = "cosum";
      break;
  }
  j["graph6"] = write_graph6(d.graph);
  j["key"] = to_hex(d.key);
  auto children = nlohmann::ordered_json::array();
  for (const auto& c : d.children) {
    nlohmann::ordered_json cj;
    cj["tree"] = to_json(c.tree);
    cj["mult"] = c.mult;
    children.push_back(std::move(cj));
  }
  j["children"] = std::move(children);
  return j;
}

bool has_induced_p4(const Graph& g) {
  const int n = g.n();
  int s[4];
  for (s[0] = 0; s[0] < n; ++s[0]) {
    for (s[1] = s[0] + 1; s[1] < n; ++s[1]) {
      for (s[2] = s[1] + 1; s[2] < n; ++s[2]) {
        for (s[3] = s[2] + 1; s[3] < n; ++s[3]) {
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
              if (g.adjacent(s[a], s[b])) {
                ++edges;
                ++deg[a];
                ++deg[b];
              }
            }
          }
          if (edges != 3) continue;
          // Three edges on four vertices: P_4, K_{1,3}, or K_3 + K_1.
          int ones = 0;
          for (int a = 0; a < 4; ++a) ones += deg[a] == 1;
          if (ones == 2) return true;
        }
      }
    }
  }
  return false;
}

bool recognize_cograph(const Graph& g) {
  const bool by_tree = decompose(g, BaseClass::kCograph).has_value();
  const bool by_scan = g.n() > 0 && !has_induced_p4(g);
  if (by_tree != by_scan) {
    throw InternalError("cograph recognizers disagree on " + write_graph6(g));
  }
  return by_tree;
}

bool recognize_forest(const Graph& g) { return g.n() > 0 && is_forest(g); }

bool recognize_tree_cograph(const Graph& g) {
  return decompose(g, BaseClass::kTreeCograph).has_value();
}

bool recognize_g5_cograph(const Graph& g) {
  return decompose(g, BaseClass::kG5).has_value();
}

Graph build_Z(const Graph& g, int n) {
  if (n < 1) throw InvalidArgument("Z_n needs n >= 1");
  Graph z = g;
  for (int i = 1; i < n; ++i) z = disjoint_sum(Graph(1), complement(z));
  return z;
}

Graph build_X(int n) {
  if (n < 1) throw InvalidArgument("X_n needs n >= 1");
  return build_Z(Graph(1), n);
}

Graph build_Y(int n) {
  if (n < 2) throw InvalidArgument("Y_n needs n >= 2");
  return build_Z(graphs::complete(2), n - 1);
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kEnumerateGraphsLimit) {
    throw LimitExceeded("enumerate_graphs supports 1 <= n <= " +
                        std::to_string(kEnumerateGraphsLimit));
  }
  std::map<CanonKey, Graph> level{{brute_canonical(Graph(1)), Graph(1)}};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonKey, Graph> next;
    for (const auto& [key, g] : level) {
      for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
        Graph h(k);
        for (const auto& [u, v] : g.edges()) h.add_edge(u, v);
        for (int v = 0; v < k - 1; ++v) {
          if (mask >> v & 1) h.add_edge(v, k - 1);
        }
        Graph c = canonical_relabel(h);
        next.emplace(brute_canonical(c), std::move(c));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1) throw InvalidArgument("trees need n >= 1");
  std::map<CanonKey, Graph> level{{tree_canonical(Graph(1)), Graph(1)}};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonKey, Graph> next;
    for (const auto& [key, t] : level) {
      for (int v = 0; v < k - 1; ++v) {
        Graph h(k);
        for (const auto& [a, b] : t.edges()) h.add_edge(a, b);
        h.add_edge(v, k - 1);
        next.emplace(tree_canonical(h), std::move(h));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [key, t] : level) out.push_back(std::move(t));
  return out;
}

std::vector<Graph> enumerate_forests(int n) {
  if (n < 1) throw InvalidArgument("forests need n >= 1");
  // All trees up to n vertices, each a candidate component.
  std::vector<Graph> pool;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : enumerate_trees(k)) pool.push_back(std::move(t));
  }
  std::vector<Graph> out;
  std::vector<int> chosen;
  // Non-increasing pool indices give each multiset once.
  std::function<void(int, int)> rec = [&](int remaining, int max_index) {
    if (remaining == 0) {
      std::vector<Graph> parts;
      for (int i : chosen) parts.push_back(pool[i]);
      out.push_back(disjoint_sum(parts));
      return;
    }
    for (int i = max_index; i >= 0; --i) {
      if (pool[i].n() > remaining) continue;
      chosen.push_back(i);
      rec(remaining - pool[i].n(), i);
      chosen.pop_back();
    }
  };
  rec(n, static_cast<int>(pool.size()) - 1);
  return out;
}

}  // namespace qgraph
