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

#include "qgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qgraph/automorphisms.hpp"
#include "qgraph/decomposition.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {

void validate(const RootedTree& t) {
  if (!is_tree(t.tree)) throw InvalidArgument("not a tree");
  t.tree.check_vertex(t.root);
}

void validate(const RootedForest& f) {
  if (!is_forest(f.forest)) throw InvalidArgument("not a forest");
  auto comps = connected_components(f.forest);
  std::vector<int> comp_of(f.forest.n());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (int v : comps[c].vertices) comp_of[v] = static_cast<int>(c);
  }
  std::vector<int> hits(comps.size(), 0);
  for (int r : f.roots) {
    f.forest.check_vertex(r);
    ++hits[comp_of[r]];
  }
  for (int h : hits) {
    if (h != 1) throw InvalidArgument("need exactly one root per component");
  }
}

std::vector<RootedTree> rooted_components(const RootedForest& f) {
  validate(f);
  std::vector<RootedTree> out;
  for (auto& comp : connected_components(f.forest)) {
    for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
      if (std::find(f.roots.begin(), f.roots.end(), comp.vertices[i]) !=
          f.roots.end()) {
        out.push_back({std::move(comp.graph), static_cast<int>(i)});
        break;
      }
    }
  }
  return out;
}

RootedForest remove_root(const RootedTree& t) {
  validate(t);
  VertexSet rest;
  std::vector<int> index(t.tree.n(), -1);
  for (int v = 0; v < t.tree.n(); ++v) {
    if (v != t.root) {
      index[v] = static_cast<int>(rest.size());
      rest.push_back(v);
    }
  }
  RootedForest f{induced_subgraph(t.tree, rest), {}};
  for (int w : t.tree.neighbors(t.root)) f.roots.push_back(index[w]);
  return f;
}

namespace {

std::string ahu(const Graph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g.neighbors(v)) {
    if (w != parent) kids.push_back(ahu(g, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

}  // namespace

CanonKey rooted_tree_canonical(const RootedTree& t) {
  validate(t);
  return ahu(t.tree, t.root, -1);
}

RootedTree psi(const Graph& t) {
  if (!is_tree(t)) throw InvalidArgument("psi needs a tree");
  VertexSet z = center(t);
  if (z.size() == 1) return {t, z[0]};
  const int n = t.n();
  Graph s(n + 1);
  for (const auto& [u, v] : t.edges()) {
    if (!(u == z[0] && v == z[1])) s.add_edge(u, v);
  }
  s.add_edge(z[0], n);
  s.add_edge(n, z[1]);
  return {std::move(s), n};
}

CanonKey tree_canonical(const Graph& t) {
  return std::to_string(t.n()) + "|" + rooted_tree_canonical(psi(t));
}

Graph unroot_embed(const RootedForest& f) {
  auto comps = rooted_components(f);
  int max_deg = 0;
  for (int v = 0; v < f.forest.n(); ++v) {
    max_deg = std::max(max_deg, f.forest.degree(v));
  }
  // The new vertex must be the unique vertex of largest degree, so it needs
  // at least two pendant paths even when f has no edges.
  const int d = std::max(2, 1 + max_deg);
  int longest = 0;
  for (const auto& c : comps) {
    const Graph& g = c.tree;
    bool is_path = g.n() == 1 || (g.degree(c.root) == 1 &&
                                  g.num_edges() == g.n() - 1);
    for (int v = 0; is_path && v < g.n(); ++v) {
      if (g.degree(v) > 2) is_path = false;
    }
    if (is_path) longest = std::max(longest, g.n());
  }
  const int base = f.forest.n();
  int total = base + 1;
  for (int i = 1; i <= d; ++i) total += longest + i;
  Graph g(total);
  for (const auto& [u, v] : f.forest.edges()) g.add_edge(u, v);
  const int x = base;
  for (int r : f.roots) g.add_edge(x, r);
  int next = base + 1;
  for (int i = 1; i <= d; ++i) {
    const int len = longest + i;
    g.add_edge(x, next);
    for (int j = 1; j < len; ++j) g.add_edge(next + j - 1, next + j);
    next += len;
  }
  return g;
}

namespace {

struct BruteCanon {
  const Graph& g;
  std::vector<int> color_of_slot;  // required color at each position
  std::vector<int> colors;
  std::vector<int> order;  // order[p] = vertex at position p
  std::vector<char> used;
  std::string best;
  std::vector<int> best_order;
  std::string current;

  // Column p of the upper triangle: bits (q, p) for q < p.
  void run(int p, bool tied) {
    const int n = g.n();
    if (p == n) {
      if (best_order.empty() || current < best) {
        best = current;
        best_order = order;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || colors[v] != color_of_slot[p]) continue;
      const std::size_t mark = current.size();
      for (int q = 0; q < p; ++q) current.push_back(g.adjacent(order[q], v) ? '1' : '0');
      bool still_tied = tied;
      bool prune = false;
      if (tied && !best_order.empty()) {
        int cmp = current.compare(mark, std::string::npos, best, mark,
                                  current.size() - mark);
        if (cmp > 0) prune = true;
        if (cmp < 0) still_tied = false;
      }
      if (!prune) {
        used[v] = 1;
        order[p] = v;
        run(p + 1, still_tied);
        used[v] = 0;
      }
      current.resize(mark);
    }
  }
};

std::vector<int> canonical_order(const Graph& g) {
  if (g.n() > kBruteCanonicalLimit) {
    throw LimitExceeded("brute-force canonical form limited to " +
                        std::to_string(kBruteCanonicalLimit) + " vertices");
  }
  BruteCanon bc{g, {}, refine_colors(g), std::vector<int>(g.n()),
                std::vector<char>(g.n(), 0), {}, {}, {}};
  bc.color_of_slot = bc.colors;
  std::sort(bc.color_of_slot.begin(), bc.color_of_slot.end());
  bc.run(0, true);
  return bc.best_order;
}

}  // namespace

CanonKey brute_canonical(const Graph& g) {
  std::vector<int> order = canonical_order(g);
  std::string bits;
  for (int p = 1; p < g.n(); ++p) {
    for (int q = 0; q < p; ++q) bits.push_back(g.adjacent(order[q], order[p]) ? '1' : '0');
  }
  return std::to_string(g.n()) + ":" + bits;
}

Graph canonical_relabel(const Graph& g) {
  std::vector<int> order = canonical_order(g);
  std::vector<int> perm(g.n());
  for (int p = 0; p < g.n(); ++p) perm[order[p]] = p;
  return relabel(g, perm);
}

CanonKey leaf_key(const Graph& g) {
  if (g.n() == 1) return "1";
  if (is_tree(g)) return "T" + tree_canonical(g);
  Graph c = complement(g);
  if (is_tree(c)) return "C" + tree_canonical(c);
  return "G" + brute_canonical(g);
}

CanonKey decomp_canonical(const DecompTree& d) { return d.key; }

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool iso_test(const Graph& g, const Graph& h) {
  if (g.n() != h.n() || g.num_edges() != h.num_edges()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  auto dg = decompose(g, BaseClass::kSupported);
  auto dh = decompose(h, BaseClass::kSupported);
  if (dg && dh) return dg->key == dh->key;
  // The supported class is closed under isomorphism.
  if (dg.has_value() != dh.has_value()) return false;
  if (g.n() <= 8) return brute_canonical(g) == brute_canonical(h);
  throw Unsupported("isomorphism outside the supported classes above 8 vertices");
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw ParseError("odd-length hex string");
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError("bad hex digit");
  };
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1])));
  }
  return out;
}

}  // namespace qgraph
