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

#include "qgraph/automorphisms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> hit(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= n() || hit[x]) {
      throw InvalidArgument("not a permutation");
    }
    hit[x] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(n());
  for (int i = 0; i < n(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  std::vector<char> seen(n(), 0);
  bool any = false;
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || image_[i] == i) continue;
    any = true;
    os << '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
      j = image_[j];
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> img(a.n());
  for (int i = 0; i < a.n(); ++i) img[i] = a[b[i]];
  return Permutation(std::move(img));
}

VertexSet support(const Permutation& p) {
  VertexSet out;
  for (int i = 0; i < p.n(); ++i) {
    if (p[i] != i) out.push_back(i);
  }
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.n() != g.n()) return false;
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    }
  }
  return true;
}

AutGroup::AutGroup(int n, std::vector<Permutation> elements)
    : n_(n), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : elements_) {
    for (int i = 0; i < n; ++i) {
      int a = find(i);
      int b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, VertexSet> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) orbits_.push_back(std::move(members));
}

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
  const int n = g.n();
  if (colors.empty()) colors.assign(n, 0);
  if (static_cast<int>(colors.size()) != n) {
    throw InvalidArgument("coloring has wrong length");
  }
  {
    std::map<int, int> rank;
    for (int c : colors) rank[c] = 0;
    int r = 0;
    for (auto& [c, value] : rank) value = r++;
    for (int& c : colors) c = rank[c];
  }
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> sigs;
    std::vector<std::pair<int, std::vector<int>>> mine(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.reserve(adj[v].size());
      for (int w : adj[v]) nb.push_back(colors[w]);
      std::sort(nb.begin(), nb.end());
      mine[v] = {colors[v], std::move(nb)};
      sigs.emplace(mine[v], 0);
    }
    int r = 0;
    for (auto& [sig, value] : sigs) value = r++;
    for (int v = 0; v < n; ++v) colors[v] = sigs[mine[v]];
    if (sigs.size() == classes) break;
    classes = sigs.size();
  }
  return colors;
}

std::vector<int> refine_colors(const Graph& g) { return refine_colors(g, {}); }

namespace {

struct Search {
  const Graph& g;
  const std::vector<int>& colors;
  const std::function<bool(const std::vector<int>&)>& visit;
  std::vector<int> image;
  std::vector<char> used;
  bool stopped = false;

  void run(int v) {
    const int n = g.n();
    if (v == n) {
      if (!visit(image)) stopped = true;
      return;
    }
    for (int w = 0; w < n && !stopped; ++w) {
      if (used[w] || colors[w] != colors[v]) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u) {
        if (g.adjacent(u, v) != g.adjacent(image[u], w)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[w] = 1;
      image[v] = w;
      run(v + 1);
      used[w] = 0;
    }
  }
};

}  // namespace

void for_each_automorphism(const Graph& g, const std::vector<int>& colors,
                           const std::function<bool(const std::vector<int>&)>& visit,
                           const AutOptions& options) {
  if (g.n() > options.max_n) {
    throw LimitExceeded("automorphism search limited to " +
                        std::to_string(options.max_n) + " vertices");
  }
  std::vector<int> refined = refine_colors(g, colors);
  Search s{g, refined, visit, std::vector<int>(g.n()), std::vector<char>(g.n(), 0)};
  s.run(0);
}

AutGroup colored_automorphisms(const Graph& g, const std::vector<int>& colors,
                               const AutOptions& options) {
  std::vector<Permutation> elements;
  for_each_automorphism(
      g, colors,
      [&](const std::vector<int>& img) {
        if (elements.size() >= options.max_elements) {
          throw LimitExceeded("automorphism group too large to list");
        }
        elements.emplace_back(img);
        return true;
      },
      options);
  return AutGroup(g.n(), std::move(elements));
}

AutGroup automorphisms(const Graph& g, const AutOptions& options) {
  return colored_automorphisms(g, {}, options);
}

std::uint64_t count_automorphisms(const Graph& g, const std::vector<int>& colors,
                                  const AutOptions& options) {
  std::uint64_t count = 0;
  for_each_automorphism(
      g, colors,
      [&](const std::vector<int>&) {
        ++count;
        return true;
      },
      options);
  return count;
}

SchmidtResult schmidt_bruteforce(const Graph& g, const AutOptions& options) {
  if (g.n() > 62) throw LimitExceeded("support masks need n <= 62");
  // Least automorphism per support mask; enumeration is lexicographic, so the
  // first element seen for a mask is the least.
  std::map<std::uint64_t, std::vector<int>> least;
  for_each_automorphism(
      g, {},
      [&](const std::vector<int>& img) {
        std::uint64_t mask = 0;
        for (int i = 0; i < static_cast<int>(img.size()); ++i) {
          if (img[i] != i) mask |= std::uint64_t{1} << i;
        }
        if (mask != 0) least.try_emplace(mask, img);
        return true;
      },
      options);
  SchmidtResult result;
  const std::vector<int>* best_a = nullptr;
  for (const auto& [ma, pa] : least) {
    for (const auto& [mb, pb] : least) {
      if ((ma & mb) == 0 && (best_a == nullptr || pa < *best_a)) best_a = &pa;
    }
  }
  if (best_a == nullptr) return result;
  std::uint64_t ma = 0;
  for (int i = 0; i < g.n(); ++i) {
    if ((*best_a)[i] != i) ma |= std::uint64_t{1} << i;
  }
  const std::vector<int>* best_b = nullptr;
  for (const auto& [mb, pb] : least) {
    if ((ma & mb) == 0 && (best_b == nullptr || pb < *best_b)) best_b = &pb;
  }
  result.holds = true;
  result.witness.emplace(Permutation(*best_a), Permutation(*best_b));
  return result;
}

bool is_star_partition(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<int> part_of(g.n(), -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw InvalidArgument("empty part");
    for (int v : parts[p]) {
      g.check_vertex(v);
      if (part_of[v] >= 0) throw InvalidArgument("parts overlap");
      part_of[v] = static_cast<int>(p);
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (part_of[v] < 0) throw InvalidArgument("parts do not cover the vertices");
  }
  for (const auto& part : parts) {
    for (int v : part) {
      if (g.degree(v) != g.degree(part.front())) return false;
    }
  }
  for (const auto& a : parts) {
    for (std::size_t b = 0; b < parts.size(); ++b) {
      int with = 0;
      for (int x : a) {
        for (int y : g.neighbors(x)) {
          if (part_of[y] == static_cast<int>(b)) {
            ++with;
            break;
          }
        }
      }
      if (with != 0 && with != static_cast<int>(a.size())) return false;
    }
  }
  return true;
}

}  // namespace qgraph
