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

#include "qgraph/homcount.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qgraph/automorphisms.hpp"
#include "qgraph/decomposition.hpp"
#include "qgraph/errors.hpp"

namespace qgraph {

namespace {

enum class Mode { kHom, kMon, kQuo };

void check_budget(const Graph& g, const Graph& h, const CountOptions& o) {
  std::uint64_t work = 1;
  for (int i = 0; i < g.n(); ++i) {
    if (h.n() > 0 && work > o.budget / static_cast<std::uint64_t>(h.n())) {
      throw LimitExceeded("enumeration exceeds budget of " + std::to_string(o.budget));
    }
    work *= static_cast<std::uint64_t>(h.n());
  }
}

// Backtracking over vertex maps, vertices of g taken in BFS order so each new
// vertex usually has a mapped neighbor to constrain it.
class Counter {
 public:
  Counter(const Graph& g, const Graph& h, Mode mode) : g_(g), h_(h), mode_(mode) {
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        int u = order_[head++];
        for (int w : g.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            order_.push_back(w);
          }
        }
      }
    }
    back_.resize(g.n());
    for (int i = 0; i < g.n(); ++i) {
      for (int j = 0; j < i; ++j) {
        if (g.adjacent(order_[i], order_[j])) back_[i].push_back(j);
      }
    }
    for (const auto& [a, b] : h.edges()) {
      edge_index_[{a, b}] = static_cast<int>(edge_index_.size());
    }
  }

  std::uint64_t count_with_first(int first) const {
    State st(g_.n(), h_.n());
    st.image[0] = first;
    ++st.uses[first];
    st.distinct = 1;
    return run(st, 1);
  }

  bool trivially_zero() const {
    if (mode_ == Mode::kMon && g_.n() > h_.n()) return true;
    if (mode_ == Mode::kQuo &&
        (h_.n() > g_.n() || h_.num_edges() > g_.num_edges())) {
      return true;
    }
    return false;
  }

 private:
  struct State {
    State(int ng, int nh) : image(ng, -1), uses(nh, 0) {}
    std::vector<int> image;  // by position in order_
    std::vector<int> uses;
    int distinct = 0;
  };

  std::uint64_t run(State& st, int pos) const {
    const int ng = g_.n();
    const int nh = h_.n();
    if (mode_ == Mode::kQuo && st.distinct + (ng - pos) < nh) return 0;
    if (pos == ng) return leaf(st);
    std::uint64_t total = 0;
    for (int x = 0; x < nh; ++x) {
      if (mode_ == Mode::kMon && st.uses[x]) continue;
      bool ok = true;
      for (int j : back_[pos]) {
        if (!h_.adjacent(st.image[j], x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      st.image[pos] = x;
      if (st.uses[x]++ == 0) ++st.distinct;
      total += run(st, pos + 1);
      if (--st.uses[x] == 0) --st.distinct;
    }
    return total;
  }

  std::uint64_t leaf(const State& st) const {
    if (mode_ != Mode::kQuo) return 1;
    if (st.distinct != h_.n()) return 0;
    std::vector<char> covered(edge_index_.size(), 0);
    std::size_t hit = 0;
    for (int i = 0; i < g_.n(); ++i) {
      for (int j : back_[i]) {
        int a = std::min(st.image[i], st.image[j]);
        int b = std::max(st.image[i], st.image[j]);
        int e = edge_index_.at({a, b});
        if (!covered[e]) {
          covered[e] = 1;
          ++hit;
        }
      }
    }
    return hit == edge_index_.size() ? 1 : 0;
  }

  const Graph& g_;
  const Graph& h_;
  Mode mode_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::map<std::pair<int, int>, int> edge_index_;
};

std::uint64_t count(const Graph& g, const Graph& h, Mode mode,
                    const CountOptions& o, bool parallel) {
  Counter c(g, h, mode);
  if (c.trivially_zero()) return 0;
  check_budget(g, h, o);
  if (g.n() == 0) return 1;
  const int nh = h.n();
  std::uint64_t total = 0;
  if (parallel) {
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
    for (int x = 0; x < nh; ++x) total += c.count_with_first(x);
  } else {
    for (int x = 0; x < nh; ++x) total += c.count_with_first(x);
  }
  return total;
}

}  // namespace

std::uint64_t hom_count(const Graph& g, const Graph& h, const CountOptions& o) {
  return count(g, h, Mode::kHom, o, true);
}
std::uint64_t mon_count(const Graph& g, const Graph& h, const CountOptions& o) {
  return count(g, h, Mode::kMon, o, true);
}
std::uint64_t quo_count(const Graph& g, const Graph& h, const CountOptions& o) {
  return count(g, h, Mode::kQuo, o, true);
}
std::uint64_t hom_count_serial(const Graph& g, const Graph& h, const CountOptions& o) {
  return count(g, h, Mode::kHom, o, false);
}
std::uint64_t mon_count_serial(const Graph& g, const Graph& h, const CountOptions& o) {
  return count(g, h, Mode::kMon, o, false);
}
std::uint64_t quo_count_serial(const Graph& g, const Graph& h, const CountOptions& o) {
  return count(g, h, Mode::kQuo, o, false);
}

HomCounts count_all(const Graph& g, const Graph& h, const CountOptions& o) {
  HomCounts c;
  c.hom = hom_count(g, h, o);
  c.mon = mon_count(g, h, o);
  c.quo = quo_count(g, h, o);
  c.aut = mon_count(g, g, o);
  return c;
}

namespace {

// Representatives per vertex count, built once.
const std::vector<Graph>& representatives(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, enumerate_graphs(k)).first;
  return it->second;
}

}  // namespace

std::vector<LovaszTerm> lovasz_terms(const Graph& g, const Graph& h,
                                     const CountOptions& o) {
  std::vector<LovaszTerm> terms;
  for (int k = 1; k <= g.n(); ++k) {
    for (const Graph& a : representatives(k)) {
      const std::uint64_t q = quo_count(g, a, o);
      if (q == 0) continue;
      // Automorphisms are the injective self-morphisms.
      const std::uint64_t aut = mon_count(a, a, o);
      if (q % aut != 0) {
        throw InternalError("quotient count " + std::to_string(q) +
                            " not divisible by aut " + std::to_string(aut) +
                            " for " + write_graph6(a));
      }
      terms.push_back({a, q, aut, mon_count(a, h, o)});
    }
  }
  return terms;
}

std::uint64_t lovasz_sum(const Graph& g, const Graph& h, const CountOptions& o) {
  std::uint64_t total = 0;
  for (const auto& t : lovasz_terms(g, h, o)) total += t.quo / t.aut * t.mon;
  return total;
}

std::uint64_t hom_component_product(const Graph& g, const Graph& h,
                                    const CountOptions& o) {
  auto gc = connected_components(g);
  auto hc = connected_components(h);
  std::uint64_t product = 1;
  for (const auto& a : gc) {
    std::uint64_t sum = 0;
    for (const auto& b : hc) sum += hom_count(a.graph, b.graph, o);
    product *= sum;
  }
  return product;
}

FIsoResult f_isomorphic(const Graph& g, const Graph& h,
                        const std::vector<Graph>& family, const CountOptions& o) {
  FIsoResult r;
  for (const Graph& a : family) {
    if (hom_count(a, g, o) != hom_count(a, h, o)) {
      r.equivalent = false;
      r.witness = a;
      return r;
    }
  }
  return r;
}

ColorPartition color_refinement(const Graph& g) {
  ColorPartition p;
  p.colors = refine_colors(g);
  p.num_colors = p.colors.empty()
                     ? 0
                     : *std::max_element(p.colors.begin(), p.colors.end()) + 1;
  p.stable = true;
  return p;
}

bool fractionally_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) return false;
  ColorPartition p = color_refinement(disjoint_sum(g, h));
  std::vector<int> left(p.num_colors, 0);
  std::vector<int> right(p.num_colors, 0);
  for (int v = 0; v < g.n(); ++v) ++left[p.colors[v]];
  for (int v = 0; v < h.n(); ++v) ++right[p.colors[g.n() + v]];
  return left == right;
}

}  // namespace qgraph
