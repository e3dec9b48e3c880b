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

#include "qgraph/schmidt.hpp"

#include <map>

#include "qgraph/errors.hpp"

namespace qgraph {

BigInt sum_aut_order(const std::vector<SumPart>& parts) {
  BigInt total = 1;
  for (const auto& p : parts) {
    for (int i = 1; i <= p.mult; ++i) total *= p.order * i;
  }
  return total;
}

bool sum_schmidt(const std::vector<SumPart>& parts) {
  if (parts.empty()) return false;
  // Parts that are not a single asymmetric copy; at most one may exist.
  int special = -1;
  int count = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].mult > 1 || parts[i].order != 1) {
      special = static_cast<int>(i);
      ++count;
    }
  }
  if (count == 0) return false;
  if (count > 1) return true;
  const SumPart& l = parts[special];
  const bool witness = l.mult <= 3 && !l.schmidt && (l.mult == 1 || l.order == 1);
  return !witness;
}

namespace {

struct LeafFacts {
  BigInt order;
  bool schmidt;
};

LeafFacts leaf_facts(const Graph& g) {
  if (g.n() == 1) return {1, false};
  if (is_tree(g)) {
    RootedTree r = psi(g);
    return {rooted_tree_aut_order(r), rooted_tree_schmidt(r)};
  }
  Graph c = complement(g);
  if (is_tree(c)) {
    RootedTree r = psi(c);
    return {rooted_tree_aut_order(r), rooted_tree_schmidt(r)};
  }
  auto s = schmidt_bruteforce(g);
  return {BigInt(count_automorphisms(g)), s.holds};
}

LeafFacts structural(const DecompTree& d) {
  if (d.kind == DecompTree::Kind::kLeaf) return leaf_facts(d.graph);
  std::vector<SumPart> parts;
  for (const auto& c : d.children) {
    LeafFacts f = structural(c.tree);
    parts.push_back({f.order, f.schmidt, c.mult});
  }
  // A complement-sum has the automorphisms of its complement.
  return {sum_aut_order(parts), sum_schmidt(parts)};
}

struct RootedFacts {
  BigInt order;
  bool schmidt;
};

RootedFacts rooted_tree_facts(const RootedTree& t);

RootedFacts rooted_forest_facts(const RootedForest& f) {
  std::map<CanonKey, std::pair<RootedFacts, int>> groups;
  for (const auto& comp : rooted_components(f)) {
    CanonKey key = rooted_tree_canonical(comp);
    auto it = groups.find(key);
    if (it != groups.end()) {
      ++it->second.second;
    } else {
      groups.emplace(key, std::make_pair(rooted_tree_facts(comp), 1));
    }
  }
  std::vector<SumPart> parts;
  for (const auto& [key, entry] : groups) {
    parts.push_back({entry.first.order, entry.first.schmidt, entry.second});
  }
  return {sum_aut_order(parts), sum_schmidt(parts)};
}

RootedFacts rooted_tree_facts(const RootedTree& t) {
  if (t.tree.n() == 1) return {1, false};
  return rooted_forest_facts(remove_root(t));
}

}  // namespace

BigInt aut_order_structural(const DecompTree& d) { return structural(d).order; }

bool schmidt_structural(const DecompTree& d) { return structural(d).schmidt; }

BigInt rooted_aut_order(const RootedForest& f) {
  validate(f);
  return rooted_forest_facts(f).order;
}

bool rooted_schmidt(const RootedForest& f) {
  validate(f);
  return rooted_forest_facts(f).schmidt;
}

BigInt rooted_tree_aut_order(const RootedTree& t) {
  validate(t);
  return rooted_tree_facts(t).order;
}

bool rooted_tree_schmidt(const RootedTree& t) {
  validate(t);
  return rooted_tree_facts(t).schmidt;
}

SymmetrySummary symmetry_summary(const Graph& g, const AutOptions& options) {
  if (g.n() == 0) throw InvalidArgument("empty graph");
  SymmetrySummary s;
  if (auto d = decompose(g, BaseClass::kSupported)) {
    s.aut_order = aut_order_structural(*d);
    s.satisfies_schmidt = schmidt_structural(*d);
    s.method = "structural";
  } else if (g.n() <= options.max_n) {
    s.aut_order = count_automorphisms(g, {}, options);
    s.satisfies_schmidt = schmidt_bruteforce(g, options).holds;
    s.method = "bruteforce";
  } else {
    throw Unsupported("graph is outside the supported classes and too large");
  }
  s.is_asymmetric = s.aut_order == 1;
  return s;
}

}  // namespace qgraph
