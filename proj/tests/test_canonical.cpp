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

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qgraph/canonical.hpp"
#include "qgraph/decomposition.hpp"
#include "qgraph/errors.hpp"

using namespace qgraph;

namespace {

// Rooted isomorphism oracle: root gets a distinguishing color.
std::string rooted_oracle_key(const RootedTree& t) {
  std::vector<int> colors(t.tree.n(), 0);
  colors[t.root] = 1;
  // Minimum over labelings that put the root first.
  auto a = oracle::matrix(t.tree);
  std::vector<int> perm;
  for (int v = 0; v < t.tree.n(); ++v) {
    if (v != t.root) perm.push_back(v);
  }
  std::sort(perm.begin(), perm.end());
  std::string best;
  bool first = true;
  do {
    std::vector<int> full{t.root};
    full.insert(full.end(), perm.begin(), perm.end());
    std::string s = oracle::labeled_string(a, full);
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("rooted keys") {
    CHECK(rooted_tree_canonical({Graph(1), 0}) == "()");
    CHECK(rooted_tree_canonical({graphs::path(3), 1}) !=
          rooted_tree_canonical({graphs::path(3), 0}));
    CHECK_THROWS_AS(rooted_tree_canonical({graphs::cycle(3), 0}), InvalidArgument);
  }

  TEST_CASE("rooted keys match rooted isomorphism on all rooted trees n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      std::map<std::string, std::string> by_key;
      std::map<std::string, std::string> by_oracle;
      for (const Graph& t : oracle::trees(n)) {
        for (int r = 0; r < n; ++r) {
          std::string k = rooted_tree_canonical({t, r});
          std::string o = rooted_oracle_key({t, r});
          auto [it, fresh] = by_key.emplace(k, o);
          CHECK(it->second == o);
          auto [jt, fresh2] = by_oracle.emplace(o, k);
          CHECK(jt->second == k);
        }
      }
    }
  }

  TEST_CASE("tree keys count isomorphism classes") {
    CHECK(tree_canonical(graphs::path(4)) != tree_canonical(graphs::star(3)));
    const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 8; ++n) {
      std::set<std::string> keys;
      auto ts = oracle::trees(n);
      for (const Graph& t : ts) {
        keys.insert(tree_canonical(t));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(tree_canonical(relabel(t, perm)) == tree_canonical(t));
      }
      CHECK(keys.size() == ts.size());
      CHECK(ts.size() == expected[n]);
    }
  }

  TEST_CASE("psi") {
    RootedTree a = psi(graphs::path(3));
    CHECK(a.tree == graphs::path(3));
    CHECK(a.root == 1);
    RootedTree b = psi(graphs::path(2));
    CHECK(b.tree.n() == 3);
    CHECK(b.root == 2);
    CHECK(b.tree.degree(2) == 2);
    RootedTree c = psi(graphs::path(4));
    CHECK(c.tree.n() == 5);
    CHECK(c.root == 4);
  }

  TEST_CASE("remove root and rooted components") {
    RootedForest f = remove_root({graphs::star(3), 0});
    CHECK(f.forest.n() == 3);
    CHECK(f.roots.size() == 3);
    CHECK(rooted_components(f).size() == 3);
  }

  TEST_CASE("unroot embed") {
    Graph one = unroot_embed({Graph(1), {0}});
    CHECK(is_tree(one));
    CHECK(oracle::aut_count(one) == 1);
    Graph two = unroot_embed({Graph(2), {0, 1}});
    CHECK(is_tree(two));
    CHECK(oracle::aut_count(two) == 2);
    RootedForest mixed{disjoint_sum(graphs::path(3), Graph(1)), {1, 3}};
    Graph m = unroot_embed(mixed);
    CHECK(is_tree(m));
    CHECK(oracle::aut_count(m) == 2);
  }

  TEST_CASE("brute canonical is complete on n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      std::map<std::string, std::string> seen;
      for (const Graph& g : oracle::graphs(n)) {
        std::string k = brute_canonical(g);
        CHECK(seen.emplace(k, oracle::canonical(g)).second);
        CHECK(brute_canonical(canonical_relabel(g)) == k);
        CHECK(oracle::isomorphic(canonical_relabel(g), g));
      }
    }
  }

  TEST_CASE("decomposition keys decide isomorphism on cographs and tree-cographs") {
    for (int n = 1; n <= 7; ++n) {
      std::map<std::string, std::string> key_to_oracle;
      for (const Graph& g : enumerate_graphs(n)) {
        if (!recognize_tree_cograph(g)) continue;
        auto d = decompose(g, BaseClass::kTreeCograph);
        REQUIRE(d.has_value());
        auto [it, fresh] = key_to_oracle.emplace(decomp_canonical(*d), oracle::canonical(g));
        CHECK(fresh);
      }
    }
    auto k1 = decompose(Graph(1), BaseClass::kCograph);
    CHECK(decomp_canonical(*k1) == "1");
  }

  TEST_CASE("iso test") {
    CHECK(iso_test(graphs::path(4), complement(graphs::path(4))));
    CHECK_FALSE(iso_test(graphs::cycle(5), graphs::bull()));
    CHECK(iso_test(graphs::pan(), relabel(graphs::pan(), {4, 3, 2, 1, 0})));
    for (int n = 1; n <= 5; ++n) {
      auto gs = oracle::graphs(n);
      for (std::size_t i = 0; i < gs.size(); ++i) {
        for (std::size_t j = 0; j < gs.size(); ++j) CHECK(iso_test(gs[i], gs[j]) == (i == j));
      }
    }
  }

  TEST_CASE("hex helpers") {
    CHECK(to_hex("ab") == "6162");
    CHECK(from_hex("6162") == "ab");
    CHECK_THROWS(from_hex("6"));
  }
}
