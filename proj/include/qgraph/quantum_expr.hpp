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

#ifndef QGRAPH_QUANTUM_EXPR_HPP_
#define QGRAPH_QUANTUM_EXPR_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qgraph/canonical.hpp"
#include "qgraph/schmidt.hpp"

namespace qgraph {

// Quantum automorphism group expression. Values are immutable and always in
// normal form: the factory functions below perform every rewrite.
class QExpr {
 public:
  enum class Kind { kTrivial, kSPlus, kAtom, kFree, kWreath };

  QExpr();  // trivial

  Kind kind() const { return kind_; }
  // S+(n): n. Wreath: d.
  int degree() const { return degree_; }
  // Free: the factors. Wreath: the single base.
  const std::vector<QExpr>& children() const { return children_; }
  const CanonKey& atom_key() const { return atom_key_; }
  const BigInt& atom_order() const { return atom_order_; }
  bool atom_schmidt() const { return atom_schmidt_; }

  friend bool operator==(const QExpr& a, const QExpr& b);

  friend QExpr trivial();
  friend QExpr splus(int n);
  friend QExpr atom(const CanonKey& key, const BigInt& order, bool schmidt);
  friend QExpr free_product(std::vector<QExpr> factors);
  friend QExpr wreath(const QExpr& base, int d);

 private:
  Kind kind_;
  int degree_ = 0;
  std::vector<QExpr> children_;
  CanonKey atom_key_;
  BigInt atom_order_ = 1;
  bool atom_schmidt_ = false;
};

QExpr trivial();
// S+(n); n <= 1 gives the trivial group.
QExpr splus(int n);
// Order 1 atoms collapse to the trivial group.
QExpr atom(const CanonKey& key, const BigInt& order, bool schmidt);
// Flattens, drops trivial factors, sorts by serialization.
QExpr free_product(std::vector<QExpr> factors);
// Wr(q, 1) = q and Wr(1, d) = S+(d).
QExpr wreath(const QExpr& base, int d);

std::string serialize(const QExpr& e);
QExpr parse_qexpr(std::string_view text);
nlohmann::ordered_json to_json(const QExpr& e);
bool qexpr_equal(const QExpr& a, const QExpr& b);

// Noncommutative function algebra means quantum symmetry.
bool is_commutative(const QExpr& e);
bool is_trivial(const QExpr& e);
// Order of the classical automorphism group (abelianization).
BigInt classical_order(const QExpr& e);
// True when no atom occurs: built from the trivial group by free and wreath
// products only.
bool in_jordan_grammar(const QExpr& e);

QExpr qu_rooted(const RootedForest& f);
QExpr qu_rooted_tree(const RootedTree& t);
// Graphs that are tree-cographs or G5-cographs (this covers cographs and
// forests); anything else raises Unsupported.
QExpr qu_expr(const Graph& g);

}  // namespace qgraph

#endif  // QGRAPH_QUANTUM_EXPR_HPP_
