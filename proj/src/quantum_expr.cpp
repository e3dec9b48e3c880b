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

#include "qgraph/quantum_expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "qgraph/errors.hpp"

namespace qgraph {

QExpr::QExpr() : kind_(Kind::kTrivial) {}

bool operator==(const QExpr& a, const QExpr& b) {
  return a.kind_ == b.kind_ && a.degree_ == b.degree_ &&
         a.children_ == b.children_ && a.atom_key_ == b.atom_key_ &&
         a.atom_order_ == b.atom_order_ && a.atom_schmidt_ == b.atom_schmidt_;
}

QExpr trivial() { return QExpr(); }

QExpr splus(int n) {
  if (n < 0) throw InvalidArgument("S+(n) needs n >= 0");
  QExpr e;
  if (n <= 1) return e;
  e.kind_ = QExpr::Kind::kSPlus;
  e.degree_ = n;
  return e;
}

QExpr atom(const CanonKey& key, const BigInt& order, bool schmidt) {
  if (order < 1) throw InvalidArgument("atom order must be positive");
  QExpr e;
  if (order == 1) return e;
  e.kind_ = QExpr::Kind::kAtom;
  e.atom_key_ = key;
  e.atom_order_ = order;
  e.atom_schmidt_ = schmidt;
  return e;
}

QExpr free_product(std::vector<QExpr> factors) {
  std::vector<std::pair<std::string, QExpr>> flat;
  for (auto& f : factors) {
    if (f.kind_ == QExpr::Kind::kTrivial) continue;
    if (f.kind_ == QExpr::Kind::kFree) {
      for (auto& c : f.children_) flat.emplace_back(serialize(c), c);
    } else {
      flat.emplace_back(serialize(f), std::move(f));
    }
  }
  if (flat.empty()) return trivial();
  if (flat.size() == 1) return std::move(flat.front().second);
  std::stable_sort(flat.begin(), flat.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  QExpr e;
  e.kind_ = QExpr::Kind::kFree;
  for (auto& [text, f] : flat) e.children_.push_back(std::move(f));
  return e;
}

QExpr wreath(const QExpr& base, int d) {
  if (d < 1) throw InvalidArgument("wreath degree must be positive");
  if (d == 1) return base;
  if (base.kind_ == QExpr::Kind::kTrivial) return splus(d);
  QExpr e;
  e.kind_ = QExpr::Kind::kWreath;
  e.degree_ = d;
  e.children_.push_back(base);
  return e;
}

std::string serialize(const QExpr& e) {
  switch (e.kind()) {
    case QExpr::Kind::kTrivial:
      return "1";
    case QExpr::Kind::kSPlus:
      return "S+(" + std::to_string(e.degree()) + ")";
    case QExpr::Kind::kAtom:
      return "Atom(" + to_hex(e.atom_key()) + ",aut=" + e.atom_order().str() +
             ",schmidt=" + (e.atom_schmidt() ? "1" : "0") + ")";
    case QExpr::Kind::kFree: {
      std::string out = "Free[";
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ",";
        out += serialize(e.children()[i]);
      }
      return out + "]";
    }
    case QExpr::Kind::kWreath:
      return "Wr(" + serialize(e.children().front()) + "," +
             std::to_string(e.degree()) + ")";
  }
  return "";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QExpr parse_all() {
    QExpr e = parse();
    if (pos_ != s_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("qexpr: " + what + " at offset " + std::to_string(pos_));
  }

  bool eat(std::string_view token) {
    if (s_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int() {
    std::string d = digits();
    if (d.size() > 9) fail("number too large");
    return std::stoi(d);
  }

  QExpr parse() {
    if (eat("1")) return trivial();
    if (eat("S+(")) {
      int n = small_int();
      expect(")");
      if (n < 2) fail("S+(n) needs n >= 2");
      return splus(n);
    }
    if (eat("Atom(")) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isxdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string key = from_hex(std::string(s_.substr(start, pos_ - start)));
      expect(",aut=");
      BigInt order(digits());
      expect(",schmidt=");
      bool schmidt = false;
      if (eat("1")) {
        schmidt = true;
      } else {
        expect("0");
      }
      expect(")");
      if (order < 2) fail("atom order must be at least 2");
      return atom(key, order, schmidt);
    }
    if (eat("Free[")) {
      std::vector<QExpr> factors{parse()};
      while (eat(",")) factors.push_back(parse());
      expect("]");
      if (factors.size() < 2) fail("free product needs two factors");
      return free_product(std::move(factors));
    }
    if (eat("Wr(")) {
      QExpr base = parse();
      expect(",");
      int d = small_int();
      expect(")");
      if (d < 2) fail("wreath degree must be at least 2");
      return wreath(base, d);
    }
    fail("unknown expression");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QExpr parse_qexpr(std::string_view text) { return Parser(text).parse_all(); }

nlohmann::ordered_json to_json(const QExpr& e) {
  nlohmann::ordered_json j;
  switch (e.kind()) {
    case QExpr::Kind::kTrivial:
      j["kind"] = "trivial";
      break;
    case QExpr::Kind::kSPlus:
      j["kind"] = "splus";
      j["n"] = e.degree();
      break;
    case QExpr::Kind::kAtom:
      j["kind"] = "atom";
      j["key"] = to_hex(e.atom_key());
      j["aut"] = e.atom_order().str();
      j["schmidt"] = e.atom_schmidt();
      break;
    case QExpr::Kind::kFree: {
      j["kind"] = "free";
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : e.children()) arr.push_back(to_json(c));
      j["factors"] = std::move(arr);
      break;
    }
    case QExpr::Kind::kWreath:
      j["kind"] = "wreath";
      j["base"] = to_json(e.children().front());
      j["d"] = e.degree();
      break;
  }
  return j;
}

bool qexpr_equal(const QExpr& a, const QExpr& b) { return a == b; }

bool is_commutative(const QExpr& e) {
  switch (e.kind()) {
    case QExpr::Kind::kTrivial:
      return true;
    case QExpr::Kind::kSPlus:
      return e.degree() <= 3;
    case QExpr::Kind::kAtom:
      // Atoms come from classes where quantum symmetry and the Schmidt
      // criterion coincide.
      return !e.atom_schmidt();
    case QExpr::Kind::kFree:
    case QExpr::Kind::kWreath:
      // Normal form leaves only nontrivial factors and bases.
      return false;
  }
  return false;
}

bool is_trivial(const QExpr& e) { return e.kind() == QExpr::Kind::kTrivial; }

BigInt classical_order(const QExpr& e) {
  switch (e.kind()) {
    case QExpr::Kind::kTrivial:
      return 1;
    case QExpr::Kind::kSPlus: {
      BigInt f = 1;
      for (int i = 2; i <= e.degree(); ++i) f *= i;
      return f;
    }
    case QExpr::Kind::kAtom:
      return e.atom_order();
    case QExpr::Kind::kFree: {
      BigInt p = 1;
      for (const auto& c : e.children()) p *= classical_order(c);
      return p;
    }
    case QExpr::Kind::kWreath: {
      BigInt base = classical_order(e.children().front());
      BigInt p = 1;
      for (int i = 1; i <= e.degree(); ++i) p *= base * i;
      return p;
    }
  }
  return 1;
}

bool in_jordan_grammar(const QExpr& e) {
  if (e.kind() == QExpr::Kind::kAtom) return false;
  for (const auto& c : e.children()) {
    if (!in_jordan_grammar(c)) return false;
  }
  return true;
}

QExpr qu_rooted_tree(const RootedTree& t) {
  validate(t);
  if (t.tree.n() == 1) return trivial();
  // Deleting the root leaves the quantum automorphism group unchanged.
  return qu_rooted(remove_root(t));
}

QExpr qu_rooted(const RootedForest& f) {
  std::map<CanonKey, std::pair<RootedTree, int>> groups;
  for (auto& comp : rooted_components(f)) {
    CanonKey key = rooted_tree_canonical(comp);
    auto it = groups.find(key);
    if (it != groups.end()) {
      ++it->second.second;
    } else {
      groups.emplace(std::move(key), std::make_pair(std::move(comp), 1));
    }
  }
  std::vector<QExpr> factors;
  for (const auto& [key, entry] : groups) {
    factors.push_back(wreath(qu_rooted_tree(entry.first), entry.second));
  }
  return free_product(std::move(factors));
}

namespace {

QExpr qu_node(const DecompTree& d) {
  if (d.kind == DecompTree::Kind::kLeaf) {
    const Graph& g = d.graph;
    if (g.n() == 1) return trivial();
    if (is_tree(g)) return qu_rooted_tree(psi(g));
    Graph c = complement(g);
    // A graph and its complement share their quantum automorphism group.
    if (is_tree(c)) return qu_rooted_tree(psi(c));
    auto s = schmidt_bruteforce(g);
    return atom(d.key, count_automorphisms(g), s.holds);
  }
  // Children are grouped by isomorphism. Inside the supported classes two
  // graphs are quantum isomorphic only when isomorphic, so this grouping is
  // the one the free wreath product formula requires.
  std::vector<QExpr> factors;
  for (const auto& c : d.children) factors.push_back(wreath(qu_node(c.tree), c.mult));
  return free_product(std::move(factors));
}

}  // namespace

QExpr qu_expr(const Graph& g) {
  if (g.n() == 0) throw InvalidArgument("empty graph");
  if (!recognize_tree_cograph(g) && !recognize_g5_cograph(g)) {
    throw Unsupported("quantum automorphism group is only computed for "
                      "tree-cographs and G5-cographs");
  }
  auto d = decompose(g, BaseClass::kSupported);
  if (!d) throw InternalError("supported graph failed to decompose");
  return qu_node(*d);
}

}  // namespace qgraph
