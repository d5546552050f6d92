// Copyright 2026 The pfalg Authors
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

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfalg/core.hpp"

namespace pfalg {

/// A finite algebra given by operation tables over a named carrier.
/// Elements are referenced by carrier index everywhere except I/O.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::vector<std::string> elements)
      : name_(std::move(name)), elements_(std::move(elements)) {
    if (elements_.empty()) throw InputError("carrier must be non-empty");
    for (int i = 0; i < size(); ++i) {
      if (!index_.emplace(elements_[static_cast<size_t>(i)], i).second)
        throw InputError("duplicate element '" + elements_[static_cast<size_t>(i)] + "'");
    }
  }

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int i) const { return elements_[static_cast<size_t>(i)]; }

  std::optional<int> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool has(OpSym op) const { return tables_.count(op) > 0; }

  /// Declared operations in the fixed order vee, or, meet, minus.
  std::vector<OpSym> signature() const {
    std::vector<OpSym> sig;
    for (OpSym op : kAllOps)
      if (has(op)) sig.push_back(op);
    return sig;
  }

  int op(OpSym o, int i, int j) const {
    return tables_.at(o)[static_cast<size_t>(i * size() + j)];
  }

  const std::vector<int>& table(OpSym o) const { return tables_.at(o); }

  void set_table(OpSym o, std::vector<int> table) {
    const size_t n = static_cast<size_t>(size());
    if (table.size() != n * n)
      throw InputError("table for '" + std::string(op_name(o)) + "' has wrong size");
    for (int v : table)
      if (v < 0 || v >= size())
        throw InputError("table entry out of range for '" + std::string(op_name(o)) + "'");
    tables_[o] = std::move(table);
  }

  void drop_table(OpSym o) { tables_.erase(o); }

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::map<OpSym, std::vector<int>> tables_;
};

/// Restriction of an algebra to a subset of its declared operations.
inline FiniteAlgebra reduct(const FiniteAlgebra& a, const std::vector<OpSym>& ops) {
  FiniteAlgebra r(a.name(), a.elements());
  for (OpSym o : ops) {
    if (!a.has(o))
      throw SignatureError("algebra '" + a.name() + "' has no '" +
                           std::string(op_name(o)) + "' table");
    r.set_table(o, a.table(o));
  }
  return r;
}

namespace detail {

inline std::vector<int> derive_or_table(const FiniteAlgebra& a) {
  const int n = a.size();
  std::vector<int> t(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(i * n + j)] = a.op(OpSym::Vee, i, a.op(OpSym::Vee, i, j));
  return t;
}

}  // namespace detail

/// Materialises the override table a|b = a+(a+b).  When an override table is
/// already declared it is checked against the derivation entry by entry.
inline FiniteAlgebra derived_override(const FiniteAlgebra& a) {
  if (!a.has(OpSym::Vee))
    throw SignatureError("derived override needs a vee table");
  std::vector<int> t = detail::derive_or_table(a);
  const int n = a.size();
  if (a.has(OpSym::Or)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.op(OpSym::Or, i, j) != t[static_cast<size_t>(i * n + j)])
          throw ConsistencyError(
              "declared override table disagrees with the derivation at (" +
              a.element(i) + ", " + a.element(j) + "): declared " +
              a.element(a.op(OpSym::Or, i, j)) + ", derived " +
              a.element(t[static_cast<size_t>(i * n + j)]));
    return a;
  }
  FiniteAlgebra r = a;
  r.set_table(OpSym::Or, std::move(t));
  return r;
}

/// Ensures an override table exists, deriving (and cross-checking) from vee
/// when needed.
inline FiniteAlgebra with_override(const FiniteAlgebra& a) {
  if (a.has(OpSym::Vee)) return derived_override(a);
  if (a.has(OpSym::Or)) return a;
  throw SignatureError("algebra '" + a.name() + "' has neither vee nor or");
}

/// Meet derived from difference: a&b = a\(a\b).
inline std::vector<int> derived_meet_table(const FiniteAlgebra& a) {
  if (!a.has(OpSym::Minus))
    throw SignatureError("derived meet needs a minus table");
  const int n = a.size();
  std::vector<int> t(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(i * n + j)] = a.op(OpSym::Minus, i, a.op(OpSym::Minus, i, j));
  return t;
}

/// Restricted union derived from override and meet: a+b = (a|b)&(b|a).
inline std::vector<int> derived_vee_table(const FiniteAlgebra& a) {
  if (!a.has(OpSym::Or) || !a.has(OpSym::Meet))
    throw SignatureError("derived vee needs or and meet tables");
  const int n = a.size();
  std::vector<int> t(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(i * n + j)] =
          a.op(OpSym::Meet, a.op(OpSym::Or, i, j), a.op(OpSym::Or, j, i));
  return t;
}

/// The two relations read off the override table: a <= b iff a|b = b, and
/// a <~ b iff b|a = b.  No validity assumptions are made here; callers check
/// reflexivity or antisymmetry where they need them.
struct Orders {
  int n = 0;
  std::vector<uint8_t> leq_bits;      // a|b == b
  std::vector<uint8_t> lesssim_bits;  // b|a == b
  bool leq(int i, int j) const { return leq_bits[static_cast<size_t>(i * n + j)] != 0; }
  bool lesssim(int i, int j) const {
    return lesssim_bits[static_cast<size_t>(i * n + j)] != 0;
  }
};

inline Orders order_relations(const FiniteAlgebra& a0) {
  FiniteAlgebra a = with_override(a0);
  const int n = a.size();
  Orders o;
  o.n = n;
  o.leq_bits.assign(static_cast<size_t>(n * n), 0);
  o.lesssim_bits.assign(static_cast<size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      o.leq_bits[static_cast<size_t>(i * n + j)] = (a.op(OpSym::Or, i, j) == j);
      o.lesssim_bits[static_cast<size_t>(i * n + j)] = (a.op(OpSym::Or, j, i) == j);
    }
  return o;
}

/// A partition of the carrier in restricted-growth canonical form: block ids
/// are numbered by first occurrence, so equal partitions compare equal.
class Partition {
 public:
  static Partition from_block_of(std::vector<int> block_of) {
    Partition p;
    p.block_of_ = std::move(block_of);
    p.canonicalise();
    return p;
  }

  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> bo(static_cast<size_t>(n), -1);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
      if (blocks[static_cast<size_t>(b)].empty())
        throw InputError("empty block in partition");
      for (int e : blocks[static_cast<size_t>(b)]) {
        if (e < 0 || e >= n) throw InputError("partition block element out of range");
        if (bo[static_cast<size_t>(e)] != -1)
          throw InputError("blocks are not disjoint");
        bo[static_cast<size_t>(e)] = b;
      }
    }
    for (int e = 0; e < n; ++e)
      if (bo[static_cast<size_t>(e)] == -1)
        throw InputError("blocks do not cover the carrier");
    return from_block_of(std::move(bo));
  }

  static Partition discrete(int n) {
    std::vector<int> bo(static_cast<size_t>(n));
    std::iota(bo.begin(), bo.end(), 0);
    return from_block_of(std::move(bo));
  }

  static Partition full(int n) {
    return from_block_of(std::vector<int>(static_cast<size_t>(n), 0));
  }

  int size() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const { return num_blocks_; }
  int block_of(int e) const { return block_of_[static_cast<size_t>(e)]; }
  const std::vector<int>& block_assignment() const { return block_of_; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(static_cast<size_t>(num_blocks_));
    for (int e = 0; e < size(); ++e)
      out[static_cast<size_t>(block_of_[static_cast<size_t>(e)])].push_back(e);
    return out;
  }

  friend bool operator==(const Partition& p, const Partition& q) {
    return p.block_of_ == q.block_of_;
  }
  friend bool operator<(const Partition& p, const Partition& q) {
    return p.block_of_ < q.block_of_;
  }

  /// Coarsest common refinement (meet in the partition lattice).
  static Partition intersection(const Partition& p, const Partition& q) {
    std::map<std::pair<int, int>, int> ids;
    std::vector<int> bo(static_cast<size_t>(p.size()));
    for (int e = 0; e < p.size(); ++e) {
      auto key = std::make_pair(p.block_of(e), q.block_of(e));
      auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
      bo[static_cast<size_t>(e)] = it->second;
    }
    return from_block_of(std::move(bo));
  }

  bool refines(const Partition& coarser) const {
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (block_of(i) == block_of(j) &&
            coarser.block_of(i) != coarser.block_of(j))
          return false;
    return true;
  }

 private:
  void canonicalise() {
    std::map<int, int> remap;
    for (int& b : block_of_) {
      auto [it, fresh] = remap.emplace(b, static_cast<int>(remap.size()));
      b = it->second;
    }
    num_blocks_ = static_cast<int>(remap.size());
  }

  std::vector<int> block_of_;
  int num_blocks_ = 0;
};

/// Witness that a partition fails compatibility: op(a,b) and op(a2,b2) land
/// in different blocks although a ~ a2 and b ~ b2.
struct CongruenceViolation {
  OpSym op;
  int a, a2, b, b2;
  std::string describe(const FiniteAlgebra& alg) const {
    return std::string(op_name(op)) + "(" + alg.element(a) + "," + alg.element(b) +
           ") and " + std::string(op_name(op)) + "(" + alg.element(a2) + "," +
           alg.element(b2) + ") fall in different blocks";
  }
};

inline std::optional<CongruenceViolation> congruence_violation(
    const FiniteAlgebra& a, const Partition& p) {
  if (p.size() != a.size()) throw InputError("partition does not cover the carrier");
  const int n = a.size();
  for (OpSym o : a.signature()) {
    for (int x = 0; x < n; ++x)
      for (int x2 = x; x2 < n; ++x2) {
        if (p.block_of(x) != p.block_of(x2)) continue;
        for (int y = 0; y < n; ++y)
          for (int y2 = 0; y2 < n; ++y2) {
            if (p.block_of(y) != p.block_of(y2)) continue;
            if (p.block_of(a.op(o, x, y)) != p.block_of(a.op(o, x2, y2)))
              return CongruenceViolation{o, x, x2, y, y2};
          }
      }
  }
  return std::nullopt;
}

inline bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  return !congruence_violation(a, p).has_value();
}

struct QuotientResult {
  FiniteAlgebra algebra;
  std::vector<int> projection;  // carrier index -> block index
};

/// Quotient by a congruence.  Singleton blocks keep their element's name;
/// larger blocks are named "{e1,e2,...}".
inline QuotientResult quotient(const FiniteAlgebra& a, const Partition& p) {
  if (auto v = congruence_violation(a, p))
    throw InputError("partition is not a congruence: " + v->describe(a));
  auto blocks = p.blocks();
  std::vector<std::string> names;
  names.reserve(blocks.size());
  for (const auto& bl : blocks) {
    if (bl.size() == 1) {
      names.push_back(a.element(bl[0]));
    } else {
      std::string n = "{";
      for (size_t k = 0; k < bl.size(); ++k) {
        if (k) n += ',';
        n += a.element(bl[k]);
      }
      n += '}';
      names.push_back(std::move(n));
    }
  }
  FiniteAlgebra q(a.name() + "-quotient", std::move(names));
  const int m = p.num_blocks();
  for (OpSym o : a.signature()) {
    std::vector<int> t(static_cast<size_t>(m * m));
    for (int b1 = 0; b1 < m; ++b1)
      for (int b2 = 0; b2 < m; ++b2)
        t[static_cast<size_t>(b1 * m + b2)] =
            p.block_of(a.op(o, blocks[static_cast<size_t>(b1)][0],
                            blocks[static_cast<size_t>(b2)][0]));
    q.set_table(o, std::move(t));
  }
  return {std::move(q), p.block_assignment()};
}

namespace detail {

/// Smallest congruence containing the pairs already merged in `uf`.
/// Plain worklist closure: whenever two elements are merged, their rows and
/// columns are merged too.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (y < x) std::swap(x, y);
    parent_[static_cast<size_t>(y)] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline Partition congruence_generated_by(const FiniteAlgebra& a,
                                         const std::vector<std::pair<int, int>>& pairs) {
  const int n = a.size();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [x, y] : pairs)
    if (uf.unite(x, y)) work.emplace_back(x, y);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (OpSym o : a.signature()) {
      for (int z = 0; z < n; ++z) {
        int l1 = a.op(o, x, z), l2 = a.op(o, y, z);
        if (uf.unite(l1, l2)) work.emplace_back(l1, l2);
        int r1 = a.op(o, z, x), r2 = a.op(o, z, y);
        if (uf.unite(r1, r2)) work.emplace_back(r1, r2);
      }
    }
  }
  std::vector<int> bo(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e) bo[static_cast<size_t>(e)] = uf.find(e);
  return Partition::from_block_of(std::move(bo));
}

}  // namespace detail

inline Partition principal_congruence(const FiniteAlgebra& a, int x, int y) {
  return detail::congruence_generated_by(a, {{x, y}});
}

/// All congruences: principal congruences closed under join, which is sound
/// and complete on a finite algebra.  Output order is deterministic: finest
/// first, then by canonical block assignment.
inline std::vector<Partition> enumerate_congruences(const FiniteAlgebra& a,
                                                    int bound = 8) {
  const int n = a.size();
  if (n > bound)
    throw SizeError("carrier of size " + std::to_string(n) +
                    " exceeds the congruence enumeration bound " +
                    std::to_string(bound));
  std::set<Partition> all;
  all.insert(Partition::discrete(n));
  std::vector<Partition> fresh;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Partition p = principal_congruence(a, i, j);
      if (all.insert(p).second) fresh.push_back(p);
    }
  // Close under pairwise join.  The join of two congruences is the congruence
  // generated by all pairs merged in either.
  while (!fresh.empty()) {
    Partition p = fresh.back();
    fresh.pop_back();
    std::vector<Partition> snapshot(all.begin(), all.end());
    for (const Partition& q : snapshot) {
      std::vector<std::pair<int, int>> pairs;
      for (int e = 1; e < n; ++e) {
        for (int e2 = 0; e2 < e; ++e2) {
          if (p.block_of(e) == p.block_of(e2) || q.block_of(e) == q.block_of(e2))
            pairs.emplace_back(e2, e);
        }
      }
      Partition j = detail::congruence_generated_by(a, pairs);
      if (all.insert(j).second) fresh.push_back(j);
    }
  }
  std::vector<Partition> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
    if (p.num_blocks() != q.num_blocks()) return p.num_blocks() > q.num_blocks();
    return p.block_assignment() < q.block_assignment();
  });
  return out;
}

namespace detail {

/// Label-invariant fingerprint used to prune isomorphism search.
inline std::vector<long long> element_profile(const FiniteAlgebra& a, int x) {
  std::vector<long long> prof;
  const int n = a.size();
  for (OpSym o : a.signature()) {
    prof.push_back(a.op(o, x, x) == x);
    long long indeg = 0, rowself = 0, colself = 0, rowarg = 0, colarg = 0;
    std::set<int> rowdist, coldist;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a.op(o, i, j) == x) ++indeg;
    for (int j = 0; j < n; ++j) {
      rowself += (a.op(o, x, j) == x);
      colself += (a.op(o, j, x) == x);
      rowarg += (a.op(o, x, j) == j);
      colarg += (a.op(o, j, x) == j);
      rowdist.insert(a.op(o, x, j));
      coldist.insert(a.op(o, j, x));
    }
    prof.insert(prof.end(), {indeg, rowself, colself, rowarg, colarg,
                             static_cast<long long>(rowdist.size()),
                             static_cast<long long>(coldist.size())});
  }
  if (a.has(OpSym::Or) || a.has(OpSym::Vee)) {
    Orders ord = order_relations(a);
    long long up = 0, down = 0;
    for (int j = 0; j < n; ++j) {
      up += ord.leq(x, j);
      down += ord.leq(j, x);
    }
    prof.push_back(up);
    prof.push_back(down);
  }
  return prof;
}

inline bool commutes_everywhere(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                const std::vector<int>& map) {
  const int n = a.size();
  for (OpSym o : a.signature())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b.op(o, map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]) !=
            map[static_cast<size_t>(a.op(o, i, j))])
          return false;
  return true;
}

inline bool extend_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                               std::vector<int>& map, std::vector<uint8_t>& used,
                               int next,
                               const std::vector<std::vector<long long>>& pa,
                               const std::vector<std::vector<long long>>& pb) {
  const int n = a.size();
  // The incremental checks below only see pairs whose result is already
  // mapped, so the complete map still needs one full pass.
  if (next == n) return commutes_everywhere(a, b, map);
  for (int cand = 0; cand < n; ++cand) {
    if (used[static_cast<size_t>(cand)]) continue;
    if (pa[static_cast<size_t>(next)] != pb[static_cast<size_t>(cand)]) continue;
    bool ok = true;
    for (OpSym o : a.signature()) {
      for (int j = 0; j <= next && ok; ++j) {
        if (map[static_cast<size_t>(j)] < 0) continue;
        int mj = (j == next) ? cand : map[static_cast<size_t>(j)];
        int r1 = a.op(o, next, j);
        if (r1 <= next && (r1 == next || map[static_cast<size_t>(r1)] >= 0)) {
          int img = (r1 == next) ? cand : map[static_cast<size_t>(r1)];
          if (b.op(o, cand, mj) != img) ok = false;
        }
        int r2 = a.op(o, j, next);
        if (ok && r2 <= next && (r2 == next || map[static_cast<size_t>(r2)] >= 0)) {
          int img = (r2 == next) ? cand : map[static_cast<size_t>(r2)];
          if (b.op(o, mj, cand) != img) ok = false;
        }
      }
    }
    if (!ok) continue;
    map[static_cast<size_t>(next)] = cand;
    used[static_cast<size_t>(cand)] = 1;
    if (extend_isomorphism(a, b, map, used, next + 1, pa, pb)) return true;
    map[static_cast<size_t>(next)] = -1;
    used[static_cast<size_t>(cand)] = 0;
  }
  return false;
}

}  // namespace detail

/// A carrier bijection commuting with every table, or nullopt when none
/// exists.  Backtracking with element-profile pruning; candidates are tried
/// in carrier order, so the returned bijection is deterministic.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteAlgebra& a,
                                                        const FiniteAlgebra& b) {
  if (a.signature() != b.signature())
    throw SignatureError("isomorphism check needs equal signatures");
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  std::vector<std::vector<long long>> pa, pb;
  for (int i = 0; i < n; ++i) {
    pa.push_back(detail::element_profile(a, i));
    pb.push_back(detail::element_profile(b, i));
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<uint8_t> used(static_cast<size_t>(n), 0);
  if (!detail::extend_isomorphism(a, b, map, used, 0, pa, pb)) return std::nullopt;
  return map;
}

/// The flat algebra on n elements: bottom "0", all other elements maximal,
/// a+b = 0 for distinct non-bottom a, b.
inline FiniteAlgebra make_flat(int n, bool with_or = true) {
  if (n < 1) throw InputError("flat algebra needs at least one element");
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = 1; i < n; ++i) names.push_back("m" + std::to_string(i));
  FiniteAlgebra a("flat" + std::to_string(n), std::move(names));
  std::vector<int> t(static_cast<size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(i * n + j)] = (i == 0) ? j : (j == 0 || i == j) ? i : 0;
  a.set_table(OpSym::Vee, std::move(t));
  if (with_or) return derived_override(a);
  return a;
}

/// True when the vee table has flat shape: a bottom that is neutral, and
/// distinct non-bottom elements meeting at the bottom.
inline bool is_flat(const FiniteAlgebra& a) {
  if (!a.has(OpSym::Vee)) throw SignatureError("flatness check needs a vee table");
  const int n = a.size();
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (a.op(OpSym::Vee, z, i) != i || a.op(OpSym::Vee, i, z) != i) ok = false;
      if (a.op(OpSym::Vee, i, i) != i) ok = false;
      for (int j = 0; j < n && ok; ++j)
        if (i != j && i != z && j != z && a.op(OpSym::Vee, i, j) != z) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace pfalg
