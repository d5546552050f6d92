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
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pfalg/core.hpp"

namespace pfalg {

/// An ordered set of interned names.  Two universes are interchangeable when
/// they carry the same name set, regardless of declaration order.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw InputError("duplicate name '" + names_[i] + "' in universe");
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> index(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool same_set(const Universe& other) const {
    if (size() != other.size()) return false;
    for (const auto& n : names_)
      if (!other.index(n)) return false;
    return true;
  }

  bool same_sequence(const Universe& other) const {
    return names_ == other.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

inline UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

/// A partial function from a finite point universe to a finite value
/// universe.  Immutable by convention after construction: every operation
/// returns a fresh value and never touches its inputs, so instances are safe
/// to share across threads.
class PartialFunction {
 public:
  static constexpr int kUndefined = -1;

  PartialFunction(UniversePtr points, UniversePtr values)
      : points_(std::move(points)),
        values_(std::move(values)),
        graph_(static_cast<size_t>(points_->size()), kUndefined) {}

  static PartialFunction from_pairs(
      UniversePtr points, UniversePtr values,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    PartialFunction f(std::move(points), std::move(values));
    for (const auto& [p, v] : pairs) {
      auto pi = f.points_->index(p);
      if (!pi) throw InputError("point '" + p + "' not in universe");
      auto vi = f.values_->index(v);
      if (!vi) throw InputError("value '" + v + "' not in universe");
      if (f.graph_[static_cast<size_t>(*pi)] != kUndefined &&
          f.graph_[static_cast<size_t>(*pi)] != *vi)
        throw InputError("point '" + p + "' mapped twice");
      f.graph_[static_cast<size_t>(*pi)] = *vi;
    }
    return f;
  }

  const UniversePtr& points() const { return points_; }
  const UniversePtr& values() const { return values_; }

  bool defined(int point) const { return graph_[static_cast<size_t>(point)] != kUndefined; }
  int at(int point) const { return graph_[static_cast<size_t>(point)]; }

  void define(int point, int value) { graph_[static_cast<size_t>(point)] = value; }

  int domain_size() const {
    int k = 0;
    for (int v : graph_) k += (v != kUndefined);
    return k;
  }
  bool empty() const { return domain_size() == 0; }

  const std::vector<int>& graph() const { return graph_; }

  /// Literal text form: "{p1:v1, p2:v2}" in point-universe order; "{}" when empty.
  std::string to_literal() const { return literal_impl(", "); }

  /// Whitespace-free form usable as an element name in algebra files.
  std::string to_name() const { return literal_impl(","); }

  /// Name-based equality; universes only need to agree as sets.
  friend bool operator==(const PartialFunction& f, const PartialFunction& g) {
    if (f.points_ == g.points_ && f.values_ == g.values_)
      return f.graph_ == g.graph_;
    if (!f.points_->same_set(*g.points_) || !f.values_->same_set(*g.values_))
      return false;
    for (int p = 0; p < f.points_->size(); ++p) {
      int gp = *g.points_->index(f.points_->name(p));
      int fv = f.graph_[static_cast<size_t>(p)];
      int gv = g.graph_[static_cast<size_t>(gp)];
      if ((fv == kUndefined) != (gv == kUndefined)) return false;
      if (fv != kUndefined && f.values_->name(fv) != g.values_->name(gv))
        return false;
    }
    return true;
  }
  friend bool operator!=(const PartialFunction& f, const PartialFunction& g) {
    return !(f == g);
  }

 private:
  std::string literal_impl(const char* sep) const {
    std::string out = "{";
    bool first = true;
    for (int p = 0; p < points_->size(); ++p) {
      if (!defined(p)) continue;
      if (!first) out += sep;
      first = false;
      out += points_->name(p);
      out += ':';
      out += values_->name(at(p));
    }
    out += '}';
    return out;
  }

  UniversePtr points_;
  UniversePtr values_;
  std::vector<int> graph_;  // value index per point, kUndefined where undefined
};

namespace detail {

/// Returns g re-expressed over f's universes.  Throws InputError when the
/// universes do not agree as name sets.
inline PartialFunction aligned(const PartialFunction& f, const PartialFunction& g) {
  if (f.points() == g.points() && f.values() == g.values()) return g;
  if (f.points()->same_sequence(*g.points()) &&
      f.values()->same_sequence(*g.values())) {
    PartialFunction h(f.points(), f.values());
    for (int p = 0; p < f.points()->size(); ++p)
      if (g.defined(p)) h.define(p, g.at(p));
    return h;
  }
  if (!f.points()->same_set(*g.points()) || !f.values()->same_set(*g.values()))
    throw InputError("operands live over different universes");
  PartialFunction h(f.points(), f.values());
  for (int gp = 0; gp < g.points()->size(); ++gp) {
    if (!g.defined(gp)) continue;
    int p = *f.points()->index(g.points()->name(gp));
    int v = *f.values()->index(g.values()->name(g.at(gp)));
    h.define(p, v);
  }
  return h;
}

}  // namespace detail

/// f | g: agrees with f on dom(f) and with g on dom(g) \ dom(f).
inline PartialFunction override(const PartialFunction& f, const PartialFunction& g0) {
  PartialFunction g = detail::aligned(f, g0);
  PartialFunction r = f;
  for (int p = 0; p < f.points()->size(); ++p)
    if (!f.defined(p) && g.defined(p)) r.define(p, g.at(p));
  return r;
}

/// f + g: the union of f and g restricted to points where they do not conflict.
inline PartialFunction restricted_union(const PartialFunction& f,
                                        const PartialFunction& g0) {
  PartialFunction g = detail::aligned(f, g0);
  PartialFunction r(f.points(), f.values());
  for (int p = 0; p < f.points()->size(); ++p) {
    if (f.defined(p) && g.defined(p)) {
      if (f.at(p) == g.at(p)) r.define(p, f.at(p));
    } else if (f.defined(p)) {
      r.define(p, f.at(p));
    } else if (g.defined(p)) {
      r.define(p, g.at(p));
    }
  }
  return r;
}

/// f & g: intersection of the graphs.
inline PartialFunction intersect(const PartialFunction& f, const PartialFunction& g0) {
  PartialFunction g = detail::aligned(f, g0);
  PartialFunction r(f.points(), f.values());
  for (int p = 0; p < f.points()->size(); ++p)
    if (f.defined(p) && g.defined(p) && f.at(p) == g.at(p)) r.define(p, f.at(p));
  return r;
}

/// f \ g: difference of the graphs.
inline PartialFunction difference(const PartialFunction& f, const PartialFunction& g0) {
  PartialFunction g = detail::aligned(f, g0);
  PartialFunction r(f.points(), f.values());
  for (int p = 0; p < f.points()->size(); ++p)
    if (f.defined(p) && !(g.defined(p) && g.at(p) == f.at(p)))
      r.define(p, f.at(p));
  return r;
}

inline PartialFunction apply(OpSym op, const PartialFunction& f,
                             const PartialFunction& g) {
  switch (op) {
    case OpSym::Vee: return restricted_union(f, g);
    case OpSym::Or: return override(f, g);
    case OpSym::Meet: return intersect(f, g);
    case OpSym::Minus: return difference(f, g);
  }
  throw InputError("unknown operation");
}

/// Enumerates all of Par(X, Y) for the given universes, in a deterministic
/// order (the empty function first).
inline std::vector<PartialFunction> all_partial_functions(UniversePtr points,
                                                          UniversePtr values) {
  const int np = points->size();
  const int nv = values->size();
  std::vector<PartialFunction> out;
  std::vector<int> digits(static_cast<size_t>(np), 0);  // 0 = undefined, k = value k-1
  while (true) {
    PartialFunction f(points, values);
    for (int p = 0; p < np; ++p)
      if (digits[static_cast<size_t>(p)] > 0) f.define(p, digits[static_cast<size_t>(p)] - 1);
    out.push_back(std::move(f));
    int p = np - 1;
    while (p >= 0 && digits[static_cast<size_t>(p)] == nv) {
      digits[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    ++digits[static_cast<size_t>(p)];
  }
  return out;
}

}  // namespace pfalg
