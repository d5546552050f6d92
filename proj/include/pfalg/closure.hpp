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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfalg/finite_algebra.hpp"
#include "pfalg/partial_function.hpp"

namespace pfalg {

/// An abstract algebra read off concrete partial functions, together with
/// the witnessing element-to-function map (functions[i] realises carrier
/// element i).
struct ClosureResult {
  FiniteAlgebra algebra;
  std::vector<PartialFunction> functions;
};

/// Least superset of the generators closed under the chosen operations.
/// Element identity is graph equality, never name equality; generators keep
/// their given names and discovered elements are named by their literal.
/// Always terminates: the carrier lives inside the finite Par(X, Y).
inline ClosureResult closure(const std::vector<PartialFunction>& generators,
                             const std::vector<std::string>& generator_names,
                             const std::vector<OpSym>& ops,
                             const std::string& name = "closure") {
  if (generators.empty()) throw InputError("closure needs at least one generator");
  if (ops.empty()) throw InputError("closure needs at least one operation");
  if (generator_names.size() != generators.size())
    throw InputError("generator names and functions differ in number");
  for (const PartialFunction& g : generators) {
    if (!g.points()->same_set(*generators[0].points()) ||
        !g.values()->same_set(*generators[0].values()))
      throw InputError("generators live over different universes");
  }

  std::vector<PartialFunction> elems;
  std::vector<std::string> names;
  std::map<std::vector<int>, int> seen;  // graph vector -> index
  auto add = [&](const PartialFunction& f, const std::string& n) -> int {
    PartialFunction aligned = detail::aligned(generators[0], f);
    auto [it, fresh] = seen.emplace(aligned.graph(), static_cast<int>(elems.size()));
    if (fresh) {
      elems.push_back(aligned);
      names.push_back(n.empty() ? aligned.to_name() : n);
    }
    return it->second;
  };
  for (size_t g = 0; g < generators.size(); ++g)
    add(generators[g], generator_names[g]);

  // Worklist to a fixed point, scanning pairs in index order per op.
  for (size_t next = 0; next < elems.size(); ++next) {
    for (OpSym op : ops) {
      for (size_t other = 0; other <= next; ++other) {
        add(apply(op, elems[next], elems[other]), "");
        add(apply(op, elems[other], elems[next]), "");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  FiniteAlgebra alg(name, names);
  for (OpSym op : ops) {
    std::vector<int> t(static_cast<size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PartialFunction r = apply(op, elems[static_cast<size_t>(i)],
                                  elems[static_cast<size_t>(j)]);
        t[static_cast<size_t>(i * n + j)] = seen.at(detail::aligned(generators[0], r).graph());
      }
    alg.set_table(op, std::move(t));
  }
  return {std::move(alg), std::move(elems)};
}

inline ClosureResult closure(const std::vector<PartialFunction>& generators,
                             const std::vector<OpSym>& ops,
                             const std::string& name = "closure") {
  std::vector<std::string> names;
  for (const PartialFunction& g : generators) names.push_back(g.to_name());
  return closure(generators, names, ops, name);
}

}  // namespace pfalg
