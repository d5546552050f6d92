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

#include <string>
#include <vector>

#include "pfalg/law.hpp"

namespace pfalg {

/// A named axiom suite: the laws an algebra of the given signature must pass
/// to be functional (representable by partial functions under the standard
/// interpretations).
struct Suite {
  std::string name;
  std::vector<OpSym> signature;
  std::vector<Law> laws;

  const Law* find_law(std::string_view law_name) const {
    for (const Law& l : laws)
      if (l.name == law_name) return &l;
    return nullptr;
  }
};

namespace detail {

inline Law mk_law(const char* name, const char* body, const char* citation) {
  return parse_law(body, name, citation);
}

/// Rewrites every meet node as a\(a\b), the definition used for the
/// difference signature.  Shared subterms are duplicated; arenas stay small.
inline int eliminate_meet_node(const Law& src, int node, Law& dst) {
  const TermNode& t = src.nodes[static_cast<size_t>(node)];
  if (t.is_var()) {
    TermNode v;
    v.var = t.var;
    dst.nodes.push_back(v);
    return static_cast<int>(dst.nodes.size()) - 1;
  }
  int l = eliminate_meet_node(src, t.lhs, dst);
  int r = eliminate_meet_node(src, t.rhs, dst);
  if (t.op != OpSym::Meet) {
    TermNode n;
    n.op = t.op;
    n.lhs = l;
    n.rhs = r;
    dst.nodes.push_back(n);
    return static_cast<int>(dst.nodes.size()) - 1;
  }
  TermNode inner;  // l \ r
  inner.op = OpSym::Minus;
  inner.lhs = l;
  inner.rhs = r;
  dst.nodes.push_back(inner);
  TermNode outer;  // l \ (l \ r)
  outer.op = OpSym::Minus;
  outer.lhs = l;
  outer.rhs = static_cast<int>(dst.nodes.size()) - 1;
  dst.nodes.push_back(outer);
  return static_cast<int>(dst.nodes.size()) - 1;
}

inline Law eliminate_meet(const Law& src) {
  Law out;
  out.name = src.name;
  out.citation = src.citation + ", meet spelled a\\(a\\b)";
  out.vars = src.vars;
  for (const Atom& p : src.premises) {
    Atom a;
    a.rel = p.rel;
    a.lhs = eliminate_meet_node(src, p.lhs, out);
    a.rhs = eliminate_meet_node(src, p.rhs, out);
    out.premises.push_back(a);
  }
  Atom c;
  c.rel = src.conclusion.rel;
  c.lhs = eliminate_meet_node(src, src.conclusion.lhs, out);
  c.rhs = eliminate_meet_node(src, src.conclusion.rhs, out);
  out.conclusion = c;
  return out;
}

inline std::vector<Law> lrb_laws() {
  return {
      mk_law("or-assoc", "a|(b|c) = (a|b)|c", "left regular band axiom (1)"),
      mk_law("or-idem", "a|a = a", "left regular band axiom (2)"),
      mk_law("or-lrb", "a|b = (a|b)|a", "left regular band axiom (3)"),
  };
}

inline std::vector<Law> meet_semilattice_laws() {
  return {
      mk_law("meet-comm", "a&b = b&a", "meet semilattice commutativity"),
      mk_law("meet-assoc", "a&(b&c) = (a&b)&c", "meet semilattice associativity"),
      mk_law("meet-idem", "a&a = a", "meet semilattice idempotence"),
  };
}

// The o-semilattice order is the meet order, so s <= t is spelled s&t = s.
inline std::vector<Law> osl_laws() {
  std::vector<Law> laws = meet_semilattice_laws();
  laws.push_back(
      mk_law("osl-1", "x&(x|y) = x", "o-semilattice axiom (1): x below x|y"));
  laws.push_back(mk_law("osl-2", "((x&y)|(y&z)) & y = (x&y)|(y&z)",
                        "o-semilattice axiom (2): (x&y)|(y&z) below y"));
  laws.push_back(
      mk_law("osl-3", "(x|y) & (x|(y&(x|y))) = x|y",
             "o-semilattice axiom (3): x|y below x|(y&(x|y))"));
  laws.push_back(mk_law("osl-4", "(x&z) & ((x&y)|z) = x&z",
                        "o-semilattice axiom (4): x&z below (x&y)|z"));
  return laws;
}

inline Suite build_lrb() {
  return Suite{"lrb", {OpSym::Or}, lrb_laws()};
}

inline Suite build_osl() {
  return Suite{"osl", {OpSym::Or, OpSym::Meet}, osl_laws()};
}

inline Suite build_ado() {
  std::vector<Law> laws = osl_laws();
  laws.push_back(mk_law(
      "ado-dist",
      "(a&d)|((b&d)&(c&d)) = ((a&d)|(b&d)) & ((a&d)|(c&d))",
      "distributivity of each principal ideal"));
  laws.push_back(mk_law("or-assoc", "a|(b|c) = (a|b)|c",
                        "override associativity"));
  return Suite{"ado", {OpSym::Or, OpSym::Meet}, std::move(laws)};
}

inline std::vector<Law> ado_alt_laws() {
  std::vector<Law> laws = lrb_laws();
  for (Law& l : meet_semilattice_laws()) laws.push_back(std::move(l));
  laws.push_back(mk_law("link-1", "a&(a|b) = a",
                        "meet order below override order"));
  laws.push_back(mk_law("link-2", "(a&b)|b = b",
                        "override order below meet order"));
  laws.push_back(mk_law("ext-dist", "a|(b&c) = (a|b)&(a|c)",
                        "extended distributivity"));
  laws.push_back(mk_law("alt-4", "a&c <= (a&b)|c",
                        "o-semilattice axiom (4), override-order form"));
  return laws;
}

inline Suite build_ado_alt() {
  return Suite{"ado-alt", {OpSym::Or, OpSym::Meet}, ado_alt_laws()};
}

inline Suite build_vee() {
  std::vector<Law> laws = {
      mk_law("vee-comm", "a+b = b+a", "restricted union commutativity"),
      mk_law("vee-idem", "a+a = a", "restricted union idempotence"),
  };
  for (Law& l : lrb_laws()) {
    l.citation += " for the derived override a+(a+b)";
    laws.push_back(std::move(l));
  }
  laws.push_back(mk_law("vee-absorb", "(a+b)|(a|b) = a|b",
                        "restricted union below override"));
  laws.push_back(mk_law("vee-dist", "a|(b+c) = (a|b)+(a|c)",
                        "override distributes over restricted union"));
  laws.push_back(mk_law(
      "vee-quasi",
      "d <~ a, d <~ b, d <~ c, d <~ a+b, d <~ b+c => d <~ a+c",
      "domain transfer quasiequation"));
  return Suite{"vee", {OpSym::Vee}, std::move(laws)};
}

inline Suite build_od() {
  std::vector<Law> laws;
  for (const Law& l : ado_alt_laws()) laws.push_back(eliminate_meet(l));
  {
    // (a\b)&b = (c\d)&d: the value is a constant, the zero.
    Law base = mk_law("od-zero", "(a\\b)&b = (c\\d)&d",
                      "difference is disjoint from the subtrahend");
    laws.push_back(eliminate_meet(base));
    laws.back().name = "od-zero";
  }
  {
    Law base = mk_law("od-decomp", "(a\\b)|(a&b) = a",
                      "difference and meet decompose the minuend");
    laws.push_back(eliminate_meet(base));
    laws.back().name = "od-decomp";
  }
  return Suite{"od", {OpSym::Or, OpSym::Minus}, std::move(laws)};
}

}  // namespace detail

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites = {
      detail::build_lrb(),  detail::build_osl(), detail::build_ado(),
      detail::build_ado_alt(), detail::build_vee(), detail::build_od(),
  };
  return suites;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const Suite& s : all_suites()) out.push_back(s.name);
  return out;
}

inline const Suite& get_suite(std::string_view name) {
  for (const Suite& s : all_suites())
    if (s.name == name) return s;
  throw InputError("unknown suite '" + std::string(name) +
                   "' (expected one of lrb, osl, ado, ado-alt, vee, od)");
}

}  // namespace pfalg
