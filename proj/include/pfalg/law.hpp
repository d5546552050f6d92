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

#include <cctype>
#include <cstdint>
#include <istream>
#include <string>
#include <thread>
#include <vector>

#include "pfalg/core.hpp"
#include "pfalg/finite_algebra.hpp"

namespace pfalg {

/// One node of a term: either a variable (var >= 0) or a binary operation
/// over two earlier nodes.  Terms live in the owning Law's arena; children
/// always precede parents, so a single forward pass evaluates everything.
struct TermNode {
  int var = -1;
  OpSym op = OpSym::Vee;
  int lhs = -1;
  int rhs = -1;
  bool is_var() const { return var >= 0; }
};

enum class Rel { Eq, Leq, DomLeq };

inline std::string_view rel_text(Rel r) {
  switch (r) {
    case Rel::Eq: return "=";
    case Rel::Leq: return "<=";
    case Rel::DomLeq: return "<~";
  }
  return "?";
}

struct Atom {
  Rel rel = Rel::Eq;
  int lhs = -1;  // node index
  int rhs = -1;
};

/// An equation or quasiequation.  Variables are implicitly universally
/// quantified and listed in order of first appearance.  The order relations
/// are sugar over override: s <= t means s|t = t, and s <~ t means t|s = t.
class Law {
 public:
  std::string name;
  std::string citation;
  std::vector<std::string> vars;
  std::vector<TermNode> nodes;
  std::vector<Atom> premises;
  Atom conclusion;

  bool is_quasi() const { return !premises.empty(); }

  /// Operations evaluation needs.  Order sugar needs the override table.
  std::vector<OpSym> ops_used() const {
    bool need[4] = {false, false, false, false};
    for (const TermNode& t : nodes)
      if (!t.is_var()) need[static_cast<int>(t.op)] = true;
    for (const Atom* a : all_atoms())
      if (a->rel != Rel::Eq) need[static_cast<int>(OpSym::Or)] = true;
    std::vector<OpSym> out;
    for (OpSym o : kAllOps)
      if (need[static_cast<int>(o)]) out.push_back(o);
    return out;
  }

  std::vector<const Atom*> all_atoms() const {
    std::vector<const Atom*> out;
    for (const Atom& p : premises) out.push_back(&p);
    out.push_back(&conclusion);
    return out;
  }

  std::string term_text(int node) const {
    const TermNode& t = nodes[static_cast<size_t>(node)];
    if (t.is_var()) return vars[static_cast<size_t>(t.var)];
    std::string l = term_text(t.lhs);
    std::string r = term_text(t.rhs);
    if (!nodes[static_cast<size_t>(t.lhs)].is_var()) l = "(" + l + ")";
    if (!nodes[static_cast<size_t>(t.rhs)].is_var()) r = "(" + r + ")";
    return l + op_symbol(t.op) + r;
  }

  std::string atom_text(const Atom& a) const {
    return term_text(a.lhs) + " " + std::string(rel_text(a.rel)) + " " +
           term_text(a.rhs);
  }

  std::string body_text() const {
    std::string out;
    for (size_t i = 0; i < premises.size(); ++i) {
      if (i) out += ", ";
      out += atom_text(premises[i]);
    }
    if (!premises.empty()) out += " => ";
    out += atom_text(conclusion);
    return out;
  }
};

namespace detail {

class LawParser {
 public:
  LawParser(std::string_view text, int line) : text_(text), line_(line) {}

  Law parse() {
    Law law;
    law_ = &law;
    law.premises.clear();
    std::vector<Atom> atoms;
    atoms.push_back(parse_atom());
    while (peek() == ',') {
      get();
      atoms.push_back(parse_atom());
    }
    skip_ws();
    if (peek() == '=' && peek(1) == '>') {
      get();
      get();
      law.premises = std::move(atoms);
      law.conclusion = parse_atom();
    } else {
      if (atoms.size() != 1)
        fail("expected '=>' after premise list");
      law.conclusion = atoms[0];
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return law;
  }

 private:
  Atom parse_atom() {
    Atom a;
    a.lhs = parse_term();
    skip_ws();
    if (peek() == '=' && peek(1) != '>') {
      get();
      a.rel = Rel::Eq;
    } else if (peek() == '<' && peek(1) == '=') {
      get();
      get();
      a.rel = Rel::Leq;
    } else if (peek() == '<' && peek(1) == '~') {
      get();
      get();
      a.rel = Rel::DomLeq;
    } else {
      fail("expected '=', '<=' or '<~'");
    }
    a.rhs = parse_term();
    return a;
  }

  // All four operators share one precedence level and associate left.
  int parse_term() {
    int node = parse_primary();
    while (true) {
      skip_ws();
      char c = peek();
      auto op = op_from_symbol(c);
      if (!op) return node;
      get();
      int rhs = parse_primary();
      TermNode t;
      t.var = -1;
      t.op = *op;
      t.lhs = node;
      t.rhs = rhs;
      law_->nodes.push_back(t);
      node = static_cast<int>(law_->nodes.size()) - 1;
    }
  }

  int parse_primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      int node = parse_term();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      get();
      return node;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (std::isalnum(static_cast<unsigned char>(peek_raw())) ||
             peek_raw() == '_')
        ident += get();
      int v = -1;
      for (size_t k = 0; k < law_->vars.size(); ++k)
        if (law_->vars[k] == ident) v = static_cast<int>(k);
      if (v < 0) {
        law_->vars.push_back(ident);
        v = static_cast<int>(law_->vars.size()) - 1;
      }
      TermNode t;
      t.var = v;
      law_->nodes.push_back(t);
      return static_cast<int>(law_->nodes.size()) - 1;
    }
    if (c == '\0') fail("unexpected end of law");
    fail(std::string("unexpected character '") + c + "'");
    return -1;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }
  char peek(size_t ahead = 0) {
    skip_ws();
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char peek_raw() { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  int line_;
  size_t pos_ = 0;
  Law* law_ = nullptr;
};

}  // namespace detail

inline Law parse_law(std::string_view body, std::string name = "",
                     std::string citation = "", int line = 1) {
  detail::LawParser p(body, line);
  Law law = p.parse();
  law.name = std::move(name);
  law.citation = std::move(citation);
  if (law.vars.empty()) throw ParseError("law has no variables", line, 1);
  return law;
}

/// Law files: one law per line as `NAME : BODY`, '#' starts a comment.
inline std::vector<Law> parse_law_file(std::istream& in) {
  std::vector<Law> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'NAME : BODY'", lineno, 1);
    std::string name = line.substr(first, colon - first);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
      name.pop_back();
    if (name.empty()) throw ParseError("law name is empty", lineno, 1);
    std::string body = line.substr(colon + 1);
    if (!body.empty() && body.back() == '\r') body.pop_back();
    out.push_back(parse_law(body, name, "", lineno));
  }
  return out;
}

/// The least assignment (under carrier order, variables in first-appearance
/// order) at which a law fails, plus the values of the two sides of the
/// conclusion there.
struct Counterexample {
  std::vector<int> assignment;  // one carrier index per law variable
  int lhs_value = -1;
  int rhs_value = -1;

  std::string describe(const Law& law, const FiniteAlgebra& a) const {
    std::string out;
    for (size_t k = 0; k < law.vars.size(); ++k) {
      if (k) out += ", ";
      out += law.vars[k] + "=" + a.element(assignment[k]);
    }
    out += "; " + law.term_text(law.conclusion.lhs) + " = " + a.element(lhs_value);
    out += ", " + law.term_text(law.conclusion.rhs) + " = " + a.element(rhs_value);
    return out;
  }
};

struct CheckResult {
  bool pass = true;
  std::optional<Counterexample> counterexample;
  unsigned long long assignments = 0;
};

struct CheckOptions {
  unsigned long long budget = 100'000'000ULL;
  int jobs = 1;
};

namespace detail {

struct LawProgram {
  const std::vector<int>* tables[4] = {nullptr, nullptr, nullptr, nullptr};
  std::vector<int> derived_or;  // backing store when override is derived
  int n = 0;

  int eval_node(const Law& law, int node, const std::vector<int>& env,
                std::vector<int>& scratch) const {
    (void)scratch;
    const TermNode& t = law.nodes[static_cast<size_t>(node)];
    if (t.is_var()) return env[static_cast<size_t>(t.var)];
    int l = eval_node(law, t.lhs, env, scratch);
    int r = eval_node(law, t.rhs, env, scratch);
    return (*tables[static_cast<int>(t.op)])[static_cast<size_t>(l * n + r)];
  }

  bool atom_holds(const Law& law, const Atom& a, const std::vector<int>& env,
                  std::vector<int>& scratch, int* lv = nullptr,
                  int* rv = nullptr) const {
    int l = eval_node(law, a.lhs, env, scratch);
    int r = eval_node(law, a.rhs, env, scratch);
    if (lv) *lv = l;
    if (rv) *rv = r;
    switch (a.rel) {
      case Rel::Eq:
        return l == r;
      case Rel::Leq:
        return (*tables[static_cast<int>(OpSym::Or)])[static_cast<size_t>(l * n + r)] == r;
      case Rel::DomLeq:
        return (*tables[static_cast<int>(OpSym::Or)])[static_cast<size_t>(r * n + l)] == r;
    }
    return false;
  }
};

inline LawProgram prepare_program(const FiniteAlgebra& a, const Law& law) {
  LawProgram prog;
  prog.n = a.size();
  for (OpSym o : law.ops_used()) {
    if (a.has(o)) {
      prog.tables[static_cast<int>(o)] = &a.table(o);
    } else if (o == OpSym::Or && a.has(OpSym::Vee)) {
      if (prog.derived_or.empty()) prog.derived_or = derive_or_table(a);
      prog.tables[static_cast<int>(OpSym::Or)] = &prog.derived_or;
    } else {
      throw SignatureError("law '" + law.name + "' needs operation '" +
                           std::string(op_name(o)) + "' which algebra '" +
                           a.name() + "' does not carry");
    }
  }
  return prog;
}

// Scans assignment indices [lo, hi) and returns the least failing index, or
// -1.  Index digits are big-endian over the variable list, so index order is
// exactly lexicographic order of assignments.
inline long long scan_range(const FiniteAlgebra& a, const Law& law,
                            const LawProgram& prog, unsigned long long lo,
                            unsigned long long hi) {
  const int n = a.size();
  const int k = static_cast<int>(law.vars.size());
  std::vector<int> env(static_cast<size_t>(k));
  std::vector<int> scratch;
  for (unsigned long long idx = lo; idx < hi; ++idx) {
    unsigned long long rest = idx;
    for (int v = k - 1; v >= 0; --v) {
      env[static_cast<size_t>(v)] = static_cast<int>(rest % static_cast<unsigned long long>(n));
      rest /= static_cast<unsigned long long>(n);
    }
    bool premises_ok = true;
    for (const Atom& p : law.premises)
      if (!prog.atom_holds(law, p, env, scratch)) {
        premises_ok = false;
        break;
      }
    if (!premises_ok) continue;
    if (!prog.atom_holds(law, law.conclusion, env, scratch))
      return static_cast<long long>(idx);
  }
  return -1;
}

}  // namespace detail

/// Exhaustively evaluates a law over every assignment of carrier elements to
/// its variables.  A quasiequation passes iff every assignment satisfying all
/// premises satisfies the conclusion.  The reported counterexample is the
/// lexicographically least failing assignment, independent of the worker
/// count.  Refuses (rather than truncates) when n^k exceeds the budget.
inline CheckResult check_law(const FiniteAlgebra& a, const Law& law,
                             const CheckOptions& opts = {}) {
  detail::LawProgram prog = detail::prepare_program(a, law);
  const int n = a.size();
  const int k = static_cast<int>(law.vars.size());
  long double est = 1;
  for (int i = 0; i < k; ++i) est *= n;
  if (est > static_cast<long double>(opts.budget))
    throw BudgetError("law '" + law.name + "' needs " + std::to_string(k) +
                      " variables over " + std::to_string(n) +
                      " elements; assignment count exceeds the budget of " +
                      std::to_string(opts.budget));
  unsigned long long total = 1;
  for (int i = 0; i < k; ++i) total *= static_cast<unsigned long long>(n);

  long long first_fail = -1;
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || total < 1024) {
    first_fail = detail::scan_range(a, law, prog, 0, total);
  } else {
    std::vector<long long> results(static_cast<size_t>(jobs), -1);
    std::vector<std::thread> workers;
    unsigned long long chunk = (total + static_cast<unsigned long long>(jobs) - 1) /
                               static_cast<unsigned long long>(jobs);
    for (int w = 0; w < jobs; ++w) {
      unsigned long long lo = static_cast<unsigned long long>(w) * chunk;
      unsigned long long hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      workers.emplace_back([&, w, lo, hi] {
        results[static_cast<size_t>(w)] = detail::scan_range(a, law, prog, lo, hi);
      });
    }
    for (auto& t : workers) t.join();
    for (long long r : results)
      if (r >= 0 && (first_fail < 0 || r < first_fail)) first_fail = r;
  }

  CheckResult res;
  res.assignments = total;
  if (first_fail < 0) return res;
  res.pass = false;
  Counterexample cex;
  cex.assignment.assign(static_cast<size_t>(k), 0);
  unsigned long long rest = static_cast<unsigned long long>(first_fail);
  for (int v = k - 1; v >= 0; --v) {
    cex.assignment[static_cast<size_t>(v)] =
        static_cast<int>(rest % static_cast<unsigned long long>(n));
    rest /= static_cast<unsigned long long>(n);
  }
  std::vector<int> scratch;
  prog.atom_holds(law, law.conclusion, cex.assignment, scratch, &cex.lhs_value,
                  &cex.rhs_value);
  res.counterexample = std::move(cex);
  return res;
}

}  // namespace pfalg
