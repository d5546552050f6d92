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

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfalg {

/// The four operation symbols: restricted union, override, intersection,
/// and difference.  File keywords are vee/or/meet/minus; the law language
/// spells them +, |, &, \.
enum class OpSym { Vee = 0, Or = 1, Meet = 2, Minus = 3 };

inline constexpr std::array<OpSym, 4> kAllOps = {OpSym::Vee, OpSym::Or,
                                                 OpSym::Meet, OpSym::Minus};

inline constexpr std::string_view op_name(OpSym op) {
  switch (op) {
    case OpSym::Vee: return "vee";
    case OpSym::Or: return "or";
    case OpSym::Meet: return "meet";
    case OpSym::Minus: return "minus";
  }
  return "?";
}

inline constexpr char op_symbol(OpSym op) {
  switch (op) {
    case OpSym::Vee: return '+';
    case OpSym::Or: return '|';
    case OpSym::Meet: return '&';
    case OpSym::Minus: return '\\';
  }
  return '?';
}

inline std::optional<OpSym> op_from_name(std::string_view s) {
  for (OpSym op : kAllOps)
    if (op_name(op) == s) return op;
  return std::nullopt;
}

inline std::optional<OpSym> op_from_symbol(char c) {
  for (OpSym op : kAllOps)
    if (op_symbol(op) == c) return op;
  return std::nullopt;
}

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (universe mismatch, bad partition, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A law or suite mentions an operation the algebra does not carry and
/// that cannot be derived.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed; carries a 1-based position.
class ParseError : public Error {
 public:
  ParseError(std::string msg, int line, int column)
      : Error(std::move(msg) + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line;
  int column;
};

/// An enumeration was refused because the carrier exceeds the configured bound.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A check or search was refused because its estimated cost exceeds the budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A declared table contradicts the one derived from another operation.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace pfalg
