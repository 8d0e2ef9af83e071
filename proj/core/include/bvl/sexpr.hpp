#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bvl::sexpr {

/// A parsed S-expression: either an atom or a parenthesised list.
/// Source positions are kept so callers can report line/column diagnostics.
struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_atom(std::string_view text) const { return !is_list && atom == text; }
  /// True for a list whose first element is the atom `head`.
  bool is_form(std::string_view head) const;
};

/// Reads exactly one S-expression from `text`. Whitespace and `;` comments
/// are skipped. Throws bvl::Error(Parse) with "line:col" context.
Node parse_one(std::string_view text);

/// Reads every top-level S-expression in `text`.
std::vector<Node> parse_all(std::string_view text);

[[noreturn]] void error_at(const Node& node, const std::string& message);

std::string location(const Node& node);

}  // namespace bvl::sexpr
