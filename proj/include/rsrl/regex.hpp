#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsrl/alphabet.hpp"

namespace rsrl {

enum class RegexKind : std::uint8_t { empty, epsilon, symbol, alt, concat, star };

/// Immutable regular-expression AST over a declared alphabet. Nodes are
/// shared between copies and between expressions built from each other.
///
/// The static builders (`alt`, `cat`, `star`) build exactly the requested
/// node; the free `smart_*` helpers fold away trivial structure instead.
class Regex {
 public:
  /// The empty-language expression over the empty base alphabet.
  Regex();

  static Regex empty(const Alphabet& alphabet);
  static Regex epsilon(const Alphabet& alphabet);
  static Regex symbol(const Alphabet& alphabet, std::uint32_t index);
  static Regex symbol(const Alphabet& alphabet, std::string_view name);
  static Regex alt(const Regex& left, const Regex& right);
  static Regex cat(const Regex& left, const Regex& right);
  static Regex star(const Regex& inner);
  /// A word as a right-nested concatenation (epsilon for the empty word).
  static Regex word(const Alphabet& alphabet, const Word& word);

  const Alphabet& alphabet() const { return alphabet_; }
  RegexKind kind() const;
  /// Valid for alt and concat.
  Regex left() const;
  Regex right() const;
  /// Valid for star.
  Regex inner() const;
  /// Valid for symbol.
  std::uint32_t symbol_index() const;
  const Symbol& symbol_name() const;

  /// Structural size: number of AST nodes.
  std::size_t size() const;

  /// Same alphabet, same tree.
  friend bool operator==(const Regex& a, const Regex& b);

  /// Re-expresses the tree over `target`, translating symbol names through
  /// `rename` (identity when empty). Throws UndeclaredSymbol.
  Regex relabel(const Alphabet& target,
                const std::function<Symbol(const Symbol&)>& rename = {}) const;

  struct Node;  // implementation detail

 private:
  Regex(Alphabet alphabet, std::shared_ptr<const Node> node);

  Alphabet alphabet_;
  std::shared_ptr<const Node> node_;
};

/// Parses the whitespace-tolerant grammar
///   expr := term ('+' term)* ; term := factor+ ; factor := atom '*'* ;
///   atom := SYMBOL | 'eps' | 'empty' | '(' expr ')'
/// Union and concatenation nest to the right.
/// Throws ParseError (with offset) or UndeclaredSymbol.
Regex parse_regex(std::string_view text, const Alphabet& alphabet);

/// Prints the same grammar; `parse_regex(to_string(r))` is structurally
/// equal to r.
std::string to_string(const Regex& r);

Regex smart_alt(const Regex& left, const Regex& right);
Regex smart_cat(const Regex& left, const Regex& right);
Regex smart_star(const Regex& inner);

/// Right-nested concatenation of the items, without simplification.
/// Epsilon for an empty list.
Regex concat_all(const Alphabet& alphabet, std::span<const Regex> items);
/// Right-nested union of the items, without simplification.
/// Empty for an empty list.
Regex alt_all(const Alphabet& alphabet, std::span<const Regex> items);

bool is_star_free(const Regex& r);
bool has_union(const Regex& r);

/// Symbol indices occurring in r.
std::vector<std::uint32_t> symbols_in(const Regex& r);

}  // namespace rsrl
