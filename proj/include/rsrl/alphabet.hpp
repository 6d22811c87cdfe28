#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsrl {

using Symbol = std::string;
/// A word is a sequence of symbol identifiers, so multi-character symbols
/// such as `Dstar` are first-class.
using Word = std::vector<Symbol>;
/// A word as indices into some Alphabet.
using IndexWord = std::vector<std::uint32_t>;

enum class AlphabetRole { base, meta };

/// Ordered, immutable set of symbol identifiers. Symbols are kept sorted so
/// that automata built over equal alphabets agree on symbol numbering.
/// Copies share the underlying storage.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<Symbol> symbols,
                    AlphabetRole role = AlphabetRole::base);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::vector<Symbol>& symbols() const;
  AlphabetRole role() const;

  std::optional<std::uint32_t> find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const { return find(symbol).has_value(); }
  /// Throws UndeclaredSymbol.
  std::uint32_t index_of(std::string_view symbol) const;
  const Symbol& name(std::uint32_t index) const;

  IndexWord encode(const Word& word) const;
  Word decode(const IndexWord& word) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);

  static bool is_identifier(std::string_view text);

  struct Impl;  // implementation detail

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Throws AlphabetMismatch naming `what` when the alphabets differ.
void require_same_alphabet(const Alphabet& a, const Alphabet& b,
                           std::string_view what);

std::string to_string(const Word& word);

}  // namespace rsrl
