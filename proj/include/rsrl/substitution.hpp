#pragma once

#include <map>
#include <memory>
#include <set>
#include <vector>

#include "rsrl/alphabet.hpp"
#include "rsrl/automata.hpp"
#include "rsrl/regex.hpp"

namespace rsrl {

/// A regular substitution from meta symbols (delta) to regular languages
/// over the base alphabet (sigma). Copies share storage.
class Substitution {
 public:
  Substitution();
  /// `images` must name every symbol of `delta` and nothing else; each image
  /// must be over `sigma`. Throws InvalidArgument / AlphabetMismatch.
  Substitution(Alphabet delta, Alphabet sigma, const std::map<Symbol, Regex>& images);

  const Alphabet& delta() const { return *delta_; }
  const Alphabet& sigma() const { return *sigma_; }
  const Regex& image(std::uint32_t index) const { return (*images_)[index]; }
  const Regex& image(std::string_view symbol) const;
  const std::vector<Regex>& images() const { return *images_; }

  /// Same storage, i.e. literally the same substitution object.
  bool same_as(const Substitution& other) const { return images_ == other.images_; }
  /// Same alphabets and structurally equal images.
  friend bool operator==(const Substitution& a, const Substitution& b);

 private:
  std::shared_ptr<const Alphabet> delta_;
  std::shared_ptr<const Alphabet> sigma_;
  std::shared_ptr<const std::vector<Regex>> images_;
};

/// phi(w) for a nonempty word. Throws InvalidArgument on the empty word and
/// UndeclaredSymbol for symbols outside delta.
Regex apply_word(const Substitution& phi, const Word& word);
Regex apply_word(const Substitution& phi, const IndexWord& word);

/// Structural substitution of phi(d) for each symbol d of k.
Regex apply_lang(const Substitution& phi, const Regex& k);

/// Symbols whose image contains the empty word.
std::set<Symbol> epsilon_symbols(const Substitution& phi);
/// Same, indexed by delta position.
std::vector<bool> epsilon_mask(const Substitution& phi);

}  // namespace rsrl
