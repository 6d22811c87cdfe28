#pragma once

// Test-only reference implementations. Nothing here calls the automata
// code under test; languages are handled through a direct matcher and
// Glushkov position automata simulated on the fly.

#include <memory>
#include <set>
#include <vector>

#include "rsrl/distance.hpp"
#include "rsrl/regex.hpp"
#include "rsrl/substitution.hpp"

namespace oracle {

using rsrl::Alphabet;
using rsrl::IndexWord;
using rsrl::Regex;
using rsrl::Word;

/// Does r match w? Interval dynamic programming on the expression tree.
bool matches(const Regex& r, const IndexWord& w);
bool matches(const Regex& r, const Word& w);

/// Every word over the alphabet of length <= n.
std::vector<IndexWord> all_words(std::size_t alphabet_size, std::size_t n);
/// Words of L(r) of length <= n, by filtering all_words through matches().
std::set<Word> words_upto(const Regex& r, std::size_t n);

/// Exact finite language of a star-free expression.
std::set<Word> finite_words(const Regex& r);

bool nullable(const Regex& r);
/// Shortest word length, -1 for the empty language.
long shortest(const Regex& r);

/// Boolean combination of regular expressions over one alphabet.
class Lang {
 public:
  Lang(const Regex& r);  // NOLINT
  static Lang complement(const Lang& a);
  static Lang both(const Lang& a, const Lang& b);
  static Lang either(const Lang& a, const Lang& b);
  static Lang minus(const Lang& a, const Lang& b);

  const Alphabet& alphabet() const;
  /// The expression of a leaf; throws for combinations.
  const Regex& regex() const;

  struct Node;
  std::shared_ptr<const Node> node;

 private:
  Lang() = default;
};

bool equivalent(const Lang& a, const Lang& b);
bool subset(const Lang& a, const Lang& b);
bool is_empty(const Lang& a);

/// phi(w) as an expression, built directly.
Regex image(const rsrl::Substitution& phi, const Word& w);

/// Least run weight by repeated relaxation; -1 when rejected.
long distance(const rsrl::DistanceAutomaton& a, const IndexWord& w);

}  // namespace oracle
