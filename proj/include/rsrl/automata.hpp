#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "rsrl/alphabet.hpp"
#include "rsrl/length.hpp"
#include "rsrl/regex.hpp"

namespace rsrl {

/// Resource guard shared by every subset or product construction.
struct Limits {
  std::size_t state_budget = 100000;
};

inline constexpr std::uint32_t kEpsilonLabel = 0xffffffffu;

/// Nondeterministic automaton with epsilon moves (label kEpsilonLabel).
struct Nfa {
  struct Edge {
    std::uint32_t label;
    std::uint32_t target;
  };

  Alphabet alphabet;
  std::vector<std::vector<Edge>> edges;  // per source state
  std::uint32_t initial = 0;
  std::vector<bool> finals;

  std::uint32_t add_state(bool final = false) {
    edges.emplace_back();
    finals.push_back(final);
    return static_cast<std::uint32_t>(edges.size() - 1);
  }
  void add_edge(std::uint32_t from, std::uint32_t label, std::uint32_t to) {
    edges[from].push_back({label, to});
  }
  std::size_t num_states() const { return edges.size(); }
};

/// Complete deterministic automaton. Every Dfa returned by this library is
/// canonical: minimal, complete, and numbered in breadth-first discovery
/// order from the initial state 0 (symbols visited in alphabet order). Two
/// canonical Dfas over the same alphabet are equal iff their languages are.
struct Dfa {
  Alphabet alphabet;
  std::uint32_t num_states = 0;
  std::vector<std::uint32_t> delta;  // num_states * alphabet.size()
  std::vector<bool> finals;
  std::uint32_t initial = 0;

  std::uint32_t next(std::uint32_t q, std::uint32_t a) const {
    return delta[static_cast<std::size_t>(q) * alphabet.size() + a];
  }
  bool is_final(std::uint32_t q) const { return finals[q]; }

  friend bool operator==(const Dfa& a, const Dfa& b) {
    return a.alphabet == b.alphabet && a.num_states == b.num_states &&
           a.initial == b.initial && a.delta == b.delta && a.finals == b.finals;
  }
};

/// Total order on canonical Dfas over a common alphabet, used to give
/// language sets a deterministic order.
std::strong_ordering compare(const Dfa& a, const Dfa& b);

/// Thompson construction.
Nfa thompson(const Regex& r);
/// Subset construction followed by canonicalization. Throws BudgetExceeded
/// when more than `limits.state_budget` subsets are discovered.
Dfa determinize(const Nfa& nfa, const Limits& limits = {});
/// Completes, trims unreachable states, minimizes and renumbers.
Dfa canonicalize(const Dfa& dfa);

Dfa to_dfa(const Regex& r, const Limits& limits = {});
Dfa universal_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);
/// Accepts exactly the nonempty words.
Dfa nonempty_words_dfa(const Alphabet& alphabet);

Dfa complement(const Dfa& a);
Dfa intersect(const Dfa& a, const Dfa& b, const Limits& limits = {});
Dfa union_lang(const Dfa& a, const Dfa& b, const Limits& limits = {});
Dfa difference_lang(const Dfa& a, const Dfa& b, const Limits& limits = {});
Dfa concat_lang(const Dfa& a, const Dfa& b, const Limits& limits = {});

Dfa complement(const Regex& a, const Limits& limits = {});
Dfa intersect(const Regex& a, const Regex& b, const Limits& limits = {});
Dfa union_lang(const Regex& a, const Regex& b, const Limits& limits = {});
Dfa difference_lang(const Regex& a, const Regex& b, const Limits& limits = {});

bool is_empty(const Dfa& d);
bool is_empty(const Regex& r, const Limits& limits = {});
/// Language equality. Throws AlphabetMismatch.
bool equiv(const Dfa& a, const Dfa& b);
bool equiv(const Regex& a, const Regex& b, const Limits& limits = {});
bool equiv(const Regex& a, const Dfa& b, const Limits& limits = {});
/// L(a) ⊆ L(b).
bool includes(const Dfa& a, const Dfa& b, const Limits& limits = {});
bool is_subset(const Regex& a, const Regex& b, const Limits& limits = {});
/// True when the language is finite.
bool is_finite(const Dfa& d);

bool accepts(const Dfa& d, const IndexWord& word);
bool accepts(const Dfa& d, const Word& word);

/// Length of a shortest accepted word; infinite for the empty language.
Length minlen(const Dfa& d);
Length minlen(const Regex& r, const Limits& limits = {});
/// A shortest accepted word, if any (lexicographically least among them).
std::optional<Word> shortest_word(const Dfa& d);
/// Shortest nonempty words: all words of L \ {eps} of minimal length.
std::set<Word> shortest_words(const Dfa& d);
std::set<Word> shortest_words(const Regex& r, const Limits& limits = {});

/// All accepted words of length <= max_len.
std::set<Word> enumerate_words_bounded(const Dfa& d, std::size_t max_len);
std::set<Word> enumerate_words_bounded(const Regex& r, std::size_t max_len,
                                       const Limits& limits = {});
/// The full (finite) language of a star-free expression. Throws NotStarFree.
std::set<Word> enumerate_words(const Regex& r);

/// State elimination. The result denotes L(d); the empty language prints as
/// `empty`.
Regex to_regex(const Dfa& d);

}  // namespace rsrl
