#pragma once

#include <optional>
#include <vector>

#include "rsrl/automata.hpp"
#include "rsrl/regex.hpp"
#include "rsrl/substitution.hpp"

namespace rsrl {

/// A rational set of regular languages: { phi(w) | w in L(k) }.
class Rsrl {
 public:
  /// Throws AlphabetMismatch when k is not over phi's delta and
  /// InvalidArgument when the empty word is in L(k).
  Rsrl(Regex k, Substitution phi, const Limits& limits = {});

  const Regex& k() const { return k_; }
  const Substitution& phi() const { return phi_; }
  const Alphabet& delta() const { return phi_.delta(); }
  const Alphabet& sigma() const { return phi_.sigma(); }

 private:
  Regex k_;
  Substitution phi_;
};

/// One member of a materialized RSRL.
struct MemberLanguage {
  Dfa dfa;
  Regex regex;  // some expression for the same language
};

/// A finite set of pairwise inequivalent languages over one base alphabet,
/// kept sorted by canonical automaton.
class LanguageSet {
 public:
  explicit LanguageSet(Alphabet sigma) : sigma_(std::move(sigma)) {}

  const Alphabet& sigma() const { return sigma_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<MemberLanguage>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Inserts unless an equivalent language is present. Returns true if added.
  bool insert(Dfa dfa, Regex regex);
  bool insert(const Regex& regex, const Limits& limits = {});
  bool contains(const Dfa& dfa) const;

  friend bool operator==(const LanguageSet& a, const LanguageSet& b);

 private:
  Alphabet sigma_;
  std::vector<MemberLanguage> members_;
};

struct Unified {
  Substitution phi;
  Regex k1;
  Regex k2;
};

/// Tags the symbols of each side as `_1_<d>` / `_2_<d>` over a common delta.
/// Throws AlphabetMismatch when the base alphabets differ.
Unified unify(const Rsrl& r1, const Rsrl& r2);

/// Member languages of a star-free RSRL. Throws NotStarFree.
LanguageSet goals(const Rsrl& r, const Limits& limits = {});

/// An RSRL denoting exactly `ls`, one fresh symbol per member.
Rsrl from_language_set(const LanguageSet& ls);

// Closed in general.
Rsrl product(const Rsrl& r1, const Rsrl& r2);
Rsrl union_of(const Rsrl& r1, const Rsrl& r2);
/// { L1 ... Ln | n >= 0, Li in R }, with the empty product denoted by a
/// fresh symbol mapped to eps.
Rsrl kleene_star(const Rsrl& r);

// Member-set operations; star-free arguments only.
Rsrl intersection(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});
Rsrl difference(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});
Rsrl symmetric_difference(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});

// Point-wise operations; star-free r only.
Rsrl pointwise_star(const Rsrl& r, const Limits& limits = {});
Rsrl pointwise_complement(const Rsrl& r, const Limits& limits = {});
Rsrl pointwise_union(const Rsrl& r, const Regex& q, const Limits& limits = {});
Rsrl pointwise_intersection(const Rsrl& r, const Regex& q, const Limits& limits = {});
Rsrl pointwise_difference(const Rsrl& r, const Regex& q, const Limits& limits = {});

// Cartesian operations; star-free arguments only.
Rsrl cartesian_union(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});
Rsrl cartesian_intersection(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});
Rsrl cartesian_difference(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});

}  // namespace rsrl
