#pragma once

#include <set>
#include <vector>

#include "rsrl/regex.hpp"
#include "rsrl/substitution.hpp"

namespace rsrl {

/// Union-free expressions whose union is L(r). Terms are deduplicated
/// structurally. Throws BudgetExceeded past `term_budget` terms.
std::vector<Regex> union_free_decomp(const Regex& r, std::size_t term_budget = 4096);

/// N1 S1* N2 ... Nm Sm* Nm+1: words[h] are the N's (m+1 of them, possibly
/// empty), stars[h] the S's.
struct ChainForm {
  Alphabet alphabet;
  std::vector<Word> words;
  std::vector<Regex> stars;

  std::size_t num_stars() const { return stars.size(); }
  friend bool operator==(const ChainForm&, const ChainForm&) = default;
};

/// Throws InvalidArgument for expressions with a union, or denoting the
/// empty language at top level.
ChainForm to_chain_form(const Regex& u);
Regex to_regex(const ChainForm& c);
std::string to_string(const ChainForm& c);

/// 1-based indices into nested star chains; empty addresses the top level.
using Position = std::vector<std::uint32_t>;

/// The factors of a top-level concatenation, in order, with eps dropped.
std::vector<Regex> flatten_concat(const Regex& u);

/// Unrolls the star chain addressed by p. Throws InvalidArgument when p
/// does not address a star.
Regex ufs(const Regex& s, const Position& p);

/// Positions whose level directly contains a symbol whose image lacks eps.
std::set<Position> critical(const Regex& s, const Substitution& phi);
std::set<Position> critical(const Regex& s, const std::vector<bool>& eps_mask);

/// Union-free expression for L(s) intersected with the words over the
/// eps-image symbols.
Regex e_part(const Regex& s, const Substitution& phi);
Regex e_part(const Regex& s, const std::vector<bool>& eps_mask);

struct StarRewrite {
  Regex e;  // e_part(s)
  /// (p, E* ufs(s,p) s*) for each critical p.
  std::vector<std::pair<Position, Regex>> branches;
};

/// s* = E* + sum over critical p of E* ufs(s,p) s*.
StarRewrite unfold_rewrite(const Regex& s, const Substitution& phi);

}  // namespace rsrl
