#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsrl/automata.hpp"
#include "rsrl/rsrl.hpp"
#include "rsrl/unionfree.hpp"

namespace rsrl {

struct MembershipConfig {
  std::size_t state_budget = 100000;
  std::size_t unionfree_budget = 4096;
  std::size_t closure_budget = 200000;
  std::size_t oracle_max_len = 8;
  /// Unfold recursion limit; 0 selects 10 * (B + 1) * (size + 1)^2.
  std::size_t depth_budget = 0;
  /// Longest candidate tried when extracting a witness from a chain with stars.
  std::size_t witness_max_len = 10;

  Limits limits() const { return Limits{state_budget}; }
};

struct MembershipStats {
  std::size_t union_free_terms = 0;
  std::size_t unfold_yields = 0;
  std::size_t basiccheck_calls = 0;
};

struct MembershipOutcome {
  bool answer = false;
  /// A word w of K with phi(w) equivalent to the query, when one was found.
  std::optional<Word> witness;
  MembershipStats stats;
};

/// Is some phi(w), w in L(K), equal to L(query)? Throws BudgetExceeded
/// instead of answering when a guard trips.
MembershipOutcome membership(const Regex& query, const Rsrl& r, const MembershipConfig& cfg = {});

/// Pull-based enumeration of the chains derived from `l` by repeatedly
/// unrolling stars with symbols outside the eps-image set. Every yielded
/// chain has only eps-image symbols under its stars.
class UnfoldStream {
 public:
  UnfoldStream(const ChainForm& l, const Substitution& phi, std::size_t b,
               std::size_t depth_budget = 0);
  std::optional<ChainForm> next();

 private:
  struct Frame {
    ChainForm chain;
    std::size_t depth;
  };
  Substitution phi_;
  std::size_t b_;
  std::size_t depth_budget_;
  std::vector<bool> eps_;
  std::vector<Length> cost_;
  std::vector<Frame> stack_;
  std::set<std::string> yielded_;
};

std::vector<ChainForm> unfold(const ChainForm& l, const Substitution& phi, std::size_t b,
                              std::size_t depth_budget = 0);

/// Chains covering the minlen(query)-stratum of (maximal rewriting of query)
/// intersected with K.
class EnumerateStream {
 public:
  EnumerateStream(const Regex& query, const Rsrl& r, const MembershipConfig& cfg = {});
  std::optional<ChainForm> next();

  std::size_t union_free_terms() const { return terms_.size(); }
  /// The rewriting intersected with K.
  const Dfa& rewriting() const { return m_; }

 private:
  Substitution phi_;
  std::size_t b_ = 0;
  std::size_t depth_budget_ = 0;
  Dfa m_;
  std::vector<Regex> terms_;
  std::size_t next_term_ = 0;
  std::optional<UnfoldStream> current_;
};

std::vector<ChainForm> enumerate(const Regex& query, const Rsrl& r,
                                 const MembershipConfig& cfg = {});

/// phi(m) equals L(query) and the distance automaton of m is limited.
bool basiccheck(const Regex& query, const ChainForm& m, const Substitution& phi,
                const MembershipConfig& cfg = {});

struct StarFreeMembership {
  bool answer = false;
  std::optional<Word> witness;
};

// Exact procedures for star-free generators. Throw NotStarFree.
StarFreeMembership membership_star_free(const Regex& query, const Rsrl& r,
                                        const Limits& limits = {});
/// Every member of r1 is a member of r2.
bool inclusion_star_free(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});
bool equivalence_star_free(const Rsrl& r1, const Rsrl& r2, const Limits& limits = {});

struct OracleAnswer {
  std::optional<bool> answer;  // empty when inconclusive
  std::optional<Word> witness;
};

/// Tries every word of K up to `max_len`. Answers false only for a star-free
/// K whose words all fit within the bound.
OracleAnswer oracle_membership(const Regex& query, const Rsrl& r, std::size_t max_len,
                               const Limits& limits = {});

}  // namespace rsrl
