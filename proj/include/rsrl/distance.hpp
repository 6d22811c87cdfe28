#pragma once

#include <cstdint>
#include <vector>

#include "rsrl/alphabet.hpp"
#include "rsrl/automata.hpp"
#include "rsrl/length.hpp"
#include "rsrl/substitution.hpp"
#include "rsrl/unionfree.hpp"

namespace rsrl {

/// Nondeterministic automaton with weighted transitions. The distance of an
/// accepted word is the least total weight of an accepting run. Weights are
/// 0 or 1 as built; epsilon elimination may produce larger ones.
struct DistanceAutomaton {
  struct Edge {
    std::uint32_t label;  // symbol index or kEpsilonLabel
    std::uint32_t target;
    std::uint32_t weight;
  };

  Alphabet alphabet;
  std::vector<std::vector<Edge>> edges;
  std::uint32_t initial = 0;
  std::vector<bool> finals;

  std::uint32_t add_state(bool final = false) {
    edges.emplace_back();
    finals.push_back(final);
    return static_cast<std::uint32_t>(edges.size() - 1);
  }
  void add_edge(std::uint32_t from, std::uint32_t label, std::uint32_t to,
                std::uint32_t weight) {
    edges[from].push_back({label, to, weight});
  }
  std::size_t num_states() const { return edges.size(); }
  std::size_t num_edges() const;
};

/// Automaton for phi(L(m)) in which entering a star body costs 0 the first
/// time and 1 on each further iteration. `m` must be union-free.
DistanceAutomaton build_distance_automaton(const Regex& m, const Substitution& phi,
                                           const Limits& limits = {});
DistanceAutomaton build_distance_automaton(const ChainForm& m, const Substitution& phi,
                                           const Limits& limits = {});

/// Least accepting run weight; infinite for rejected words.
Length min_distance(const DistanceAutomaton& a, const IndexWord& w);
Length min_distance(const DistanceAutomaton& a, const Word& w);

struct EpsilonFree {
  DistanceAutomaton automaton;  // no epsilon edges; same distances on nonempty words
  Length empty_word_distance;   // distance of the empty word in the original
};

EpsilonFree eliminate_epsilon(const DistanceAutomaton& a);

struct LimitednessResult {
  bool limited = true;
  std::size_t states = 0;        // after trimming
  std::size_t closure_size = 0;  // matrices explored
};

/// Decides whether the distances of accepted words are bounded. Throws
/// BudgetExceeded when more than `closure_budget` matrices are generated.
LimitednessResult check_limited(const DistanceAutomaton& a, std::size_t closure_budget = 200000);
bool is_limited(const DistanceAutomaton& a, std::size_t closure_budget = 200000);

}  // namespace rsrl
