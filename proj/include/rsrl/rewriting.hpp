#pragma once

#include "rsrl/automata.hpp"
#include "rsrl/length.hpp"
#include "rsrl/regex.hpp"
#include "rsrl/substitution.hpp"

namespace rsrl {

/// { w in delta+ | L(phi(w)) is a subset of L(query) }, as a canonical Dfa
/// over delta.
Dfa maximal_rewriting(const Regex& query, const Substitution& phi, const Limits& limits = {});

/// { w in L | minlen(phi(w)) = b }. Words with an empty image belong to no
/// stratum.
Dfa stratum(const Dfa& l, std::size_t b, const Substitution& phi, const Limits& limits = {});
Dfa stratum(const Regex& l, std::size_t b, const Substitution& phi, const Limits& limits = {});

/// minlen(phi(L(l))), computed on the expression.
Length minlen_of_image(const Regex& l, const Substitution& phi);
/// Same, with the per-symbol image lengths precomputed.
Length minlen_of_image(const Regex& l, const std::vector<Length>& symbol_cost);

/// minlen(phi(d)) for every meta symbol d, by delta index.
std::vector<Length> image_minlens(const Substitution& phi);

}  // namespace rsrl
