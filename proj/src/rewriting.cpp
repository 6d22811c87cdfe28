#include "rsrl/rewriting.hpp"

#include <algorithm>
#include <deque>

#include "rsrl/error.hpp"

namespace rsrl {

namespace {

// States of `d` reachable from `from` by reading some word of L(image).
std::vector<std::uint32_t> image_targets(const Dfa& d, std::uint32_t from, const Dfa& image) {
  const std::size_t k = d.alphabet.size();
  std::vector<bool> seen(static_cast<std::size_t>(d.num_states) * image.num_states);
  std::vector<bool> hit(d.num_states);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work{{from, image.initial}};
  seen[static_cast<std::size_t>(from) * image.num_states + image.initial] = true;
  while (!work.empty()) {
    auto [q, s] = work.front();
    work.pop_front();
    if (image.is_final(s)) hit[q] = true;
    for (std::uint32_t a = 0; a < k; ++a) {
      auto q2 = d.next(q, a);
      auto s2 = image.next(s, a);
      auto key = static_cast<std::size_t>(q2) * image.num_states + s2;
      if (!seen[key]) {
        seen[key] = true;
        work.emplace_back(q2, s2);
      }
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    if (hit[q]) out.push_back(q);
  }
  return out;
}

}  // namespace

Dfa maximal_rewriting(const Regex& query, const Substitution& phi, const Limits& limits) {
  require_same_alphabet(query.alphabet(), phi.sigma(), "rewriting query");
  Dfa bad = complement(to_dfa(query, limits));
  Nfa n;
  n.alphabet = phi.delta();
  for (std::uint32_t q = 0; q < bad.num_states; ++q) n.add_state(bad.is_final(q));
  n.initial = bad.initial;
  for (std::uint32_t d = 0; d < phi.delta().size(); ++d) {
    Dfa image = to_dfa(phi.image(d), limits);
    for (std::uint32_t q = 0; q < bad.num_states; ++q) {
      for (auto t : image_targets(bad, q, image)) n.add_edge(q, d, t);
    }
  }
  Dfa overlapping = determinize(n, limits);
  return intersect(complement(overlapping), nonempty_words_dfa(phi.delta()), limits);
}

std::vector<Length> image_minlens(const Substitution& phi) {
  std::vector<Length> out;
  out.reserve(phi.delta().size());
  for (const auto& img : phi.images()) out.push_back(minlen(img));
  return out;
}

Dfa stratum(const Dfa& l, std::size_t b, const Substitution& phi, const Limits& limits) {
  require_same_alphabet(l.alphabet, phi.delta(), "stratum argument");
  auto cost = image_minlens(phi);
  const std::size_t k = l.alphabet.size();
  const std::size_t levels = b + 2;  // counter 0..b, b+1 = over
  const std::size_t dead = static_cast<std::size_t>(l.num_states) * levels;
  if (dead + 1 > limits.state_budget) {
    throw BudgetExceeded("state budget of " + std::to_string(limits.state_budget) +
                         " exceeded in stratum");
  }
  Dfa raw;
  raw.alphabet = l.alphabet;
  raw.num_states = static_cast<std::uint32_t>(dead + 1);
  raw.delta.assign((dead + 1) * k, static_cast<std::uint32_t>(dead));
  raw.finals.assign(dead + 1, false);
  for (std::uint32_t q = 0; q < l.num_states; ++q) {
    for (std::size_t c = 0; c < levels; ++c) {
      std::size_t id = q * levels + c;
      raw.finals[id] = l.is_final(q) && c == b;
      for (std::uint32_t a = 0; a < k; ++a) {
        if (cost[a].is_infinite()) continue;
        std::size_t c2 = std::min(c + cost[a].value(), b + 1);
        raw.delta[id * k + a] = static_cast<std::uint32_t>(l.next(q, a) * levels + c2);
      }
    }
  }
  raw.initial = static_cast<std::uint32_t>(l.initial * levels);
  return canonicalize(raw);
}

Dfa stratum(const Regex& l, std::size_t b, const Substitution& phi, const Limits& limits) {
  return stratum(to_dfa(l, limits), b, phi, limits);
}

Length minlen_of_image(const Regex& l, const std::vector<Length>& symbol_cost) {
  switch (l.kind()) {
    case RegexKind::empty:
      return Length::infinite();
    case RegexKind::epsilon:
    case RegexKind::star:
      return 0;
    case RegexKind::symbol:
      return symbol_cost.at(l.symbol_index());
    case RegexKind::alt:
      return std::min(minlen_of_image(l.left(), symbol_cost),
                      minlen_of_image(l.right(), symbol_cost));
    case RegexKind::concat:
      return minlen_of_image(l.left(), symbol_cost) + minlen_of_image(l.right(), symbol_cost);
  }
  return Length::infinite();
}

Length minlen_of_image(const Regex& l, const Substitution& phi) {
  require_same_alphabet(l.alphabet(), phi.delta(), "image length argument");
  return minlen_of_image(l, image_minlens(phi));
}

}  // namespace rsrl
