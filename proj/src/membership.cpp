#include "rsrl/membership.hpp"

#include <algorithm>
#include <cassert>

#include "rsrl/distance.hpp"
#include "rsrl/error.hpp"
#include "rsrl/rewriting.hpp"

namespace rsrl {

namespace {

bool star_is_clean(const Regex& s, const std::vector<bool>& eps) {
  auto syms = symbols_in(s);
  return std::all_of(syms.begin(), syms.end(), [&](std::uint32_t d) { return eps[d]; });
}

// Regex items of a chain with star h replaced by `replacement`.
ChainForm replace_star(const ChainForm& c, std::size_t h, const std::vector<Regex>& replacement) {
  std::vector<Regex> items;
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    for (const auto& s : c.words[i]) items.push_back(Regex::symbol(c.alphabet, s));
    if (i >= c.stars.size()) continue;
    if (i == h) {
      for (const auto& r : replacement) {
        if (r.kind() != RegexKind::epsilon) items.push_back(r);
      }
    } else {
      items.push_back(Regex::star(c.stars[i]));
    }
  }
  return to_chain_form(concat_all(c.alphabet, items));
}

std::size_t default_depth(std::size_t b, const ChainForm& l) {
  std::size_t size = to_regex(l).size() + 1;
  return 10 * (b + 1) * size * size;
}

std::optional<Word> chain_witness(const Dfa& query, const ChainForm& m,
                                  const Substitution& phi, const MembershipConfig& cfg) {
  auto limits = cfg.limits();
  if (m.stars.empty()) return m.words.front();
  Dfa lang = to_dfa(to_regex(m), limits);
  std::vector<Word> candidates;
  for (const auto& w : enumerate_words_bounded(lang, cfg.witness_max_len)) candidates.push_back(w);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const auto& w : candidates) {
    if (w.empty()) continue;
    if (to_dfa(apply_word(phi, w), limits) == query) return w;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// unfold

UnfoldStream::UnfoldStream(const ChainForm& l, const Substitution& phi, std::size_t b,
                           std::size_t depth_budget)
    : phi_(phi),
      b_(b),
      depth_budget_(depth_budget ? depth_budget : default_depth(b, l)),
      eps_(epsilon_mask(phi)),
      cost_(image_minlens(phi)) {
  require_same_alphabet(l.alphabet, phi.delta(), "unfold argument");
  stack_.push_back({l, 0});
}

std::optional<ChainForm> UnfoldStream::next() {
  while (!stack_.empty()) {
    Frame f = std::move(stack_.back());
    stack_.pop_back();
    const ChainForm& c = f.chain;
    if (minlen_of_image(to_regex(c), cost_) > Length(b_)) continue;

    std::size_t h = 0;
    while (h < c.stars.size() && star_is_clean(c.stars[h], eps_)) ++h;
    if (h == c.stars.size()) {
      if (yielded_.insert(to_string(c)).second) return c;
      continue;
    }
    if (f.depth >= depth_budget_) {
      throw BudgetExceeded("unfold recursion depth exceeded " + std::to_string(depth_budget_));
    }

    const Regex& s = c.stars[h];
    Regex e_star = smart_star(e_part(s, eps_));
    std::vector<Frame> children;
    children.push_back({replace_star(c, h, {e_star}), f.depth + 1});
    for (const auto& p : critical(s, eps_)) {
      std::vector<Regex> items{e_star};
      for (auto& item : flatten_concat(ufs(s, p))) items.push_back(item);
      items.push_back(Regex::star(s));
      children.push_back({replace_star(c, h, items), f.depth + 1});
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack_.push_back(std::move(*it));
  }
  return std::nullopt;
}

std::vector<ChainForm> unfold(const ChainForm& l, const Substitution& phi, std::size_t b,
                              std::size_t depth_budget) {
  UnfoldStream s(l, phi, b, depth_budget);
  std::vector<ChainForm> out;
  while (auto c = s.next()) out.push_back(std::move(*c));
  return out;
}

// ---------------------------------------------------------------------------
// enumerate

EnumerateStream::EnumerateStream(const Regex& query, const Rsrl& r, const MembershipConfig& cfg)
    : phi_(r.phi()), depth_budget_(cfg.depth_budget) {
  auto limits = cfg.limits();
  Length b = minlen(query, limits);
  if (b.is_infinite()) throw InvalidArgument("query denotes the empty language");
  b_ = b.value();
  m_ = intersect(maximal_rewriting(query, r.phi(), limits), to_dfa(r.k(), limits), limits);
  if (!is_empty(m_)) terms_ = union_free_decomp(to_regex(m_), cfg.unionfree_budget);
}

std::optional<ChainForm> EnumerateStream::next() {
  for (;;) {
    if (current_) {
      if (auto c = current_->next()) return c;
      current_.reset();
    }
    if (next_term_ >= terms_.size()) return std::nullopt;
    current_.emplace(to_chain_form(terms_[next_term_++]), phi_, b_, depth_budget_);
  }
}

std::vector<ChainForm> enumerate(const Regex& query, const Rsrl& r, const MembershipConfig& cfg) {
  EnumerateStream s(query, r, cfg);
  std::vector<ChainForm> out;
  while (auto c = s.next()) out.push_back(std::move(*c));
  return out;
}

// ---------------------------------------------------------------------------
// basiccheck and membership

bool basiccheck(const Regex& query, const ChainForm& m, const Substitution& phi,
                const MembershipConfig& cfg) {
  auto limits = cfg.limits();
  Regex image = apply_lang(phi, to_regex(m));
  assert(is_subset(image, query, limits));
  if (!equiv(image, query, limits)) return false;
  return is_limited(build_distance_automaton(m, phi, limits), cfg.closure_budget);
}

MembershipOutcome membership(const Regex& query, const Rsrl& r, const MembershipConfig& cfg) {
  require_same_alphabet(query.alphabet(), r.sigma(), "membership query");
  auto limits = cfg.limits();
  MembershipOutcome out;
  Dfa q = to_dfa(query, limits);

  if (is_empty(q)) {
    // phi(w) is empty iff w uses a symbol with an empty image.
    const Alphabet& delta = r.delta();
    std::vector<Regex> dead, all;
    for (std::uint32_t d = 0; d < delta.size(); ++d) {
      all.push_back(Regex::symbol(delta, d));
      if (is_empty(r.phi().image(d), limits)) dead.push_back(all.back());
    }
    if (dead.empty()) return out;
    Regex any = Regex::star(alt_all(delta, all));
    Regex hit = concat_all(delta, std::vector<Regex>{any, alt_all(delta, dead), any});
    Dfa m = intersect(to_dfa(hit, limits), to_dfa(r.k(), limits), limits);
    out.witness = shortest_word(m);
    out.answer = out.witness.has_value();
    return out;
  }

  EnumerateStream stream(query, r, cfg);
  out.stats.union_free_terms = stream.union_free_terms();
  while (auto m = stream.next()) {
    ++out.stats.unfold_yields;
    ++out.stats.basiccheck_calls;
    if (basiccheck(query, *m, r.phi(), cfg)) {
      out.answer = true;
      out.witness = chain_witness(q, *m, r.phi(), cfg);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Star-free procedures and the bounded oracle

StarFreeMembership membership_star_free(const Regex& query, const Rsrl& r, const Limits& limits) {
  if (!is_star_free(r.k())) throw NotStarFree("star-free membership needs a star-free generator");
  require_same_alphabet(query.alphabet(), r.sigma(), "membership query");
  Dfa q = to_dfa(query, limits);
  for (const auto& w : enumerate_words(r.k())) {
    if (to_dfa(apply_word(r.phi(), w), limits) == q) return {true, w};
  }
  return {};
}

bool inclusion_star_free(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_same_alphabet(r1.sigma(), r2.sigma(), "inclusion");
  auto g1 = goals(r1, limits);
  auto g2 = goals(r2, limits);
  return std::all_of(g1.begin(), g1.end(),
                     [&](const MemberLanguage& m) { return g2.contains(m.dfa); });
}

bool equivalence_star_free(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_same_alphabet(r1.sigma(), r2.sigma(), "equivalence");
  return goals(r1, limits) == goals(r2, limits);
}

OracleAnswer oracle_membership(const Regex& query, const Rsrl& r, std::size_t max_len,
                               const Limits& limits) {
  require_same_alphabet(query.alphabet(), r.sigma(), "membership query");
  Dfa q = to_dfa(query, limits);
  auto words = enumerate_words_bounded(to_dfa(r.k(), limits), max_len);
  std::vector<Word> ordered(words.begin(), words.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Word& a, const Word& b) { return a.size() < b.size(); });
  for (const auto& w : ordered) {
    if (!w.empty() && to_dfa(apply_word(r.phi(), w), limits) == q) return {true, w};
  }
  if (is_star_free(r.k())) {
    auto all = enumerate_words(r.k());
    bool fits = std::all_of(all.begin(), all.end(),
                            [&](const Word& w) { return w.size() <= max_len; });
    if (fits) return {false, std::nullopt};
  }
  return {};
}

}  // namespace rsrl
