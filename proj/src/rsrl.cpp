#include "rsrl/rsrl.hpp"

#include <algorithm>
#include <set>

#include "rsrl/error.hpp"

namespace rsrl {

Rsrl::Rsrl(Regex k, Substitution phi, const Limits& limits)
    : k_(std::move(k)), phi_(std::move(phi)) {
  require_same_alphabet(k_.alphabet(), phi_.delta(), "generator");
  if (accepts(to_dfa(k_, limits), IndexWord{})) {
    throw InvalidArgument("the generator must not contain the empty word");
  }
}

bool LanguageSet::insert(Dfa dfa, Regex regex) {
  require_same_alphabet(dfa.alphabet, sigma_, "language set member");
  auto it = std::lower_bound(members_.begin(), members_.end(), dfa,
                             [](const MemberLanguage& m, const Dfa& d) {
                               return compare(m.dfa, d) < 0;
                             });
  if (it != members_.end() && it->dfa == dfa) return false;
  members_.insert(it, MemberLanguage{std::move(dfa), std::move(regex)});
  return true;
}

bool LanguageSet::insert(const Regex& regex, const Limits& limits) {
  return insert(to_dfa(regex, limits), regex);
}

bool LanguageSet::contains(const Dfa& dfa) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), dfa,
                             [](const MemberLanguage& m, const Dfa& d) {
                               return compare(m.dfa, d) < 0;
                             });
  return it != members_.end() && it->dfa == dfa;
}

bool operator==(const LanguageSet& a, const LanguageSet& b) {
  if (!(a.sigma_ == b.sigma_) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.members_[i].dfa == b.members_[i].dfa)) return false;
  }
  return true;
}

namespace {

std::string tagged(int side, const Symbol& d) {
  return "_" + std::to_string(side) + "_" + d;
}

Symbol fresh_symbol(const std::string& stem, const Alphabet& a, const Alphabet& b,
                    std::size_t& counter) {
  for (;; ++counter) {
    std::string name = stem + std::to_string(counter);
    if (!a.contains(name) && !b.contains(name)) return name;
  }
}

void require_star_free(const Rsrl& r, const char* op) {
  if (!is_star_free(r.k())) {
    throw NotStarFree(std::string(op) +
                      " is only defined for star-free generators; not closed in general");
  }
}

// Brings both arguments to one substitution, unifying only when needed.
std::pair<Rsrl, Rsrl> common_phi(const Rsrl& r1, const Rsrl& r2) {
  require_same_alphabet(r1.sigma(), r2.sigma(), "base alphabet");
  if (r1.phi() == r2.phi()) return {r1, Rsrl(r2.k(), r1.phi())};
  auto u = unify(r1, r2);
  return {Rsrl(u.k1, u.phi), Rsrl(u.k2, u.phi)};
}

Regex words_regex(const Alphabet& delta, const std::vector<Word>& words) {
  std::vector<Regex> items;
  items.reserve(words.size());
  for (const auto& w : words) items.push_back(Regex::word(delta, w));
  return alt_all(delta, items);
}

// Words of `from` whose image is (keep_matching) or is not in `other`.
std::vector<Word> filter_words(const Rsrl& from, const LanguageSet& other,
                               bool keep_matching, const Limits& limits) {
  std::vector<Word> out;
  for (const auto& w : enumerate_words(from.k())) {
    bool hit = other.contains(to_dfa(apply_word(from.phi(), w), limits));
    if (hit == keep_matching) out.push_back(w);
  }
  return out;
}

LanguageSet map_members(const Rsrl& r, const Limits& limits,
                        const std::function<MemberLanguage(const MemberLanguage&)>& f) {
  LanguageSet out(r.sigma());
  for (const auto& m : goals(r, limits)) {
    auto res = f(m);
    out.insert(std::move(res.dfa), std::move(res.regex));
  }
  return out;
}

LanguageSet pair_members(const Rsrl& r1, const Rsrl& r2, const Limits& limits,
                         const std::function<MemberLanguage(const MemberLanguage&,
                                                            const MemberLanguage&)>& f) {
  require_same_alphabet(r1.sigma(), r2.sigma(), "base alphabet");
  auto g1 = goals(r1, limits);
  auto g2 = goals(r2, limits);
  LanguageSet out(r1.sigma());
  for (const auto& a : g1) {
    for (const auto& b : g2) {
      auto res = f(a, b);
      out.insert(std::move(res.dfa), std::move(res.regex));
    }
  }
  return out;
}

MemberLanguage from_dfa(Dfa d) {
  Regex r = to_regex(d);
  return {std::move(d), std::move(r)};
}

}  // namespace

Unified unify(const Rsrl& r1, const Rsrl& r2) {
  require_same_alphabet(r1.sigma(), r2.sigma(), "base alphabet");
  std::vector<Symbol> names;
  std::map<Symbol, Regex> images;
  for (const auto& d : r1.delta().symbols()) {
    names.push_back(tagged(1, d));
    images.emplace(tagged(1, d), r1.phi().image(d));
  }
  for (const auto& d : r2.delta().symbols()) {
    names.push_back(tagged(2, d));
    images.emplace(tagged(2, d), r2.phi().image(d));
  }
  Alphabet delta(std::move(names), AlphabetRole::meta);
  Substitution phi(delta, r1.sigma(), images);
  return {phi, r1.k().relabel(delta, [](const Symbol& s) { return tagged(1, s); }),
          r2.k().relabel(delta, [](const Symbol& s) { return tagged(2, s); })};
}

LanguageSet goals(const Rsrl& r, const Limits& limits) {
  require_star_free(r, "goal enumeration");
  LanguageSet out(r.sigma());
  for (const auto& w : enumerate_words(r.k())) {
    out.insert(apply_word(r.phi(), w), limits);
  }
  return out;
}

Rsrl from_language_set(const LanguageSet& ls) {
  std::vector<Symbol> names;
  std::size_t counter = 0;
  Alphabet none;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    names.push_back(fresh_symbol("_L", ls.sigma(), none, counter));
    ++counter;
  }
  Alphabet delta(names, AlphabetRole::meta);
  std::map<Symbol, Regex> images;
  std::vector<Regex> syms;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    images.emplace(names[i], ls.members()[i].regex);
    syms.push_back(Regex::symbol(delta, names[i]));
  }
  return Rsrl(alt_all(delta, syms), Substitution(delta, ls.sigma(), images));
}

Rsrl product(const Rsrl& r1, const Rsrl& r2) {
  auto [a, b] = common_phi(r1, r2);
  return Rsrl(Regex::cat(a.k(), b.k()), a.phi());
}

Rsrl union_of(const Rsrl& r1, const Rsrl& r2) {
  auto [a, b] = common_phi(r1, r2);
  return Rsrl(Regex::alt(a.k(), b.k()), a.phi());
}

Rsrl kleene_star(const Rsrl& r) {
  std::size_t counter = 0;
  Symbol unit = fresh_symbol("_eps", r.delta(), r.sigma(), counter);
  std::vector<Symbol> names = r.delta().symbols();
  names.push_back(unit);
  Alphabet delta(names, AlphabetRole::meta);
  std::map<Symbol, Regex> images;
  for (const auto& d : r.delta().symbols()) images.emplace(d, r.phi().image(d));
  images.emplace(unit, Regex::epsilon(r.sigma()));
  Regex k = r.k().relabel(delta);
  Regex plus = Regex::cat(k, Regex::star(k));
  return Rsrl(Regex::alt(plus, Regex::symbol(delta, unit)),
              Substitution(delta, r.sigma(), images));
}

Rsrl intersection(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_star_free(r1, "intersection");
  require_star_free(r2, "intersection");
  auto [a, b] = common_phi(r1, r2);
  auto kept = filter_words(a, goals(b, limits), true, limits);
  return Rsrl(words_regex(a.delta(), kept), a.phi());
}

Rsrl difference(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_star_free(r1, "difference");
  require_star_free(r2, "difference");
  auto [a, b] = common_phi(r1, r2);
  auto kept = filter_words(a, goals(b, limits), false, limits);
  return Rsrl(words_regex(a.delta(), kept), a.phi());
}

Rsrl symmetric_difference(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_star_free(r1, "symmetric difference");
  require_star_free(r2, "symmetric difference");
  auto [a, b] = common_phi(r1, r2);
  auto kept = filter_words(a, goals(b, limits), false, limits);
  auto rest = filter_words(b, goals(a, limits), false, limits);
  std::set<Word> all(kept.begin(), kept.end());
  all.insert(rest.begin(), rest.end());
  return Rsrl(words_regex(a.delta(), {all.begin(), all.end()}), a.phi());
}

Rsrl pointwise_star(const Rsrl& r, const Limits& limits) {
  require_star_free(r, "point-wise star");
  return from_language_set(map_members(r, limits, [&](const MemberLanguage& m) {
    Regex s = Regex::star(m.regex);
    return MemberLanguage{to_dfa(s, limits), s};
  }));
}

Rsrl pointwise_complement(const Rsrl& r, const Limits& limits) {
  require_star_free(r, "point-wise complement");
  return from_language_set(map_members(
      r, limits, [](const MemberLanguage& m) { return from_dfa(complement(m.dfa)); }));
}

Rsrl pointwise_union(const Rsrl& r, const Regex& q, const Limits& limits) {
  require_star_free(r, "point-wise union");
  require_same_alphabet(q.alphabet(), r.sigma(), "point-wise operand");
  Dfa qd = to_dfa(q, limits);
  return from_language_set(map_members(r, limits, [&](const MemberLanguage& m) {
    return MemberLanguage{union_lang(m.dfa, qd, limits), Regex::alt(m.regex, q)};
  }));
}

Rsrl pointwise_intersection(const Rsrl& r, const Regex& q, const Limits& limits) {
  require_star_free(r, "point-wise intersection");
  require_same_alphabet(q.alphabet(), r.sigma(), "point-wise operand");
  Dfa qd = to_dfa(q, limits);
  return from_language_set(map_members(r, limits, [&](const MemberLanguage& m) {
    return from_dfa(intersect(m.dfa, qd, limits));
  }));
}

Rsrl pointwise_difference(const Rsrl& r, const Regex& q, const Limits& limits) {
  require_star_free(r, "point-wise difference");
  require_same_alphabet(q.alphabet(), r.sigma(), "point-wise operand");
  Dfa qd = to_dfa(q, limits);
  return from_language_set(map_members(r, limits, [&](const MemberLanguage& m) {
    return from_dfa(difference_lang(m.dfa, qd, limits));
  }));
}

Rsrl cartesian_union(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_star_free(r1, "Cartesian union");
  require_star_free(r2, "Cartesian union");
  return from_language_set(pair_members(
      r1, r2, limits, [&](const MemberLanguage& a, const MemberLanguage& b) {
        return MemberLanguage{union_lang(a.dfa, b.dfa, limits), Regex::alt(a.regex, b.regex)};
      }));
}

Rsrl cartesian_intersection(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_star_free(r1, "Cartesian intersection");
  require_star_free(r2, "Cartesian intersection");
  return from_language_set(pair_members(
      r1, r2, limits, [&](const MemberLanguage& a, const MemberLanguage& b) {
        return from_dfa(intersect(a.dfa, b.dfa, limits));
      }));
}

Rsrl cartesian_difference(const Rsrl& r1, const Rsrl& r2, const Limits& limits) {
  require_star_free(r1, "Cartesian difference");
  require_star_free(r2, "Cartesian difference");
  return from_language_set(pair_members(
      r1, r2, limits, [&](const MemberLanguage& a, const MemberLanguage& b) {
        return from_dfa(difference_lang(a.dfa, b.dfa, limits));
      }));
}

}  // namespace rsrl
