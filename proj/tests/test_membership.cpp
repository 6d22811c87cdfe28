#include <catch_amalgamated.hpp>

#include "closure.hpp"
#include "generators.hpp"
#include "oracle.hpp"
#include "rsrl/error.hpp"
#include "rsrl/membership.hpp"
#include "rsrl/rewriting.hpp"

using namespace rsrl;

namespace {

const Alphabet ab({"a", "b"});
const Alphabet a_only({"a"});
const Alphabet d12({"D1", "D2"}, AlphabetRole::meta);

Rsrl ab_pairs() {
  Substitution phi(d12, ab, {{"D1", parse_regex("a*", ab)}, {"D2", parse_regex("a b", ab)}});
  return Rsrl(parse_regex("D1 D2* D1", d12), phi);
}

bool valid_witness(const Word& w, const Regex& query, const Rsrl& r) {
  return oracle::matches(r.k(), w) && oracle::equivalent(oracle::image(r.phi(), w), query);
}

// An instance whose query is often a member: the image of a sampled word.
struct Instance {
  Rsrl r;
  Regex query;
};

Instance random_general(gen::Rng& rng, bool star_free) {
  Alphabet d = gen::delta(2);
  Alphabet s = gen::sigma(2);
  auto phi = gen::substitution(d, s, rng);
  Regex k = star_free ? gen::star_free_k(d, rng, 3, 3) : gen::general_k(d, rng, 3);
  Rsrl r(k, phi);
  Regex q = gen::regex(s, rng, {2});
  if (rng() % 2) {
    if (auto w = gen::sample_word(k, rng, 4); w && !w->empty()) q = oracle::image(phi, *w);
  }
  return {r, q};
}

}  // namespace

TEST_CASE("infinite generators") {
  Alphabet one({"D"}, AlphabetRole::meta);
  Rsrl a(parse_regex("D", one), Substitution(one, a_only, {{"D", parse_regex("a", a_only)}}));
  auto star = kleene_star(a);
  auto yes = membership(parse_regex("a a a", a_only), star);
  CHECK(yes.answer);
  REQUIRE(yes.witness);
  CHECK(valid_witness(*yes.witness, parse_regex("a a a", a_only), star));

  auto r = ab_pairs();
  Regex q = parse_regex("a* (a b) (a b) a*", ab);
  auto out = membership(q, r);
  CHECK(out.answer);
  REQUIRE(out.witness);
  CHECK(*out.witness == Word{"D1", "D2", "D2", "D1"});
  CHECK(valid_witness(*out.witness, q, r));
  CHECK_FALSE(membership(parse_regex("b", ab), r).answer);
  CHECK_FALSE(membership(parse_regex("a* (a b)* a*", ab), r).answer);
  CHECK(membership(parse_regex("a* a*", ab), r).answer);
}

TEST_CASE("empty query") {
  Substitution phi(d12, ab, {{"D1", parse_regex("empty", ab)}, {"D2", parse_regex("a", ab)}});
  CHECK(membership(parse_regex("empty", ab), Rsrl(parse_regex("D2 D1* D2", d12), phi)).answer);
  CHECK_FALSE(membership(parse_regex("empty", ab), Rsrl(parse_regex("D2 D2*", d12), phi)).answer);
  auto out = membership(parse_regex("empty", ab), Rsrl(parse_regex("D2 D2* D1", d12), phi));
  CHECK(out.answer);
  REQUIRE(out.witness);
  CHECK(oracle::is_empty(oracle::image(phi, *out.witness)));
}

TEST_CASE("unfold yields only clean stars") {
  auto r = ab_pairs();
  auto chains = unfold(to_chain_form(r.k()), r.phi(), 4);
  REQUIRE_FALSE(chains.empty());
  auto mask = epsilon_mask(r.phi());
  for (const auto& c : chains)
    for (const auto& s : c.stars)
      for (auto x : symbols_in(s)) CHECK(mask[x]);
  bool found = false;
  for (const auto& c : chains) found = found || oracle::matches(to_regex(c), Word{"D1", "D2", "D2", "D1"});
  CHECK(found);
  for (const auto& c : chains) CHECK(oracle::subset(to_regex(c), r.k()));
}

TEST_CASE("unfold contract on random chains") {
  gen::Rng rng(113);
  Alphabet s = gen::sigma(2);
  for (int i = 0; i < 25; ++i) {
    auto phi = gen::substitution(d12, s, rng);
    Regex l = gen::union_free(d12, rng, 3);
    auto mask = epsilon_mask(phi);
    for (std::size_t b = 0; b <= 3; ++b) {
      auto chains = unfold(to_chain_form(l), phi, b);
      for (const auto& c : chains) {
        for (const auto& st : c.stars)
          for (auto x : symbols_in(st)) CHECK(mask[x]);
        CHECK(oracle::subset(to_regex(c), l));
      }
      Dfa strat = stratum(l, b, phi);
      INFO(to_string(l) << " b=" << b);
      for (const auto& w : oracle::all_words(2, 4)) {
        if (!accepts(strat, w)) continue;
        bool covered = false;
        for (const auto& c : chains) covered = covered || oracle::matches(to_regex(c), w);
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("enumerate and basiccheck") {
  auto r = ab_pairs();
  Regex q = parse_regex("a* (a b) (a b) a*", ab);
  EnumerateStream stream(q, r);
  CHECK(accepts(stream.rewriting(), Word{"D1", "D2", "D2", "D1"}));
  bool hit = false;
  std::size_t n = 0;
  while (auto c = stream.next()) {
    ++n;
    hit = hit || basiccheck(q, *c, r.phi());
  }
  CHECK(hit);
  CHECK(n == enumerate(q, r).size());
  CHECK(stream.union_free_terms() >= 1);

  ChainForm loose{d12, {{"D1"}, {"D1"}}, {parse_regex("D2", d12)}};
  CHECK_FALSE(basiccheck(parse_regex("a* (a b)* a*", ab), loose, r.phi()));
}

TEST_CASE("star-free membership against brute force") {
  gen::Rng rng(127);
  for (int i = 0; i < 60; ++i) {
    auto r = gen::star_free_rsrl(rng);
    auto members = oracle::members(r);
    Regex q = (i % 2 && !members.empty()) ? members[static_cast<std::size_t>(i) % members.size()].regex()
                                         : gen::regex(r.sigma(), rng, {2});
    bool expect = oracle::contains(members, oracle::Lang(q));
    auto out = membership_star_free(q, r);
    CHECK(out.answer == expect);
    if (out.witness) CHECK(valid_witness(*out.witness, q, r));
    CHECK(out.answer == out.witness.has_value());
  }
  auto star = kleene_star(ab_pairs());
  CHECK_THROWS_AS(membership_star_free(parse_regex("a", ab), star), NotStarFree);
}

TEST_CASE("star-free inclusion and equivalence") {
  gen::Rng rng(131);
  for (int i = 0; i < 40; ++i) {
    auto r1 = gen::star_free_rsrl(rng, 2, 2, 2);
    auto r2 = gen::star_free_rsrl(rng, 3, 2, 4);
    if (!(r1.sigma() == r2.sigma())) continue;
    auto m1 = oracle::members(r1), m2 = oracle::members(r2);
    bool incl = true;
    for (const auto& x : m1) incl = incl && oracle::contains(m2, x);
    CHECK(inclusion_star_free(r1, r2) == incl);
    CHECK(equivalence_star_free(r1, r2) == oracle::same_members(m1, m2));
    CHECK(inclusion_star_free(r1, union_of(r1, r2)));
    CHECK(equivalence_star_free(r1, r1));
  }
}

TEST_CASE("general and star-free membership agree") {
  gen::Rng rng(137);
  for (int i = 0; i < 40; ++i) {
    auto [r, q] = random_general(rng, true);
    INFO(to_string(r.k()) << " / " << to_string(q));
    auto general = membership(q, r);
    CHECK(general.answer == membership_star_free(q, r).answer);
    if (general.witness) CHECK(valid_witness(*general.witness, q, r));
  }
}

TEST_CASE("oracle soundness on general generators") {
  gen::Rng rng(139);
  for (int i = 0; i < 40; ++i) {
    auto [r, q] = random_general(rng, false);
    INFO(to_string(r.k()) << " / " << to_string(q));
    auto o = oracle_membership(q, r, 5);
    auto out = membership(q, r);
    if (o.answer && *o.answer) CHECK(out.answer);
    if (o.answer && !*o.answer) CHECK_FALSE(out.answer);
    if (o.witness) CHECK(valid_witness(*o.witness, q, r));
    if (out.witness) CHECK(valid_witness(*out.witness, q, r));
  }
}

TEST_CASE("bounded oracle") {
  auto r = ab_pairs();
  auto yes = oracle_membership(parse_regex("a* a b a*", ab), r, 4);
  REQUIRE(yes.answer);
  CHECK(*yes.answer);
  auto unknown = oracle_membership(parse_regex("b", ab), r, 4);
  CHECK_FALSE(unknown.answer);

  Rsrl finite(parse_regex("D1 D2", d12), r.phi());
  auto no = oracle_membership(parse_regex("b", ab), finite, 4);
  REQUIRE(no.answer);
  CHECK_FALSE(*no.answer);
  auto too_short = oracle_membership(parse_regex("b", ab), finite, 1);
  CHECK_FALSE(too_short.answer);
}

TEST_CASE("budgets surface as errors") {
  auto r = ab_pairs();
  MembershipConfig tiny;
  tiny.state_budget = 2;
  CHECK_THROWS_AS(membership(parse_regex("a* (a b) (a b) a*", ab), r, tiny), BudgetExceeded);
}
