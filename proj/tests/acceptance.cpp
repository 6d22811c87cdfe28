// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "closure.hpp"
#include "generators.hpp"
#include "limited_fixtures.hpp"
#include "oracle.hpp"
#include "rsrl/membership.hpp"
#include "rsrl/rewriting.hpp"
#include "rsrl/unionfree.hpp"

using namespace rsrl;

namespace {

// Pinned limits.
constexpr double kLimitGoals = 1.0;
constexpr double kLimitUfs = 1.0;
constexpr double kLimitDecomp = 1.0;
constexpr double kLimitClosure = 60.0;
constexpr double kLimitAgreement = 120.0;
constexpr double kLimitSpot = 10.0;
constexpr double kLimitRewriting = 60.0;
constexpr double kLimitLimited = 30.0;
constexpr double kLimitUnfold = 60.0;
constexpr double kLimitOracle = 120.0;

constexpr int kClosurePairs = 200;
constexpr int kAgreementInstances = 200;
constexpr int kRewritingInstances = 100;
constexpr std::size_t kRewritingWordLen = 5;
constexpr int kUnfoldChains = 50;
constexpr std::size_t kUnfoldWordLen = 4;
constexpr std::size_t kUnfoldMaxB = 3;
constexpr int kOracleInstances = 100;
constexpr std::size_t kOracleMaxLen = 5;

const Alphabet abcd({"a", "b", "c", "d"});
const Alphabet ab({"a", "b"});

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string note;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > limit) o.fail("time limit " + std::to_string(limit) + " s exceeded");
  if (!o.ok) ++failures;
  std::printf("AC%-2d %s  %-44s %7.2f s / %.0f s%s%s\n", id, o.ok ? "PASS" : "FAIL", title, secs, limit,
              "  ", o.ok ? o.note.c_str() : o.detail.c_str());
  std::fflush(stdout);
}

bool valid_witness(const Word& w, const Regex& query, const Rsrl& r) {
  return oracle::matches(r.k(), w) && oracle::equivalent(oracle::image(r.phi(), w), query);
}

struct Instance {
  Rsrl r;
  Regex query;
};

Instance random_instance(gen::Rng& rng, bool star_free) {
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

void goals_contains_letter(Outcome& o) {
  Alphabet d({"Dstar", "Da", "Db", "Dc", "Dd"}, AlphabetRole::meta);
  Substitution phi(d, abcd,
                   {{"Dstar", parse_regex("(a + b + c + d)*", abcd)},
                    {"Da", parse_regex("a", abcd)},
                    {"Db", parse_regex("b", abcd)},
                    {"Dc", parse_regex("c", abcd)},
                    {"Dd", parse_regex("d", abcd)}});
  auto g = goals(Rsrl(parse_regex("Dstar (Da + Db + Dc + Dd) Dstar", d), phi));
  if (g.size() != 4) return o.fail("expected 4 members, got " + std::to_string(g.size()));
  for (const std::string x : {"a", "b", "c", "d"}) {
    Regex expect = parse_regex("(a + b + c + d)* " + x + " (a + b + c + d)*", abcd);
    int hits = 0;
    for (const auto& m : g) hits += oracle::equivalent(m.regex, expect) ? 1 : 0;
    if (hits != 1) o.fail("member for " + x + " matched " + std::to_string(hits) + " times");
  }
}

void ufs_derivation(Outcome& o) {
  Alphabet m({"A", "B", "C", "D"}, AlphabetRole::meta);
  Regex got = ufs(parse_regex("A*(B*C*)*D*", m), {2, 1});
  Regex expect = parse_regex("A*(B*C*)*(B*(B)B*C*)(B*C*)*D*", m);
  if (!(got == expect)) o.fail("got " + to_string(got));
}

void decomposition(Outcome& o) {
  Alphabet abc({"a", "b", "c"});
  auto t1 = union_free_decomp(parse_regex("(a + b) c", abc));
  oracle::Members m1;
  for (const auto& t : t1) oracle::add_member(m1, t);
  oracle::Members e1{oracle::Lang(parse_regex("a c", abc)), oracle::Lang(parse_regex("b c", abc))};
  if (t1.size() != 2 || !oracle::same_members(m1, e1)) o.fail("(a + b) c");
  auto t2 = union_free_decomp(parse_regex("(a + b)*", ab));
  if (t2.size() != 1 || !(t2[0] == parse_regex("(a* b*)*", ab)) ||
      !oracle::equivalent(t2[0], parse_regex("(a + b)*", ab)))
    o.fail("(a + b)*");
}

void closure_table(Outcome& o) {
  gen::Rng rng(2024);
  const auto& table = oracle::operator_table();
  for (int i = 0; i < kClosurePairs && o.ok; ++i) {
    auto r1 = gen::star_free_rsrl(rng, 3, 2, 3);
    Rsrl r2 = (i % 2) ? Rsrl(gen::star_free_k(r1.delta(), rng, 3), r1.phi())
                      : Rsrl(gen::star_free_k(gen::delta(2), rng, 3),
                             gen::substitution(gen::delta(2), r1.sigma(), rng));
    Regex q = gen::regex(r1.sigma(), rng, {2});
    auto m1 = oracle::members(r1), m2 = oracle::members(r2);
    for (const auto& op : table) {
      Rsrl result = op.apply(r1, r2, q);
      if (!oracle::same_members(oracle::members_of(goals(result)), op.expected(m1, m2, q)))
        o.fail(op.name + " on pair " + std::to_string(i));
      if (op.keeps_phi && r1.phi() == r2.phi() && !(result.phi() == r1.phi()))
        o.fail(op.name + " changed the substitution on pair " + std::to_string(i));
    }
  }
}

void general_vs_star_free(Outcome& o) {
  gen::Rng rng(4048);
  int members = 0;
  for (int i = 0; i < kAgreementInstances && o.ok; ++i) {
    auto [r, q] = random_instance(rng, true);
    auto general = membership(q, r);
    members += general.answer ? 1 : 0;
    auto sf = membership_star_free(q, r);
    if (general.answer != sf.answer)
      o.fail("instance " + std::to_string(i) + ": K = " + to_string(r.k()) + ", R = " + to_string(q));
    if (general.witness && !valid_witness(*general.witness, q, r)) o.fail("bad witness on " + std::to_string(i));
  }
  o.note = std::to_string(members) + " members";
}

void spot_checks(Outcome& o) {
  Alphabet a({"a"});
  Alphabet one({"D"}, AlphabetRole::meta);
  auto star = kleene_star(Rsrl(parse_regex("D", one), Substitution(one, a, {{"D", parse_regex("a", a)}})));
  if (!membership(parse_regex("a a a", a), star).answer) o.fail("{aaa} not found in the star");

  Alphabet d({"D1", "D2"}, AlphabetRole::meta);
  Rsrl ex(parse_regex("D1 D2* D1", d),
          Substitution(d, ab, {{"D1", parse_regex("a*", ab)}, {"D2", parse_regex("a b", ab)}}));
  Regex q = parse_regex("a* (a b) (a b) a*", ab);
  auto yes = membership(q, ex);
  if (!yes.answer) o.fail("a* (a b) (a b) a* rejected");
  else if (!yes.witness || !valid_witness(*yes.witness, q, ex)) o.fail("missing or invalid witness");
  if (membership(parse_regex("b", ab), ex).answer) o.fail("{b} accepted");
}

void rewriting(Outcome& o) {
  gen::Rng rng(8096);
  Alphabet d = gen::delta(2), s = gen::sigma(2);
  for (int i = 0; i < kRewritingInstances && o.ok; ++i) {
    auto phi = gen::substitution(d, s, rng);
    Regex r = gen::regex(s, rng, {3});
    Dfa m = maximal_rewriting(r, phi);
    for (const auto& iw : oracle::all_words(d.size(), kRewritingWordLen)) {
      if (iw.empty()) continue;
      Word w = d.decode(iw);
      if (accepts(m, w) != oracle::subset(oracle::image(phi, w), r)) {
        o.fail("R = " + to_string(r) + ", w = " + to_string(w));
        break;
      }
    }
  }
}

void limitedness(Outcome& o) {
  for (const auto& c : fixtures::limited_cases()) {
    auto built = fixtures::build(c);
    auto a = build_distance_automaton(built.m, built.phi);
    bool limited = is_limited(a);
    if (limited != c.limited) o.fail(c.m + " misclassified");
    if (fixtures::grows(a) == limited) o.fail(c.m + " disagrees with the growth oracle");
    if (limited && a.num_states() < 20) {
      long bound = 1L << (3 * a.num_states());
      if (fixtures::max_distance(a, 12) > bound) o.fail(c.m + " exceeds the distance bound");
    }
  }
}

void unfold_contract(Outcome& o) {
  gen::Rng rng(16192);
  Alphabet d = gen::delta(2), s = gen::sigma(2);
  for (int i = 0; i < kUnfoldChains && o.ok; ++i) {
    auto phi = gen::substitution(d, s, rng);
    Regex l = gen::union_free(d, rng, 3);
    auto mask = epsilon_mask(phi);
    for (std::size_t b = 0; b <= kUnfoldMaxB; ++b) {
      auto chains = unfold(to_chain_form(l), phi, b);
      for (const auto& c : chains) {
        for (const auto& st : c.stars)
          for (auto x : symbols_in(st))
            if (!mask[x]) o.fail("star over a non-eps symbol in " + to_string(c));
        if (!oracle::subset(to_regex(c), l)) o.fail(to_string(c) + " escapes " + to_string(l));
      }
      Dfa strat = stratum(l, b, phi);
      for (const auto& w : oracle::all_words(d.size(), kUnfoldWordLen)) {
        if (!accepts(strat, w)) continue;
        bool covered = false;
        for (const auto& c : chains) covered = covered || oracle::matches(to_regex(c), w);
        if (!covered) o.fail(to_string(d.decode(w)) + " uncovered in stratum " + std::to_string(b) + " of " + to_string(l));
      }
    }
  }
}

void oracle_soundness(Outcome& o) {
  gen::Rng rng(32384);
  int confirmed = 0, members = 0;
  for (int i = 0; i < kOracleInstances && o.ok; ++i) {
    auto [r, q] = random_instance(rng, false);
    auto bounded = oracle_membership(q, r, kOracleMaxLen);
    auto out = membership(q, r);
    confirmed += (bounded.answer && *bounded.answer) ? 1 : 0;
    members += out.answer ? 1 : 0;
    std::string where = "instance " + std::to_string(i) + ": K = " + to_string(r.k()) + ", R = " + to_string(q);
    if (bounded.answer && *bounded.answer && !out.answer) o.fail(where);
    if (bounded.witness && !valid_witness(*bounded.witness, q, r)) o.fail("oracle witness, " + where);
    if (out.witness && !valid_witness(*out.witness, q, r)) o.fail("membership witness, " + where);
  }
  o.note = std::to_string(confirmed) + " confirmed by the oracle, " + std::to_string(members) + " members";
}

}  // namespace

int main() {
  criterion(1, "member languages of the contains-a-letter set", kLimitGoals, goals_contains_letter);
  criterion(2, "ufs worked derivation", kLimitUfs, ufs_derivation);
  criterion(3, "union-free rewrite identities", kLimitDecomp, decomposition);
  criterion(4, "closure table on random star-free pairs", kLimitClosure, closure_table);
  criterion(5, "general vs star-free membership", kLimitAgreement, general_vs_star_free);
  criterion(6, "infinite-case spot checks", kLimitSpot, spot_checks);
  criterion(7, "maximal rewriting soundness/completeness", kLimitRewriting, rewriting);
  criterion(8, "limitedness fixtures", kLimitLimited, limitedness);
  criterion(9, "unfold contract", kLimitUnfold, unfold_contract);
  criterion(10, "bounded oracle soundness", kLimitOracle, oracle_soundness);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
