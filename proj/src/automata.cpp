#include "rsrl/automata.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>

#include "rsrl/error.hpp"

namespace rsrl {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

void check_budget(std::size_t states, const Limits& limits, const char* what) {
  if (states > limits.state_budget) {
    throw BudgetExceeded(std::string("state budget of ") +
                         std::to_string(limits.state_budget) + " exceeded in " + what);
  }
}

}  // namespace

std::strong_ordering compare(const Dfa& a, const Dfa& b) {
  if (auto c = a.num_states <=> b.num_states; c != 0) return c;
  if (auto c = a.initial <=> b.initial; c != 0) return c;
  for (std::size_t i = 0; i < a.finals.size(); ++i) {
    if (a.finals[i] != b.finals[i]) {
      return a.finals[i] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::lexicographical_compare_three_way(a.delta.begin(), a.delta.end(),
                                                b.delta.begin(), b.delta.end());
}

// ---------------------------------------------------------------------------
// Thompson construction

namespace {

struct Fragment {
  std::uint32_t start;
  std::uint32_t end;
};

Fragment build_thompson(const Regex& r, Nfa& nfa) {
  switch (r.kind()) {
    case RegexKind::empty: {
      auto s = nfa.add_state();
      auto e = nfa.add_state();
      return {s, e};
    }
    case RegexKind::epsilon: {
      auto s = nfa.add_state();
      auto e = nfa.add_state();
      nfa.add_edge(s, kEpsilonLabel, e);
      return {s, e};
    }
    case RegexKind::symbol: {
      auto s = nfa.add_state();
      auto e = nfa.add_state();
      nfa.add_edge(s, r.symbol_index(), e);
      return {s, e};
    }
    case RegexKind::alt: {
      auto l = build_thompson(r.left(), nfa);
      auto rr = build_thompson(r.right(), nfa);
      auto s = nfa.add_state();
      auto e = nfa.add_state();
      nfa.add_edge(s, kEpsilonLabel, l.start);
      nfa.add_edge(s, kEpsilonLabel, rr.start);
      nfa.add_edge(l.end, kEpsilonLabel, e);
      nfa.add_edge(rr.end, kEpsilonLabel, e);
      return {s, e};
    }
    case RegexKind::concat: {
      auto l = build_thompson(r.left(), nfa);
      auto rr = build_thompson(r.right(), nfa);
      nfa.add_edge(l.end, kEpsilonLabel, rr.start);
      return {l.start, rr.end};
    }
    case RegexKind::star: {
      auto in = build_thompson(r.inner(), nfa);
      auto s = nfa.add_state();
      auto e = nfa.add_state();
      nfa.add_edge(s, kEpsilonLabel, in.start);
      nfa.add_edge(s, kEpsilonLabel, e);
      nfa.add_edge(in.end, kEpsilonLabel, in.start);
      nfa.add_edge(in.end, kEpsilonLabel, e);
      return {s, e};
    }
  }
  throw InvalidArgument("unknown regex node");
}

}  // namespace

Nfa thompson(const Regex& r) {
  Nfa nfa;
  nfa.alphabet = r.alphabet();
  auto frag = build_thompson(r, nfa);
  nfa.initial = frag.start;
  nfa.finals[frag.end] = true;
  return nfa;
}

// ---------------------------------------------------------------------------
// Subset construction

namespace {

void epsilon_close(const Nfa& nfa, std::vector<std::uint32_t>& set,
                   std::vector<char>& mark) {
  std::vector<std::uint32_t> stack(set.begin(), set.end());
  for (auto q : set) mark[q] = 1;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (const auto& e : nfa.edges[q]) {
      if (e.label == kEpsilonLabel && !mark[e.target]) {
        mark[e.target] = 1;
        set.push_back(e.target);
        stack.push_back(e.target);
      }
    }
  }
  for (auto q : set) mark[q] = 0;
  std::sort(set.begin(), set.end());
}

}  // namespace

Dfa determinize(const Nfa& nfa, const Limits& limits) {
  const std::size_t k = nfa.alphabet.size();
  Dfa raw;
  raw.alphabet = nfa.alphabet;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> ids;
  std::vector<std::vector<std::uint32_t>> subsets;
  std::vector<char> mark(nfa.num_states(), 0);

  auto intern = [&](std::vector<std::uint32_t> set) -> std::uint32_t {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    auto id = static_cast<std::uint32_t>(subsets.size());
    check_budget(subsets.size() + 1, limits, "subset construction");
    ids.emplace(set, id);
    bool fin = std::any_of(set.begin(), set.end(),
                           [&](std::uint32_t q) { return nfa.finals[q]; });
    raw.finals.push_back(fin);
    subsets.push_back(std::move(set));
    return id;
  };

  std::vector<std::uint32_t> start{nfa.initial};
  epsilon_close(nfa, start, mark);
  raw.initial = intern(std::move(start));

  std::vector<std::vector<std::uint32_t>> buckets(k);
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (auto& b : buckets) b.clear();
    for (auto q : subsets[cur]) {
      for (const auto& e : nfa.edges[q]) {
        if (e.label != kEpsilonLabel) buckets[e.label].push_back(e.target);
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      auto& b = buckets[a];
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      std::vector<std::uint32_t> next(b.begin(), b.end());
      epsilon_close(nfa, next, mark);
      raw.delta.push_back(intern(std::move(next)));
    }
  }
  raw.num_states = static_cast<std::uint32_t>(subsets.size());
  return canonicalize(raw);
}

// ---------------------------------------------------------------------------
// Canonical form

Dfa canonicalize(const Dfa& in) {
  const std::size_t k = in.alphabet.size();
  // Reachable part.
  std::vector<std::uint32_t> order;
  std::vector<std::int64_t> newid(in.num_states, -1);
  order.push_back(in.initial);
  newid[in.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a = 0; a < k; ++a) {
      auto t = in.next(order[i], static_cast<std::uint32_t>(a));
      if (newid[t] < 0) {
        newid[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  }
  const std::size_t n = order.size();

  // Moore partition refinement.
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = in.finals[order[i]] ? 1 : 0;
  std::size_t num_classes = 0;
  {
    bool any_final = false, any_nonfinal = false;
    for (auto c : cls) (c ? any_final : any_nonfinal) = true;
    num_classes = static_cast<std::size_t>(any_final) + static_cast<std::size_t>(any_nonfinal);
    if (!any_nonfinal) std::fill(cls.begin(), cls.end(), 0);
  }
  std::vector<std::uint32_t> sig(k + 1);
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sigs;
    std::vector<std::uint32_t> next_cls(n);
    for (std::size_t i = 0; i < n; ++i) {
      sig[0] = cls[i];
      for (std::size_t a = 0; a < k; ++a) {
        sig[a + 1] = cls[newid[in.next(order[i], static_cast<std::uint32_t>(a))]];
      }
      auto [it, inserted] = sigs.emplace(sig, static_cast<std::uint32_t>(sigs.size()));
      next_cls[i] = it->second;
    }
    cls.swap(next_cls);
    if (sigs.size() == num_classes) break;
    num_classes = sigs.size();
  }

  // Renumber classes breadth-first from the initial class.
  std::vector<std::uint32_t> rep(num_classes);
  for (std::size_t i = n; i-- > 0;) rep[cls[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::int64_t> cid(num_classes, -1);
  std::vector<std::uint32_t> corder{cls[0]};
  cid[cls[0]] = 0;
  Dfa out;
  out.alphabet = in.alphabet;
  for (std::size_t i = 0; i < corder.size(); ++i) {
    auto r = order[rep[corder[i]]];
    for (std::size_t a = 0; a < k; ++a) {
      auto c = cls[newid[in.next(r, static_cast<std::uint32_t>(a))]];
      if (cid[c] < 0) {
        cid[c] = static_cast<std::int64_t>(corder.size());
        corder.push_back(c);
      }
    }
  }
  out.num_states = static_cast<std::uint32_t>(corder.size());
  out.delta.resize(static_cast<std::size_t>(out.num_states) * k);
  out.finals.resize(out.num_states);
  for (std::size_t i = 0; i < corder.size(); ++i) {
    auto r = order[rep[corder[i]]];
    out.finals[i] = in.finals[r];
    for (std::size_t a = 0; a < k; ++a) {
      auto c = cls[newid[in.next(r, static_cast<std::uint32_t>(a))]];
      out.delta[i * k + a] = static_cast<std::uint32_t>(cid[c]);
    }
  }
  out.initial = 0;
  return out;
}

Dfa to_dfa(const Regex& r, const Limits& limits) {
  return determinize(thompson(r), limits);
}

Dfa universal_dfa(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = 1;
  d.delta.assign(alphabet.size(), 0);
  d.finals = {true};
  return d;
}

Dfa empty_dfa(const Alphabet& alphabet) {
  Dfa d = universal_dfa(alphabet);
  d.finals = {false};
  return d;
}

Dfa nonempty_words_dfa(const Alphabet& alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.num_states = 2;
  d.delta.assign(2 * alphabet.size(), 1);
  d.finals = {false, true};
  return canonicalize(d);
}

// ---------------------------------------------------------------------------
// Boolean operations

namespace {

Dfa product(const Dfa& a, const Dfa& b, const Limits& limits,
            const std::function<bool(bool, bool)>& accept, const char* what) {
  require_same_alphabet(a.alphabet, b.alphabet, what);
  const std::size_t k = a.alphabet.size();
  Dfa raw;
  raw.alphabet = a.alphabet;
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    check_budget(pairs.size() + 1, limits, what);
    auto id = static_cast<std::uint32_t>(pairs.size());
    ids.emplace(key, id);
    pairs.emplace_back(p, q);
    raw.finals.push_back(accept(a.is_final(p), b.is_final(q)));
    return id;
  };
  raw.initial = intern(a.initial, b.initial);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (std::uint32_t s = 0; s < k; ++s) raw.delta.push_back(intern(a.next(p, s), b.next(q, s)));
  }
  raw.num_states = static_cast<std::uint32_t>(pairs.size());
  return canonicalize(raw);
}

void append_dfa(const Dfa& d, Nfa& nfa) {
  std::uint32_t base = static_cast<std::uint32_t>(nfa.num_states());
  for (std::uint32_t q = 0; q < d.num_states; ++q) nfa.add_state(d.is_final(q));
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    for (std::uint32_t a = 0; a < d.alphabet.size(); ++a) nfa.add_edge(base + q, a, base + d.next(q, a));
  }
}

}  // namespace

Dfa complement(const Dfa& a) {
  Dfa out = a;
  out.finals.flip();
  return out;
}

Dfa intersect(const Dfa& a, const Dfa& b, const Limits& limits) {
  return product(a, b, limits, [](bool x, bool y) { return x && y; }, "intersection");
}

Dfa union_lang(const Dfa& a, const Dfa& b, const Limits& limits) {
  return product(a, b, limits, [](bool x, bool y) { return x || y; }, "union");
}

Dfa difference_lang(const Dfa& a, const Dfa& b, const Limits& limits) {
  return product(a, b, limits, [](bool x, bool y) { return x && !y; }, "difference");
}

Dfa concat_lang(const Dfa& a, const Dfa& b, const Limits& limits) {
  require_same_alphabet(a.alphabet, b.alphabet, "concatenation");
  Nfa nfa;
  nfa.alphabet = a.alphabet;
  append_dfa(a, nfa);
  std::uint32_t off = a.num_states;
  append_dfa(b, nfa);
  for (std::uint32_t q = 0; q < a.num_states; ++q) {
    if (a.is_final(q)) {
      nfa.finals[q] = false;
      nfa.add_edge(q, kEpsilonLabel, off + b.initial);
    }
  }
  nfa.initial = a.initial;
  return determinize(nfa, limits);
}

Dfa complement(const Regex& a, const Limits& limits) { return complement(to_dfa(a, limits)); }

Dfa intersect(const Regex& a, const Regex& b, const Limits& limits) {
  return intersect(to_dfa(a, limits), to_dfa(b, limits), limits);
}

Dfa union_lang(const Regex& a, const Regex& b, const Limits& limits) {
  return union_lang(to_dfa(a, limits), to_dfa(b, limits), limits);
}

Dfa difference_lang(const Regex& a, const Regex& b, const Limits& limits) {
  return difference_lang(to_dfa(a, limits), to_dfa(b, limits), limits);
}

bool is_empty(const Dfa& d) {
  // Canonical Dfas have no unreachable states.
  if (d.num_states && d.finals.size() == d.num_states) {
    std::vector<bool> seen(d.num_states, false);
    std::vector<std::uint32_t> stack{d.initial};
    seen[d.initial] = true;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      if (d.is_final(q)) return false;
      for (std::uint32_t a = 0; a < d.alphabet.size(); ++a) {
        auto t = d.next(q, a);
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
  }
  return true;
}

bool is_empty(const Regex& r, const Limits& limits) { return is_empty(to_dfa(r, limits)); }

bool equiv(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a.alphabet, b.alphabet, "equivalence check");
  return a == b;
}

bool equiv(const Regex& a, const Regex& b, const Limits& limits) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "equivalence check");
  return to_dfa(a, limits) == to_dfa(b, limits);
}

bool equiv(const Regex& a, const Dfa& b, const Limits& limits) {
  require_same_alphabet(a.alphabet(), b.alphabet, "equivalence check");
  return to_dfa(a, limits) == b;
}

bool includes(const Dfa& a, const Dfa& b, const Limits& limits) {
  return is_empty(difference_lang(a, b, limits));
}

bool is_subset(const Regex& a, const Regex& b, const Limits& limits) {
  return includes(to_dfa(a, limits), to_dfa(b, limits), limits);
}

namespace {

/// States that are reachable from the initial state and can reach a final.
std::vector<bool> useful_states(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  std::vector<bool> reach(d.num_states, false);
  std::vector<std::uint32_t> stack{d.initial};
  reach[d.initial] = true;
  std::vector<std::vector<std::uint32_t>> rev(d.num_states);
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (std::uint32_t a = 0; a < k; ++a) {
      auto t = d.next(q, a);
      if (!reach[t]) {
        reach[t] = true;
        stack.push_back(t);
      }
    }
  }
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    for (std::uint32_t a = 0; a < k; ++a) rev[d.next(q, a)].push_back(q);
  }
  std::vector<bool> coreach(d.num_states, false);
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    if (d.is_final(q)) {
      coreach[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto p : rev[q]) {
      if (!coreach[p]) {
        coreach[p] = true;
        stack.push_back(p);
      }
    }
  }
  std::vector<bool> useful(d.num_states);
  for (std::uint32_t q = 0; q < d.num_states; ++q) useful[q] = reach[q] && coreach[q];
  return useful;
}

/// Minimal number of steps from each state to a final state.
std::vector<Length> distance_to_final(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  std::vector<std::vector<std::uint32_t>> rev(d.num_states);
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    for (std::uint32_t a = 0; a < k; ++a) rev[d.next(q, a)].push_back(q);
  }
  std::vector<Length> dist(d.num_states, Length::infinite());
  std::deque<std::uint32_t> queue;
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    if (d.is_final(q)) {
      dist[q] = 0;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (auto p : rev[q]) {
      if (dist[p].is_infinite()) {
        dist[p] = dist[q] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_finite(const Dfa& d) {
  auto useful = useful_states(d);
  // Cycle detection restricted to useful states (iterative DFS colouring).
  std::vector<std::uint8_t> colour(d.num_states, 0);
  const std::uint32_t k = static_cast<std::uint32_t>(d.alphabet.size());
  for (std::uint32_t root = 0; root < d.num_states; ++root) {
    if (!useful[root] || colour[root]) continue;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [q, a] = stack.back();
      if (a == k) {
        colour[q] = 2;
        stack.pop_back();
        continue;
      }
      auto t = d.next(q, a++);
      if (!useful[t]) continue;
      if (colour[t] == 1) return false;
      if (colour[t] == 0) {
        colour[t] = 1;
        stack.emplace_back(t, 0);
      }
    }
  }
  return true;
}

bool accepts(const Dfa& d, const IndexWord& word) {
  std::uint32_t q = d.initial;
  for (auto a : word) {
    if (a >= d.alphabet.size()) return false;
    q = d.next(q, a);
  }
  return d.is_final(q);
}

bool accepts(const Dfa& d, const Word& word) {
  IndexWord w;
  w.reserve(word.size());
  for (const auto& s : word) {
    auto i = d.alphabet.find(s);
    if (!i) return false;
    w.push_back(*i);
  }
  return accepts(d, w);
}

Length minlen(const Dfa& d) { return distance_to_final(d)[d.initial]; }

Length minlen(const Regex& r, const Limits& limits) { return minlen(to_dfa(r, limits)); }

std::optional<Word> shortest_word(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  std::vector<std::int64_t> parent(d.num_states, -1);
  std::vector<std::uint32_t> via(d.num_states, 0);
  std::vector<bool> seen(d.num_states, false);
  std::deque<std::uint32_t> queue{d.initial};
  seen[d.initial] = true;
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    if (d.is_final(q)) {
      IndexWord w;
      for (auto cur = q; parent[cur] >= 0; cur = static_cast<std::uint32_t>(parent[cur])) {
        w.push_back(via[cur]);
      }
      std::reverse(w.begin(), w.end());
      return d.alphabet.decode(w);
    }
    for (std::uint32_t a = 0; a < k; ++a) {
      auto t = d.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = q;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::set<Word> shortest_words(const Dfa& d) {
  const std::size_t k = d.alphabet.size();
  // Length of the shortest nonempty accepted word.
  std::vector<Length> d1(d.num_states, Length::infinite());
  std::deque<std::uint32_t> queue;
  for (std::uint32_t a = 0; a < k; ++a) {
    auto t = d.next(d.initial, a);
    if (d1[t].is_infinite()) {
      d1[t] = 1;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    auto q = queue.front();
    queue.pop_front();
    for (std::uint32_t a = 0; a < k; ++a) {
      auto t = d.next(q, a);
      if (d1[t].is_infinite()) {
        d1[t] = d1[q] + 1;
        queue.push_back(t);
      }
    }
  }
  Length best = Length::infinite();
  for (std::uint32_t q = 0; q < d.num_states; ++q) {
    if (d.is_final(q)) best = std::min(best, d1[q]);
  }
  std::set<Word> out;
  if (best.is_infinite()) return out;
  const std::size_t len = best.value();
  // exact[r][q]: a final state is reachable from q in exactly r steps.
  std::vector<std::vector<bool>> exact(len + 1, std::vector<bool>(d.num_states, false));
  for (std::uint32_t q = 0; q < d.num_states; ++q) exact[0][q] = d.is_final(q);
  for (std::size_t r = 1; r <= len; ++r) {
    for (std::uint32_t q = 0; q < d.num_states; ++q) {
      for (std::uint32_t a = 0; a < k && !exact[r][q]; ++a) {
        if (exact[r - 1][d.next(q, a)]) exact[r][q] = true;
      }
    }
  }
  IndexWord cur;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t q) {
    if (cur.size() == len) {
      out.insert(d.alphabet.decode(cur));
      return;
    }
    for (std::uint32_t a = 0; a < k; ++a) {
      auto t = d.next(q, a);
      if (!exact[len - cur.size() - 1][t]) continue;
      cur.push_back(a);
      walk(t);
      cur.pop_back();
    }
  };
  walk(d.initial);
  return out;
}

std::set<Word> shortest_words(const Regex& r, const Limits& limits) {
  return shortest_words(to_dfa(r, limits));
}

std::set<Word> enumerate_words_bounded(const Dfa& d, std::size_t max_len) {
  const std::size_t k = d.alphabet.size();
  auto dist = distance_to_final(d);
  std::set<Word> out;
  IndexWord cur;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t q) {
    if (dist[q].is_infinite() || cur.size() + dist[q].value() > max_len) return;
    if (d.is_final(q)) out.insert(d.alphabet.decode(cur));
    if (cur.size() == max_len) return;
    for (std::uint32_t a = 0; a < k; ++a) {
      cur.push_back(a);
      walk(d.next(q, a));
      cur.pop_back();
    }
  };
  walk(d.initial);
  return out;
}

std::set<Word> enumerate_words_bounded(const Regex& r, std::size_t max_len,
                                       const Limits& limits) {
  return enumerate_words_bounded(to_dfa(r, limits), max_len);
}

std::set<Word> enumerate_words(const Regex& r) {
  if (!is_star_free(r)) {
    throw NotStarFree("enumerate_words requires a Kleene-star-free expression, got " +
                      to_string(r));
  }
  std::function<std::set<Word>(const Regex&)> go = [&](const Regex& x) -> std::set<Word> {
    switch (x.kind()) {
      case RegexKind::empty:
        return {};
      case RegexKind::epsilon:
        return {Word{}};
      case RegexKind::symbol:
        return {Word{x.symbol_name()}};
      case RegexKind::alt: {
        auto l = go(x.left());
        auto rr = go(x.right());
        l.insert(rr.begin(), rr.end());
        return l;
      }
      case RegexKind::concat: {
        auto l = go(x.left());
        auto rr = go(x.right());
        std::set<Word> out;
        for (const auto& u : l) {
          for (const auto& v : rr) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.insert(std::move(w));
          }
        }
        return out;
      }
      case RegexKind::star:
        break;
    }
    return {};
  };
  return go(r);
}

// ---------------------------------------------------------------------------
// State elimination

Regex to_regex(const Dfa& d) {
  const Alphabet& sigma = d.alphabet;
  auto useful = useful_states(d);
  if (!useful[d.initial]) return Regex::empty(sigma);

  // Node ids: DFA states, then start = n, final = n + 1.
  const std::uint32_t n = d.num_states;
  const std::uint32_t start = n, accept = n + 1;
  std::vector<std::map<std::uint32_t, Regex>> out(n + 2), in(n + 2);
  auto add = [&](std::uint32_t p, std::uint32_t q, const Regex& r) {
    auto it = out[p].find(q);
    Regex merged = it == out[p].end() ? r : smart_alt(it->second, r);
    out[p].insert_or_assign(q, merged);
    in[q].insert_or_assign(p, merged);
  };
  add(start, d.initial, Regex::epsilon(sigma));
  for (std::uint32_t q = 0; q < n; ++q) {
    if (!useful[q]) continue;
    if (d.is_final(q)) add(q, accept, Regex::epsilon(sigma));
    for (std::uint32_t a = 0; a < sigma.size(); ++a) {
      auto t = d.next(q, a);
      if (useful[t]) add(q, t, Regex::symbol(sigma, a));
    }
  }

  std::vector<bool> alive(n, false);
  std::size_t remaining = 0;
  for (std::uint32_t q = 0; q < n; ++q) {
    if (useful[q]) {
      alive[q] = true;
      ++remaining;
    }
  }
  while (remaining > 0) {
    // Eliminate the state with the fewest in*out combinations.
    std::uint32_t best = n;
    std::size_t best_cost = 0;
    for (std::uint32_t q = 0; q < n; ++q) {
      if (!alive[q]) continue;
      std::size_t ins = in[q].size() - in[q].count(q);
      std::size_t outs = out[q].size() - out[q].count(q);
      std::size_t cost = ins * outs;
      if (best == n || cost < best_cost) {
        best = q;
        best_cost = cost;
      }
    }
    const std::uint32_t q = best;
    std::optional<Regex> loop;
    if (auto it = out[q].find(q); it != out[q].end()) loop = smart_star(it->second);
    std::vector<std::pair<std::uint32_t, Regex>> preds, succs;
    for (auto& [p, r] : in[q]) {
      if (p != q) preds.emplace_back(p, r);
    }
    for (auto& [s, r] : out[q]) {
      if (s != q) succs.emplace_back(s, r);
    }
    for (auto& [p, _] : preds) out[p].erase(q);
    for (auto& [s, _] : succs) in[s].erase(q);
    out[q].clear();
    in[q].clear();
    for (auto& [p, rp] : preds) {
      for (auto& [s, rs] : succs) {
        Regex mid = loop ? smart_cat(*loop, rs) : rs;
        add(p, s, smart_cat(rp, mid));
      }
    }
    alive[q] = false;
    --remaining;
  }
  auto it = out[start].find(accept);
  return it == out[start].end() ? Regex::empty(sigma) : it->second;
}

}  // namespace rsrl
